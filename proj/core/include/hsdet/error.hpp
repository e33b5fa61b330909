#pragma once

#include <stdexcept>
#include <string>

namespace hsdet {

/// Raised when an argument falls outside an operation's contract
/// (bad alpha, family/alpha mismatch, point outside the support).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Raised when a computation cannot deliver its guarantee (precision too
/// low, series failed to converge, quadrature tolerance not met).
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised on unreadable or inconsistent cache/input files.
class FormatError : public std::runtime_error {
 public:
  explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hsdet
