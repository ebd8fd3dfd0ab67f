#pragma once

#include <stdexcept>
#include <string>

namespace stardmp {

/// Two operands live in different carriers (shape, modulus or involution differ).
class CarrierMismatch : public std::invalid_argument {
 public:
  explicit CarrierMismatch(const std::string& what) : std::invalid_argument(what) {}
};

/// An exhaustive operation would touch more elements than the configured cap.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// A square matrix was required.
class NotSquare : public std::invalid_argument {
 public:
  explicit NotSquare(const std::string& what) : std::invalid_argument(what) {}
};

/// Malformed input or an out-of-domain argument.
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace stardmp
