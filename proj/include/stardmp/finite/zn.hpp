#pragma once

#include <cstdint>
#include <string>

#include "stardmp/core/errors.hpp"

namespace stardmp::finite {

/// Residue class modulo n >= 2; the involution is the identity.
class ZnElement {
 public:
  ZnElement() = default;
  ZnElement(std::int64_t value, std::uint32_t modulus) : modulus_(modulus) {
    if (modulus < 2) throw DomainError("Z_n requires n >= 2");
    const std::int64_t r = value % static_cast<std::int64_t>(modulus);
    value_ = static_cast<std::uint32_t>(r < 0 ? r + modulus : r);
  }

  std::uint32_t value() const { return value_; }
  std::uint32_t modulus() const { return modulus_; }

  ZnElement operator-() const { return {-static_cast<std::int64_t>(value_), modulus_}; }
  friend ZnElement operator+(const ZnElement& a, const ZnElement& b) {
    a.check(b);
    return {static_cast<std::int64_t>(a.value_) + b.value_, a.modulus_};
  }
  friend ZnElement operator-(const ZnElement& a, const ZnElement& b) {
    a.check(b);
    return {static_cast<std::int64_t>(a.value_) - b.value_, a.modulus_};
  }
  friend ZnElement operator*(const ZnElement& a, const ZnElement& b) {
    a.check(b);
    return {static_cast<std::int64_t>(static_cast<std::uint64_t>(a.value_) * b.value_ % a.modulus_), a.modulus_};
  }
  friend bool operator==(const ZnElement&, const ZnElement&) = default;

  std::string to_string() const { return std::to_string(value_); }

 private:
  void check(const ZnElement& o) const {
    if (o.modulus_ != modulus_) throw CarrierMismatch("Z_n operands with different moduli");
  }

  std::uint32_t value_ = 0;
  std::uint32_t modulus_ = 2;
};

inline ZnElement star(const ZnElement& a) { return a; }
inline ZnElement zero_like(const ZnElement& a) { return {0, a.modulus()}; }
inline ZnElement one_like(const ZnElement& a) { return {1, a.modulus()}; }
inline bool same_carrier(const ZnElement& a, const ZnElement& b) { return a.modulus() == b.modulus(); }
inline bool is_zero(const ZnElement& a) { return a.value() == 0; }

}  // namespace stardmp::finite
