#pragma once

#include <cstdint>
#include <string>

#include "stardmp/core/errors.hpp"

namespace stardmp::finite {

/// Residue modulo a prime; the modulus travels with the value.
class ModP {
 public:
  ModP() = default;
  ModP(std::int64_t value, std::uint32_t p) : v_(reduce(value, p)), p_(p) {}

  std::uint32_t value() const { return v_; }
  std::uint32_t modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }

  ModP operator-() const { return {p_ - v_, p_}; }
  ModP& operator+=(const ModP& o) {
    check(o);
    v_ = (v_ + o.v_) % p_;
    return *this;
  }
  ModP& operator-=(const ModP& o) {
    check(o);
    v_ = (v_ + p_ - o.v_) % p_;
    return *this;
  }
  ModP& operator*=(const ModP& o) {
    check(o);
    v_ = static_cast<std::uint32_t>((static_cast<std::uint64_t>(v_) * o.v_) % p_);
    return *this;
  }
  ModP& operator/=(const ModP& o) { return *this *= o.inverse(); }

  ModP inverse() const {
    if (v_ == 0) throw DomainError("division by zero in Z_p");
    // Fermat: v^(p-2)
    std::uint64_t result = 1, base = v_, e = p_ - 2;
    while (e) {
      if (e & 1U) result = result * base % p_;
      base = base * base % p_;
      e >>= 1U;
    }
    return {static_cast<std::int64_t>(result), p_};
  }

  friend ModP operator+(ModP a, const ModP& b) { return a += b; }
  friend ModP operator-(ModP a, const ModP& b) { return a -= b; }
  friend ModP operator*(ModP a, const ModP& b) { return a *= b; }
  friend ModP operator/(ModP a, const ModP& b) { return a /= b; }
  friend bool operator==(const ModP&, const ModP&) = default;

 private:
  static std::uint32_t reduce(std::int64_t value, std::uint32_t p) {
    if (p == 0) return 0;
    const std::int64_t r = value % static_cast<std::int64_t>(p);
    return static_cast<std::uint32_t>(r < 0 ? r + p : r);
  }
  void check(const ModP& o) const {
    if (o.p_ != p_) throw CarrierMismatch("Z_p operands with different moduli");
  }

  std::uint32_t v_ = 0;
  std::uint32_t p_ = 0;
};

inline bool is_zero(const ModP& x) { return x.is_zero(); }
inline ModP conj(const ModP& x) { return x; }
inline std::string to_string(const ModP& x) { return std::to_string(x.value()); }

struct PrimeField {
  using Scalar = ModP;
  std::uint32_t p = 2;
  Scalar zero() const { return {0, p}; }
  Scalar one() const { return {1, p}; }
  bool has_nontrivial_conjugation() const { return false; }
  friend bool operator==(const PrimeField&, const PrimeField&) = default;
};

}  // namespace stardmp::finite
