#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace stardmp::exact {

/// Reduced fraction with arbitrary-precision numerator and positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  /// Accepts "p", "p/q" (unreduced allowed, q != 0) and a leading sign.
  static Rational parse(std::string_view text);
  std::string to_string() const { return q_.get_str(); }

  const mpq_class& raw() const { return q_; }
  bool is_zero() const { return sgn(q_) == 0; }
  int sign() const { return sgn(q_); }

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);
  /// this += sign * a * b without a temporary Rational.
  void add_product(const Rational& a, const Rational& b, int sign = 1);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class q_{0};
};

/// Element re + im*i of Q(i).
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re, Rational im = Rational()) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  /// Accepts "p/q", "p/q+r/s i", "r/s i", "i", "-i", "1+2i", whitespace ignored.
  static GaussianRational parse(std::string_view text);
  /// Canonical form: "3/2", "i", "-i", "2 i", "1/2-3/4 i".
  std::string to_string() const;

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  GaussianRational conj() const { return {re_, -im_}; }
  Rational norm() const { return re_ * re_ + im_ * im_; }

  GaussianRational operator-() const { return {-re_, -im_}; }
  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o);
  /// this += sign * a * b, skipping vanishing parts.
  void add_product(const GaussianRational& a, const GaussianRational& b, int sign = 1);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend bool operator==(const GaussianRational&, const GaussianRational&) = default;

 private:
  Rational re_;
  Rational im_;
};

inline bool is_zero(const GaussianRational& x) { return x.is_zero(); }
inline void add_product(GaussianRational& acc, const GaussianRational& a, const GaussianRational& b, int sign) {
  acc.add_product(a, b, sign);
}
inline GaussianRational conj(const GaussianRational& x) { return x.conj(); }
inline std::string to_string(const GaussianRational& x) { return x.to_string(); }

struct GaussianRationalField {
  using Scalar = GaussianRational;
  Scalar zero() const { return {}; }
  Scalar one() const { return Scalar(1); }
  bool has_nontrivial_conjugation() const { return true; }
  friend bool operator==(const GaussianRationalField&, const GaussianRationalField&) = default;
};

}  // namespace stardmp::exact
