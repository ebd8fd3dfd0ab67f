#pragma once

// Abstract *-ring vocabulary shared by every carrier: the element concept,
// inverse witnesses, and the literal defining-equation verifiers.

#include <concepts>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

#include "stardmp/core/errors.hpp"

namespace stardmp {

enum class Involution { conjugate_transpose, transpose, identity };

std::string_view to_string(Involution inv);
Involution parse_involution(std::string_view text);

/// Which concrete carrier an element belongs to.
struct StarRingDescriptor {
  enum class Kind { gaussian_rational_matrix, zn, zp_matrix };

  Kind kind = Kind::zn;
  int n = 2;  // matrix size for matrix carriers, modulus for zn
  int p = 0;  // prime for zp_matrix
  Involution involution = Involution::identity;

  static StarRingDescriptor gaussian_matrix(int size, Involution inv);
  static StarRingDescriptor zn(int modulus);
  static StarRingDescriptor zp_matrix(int prime, int size, Involution inv = Involution::transpose);

  /// Matrix dimension (k for zp_matrix, n for gaussian); 1 for zn.
  int dimension() const { return kind == Kind::zn ? 1 : n; }
  std::string to_string() const;

  friend bool operator==(const StarRingDescriptor&, const StarRingDescriptor&) = default;
};

bool is_prime(std::int64_t value);

// Every carrier element supports ring arithmetic, the involution `star`, and
// carrier-aware constructors for 0 and 1. Operators throw CarrierMismatch on
// mixed-carrier operands.
template <class E>
concept StarRingElement = std::regular<E> && requires(const E& a, const E& b) {
  { a + b } -> std::same_as<E>;
  { a - b } -> std::same_as<E>;
  { a * b } -> std::same_as<E>;
  { -a } -> std::same_as<E>;
  { star(a) } -> std::same_as<E>;
  { zero_like(a) } -> std::same_as<E>;
  { one_like(a) } -> std::same_as<E>;
  { same_carrier(a, b) } -> std::convertible_to<bool>;
  { is_zero(a) } -> std::convertible_to<bool>;
};

enum class InverseKind { moore_penrose, one_three, group, drazin, core, pseudo_core, dual_pseudo_core };

std::string_view to_string(InverseKind kind);
/// Accepts both long names ("moore-penrose") and CLI short names ("mp", "13").
InverseKind parse_inverse_kind(std::string_view text);
bool kind_has_index(InverseKind kind);

template <class E>
struct InverseWitness {
  InverseKind kind;
  E value;
  std::optional<int> index;  // Drazin index or pseudo core index
  bool verified = false;
};

enum class NotExistsReason {
  no_13_inverse,           // the form x -> F*x is degenerate on the range
  no_13_inverse_of_power,  // no power a^m has a {1,3}-inverse
  form_degenerate,         // Moore-Penrose: F*F or GG* singular
  not_strongly_pi_regular,
  index_exceeds_one,  // group/core inverse asked of an element of index > 1
  no_solution,        // exhaustive scan found nothing
};

std::string_view to_string(NotExistsReason reason);

struct NotExists {
  NotExistsReason reason;
  std::string detail;
};

template <class E>
class ExistenceResult {
 public:
  static ExistenceResult exists(InverseWitness<E> w) { return ExistenceResult(std::move(w)); }
  static ExistenceResult not_exists(NotExistsReason reason, std::string detail = {}) {
    return ExistenceResult(NotExists{reason, std::move(detail)});
  }

  bool has_value() const { return std::holds_alternative<InverseWitness<E>>(state_); }
  explicit operator bool() const { return has_value(); }

  const InverseWitness<E>& witness() const {
    if (!has_value()) throw DomainError("inverse does not exist: " + std::string(to_string(failure().reason)));
    return std::get<InverseWitness<E>>(state_);
  }
  const E& value() const { return witness().value; }
  int index() const { return witness().index.value_or(1); }
  const NotExists& failure() const { return std::get<NotExists>(state_); }

 private:
  explicit ExistenceResult(InverseWitness<E> w) : state_(std::move(w)) {}
  explicit ExistenceResult(NotExists n) : state_(std::move(n)) {}

  std::variant<InverseWitness<E>, NotExists> state_;
};

template <StarRingElement E>
void require_same_carrier(const E& a, const E& b) {
  if (!same_carrier(a, b)) throw CarrierMismatch("operands belong to different carriers");
}

/// a^k with a^0 = 1, by repeated squaring.
template <StarRingElement E>
E power(const E& a, unsigned k) {
  E result = one_like(a);
  E base = a;
  while (k != 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k != 0) base = base * base;
  }
  return result;
}

template <StarRingElement E>
bool is_symmetric(const E& a) {
  return star(a) == a;
}

template <StarRingElement E>
bool is_normal(const E& a) {
  const E s = star(a);
  return a * s == s * a;
}

enum class Penrose : unsigned { one = 1U, two = 2U, three = 4U, four = 8U };

struct PenroseSet {
  unsigned bits = 0;
  PenroseSet() = default;
  PenroseSet(std::initializer_list<int> equations) {
    for (int e : equations) {
      if (e < 1 || e > 4) throw DomainError("Penrose equations are numbered 1..4");
      bits |= 1U << (e - 1);
    }
  }
  bool contains(int e) const { return (bits >> (e - 1)) & 1U; }
  static PenroseSet all() { return {1, 2, 3, 4}; }
};

/// Evaluates the selected Penrose equations literally.
template <StarRingElement E>
bool verify_penrose(const E& a, const E& x, PenroseSet which) {
  require_same_carrier(a, x);
  const E ax = a * x;
  const E xa = x * a;
  if (which.contains(1) && !(ax * a == a)) return false;
  if (which.contains(2) && !(xa * x == x)) return false;
  if (which.contains(3) && !is_symmetric(ax)) return false;
  if (which.contains(4) && !is_symmetric(xa)) return false;
  return true;
}

/// a^m x a = a^m, x a x = x, a x = x a.
template <StarRingElement E>
bool verify_drazin(const E& a, const E& x, int m) {
  require_same_carrier(a, x);
  if (m < 1) throw DomainError("Drazin index must be positive");
  const E am = power(a, static_cast<unsigned>(m));
  const E ax = a * x;
  const E xa = x * a;
  return am * xa == am && x * ax == x && ax == xa;
}

/// x a^2 = a, a x^2 = x, (ax)* = ax.
template <StarRingElement E>
bool verify_core_eqs(const E& a, const E& x) {
  require_same_carrier(a, x);
  const E ax = a * x;
  return x * a * a == a && ax * x == x && is_symmetric(ax);
}

/// x a^{m+1} = a^m, a x^2 = x, (ax)* = ax.
template <StarRingElement E>
bool verify_pseudo_core_eqs(const E& a, const E& x, int m) {
  require_same_carrier(a, x);
  if (m < 1) throw DomainError("pseudo core index must be positive");
  const E am = power(a, static_cast<unsigned>(m));
  const E ax = a * x;
  return x * (am * a) == am && ax * x == x && is_symmetric(ax);
}

/// a^{m+1} x = a^m, x^2 a = x, (xa)* = xa.
template <StarRingElement E>
bool verify_dual_pseudo_core_eqs(const E& a, const E& x, int m) {
  require_same_carrier(a, x);
  if (m < 1) throw DomainError("dual pseudo core index must be positive");
  const E am = power(a, static_cast<unsigned>(m));
  const E xa = x * a;
  return (am * a) * x == am && x * xa == x && is_symmetric(xa);
}

/// Re-checks a witness against the equations of its kind.
template <StarRingElement E>
bool verify_witness(const E& a, InverseKind kind, const E& x, std::optional<int> index) {
  switch (kind) {
    case InverseKind::moore_penrose:
      return verify_penrose(a, x, PenroseSet::all());
    case InverseKind::one_three:
      return verify_penrose(a, x, {1, 3});
    case InverseKind::group:
      return verify_drazin(a, x, 1);
    case InverseKind::drazin:
      return verify_drazin(a, x, index.value_or(1));
    case InverseKind::core:
      return verify_core_eqs(a, x);
    case InverseKind::pseudo_core:
      return verify_pseudo_core_eqs(a, x, index.value_or(1));
    case InverseKind::dual_pseudo_core:
      return verify_dual_pseudo_core_eqs(a, x, index.value_or(1));
  }
  return false;
}

/// Builds an Exists result after re-verifying; a failed re-check is a logic error.
template <StarRingElement E>
ExistenceResult<E> verified_result(const E& a, InverseKind kind, E x, std::optional<int> index) {
  const bool ok = verify_witness(a, kind, x, index);
  if (!ok) throw std::logic_error("constructed " + std::string(to_string(kind)) + " witness failed re-verification");
  return ExistenceResult<E>::exists(InverseWitness<E>{kind, std::move(x), index, true});
}

}  // namespace stardmp
