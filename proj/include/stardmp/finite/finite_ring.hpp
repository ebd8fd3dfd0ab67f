#pragma once

// Exhaustive machinery shared by the finite carriers: enumeration under a
// budget, power-cycle Drazin inverses, the brute-force inverse oracle, and
// set-level annihilators and principal ideals.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stardmp/core/errors.hpp"
#include "stardmp/core/star_ring.hpp"

namespace stardmp::finite {

inline constexpr std::size_t kDefaultBudget = 1'000'000;

/// Reads STARDMP_BUDGET if set and valid, else returns `fallback`.
std::size_t budget_from_env(std::size_t fallback = kDefaultBudget);

template <class R>
concept FiniteCarrier = StarRingElement<typename R::Element> &&
                        requires(const R& r, std::size_t i, const typename R::Element& e) {
                          { r.size() } -> std::convertible_to<std::size_t>;
                          { r.budget() } -> std::convertible_to<std::size_t>;
                          { r.element_at(i) } -> std::same_as<typename R::Element>;
                          { r.index_of(e) } -> std::convertible_to<std::size_t>;
                          { r.descriptor() } -> std::same_as<StarRingDescriptor>;
                        };

template <FiniteCarrier R>
void require_budget(const R& ring, std::size_t work) {
  if (work > ring.budget())
    throw BudgetExceeded(ring.descriptor().to_string() + ": " + std::to_string(work) + " elements exceeds budget " +
                         std::to_string(ring.budget()));
}

/// Every element exactly once, in the carrier's lexicographic order.
template <FiniteCarrier R>
std::vector<typename R::Element> enumerate(const R& ring) {
  require_budget(ring, ring.size());
  std::vector<typename R::Element> out;
  out.reserve(ring.size());
  for (std::size_t i = 0; i < ring.size(); ++i) out.push_back(ring.element_at(i));
  return out;
}

/// a^start = a^{start + period}, both minimal (exponents counted from 1).
struct PowerCycle {
  int start = 1;
  int period = 1;
  int distinct_powers() const { return start + period - 1; }
};

template <StarRingElement E>
PowerCycle power_cycle(const E& a, std::size_t max_steps) {
  std::vector<E> powers{a};
  while (powers.size() <= max_steps) {
    E next = powers.back() * a;
    for (std::size_t i = 0; i < powers.size(); ++i)
      if (powers[i] == next) return {static_cast<int>(i) + 1, static_cast<int>(powers.size() - i)};
    powers.push_back(std::move(next));
  }
  throw BudgetExceeded("power sequence did not become periodic within " + std::to_string(max_steps) + " steps");
}

/// In a finite ring the powers of a close into a cyclic group K with identity e;
/// a^D is the inverse of a*e in K, a^l with l >= start and l = -1 mod period.
template <StarRingElement E>
ExistenceResult<E> drazin_by_power_cycle(const E& a, std::size_t max_steps) {
  const PowerCycle c = power_cycle(a, max_steps);
  int l = c.start;
  while ((l + 1) % c.period != 0) ++l;
  return verified_result(a, InverseKind::drazin, power(a, static_cast<unsigned>(l)), c.start);
}

/// Membership bitmap over a carrier's canonical enumeration.
class RingSubset {
 public:
  RingSubset() = default;
  RingSubset(StarRingDescriptor carrier, std::size_t size) : carrier_(carrier), bits_(size, false) {}

  const StarRingDescriptor& carrier() const { return carrier_; }
  std::size_t universe_size() const { return bits_.size(); }
  bool contains(std::size_t i) const { return bits_.at(i); }
  void insert(std::size_t i) { bits_.at(i) = true; }
  std::size_t count() const;
  std::vector<std::size_t> members() const;

  bool subset_of(const RingSubset& o) const;
  RingSubset intersect(const RingSubset& o) const;
  friend bool operator==(const RingSubset& a, const RingSubset& b) {
    return a.carrier_ == b.carrier_ && a.bits_ == b.bits_;
  }

 private:
  void require_compatible(const RingSubset& o) const;

  StarRingDescriptor carrier_{};
  std::vector<bool> bits_;
};

/// °a = {x : xa = 0}
template <FiniteCarrier R>
RingSubset left_annihilator(const R& ring, const typename R::Element& a) {
  require_budget(ring, ring.size());
  RingSubset s(ring.descriptor(), ring.size());
  for (std::size_t i = 0; i < ring.size(); ++i)
    if (is_zero(ring.element_at(i) * a)) s.insert(i);
  return s;
}

/// aR = {ax : x in R}
template <FiniteCarrier R>
RingSubset principal_right_ideal(const R& ring, const typename R::Element& a) {
  require_budget(ring, ring.size());
  RingSubset s(ring.descriptor(), ring.size());
  for (std::size_t i = 0; i < ring.size(); ++i) s.insert(ring.index_of(a * ring.element_at(i)));
  return s;
}

/// Ra = {xa : x in R}
template <FiniteCarrier R>
RingSubset principal_left_ideal(const R& ring, const typename R::Element& a) {
  require_budget(ring, ring.size());
  RingSubset s(ring.descriptor(), ring.size());
  for (std::size_t i = 0; i < ring.size(); ++i) s.insert(ring.index_of(ring.element_at(i) * a));
  return s;
}

/// ax = xa = 1 for some x, by scan.
template <FiniteCarrier R>
bool is_unit_by_scan(const R& ring, const typename R::Element& a) {
  require_budget(ring, ring.size());
  const auto one = one_like(a);
  for (std::size_t i = 0; i < ring.size(); ++i) {
    const auto x = ring.element_at(i);
    if (a * x == one && x * a == one) return true;
  }
  return false;
}

template <class E>
struct Solution {
  E value;
  std::optional<int> index;
};

/// Scans every x (and every index m up to the number of distinct powers of a)
/// and returns all exact solutions of the defining equations of `kind`; for
/// indexed kinds each x is reported at its smallest valid m.
template <FiniteCarrier R>
std::vector<Solution<typename R::Element>> brute_force_inverse(const R& ring, InverseKind kind,
                                                               const typename R::Element& a) {
  using E = typename R::Element;
  require_budget(ring, ring.size());
  const int bound = power_cycle(a, ring.size() + 1).distinct_powers();
  std::vector<Solution<E>> out;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    E x = ring.element_at(i);
    if (!kind_has_index(kind)) {
      if (verify_witness(a, kind, x, std::nullopt)) out.push_back({std::move(x), std::nullopt});
      continue;
    }
    for (int m = 1; m <= bound; ++m)
      if (verify_witness(a, kind, x, m)) {
        out.push_back({std::move(x), m});
        break;
      }
  }
  return out;
}

/// Solutions attaining the smallest index (all of them for index-free kinds).
template <class E>
std::vector<Solution<E>> minimal_index_solutions(const std::vector<Solution<E>>& all) {
  std::optional<int> best;
  for (const auto& s : all)
    if (s.index && (!best || *s.index < *best)) best = s.index;
  std::vector<Solution<E>> out;
  for (const auto& s : all)
    if (s.index == best) out.push_back(s);
  return out;
}

// Ideal-theoretic conditions characterizing the pseudo core inverse x of a at
// index m, and its *-DMP strengthening. They use the carrier's predicates
// right_ideal_equal (xR = yR) and left_annihilator_contained (°x ⊆ °y), so they
// evaluate on matrix carriers too, where those are subspace comparisons.

/// variant 1: xax = x, xR = x*R = a^m R.
/// variant 2: xax = x, °x = °(a^m), °(x*) ⊆ °(a^m).
template <class Ring, class E>
bool pseudo_core_ideal_condition(const Ring& ring, const E& a, const E& x, int m, int variant) {
  require_same_carrier(a, x);
  if (m < 1) throw DomainError("index must be positive");
  if (!(x * a * x == x)) return false;
  const E am = power(a, static_cast<unsigned>(m));
  const E xs = star(x);
  if (variant == 1) return ring.right_ideal_equal(x, xs) && ring.right_ideal_equal(xs, am);
  if (variant == 2)
    return ring.left_annihilator_contained(x, am) && ring.left_annihilator_contained(am, x) &&
           ring.left_annihilator_contained(xs, am);
  throw DomainError("variant must be 1 or 2");
}

/// variant 1 adds x^m R = (a^m)* R; variant 2 adds °((a^m)*) ⊆ °(x^m).
template <class Ring, class E>
bool dmp_ideal_condition(const Ring& ring, const E& a, const E& x, int m, int variant) {
  if (!pseudo_core_ideal_condition(ring, a, x, m, variant)) return false;
  const E xm = power(x, static_cast<unsigned>(m));
  const E ams = star(power(a, static_cast<unsigned>(m)));
  if (variant == 1) return ring.right_ideal_equal(xm, ams);
  return ring.left_annihilator_contained(ams, xm);
}

}  // namespace stardmp::finite
