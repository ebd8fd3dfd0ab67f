#pragma once

// The two finite carrier families: Z_n with the identity involution and
// k x k matrices over Z_p with the transpose.

#include <cstdint>
#include <memory>
#include <mutex>
#include <numeric>
#include <vector>

#include "stardmp/core/star_ring.hpp"
#include "stardmp/exact/linalg.hpp"
#include "stardmp/exact/matrix.hpp"
#include "stardmp/finite/finite_ring.hpp"
#include "stardmp/finite/mod_p.hpp"
#include "stardmp/finite/zn.hpp"

namespace stardmp::finite {

using FiniteMatrix = exact::Matrix<PrimeField>;

/// Per-element principal right ideals and left annihilators, built once.
struct IdealTable {
  std::vector<RingSubset> right_ideals;
  std::vector<RingSubset> left_ideals;
  std::vector<RingSubset> left_annihilators;
};

// Shared carrier plumbing. Derived supplies Element, size(), element_at(),
// index_of(), descriptor(), one_three() and moore_penrose(); optionally
// drazin() and is_unit() when it has a faster route than the generic one.
template <class Derived, class E>
class FiniteRingBase {
 public:
  using Element = E;
  static constexpr bool is_finite = true;

  explicit FiniteRingBase(std::size_t budget) : budget_(budget), table_(std::make_shared<TableSlot>()) {}

  std::size_t budget() const { return budget_; }
  std::vector<E> elements() const { return enumerate(self()); }
  E zero() const { return zero_like(self().element_at(0)); }
  E one() const { return one_like(self().element_at(0)); }

  ExistenceResult<E> drazin(const E& a) const { return drazin_by_power_cycle(a, self().size() + 1); }

  ExistenceResult<E> group(const E& a) const {
    const auto d = self().drazin(a);
    if (d.index() != 1)
      return ExistenceResult<E>::not_exists(NotExistsReason::index_exceeds_one,
                                            "Drazin index is " + std::to_string(d.index()));
    return verified_result(a, InverseKind::group, d.value(), std::nullopt);
  }

  /// a^D a^m (a^m)^{(1,3)} at m = Drazin index.
  ExistenceResult<E> pseudo_core(const E& a) const {
    const auto d = self().drazin(a);
    const int m = d.index();
    const E am = power(a, static_cast<unsigned>(m));
    const auto t = self().one_three(am);
    if (!t)
      return ExistenceResult<E>::not_exists(NotExistsReason::no_13_inverse_of_power,
                                            "a^" + std::to_string(m) + " has no {1,3}-inverse");
    return verified_result(a, InverseKind::pseudo_core, d.value() * am * t.value(), m);
  }

  ExistenceResult<E> core(const E& a) const {
    auto p = pseudo_core(a);
    if (!p) return p;
    if (p.index() != 1)
      return ExistenceResult<E>::not_exists(NotExistsReason::index_exceeds_one,
                                            "pseudo core index is " + std::to_string(p.index()));
    return verified_result(a, InverseKind::core, p.value(), std::nullopt);
  }

  ExistenceResult<E> dual_pseudo_core(const E& a) const {
    const auto p = pseudo_core(star(a));
    if (!p) return ExistenceResult<E>::not_exists(p.failure().reason, "a* has no pseudo core inverse");
    return verified_result(a, InverseKind::dual_pseudo_core, star(p.value()), p.index());
  }

  bool is_unit(const E& a) const { return is_unit_by_scan(self(), a); }

  /// Every {1,3}-inverse of c, in enumeration order.
  std::vector<E> one_three_family(const E& c) const {
    std::vector<E> out;
    for (const auto& s : brute_force_inverse(self(), InverseKind::one_three, c)) out.push_back(s.value);
    return out;
  }

  /// Number of distinct powers of a; no index can exceed it.
  int index_bound(const E& a) const { return power_cycle(a, self().size() + 1).distinct_powers(); }

  bool right_ideal_equal(const E& x, const E& y) const {
    const auto& t = table();
    return t.right_ideals[self().index_of(x)] == t.right_ideals[self().index_of(y)];
  }
  /// Ry ⊆ Rz
  bool left_ideal_contained(const E& y, const E& z) const {
    const auto& t = table();
    return t.left_ideals[self().index_of(y)].subset_of(t.left_ideals[self().index_of(z)]);
  }
  /// °x ⊆ °y
  bool left_annihilator_contained(const E& x, const E& y) const {
    const auto& t = table();
    return t.left_annihilators[self().index_of(x)].subset_of(t.left_annihilators[self().index_of(y)]);
  }

  const IdealTable& table() const {
    std::call_once(table_->once, [this] {
      const Derived& r = self();
      require_budget(r, r.size() * r.size());
      for (std::size_t i = 0; i < r.size(); ++i) {
        const E a = r.element_at(i);
        table_->value.right_ideals.push_back(principal_right_ideal(r, a));
        table_->value.left_ideals.push_back(principal_left_ideal(r, a));
        table_->value.left_annihilators.push_back(left_annihilator(r, a));
      }
    });
    return table_->value;
  }

 protected:
  const Derived& self() const { return static_cast<const Derived&>(*this); }

 private:
  struct TableSlot {
    std::once_flag once;
    IdealTable value;
  };

  std::size_t budget_;
  std::shared_ptr<TableSlot> table_;
};

class ZnRing : public FiniteRingBase<ZnRing, ZnElement> {
 public:
  explicit ZnRing(std::uint32_t n, std::size_t budget = budget_from_env());

  StarRingDescriptor descriptor() const { return StarRingDescriptor::zn(static_cast<int>(n_)); }
  std::uint32_t modulus() const { return n_; }
  std::size_t size() const { return n_; }
  ZnElement element_at(std::size_t i) const { return {static_cast<std::int64_t>(i), n_}; }
  std::size_t index_of(const ZnElement& e) const;
  ZnElement make(std::int64_t v) const { return {v, n_}; }

  /// With c = g c', g = gcd(c, n), h = n/g: regular iff gcd(g, h) = 1, and then
  /// x = c^{-1} mod h, x = 0 mod g is a {1}-inverse (every element is symmetric).
  ExistenceResult<ZnElement> one_three(const ZnElement& c) const;
  /// y c y for a {1}-inverse y.
  ExistenceResult<ZnElement> moore_penrose(const ZnElement& c) const;
  bool is_unit(const ZnElement& a) const { return std::gcd(a.value(), n_) == 1; }

 private:
  std::uint32_t n_;
};

class ZpMatrixRing : public FiniteRingBase<ZpMatrixRing, FiniteMatrix> {
 public:
  ZpMatrixRing(std::uint32_t p, std::size_t k, std::size_t budget = budget_from_env());

  StarRingDescriptor descriptor() const {
    return StarRingDescriptor::zp_matrix(static_cast<int>(p_), static_cast<int>(k_));
  }
  std::uint32_t prime() const { return p_; }
  std::size_t dimension() const { return k_; }
  std::size_t size() const { return size_; }

  /// Lexicographic on the row-major entry tuple, first entry most significant.
  FiniteMatrix element_at(std::size_t i) const;
  std::size_t index_of(const FiniteMatrix& e) const;
  FiniteMatrix make(const std::vector<std::vector<std::int64_t>>& rows) const;

  ExistenceResult<FiniteMatrix> one_three(const FiniteMatrix& c) const;
  ExistenceResult<FiniteMatrix> moore_penrose(const FiniteMatrix& c) const;
  /// Cline's recursion over the field Z_p.
  ExistenceResult<FiniteMatrix> drazin(const FiniteMatrix& a) const;
  bool is_unit(const FiniteMatrix& a) const;

 private:
  void require_member(const FiniteMatrix& e) const;

  std::uint32_t p_;
  std::size_t k_;
  std::size_t size_;
};

}  // namespace stardmp::finite
