#pragma once

// n x n matrices over Q(i) as a *-ring carrier, with the involution fixed per
// carrier (conjugate-transpose or plain transpose).

#include <string>
#include <vector>

#include "stardmp/core/star_ring.hpp"
#include "stardmp/exact/linalg.hpp"
#include "stardmp/exact/random.hpp"

namespace stardmp::exact {

class ExactMatrixRing {
 public:
  using Element = ExactMatrix;
  static constexpr bool is_finite = false;
  /// Randomized alternatives added to one_three_family.
  static constexpr int kRandomizedOneThree = 8;

  ExactMatrixRing(std::size_t n, Involution inv);

  StarRingDescriptor descriptor() const {
    return StarRingDescriptor::gaussian_matrix(static_cast<int>(n_), inv_);
  }
  std::size_t dimension() const { return n_; }
  Involution involution() const { return inv_; }

  ExactMatrix zero() const { return ExactMatrix(GaussianRationalField{}, n_, n_, inv_); }
  ExactMatrix one() const { return ExactMatrix::identity(GaussianRationalField{}, n_, inv_); }
  /// From scalar texts such as "1/2-3/4 i".
  ExactMatrix parse(const std::vector<std::vector<std::string>>& rows) const;
  ExactMatrix make(const std::vector<std::vector<GaussianRational>>& rows) const;

  ExistenceResult<ExactMatrix> moore_penrose(const ExactMatrix& a) const { return mp_inverse(member(a)); }
  ExistenceResult<ExactMatrix> one_three(const ExactMatrix& a) const { return one_three_inverse(member(a)); }
  ExistenceResult<ExactMatrix> group(const ExactMatrix& a) const { return group_inverse(member(a)); }
  ExistenceResult<ExactMatrix> drazin(const ExactMatrix& a) const { return drazin_inverse(member(a)); }
  ExistenceResult<ExactMatrix> core(const ExactMatrix& a) const { return core_inverse(member(a)); }
  ExistenceResult<ExactMatrix> pseudo_core(const ExactMatrix& a) const { return pseudo_core_inverse(member(a)); }
  ExistenceResult<ExactMatrix> dual_pseudo_core(const ExactMatrix& a) const {
    return dual_pseudo_core_inverse(member(a));
  }
  /// Same construction as pseudo_core but with a randomized {1,3}-inverse of a^m.
  ExistenceResult<ExactMatrix> pseudo_core_randomized(const ExactMatrix& a) const;

  bool is_unit(const ExactMatrix& a) const { return exact::is_unit(member(a)); }

  /// The canonical {1,3}-inverse, the Moore-Penrose inverse when it exists, and
  /// randomized alternatives; empty when c has no {1,3}-inverse. Deterministic in c.
  std::vector<ExactMatrix> one_three_family(const ExactMatrix& c) const;

  /// The index of an n x n matrix never exceeds n.
  int index_bound(const ExactMatrix&) const { return static_cast<int>(n_); }

  bool right_ideal_equal(const ExactMatrix& x, const ExactMatrix& y) const { return range_equal(x, y); }
  /// Ry ⊆ Rz, i.e. rowspace(y) within rowspace(z).
  bool left_ideal_contained(const ExactMatrix& y, const ExactMatrix& z) const { return row_space_contained(y, z); }
  /// °x ⊆ °y
  bool left_annihilator_contained(const ExactMatrix& x, const ExactMatrix& y) const {
    return left_null_contained(x, y);
  }

  /// `count` pseudo-random elements seeded from a's text; used as probes for
  /// existential conditions.
  std::vector<ExactMatrix> random_probes(const ExactMatrix& a, int count) const;

 private:
  const ExactMatrix& member(const ExactMatrix& a) const;

  std::size_t n_;
  Involution inv_;
};

}  // namespace stardmp::exact
