#pragma once

// Exact linear algebra over a field with involution, and closed-form
// constructions of the generalized inverses built from full-rank factorizations.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "stardmp/core/star_ring.hpp"
#include "stardmp/exact/matrix.hpp"

namespace stardmp::exact {

template <class Field>
struct RrefResult {
  Matrix<Field> reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
};

/// Gauss-Jordan elimination choosing the first nonzero entry of each column.
template <class Field>
RrefResult<Field> rref(const Matrix<Field>& a) {
  Matrix<Field> m = a;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pick = row;
    while (pick < m.rows() && is_zero_scalar(m(pick, col))) ++pick;
    if (pick == m.rows()) continue;
    if (pick != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pick, j), m(row, j));
    const auto inv = m.field().one() / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) = m(row, j) * inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || is_zero_scalar(m(i, col))) continue;
      const auto factor = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) accumulate_product(m(i, j), factor, m(row, j), -1);
    }
    pivots.push_back(col);
    ++row;
  }
  const std::size_t r = pivots.size();
  return {std::move(m), std::move(pivots), r};
}

template <class Field>
std::size_t rank(const Matrix<Field>& a) {
  return rref(a).rank;
}

template <class Field>
struct FullRankFactorization {
  Matrix<Field> left;   // n x r, full column rank (pivot columns of A)
  Matrix<Field> right;  // r x m, full row rank (nonzero rows of rref(A))
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

/// A = left * right. Throws DomainError for the zero matrix.
template <class Field>
FullRankFactorization<Field> full_rank_factorization(const Matrix<Field>& a) {
  auto r = rref(a);
  if (r.rank == 0) throw DomainError("full-rank factorization of the zero matrix");
  return {a.select_columns(r.pivots), r.reduced.top_rows(r.rank), r.rank, std::move(r.pivots)};
}

/// Ordinary inverse of a square matrix, if it is nonsingular.
template <class Field>
std::optional<Matrix<Field>> inverse(const Matrix<Field>& a) {
  if (!a.is_square()) throw NotSquare("inverse of a non-square matrix");
  const std::size_t n = a.rows();
  auto r = rref(a.hstack(one_like(a)));
  if (r.rank < n || r.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix<Field> inv(a.field(), n, n, a.involution());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r.reduced(i, n + j);
  return inv;
}

template <class Field>
bool is_unit(const Matrix<Field>& a) {
  return a.is_square() && rank(a) == a.rows();
}

/// Column-space equality.
template <class Field>
bool range_equal(const Matrix<Field>& x, const Matrix<Field>& y) {
  if (x.rows() != y.rows()) throw CarrierMismatch("range comparison needs equal row counts");
  const auto rx = rank(x);
  return rx == rank(y) && rx == rank(x.hstack(y));
}

/// {z : z x = 0} is contained in {z : z y = 0}, i.e. range(y) lies in range(x).
template <class Field>
bool left_null_contained(const Matrix<Field>& x, const Matrix<Field>& y) {
  if (x.rows() != y.rows()) throw CarrierMismatch("left null space comparison needs equal row counts");
  return rank(x.hstack(y)) == rank(x);
}

/// rowspace(y) lies in rowspace(z).
template <class Field>
bool row_space_contained(const Matrix<Field>& y, const Matrix<Field>& z) {
  if (y.cols() != z.cols()) throw CarrierMismatch("row space comparison needs equal column counts");
  return rank(z.vstack(y)) == rank(z);
}

/// Right inverse of a full-row-rank rref block: unit vectors at the pivot columns.
template <class Field>
Matrix<Field> canonical_right_inverse(const Matrix<Field>& g, const std::vector<std::size_t>& pivots) {
  Matrix<Field> gr(g.field(), g.cols(), g.rows(), g.involution());
  for (std::size_t j = 0; j < pivots.size(); ++j) gr(pivots[j], j) = g.field().one();
  return gr;
}

/// A {1,3}-inverse built from a fixed right inverse of the factor G.
template <class Field>
ExistenceResult<Matrix<Field>> one_three_inverse_with(const Matrix<Field>& a, const FullRankFactorization<Field>& fg,
                                                      const Matrix<Field>& right_inverse) {
  const auto fstar = star(fg.left);
  const auto gram = inverse(fstar * fg.left);
  if (!gram)
    return ExistenceResult<Matrix<Field>>::not_exists(NotExistsReason::no_13_inverse,
                                                      "F*F is singular: the form is degenerate on the range");
  return verified_result(a, InverseKind::one_three, right_inverse * (*gram) * fstar, std::nullopt);
}

/// Canonical {1,3}-inverse: exists iff F*F is invertible for A = FG.
template <class Field>
ExistenceResult<Matrix<Field>> one_three_inverse(const Matrix<Field>& a) {
  if (a.is_zero()) return verified_result(a, InverseKind::one_three, a.transpose(), std::nullopt);
  const auto fg = full_rank_factorization(a);
  return one_three_inverse_with(a, fg, canonical_right_inverse(fg.right, fg.pivots));
}

template <class Field>
ExistenceResult<Matrix<Field>> mp_inverse(const Matrix<Field>& a) {
  if (a.is_zero()) return verified_result(a, InverseKind::moore_penrose, a.transpose(), std::nullopt);
  const auto fg = full_rank_factorization(a);
  const auto fstar = star(fg.left);
  const auto gstar = star(fg.right);
  const auto left_gram = inverse(fstar * fg.left);
  const auto right_gram = inverse(fg.right * gstar);
  if (!left_gram || !right_gram)
    return ExistenceResult<Matrix<Field>>::not_exists(NotExistsReason::form_degenerate,
                                                      !left_gram ? "F*F is singular" : "GG* is singular");
  return verified_result(a, InverseKind::moore_penrose, gstar * (*right_gram) * (*left_gram) * fstar, std::nullopt);
}

/// Smallest k >= 1 with rank(A^k) = rank(A^{k+1}).
template <class Field>
int drazin_index(const Matrix<Field>& a) {
  if (!a.is_square()) throw NotSquare("Drazin index of a non-square matrix");
  Matrix<Field> p = a;
  std::size_t r = rank(p);
  for (int k = 1;; ++k) {
    Matrix<Field> next = p * a;
    const std::size_t rn = rank(next);
    if (rn == r) return k;
    p = std::move(next);
    r = rn;
  }
}

template <class Field>
struct ClineTrace {
  Matrix<Field> value;
  int steps = 0;  // number of factorization steps performed
};

/// Cline's recursion: A = B1 C1, C1 B1 = B2 C2, ... until C_k B_k is invertible
/// (or zero, for nilpotent A); then A^D = B1..Bk (C_k B_k)^{-(k+1)} C_k..C1.
template <class Field>
ClineTrace<Field> cline_drazin(const Matrix<Field>& a) {
  if (!a.is_square()) throw NotSquare("Drazin inverse of a non-square matrix");
  if (a.is_zero()) return {a, 0};
  std::vector<Matrix<Field>> lefts, rights;
  Matrix<Field> m = a;
  for (;;) {
    auto fg = full_rank_factorization(m);
    Matrix<Field> swapped = fg.right * fg.left;
    lefts.push_back(std::move(fg.left));
    rights.push_back(std::move(fg.right));
    const int k = static_cast<int>(lefts.size());
    if (swapped.is_zero()) return {zero_like(a), k};
    if (auto inv = inverse(swapped)) {
      Matrix<Field> x = power(*inv, static_cast<unsigned>(k + 1));
      for (int j = k - 1; j >= 0; --j) x = lefts[j] * x * rights[j];
      return {std::move(x), k};
    }
    m = std::move(swapped);
  }
}

template <class Field>
ExistenceResult<Matrix<Field>> drazin_inverse(const Matrix<Field>& a) {
  const int index = drazin_index(a);
  return verified_result(a, InverseKind::drazin, cline_drazin(a).value, index);
}

template <class Field>
ExistenceResult<Matrix<Field>> group_inverse(const Matrix<Field>& a) {
  const int index = drazin_index(a);
  if (index != 1)
    return ExistenceResult<Matrix<Field>>::not_exists(NotExistsReason::index_exceeds_one,
                                                      "Drazin index is " + std::to_string(index));
  return verified_result(a, InverseKind::group, cline_drazin(a).value, std::nullopt);
}

/// A^D A^m (A^m)^{(1,3)} at m = Drazin index; absent when A^m has no {1,3}-inverse
/// (the range of A^m, hence that property, is constant from the index on).
template <class Field>
ExistenceResult<Matrix<Field>> pseudo_core_inverse(const Matrix<Field>& a) {
  const auto d = drazin_inverse(a);
  const int m = d.index();
  const auto am = power(a, static_cast<unsigned>(m));
  const auto t = one_three_inverse(am);
  if (!t)
    return ExistenceResult<Matrix<Field>>::not_exists(NotExistsReason::no_13_inverse_of_power,
                                                      "A^" + std::to_string(m) + " has no {1,3}-inverse");
  return verified_result(a, InverseKind::pseudo_core, d.value() * am * t.value(), m);
}

template <class Field>
ExistenceResult<Matrix<Field>> core_inverse(const Matrix<Field>& a) {
  auto p = pseudo_core_inverse(a);
  if (!p) return p;
  if (p.index() != 1)
    return ExistenceResult<Matrix<Field>>::not_exists(NotExistsReason::index_exceeds_one,
                                                      "pseudo core index is " + std::to_string(p.index()));
  return verified_result(a, InverseKind::core, p.value(), std::nullopt);
}

template <class Field>
ExistenceResult<Matrix<Field>> dual_pseudo_core_inverse(const Matrix<Field>& a) {
  const auto p = pseudo_core_inverse(star(a));
  if (!p) return ExistenceResult<Matrix<Field>>::not_exists(p.failure().reason, "A* has no pseudo core inverse");
  return verified_result(a, InverseKind::dual_pseudo_core, star(p.value()), p.index());
}

/// Another right inverse of G: G_r + (I - G_r G) Z for a random Z.
template <class Field, class ScalarGen>
Matrix<Field> perturbed_right_inverse(const Matrix<Field>& g, const Matrix<Field>& gr, ScalarGen&& gen) {
  Matrix<Field> z(g.field(), g.cols(), g.rows(), g.involution());
  for (std::size_t i = 0; i < z.rows(); ++i)
    for (std::size_t j = 0; j < z.cols(); ++j) z(i, j) = gen();
  const auto id = Matrix<Field>::identity(g.field(), g.cols(), g.involution());
  return gr + (id - gr * g) * z;
}

}  // namespace stardmp::exact
