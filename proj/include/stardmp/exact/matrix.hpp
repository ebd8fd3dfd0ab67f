#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "stardmp/core/errors.hpp"
#include "stardmp/core/star_ring.hpp"

namespace stardmp::exact {

// Field policy: `Scalar`, zero(), one(); scalars provide + - * / == and free
// functions is_zero, conj, to_string.
template <class F>
concept FieldPolicy = requires(const F& f, const typename F::Scalar& s) {
  { f.zero() } -> std::same_as<typename F::Scalar>;
  { f.one() } -> std::same_as<typename F::Scalar>;
  { s + s } -> std::same_as<typename F::Scalar>;
  { s * s } -> std::same_as<typename F::Scalar>;
  { s / s } -> std::same_as<typename F::Scalar>;
  { is_zero(s) } -> std::convertible_to<bool>;
  { conj(s) } -> std::same_as<typename F::Scalar>;
};

// ADL shims; inside Matrix the member names would hide the scalar overloads.
template <class S>
bool is_zero_scalar(const S& s) {
  return is_zero(s);
}
/// acc += sign * a * b; scalars may overload add_product to skip temporaries.
template <class S>
void add_product(S& acc, const S& a, const S& b, int sign) {
  if (sign > 0)
    acc += a * b;
  else
    acc -= a * b;
}
template <class S>
void accumulate_product(S& acc, const S& a, const S& b, int sign = 1) {
  add_product(acc, a, b, sign);
}
template <class S>
std::string scalar_text(const S& s) {
  return to_string(s);
}

/// Dense row-major matrix over a field, tagged with the involution its carrier uses.
template <FieldPolicy Field>
class Matrix {
 public:
  using Scalar = typename Field::Scalar;

  Matrix() = default;
  Matrix(Field field, std::size_t rows, std::size_t cols, Involution inv)
      : field_(field), rows_(rows), cols_(cols), inv_(inv), data_(rows * cols, field.zero()) {}

  static Matrix identity(Field field, std::size_t n, Involution inv) {
    Matrix m(field, n, n, inv);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
  }

  static Matrix from_rows(Field field, const std::vector<std::vector<Scalar>>& rows, Involution inv) {
    if (rows.empty() || rows.front().empty()) throw DomainError("matrix must have at least one row and column");
    Matrix m(field, rows.size(), rows.front().size(), inv);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) throw DomainError("ragged matrix rows");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  const Field& field() const { return field_; }
  Involution involution() const { return inv_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  const std::vector<Scalar>& entries() const { return data_; }

  bool is_zero() const {
    for (const auto& s : data_)
      if (!exact::is_zero_scalar(s)) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix t(field_, cols_, rows_, inv_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  /// The carrier involution applied to this matrix.
  Matrix star() const {
    Matrix t(field_, cols_, rows_, inv_);
    const bool conjugate = inv_ == Involution::conjugate_transpose;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = conjugate ? conj((*this)(i, j)) : (*this)(i, j);
    return t;
  }

  Matrix operator-() const {
    Matrix r = *this;
    for (auto& s : r.data_) s = field_.zero() - s;
    return r;
  }

  Matrix& operator+=(const Matrix& o) {
    require_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    require_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw CarrierMismatch("matrix product with incompatible shapes");
    a.require_same_algebra(b);
    Matrix r(a.field_, a.rows_, b.cols_, a.inv_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Scalar& aik = a(i, k);
        if (exact::is_zero_scalar(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) exact::accumulate_product(r(i, j), aik, b(k, j));
      }
    return r;
  }

  Matrix scaled(const Scalar& s) const {
    Matrix r = *this;
    for (auto& e : r.data_) e = e * s;
    return r;
  }

  /// Columns listed in `cols`, in order.
  Matrix select_columns(const std::vector<std::size_t>& cols) const {
    Matrix r(field_, rows_, cols.size(), inv_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols.size(); ++j) r(i, j) = (*this)(i, cols[j]);
    return r;
  }

  /// Rows [0, count).
  Matrix top_rows(std::size_t count) const {
    Matrix r(field_, count, cols_, inv_);
    for (std::size_t i = 0; i < count; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j);
    return r;
  }

  /// [this | o]
  Matrix hstack(const Matrix& o) const {
    if (o.rows_ != rows_) throw CarrierMismatch("hstack with different row counts");
    Matrix r(field_, rows_, cols_ + o.cols_, inv_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j);
      for (std::size_t j = 0; j < o.cols_; ++j) r(i, cols_ + j) = o(i, j);
    }
    return r;
  }

  /// [this ; o]
  Matrix vstack(const Matrix& o) const {
    if (o.cols_ != cols_) throw CarrierMismatch("vstack with different column counts");
    Matrix r(field_, rows_ + o.rows_, cols_, inv_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j);
    for (std::size_t i = 0; i < o.rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(rows_ + i, j) = o(i, j);
    return r;
  }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      s += i ? ",[" : "[";
      for (std::size_t j = 0; j < cols_; ++j) {
        if (j) s += ",";
        s += exact::scalar_text((*this)(i, j));
      }
      s += "]";
    }
    return s + "]";
  }

  bool same_algebra(const Matrix& o) const { return field_ == o.field_ && inv_ == o.inv_; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.same_algebra(b) && a.data_ == b.data_;
  }

 private:
  void require_same_algebra(const Matrix& o) const {
    if (!same_algebra(o)) throw CarrierMismatch("matrices over different fields or involutions");
  }
  void require_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw CarrierMismatch("matrix sum with different shapes");
    require_same_algebra(o);
  }

  Field field_{};
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Involution inv_ = Involution::conjugate_transpose;
  std::vector<Scalar> data_;
};

// Free functions completing the StarRingElement concept.
template <class Field>
Matrix<Field> star(const Matrix<Field>& a) {
  return a.star();
}
template <class Field>
Matrix<Field> zero_like(const Matrix<Field>& a) {
  return Matrix<Field>(a.field(), a.rows(), a.cols(), a.involution());
}
template <class Field>
Matrix<Field> one_like(const Matrix<Field>& a) {
  if (!a.is_square()) throw NotSquare("identity requested for a non-square matrix");
  return Matrix<Field>::identity(a.field(), a.rows(), a.involution());
}
template <class Field>
bool same_carrier(const Matrix<Field>& a, const Matrix<Field>& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() && a.same_algebra(b);
}
template <class Field>
bool is_zero(const Matrix<Field>& a) {
  return a.is_zero();
}

}  // namespace stardmp::exact
