#pragma once

// Dense exact matrices. Storage is Eigen with a custom scalar; the elimination
// kernels are free function templates over any exact field scalar `S` that
// provides + - * /, S(0), S(1) and an ADL-visible `is_zero(const S&)`.

#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "nilcanon/exactfield.hpp"

namespace Eigen {

template <>
struct NumTraits<nilcanon::Scalar> : GenericNumTraits<nilcanon::Scalar> {
  using Real = nilcanon::Scalar;
  using NonInteger = nilcanon::Scalar;
  using Literal = nilcanon::Scalar;
  using Nested = nilcanon::Scalar;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 4,
    MulCost = 4
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace nilcanon {

using Index = Eigen::Index;

template <typename S>
using MatrixX = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;

using Mat = MatrixX<Scalar>;

// ---------------------------------------------------------------------------
// Generic kernels.

/// Reduced row echelon form in place; returns pivot columns.
template <typename S>
std::vector<Index> rref_in_place(MatrixX<S>& a) {
  std::vector<Index> pivots;
  Index r = 0;
  for (Index c = 0; c < a.cols() && r < a.rows(); ++c) {
    Index pivot = r;
    while (pivot < a.rows() && is_zero(a(pivot, c))) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != r) a.row(pivot).swap(a.row(r));
    const S inv = S(1) / a(r, c);
    for (Index j = c; j < a.cols(); ++j) a(r, j) = a(r, j) * inv;
    for (Index i = 0; i < a.rows(); ++i) {
      if (i == r || is_zero(a(i, c))) continue;
      const S factor = a(i, c);
      for (Index j = c; j < a.cols(); ++j) a(i, j) = a(i, j) - factor * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

/// Rank by plain Gaussian elimination.
template <typename S>
Index rank(MatrixX<S> a) {
  Index r = 0;
  for (Index c = 0; c < a.cols() && r < a.rows(); ++c) {
    Index pivot = r;
    while (pivot < a.rows() && is_zero(a(pivot, c))) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != r) a.row(pivot).swap(a.row(r));
    const S inv = S(1) / a(r, c);
    for (Index i = r + 1; i < a.rows(); ++i) {
      if (is_zero(a(i, c))) continue;
      const S factor = a(i, c) * inv;
      for (Index j = c; j < a.cols(); ++j) a(i, j) = a(i, j) - factor * a(r, j);
    }
    ++r;
  }
  return r;
}

/// Inverse by Gauss-Jordan elimination.
template <typename S>
MatrixX<S> inverse(const MatrixX<S>& a) {
  if (a.rows() != a.cols()) throw Error(ErrorCode::NotSquare, "inverse of a non-square matrix");
  const Index n = a.rows();
  MatrixX<S> aug(n, 2 * n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      aug(i, j) = a(i, j);
      aug(i, n + j) = i == j ? S(1) : S(0);
    }
  const std::vector<Index> pivots = rref_in_place(aug);
  if (static_cast<Index>(pivots.size()) < n || (n > 0 && pivots[n - 1] != n - 1))
    throw Error(ErrorCode::Singular, "matrix is singular");
  return aug.rightCols(n);
}

/// Basis of the right kernel {v : a v = 0}, one basis vector per column, in
/// the usual free-variable order of the reduced echelon form.
template <typename S>
MatrixX<S> nullspace(const MatrixX<S>& a) {
  MatrixX<S> r = a;
  const std::vector<Index> pivots = rref_in_place(r);
  std::vector<bool> is_pivot(a.cols(), false);
  for (Index c : pivots) is_pivot[c] = true;
  const Index dim = a.cols() - static_cast<Index>(pivots.size());
  MatrixX<S> basis(a.cols(), dim);
  for (Index i = 0; i < basis.rows(); ++i)
    for (Index j = 0; j < basis.cols(); ++j) basis(i, j) = S(0);
  Index k = 0;
  for (Index free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    basis(free, k) = S(1);
    for (std::size_t row = 0; row < pivots.size(); ++row)
      basis(pivots[row], k) = S(0) - r(static_cast<Index>(row), free);
    ++k;
  }
  return basis;
}

/// The map f: entry (i, j) of the result is entry (n+1-j, n+1-i) of `a`
/// (1-based), i.e. the transpose about the anti-diagonal.
template <typename S>
MatrixX<S> antidiag_transpose(const MatrixX<S>& a) {
  MatrixX<S> out(a.cols(), a.rows());
  for (Index i = 0; i < out.rows(); ++i)
    for (Index j = 0; j < out.cols(); ++j) out(i, j) = a(a.rows() - 1 - j, a.cols() - 1 - i);
  return out;
}

template <typename S>
bool equal(const MatrixX<S>& a, const MatrixX<S>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      if (!(a(i, j) == b(i, j))) return false;
  return true;
}

template <typename S>
bool is_zero_matrix(const MatrixX<S>& a) {
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      if (!is_zero(a(i, j))) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Scalar-specific helpers.

Mat zeros(Index rows, Index cols, const Field& field);
Mat identity(Index n, const Field& field);
/// J_m: ones on the anti-diagonal.
Mat anti_identity(Index m, const Field& field);
/// Field of the first typed entry, or nullptr when every entry is an untyped literal.
Field field_of(const Mat& a);
/// Copy of `a` with every entry expressed in `field`.
Mat in_field(const Mat& a, const Field& field);
/// Entrywise reduction of a rational matrix into `field`.
Mat reduce(const Mat& a, const Field& field);

Mat mat_mul(const Mat& a, const Mat& b);
Mat mat_add(const Mat& a, const Mat& b);
Mat mat_sub(const Mat& a, const Mat& b);
Mat mat_scale(const Mat& a, const Scalar& s);
Mat mat_transpose(const Mat& a);
Mat mat_pow(const Mat& a, unsigned k);
/// Rank; over Q via fraction-free elimination on integer rows.
Index mat_rank(const Mat& a);
Mat mat_inverse(const Mat& a);
/// Checked f (throws NotSquare).
Mat mat_antidiag_transpose(const Mat& a);

/// One elementary operation, interpreted as a conjugation of the ambient
/// matrix. Indices are 0-based.
///
/// Row ops name the elementary matrix l obtained by applying the op to the
/// identity and act as x -> l x l^-1. Column ops name the matrix e obtained by
/// applying the op to the columns of the identity and act as x -> e^-1 x e.
struct ElementaryOp {
  enum class Kind { Swap, Scale, AddMultiple };
  enum class Side { Row, Column };

  Kind kind = Kind::Swap;
  Side side = Side::Row;
  Index a = 0;  // source (AddMultiple) or the scaled/first swapped index
  Index b = 0;  // destination (AddMultiple) or second swapped index
  Scalar lambda = Scalar(1);

  static ElementaryOp swap(Index a, Index b, Side side = Side::Row) {
    return {Kind::Swap, side, a, b, Scalar(1)};
  }
  static ElementaryOp scale(Index a, Scalar lambda, Side side = Side::Row) {
    return {Kind::Scale, side, a, a, std::move(lambda)};
  }
  /// Add lambda times line `from` to line `to`.
  static ElementaryOp add_multiple(Index from, Index to, Scalar lambda, Side side = Side::Row) {
    return {Kind::AddMultiple, side, from, to, std::move(lambda)};
  }

  /// The op whose conjugation undoes this one.
  ElementaryOp inverse() const;
  std::string describe() const;
};

/// l x l^-1 for the elementary matrix of `op` (see ElementaryOp).
Mat elementary_conjugate(const Mat& x, const ElementaryOp& op);
/// The matrix l (row ops) or e^-1 (column ops) such that the conjugation is
/// m x m^-1.
Mat elementary_matrix(Index n, const ElementaryOp& op, const Field& field);

}  // namespace nilcanon
