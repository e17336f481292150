#include "nilcanon/matrix.hpp"

#include <numeric>

namespace nilcanon {

Mat zeros(Index rows, Index cols, const Field& field) {
  const Scalar zero = field ? Scalar::zero(field) : Scalar(0);
  Mat m(rows, cols);
  m.setConstant(zero);
  return m;
}

Mat identity(Index n, const Field& field) {
  Mat m = zeros(n, n, field);
  const Scalar one = field ? Scalar::one(field) : Scalar(1);
  for (Index i = 0; i < n; ++i) m(i, i) = one;
  return m;
}

Mat anti_identity(Index m, const Field& field) {
  Mat out = zeros(m, m, field);
  const Scalar one = field ? Scalar::one(field) : Scalar(1);
  for (Index i = 0; i < m; ++i) out(i, m - 1 - i) = one;
  return out;
}

Field field_of(const Mat& a) {
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      if (a(i, j).is_typed()) return a(i, j).field();
  return nullptr;
}

Mat in_field(const Mat& a, const Field& field) {
  Mat out(a.rows(), a.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j) out(i, j) = a(i, j).in(field);
  return out;
}

Mat reduce(const Mat& a, const Field& field) {
  Mat out(a.rows(), a.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j) out(i, j) = a(i, j).reduced(field);
  return out;
}

namespace {

Field check_fields(const Mat& a, const Mat& b) {
  return common_field(field_of(a), field_of(b));
}

}  // namespace

Mat mat_mul(const Mat& a, const Mat& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::ShapeMismatch, "product shape mismatch");
  const Field field = check_fields(a, b);
  Mat out = zeros(a.rows(), b.cols(), field);
  for (Index i = 0; i < a.rows(); ++i)
    for (Index k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (Index j = 0; j < b.cols(); ++j)
        if (!b(k, j).is_zero()) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

Mat mat_add(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error(ErrorCode::ShapeMismatch, "sum shape mismatch");
  check_fields(a, b);
  return a + b;
}

Mat mat_sub(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error(ErrorCode::ShapeMismatch, "difference shape mismatch");
  check_fields(a, b);
  return a - b;
}

Mat mat_scale(const Mat& a, const Scalar& s) {
  common_field(field_of(a), s.field());
  Mat out = a;
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) * s;
  return out;
}

Mat mat_transpose(const Mat& a) { return a.transpose(); }

Mat mat_pow(const Mat& a, unsigned k) {
  if (a.rows() != a.cols()) throw Error(ErrorCode::NotSquare, "power of a non-square matrix");
  Mat result = identity(a.rows(), field_of(a));
  Mat base = a;
  while (k) {
    if (k & 1) result = mat_mul(result, base);
    k >>= 1;
    if (k) base = mat_mul(base, base);
  }
  return result;
}

namespace {

// Fraction-free echelon elimination on an integer matrix; every division is exact.
Index bareiss_rank(std::vector<std::vector<mpz_class>> m, Index cols) {
  const Index rows = static_cast<Index>(m.size());
  Index r = 0;
  mpz_class prev = 1;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index pivot = r;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[r]);
    for (Index i = r + 1; i < rows; ++i) {
      for (Index j = c + 1; j < cols; ++j) {
        mpz_class value = m[r][c] * m[i][j] - m[i][c] * m[r][j];
        mpz_divexact(value.get_mpz_t(), value.get_mpz_t(), prev.get_mpz_t());
        m[i][j] = value;
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return r;
}

}  // namespace

Index mat_rank(const Mat& a) {
  const Field field = field_of(a);
  if (field && field->is_finite()) return rank(a);
  // Scale each row by the lcm of its denominators to get an integer matrix.
  std::vector<std::vector<mpz_class>> m(a.rows(), std::vector<mpz_class>(a.cols()));
  for (Index i = 0; i < a.rows(); ++i) {
    mpz_class l = 1;
    for (Index j = 0; j < a.cols(); ++j) {
      const mpz_class& den = a(i, j).rational_value().get_den();
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
    }
    for (Index j = 0; j < a.cols(); ++j) {
      const mpq_class& v = a(i, j).rational_value();
      m[i][j] = v.get_num() * (l / v.get_den());
    }
  }
  return bareiss_rank(std::move(m), a.cols());
}

Mat mat_inverse(const Mat& a) { return in_field(inverse(a), field_of(a)); }

Mat mat_antidiag_transpose(const Mat& a) {
  if (a.rows() != a.cols()) throw Error(ErrorCode::NotSquare, "f needs a square matrix");
  return antidiag_transpose(a);
}

ElementaryOp ElementaryOp::inverse() const {
  switch (kind) {
    case Kind::Swap: return *this;
    case Kind::Scale: return scale(a, lambda.inverse(), side);
    case Kind::AddMultiple: return add_multiple(a, b, -lambda, side);
  }
  return *this;
}

std::string ElementaryOp::describe() const {
  const char* line = side == Side::Row ? "row" : "column";
  switch (kind) {
    case Kind::Swap:
      return std::string("swap ") + line + "s " + std::to_string(a + 1) + " and " +
             std::to_string(b + 1);
    case Kind::Scale:
      return std::string("multiply ") + line + " " + std::to_string(a + 1) + " by " +
             lambda.to_string();
    case Kind::AddMultiple:
      return "add " + lambda.to_string() + " times " + line + " " + std::to_string(a + 1) +
             " to " + line + " " + std::to_string(b + 1);
  }
  return "?";
}

Mat elementary_conjugate(const Mat& x, const ElementaryOp& op) {
  if (x.rows() != x.cols()) throw Error(ErrorCode::NotSquare, "conjugation of a non-square matrix");
  const Index n = x.rows();
  if (op.a < 0 || op.a >= n || op.b < 0 || op.b >= n)
    throw Error(ErrorCode::ShapeMismatch, "elementary op index out of range");
  Mat y = x;
  using Kind = ElementaryOp::Kind;
  switch (op.kind) {
    case Kind::Swap:
      y.row(op.a).swap(y.row(op.b));
      y.col(op.a).swap(y.col(op.b));
      break;
    case Kind::Scale: {
      if (op.lambda.is_zero()) throw Error(ErrorCode::ZeroScale, "scaling by zero");
      const Scalar inv = op.lambda.inverse();
      const Scalar& left = op.side == ElementaryOp::Side::Row ? op.lambda : inv;
      const Scalar& right = op.side == ElementaryOp::Side::Row ? inv : op.lambda;
      for (Index j = 0; j < n; ++j) y(op.a, j) *= left;
      for (Index i = 0; i < n; ++i) y(i, op.a) *= right;
      break;
    }
    case Kind::AddMultiple: {
      if (op.a == op.b) throw Error(ErrorCode::ShapeMismatch, "add-multiple needs distinct lines");
      if (op.side == ElementaryOp::Side::Row) {
        // l = I + lambda E_{b,a}: row b += lambda row a, then column a -= lambda column b.
        for (Index j = 0; j < n; ++j) y(op.b, j) += op.lambda * y(op.a, j);
        for (Index i = 0; i < n; ++i) y(i, op.a) -= op.lambda * y(i, op.b);
      } else {
        // e = I + lambda E_{a,b}: column b += lambda column a, then row a -= lambda row b.
        for (Index i = 0; i < n; ++i) y(i, op.b) += op.lambda * y(i, op.a);
        for (Index j = 0; j < n; ++j) y(op.a, j) -= op.lambda * y(op.b, j);
      }
      break;
    }
  }
  return y;
}

Mat elementary_matrix(Index n, const ElementaryOp& op, const Field& field) {
  // The conjugating matrix is l for row ops and e^-1 for column ops; applying
  // the op's left action to the identity yields it in both cases.
  Mat m = identity(n, field);
  using Kind = ElementaryOp::Kind;
  switch (op.kind) {
    case Kind::Swap:
      m.row(op.a).swap(m.row(op.b));
      break;
    case Kind::Scale:
      m(op.a, op.a) = op.side == ElementaryOp::Side::Row ? op.lambda : op.lambda.inverse();
      break;
    case Kind::AddMultiple:
      if (op.side == ElementaryOp::Side::Row) m(op.b, op.a) = op.lambda;
      else m(op.a, op.b) = -op.lambda;
      break;
  }
  return in_field(m, field);
}

}  // namespace nilcanon
