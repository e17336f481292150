#include "nilcanon/verify.hpp"

namespace nilcanon {

namespace {

Mat minus_identity(const Mat& a) {
  Mat out = a;
  const Scalar one = Scalar::one(field_of(a) ? field_of(a) : FieldSpec::rationals());
  for (Index i = 0; i < a.rows(); ++i) out(i, i) = out(i, i) - one;
  return out;
}

}  // namespace

std::vector<Index> power_ranks(const Mat& x) {
  if (x.rows() != x.cols()) throw Error(ErrorCode::NotSquare, "power ranks of a non-square matrix");
  const Index n = x.rows();
  std::vector<Index> ranks{n};
  Mat power = identity(n, field_of(x));
  for (Index k = 1; k <= n; ++k) {
    power = mat_mul(power, x);
    ranks.push_back(is_zero_matrix(power) ? 0 : mat_rank(power));
    if (ranks.back() == 0) {
      ranks.resize(static_cast<std::size_t>(n) + 1, 0);
      break;
    }
  }
  return ranks;
}

bool is_nilpotent(const Mat& x) {
  if (x.rows() != x.cols()) return false;
  return power_ranks(x).back() == 0;
}

bool is_unipotent(const Mat& u) {
  if (u.rows() != u.cols()) return false;
  return is_nilpotent(minus_identity(u));
}

Partition jordan_type(const Mat& x) {
  const std::vector<Index> ranks = power_ranks(x);
  if (ranks.back() != 0) throw Error(ErrorCode::NotNilpotent, "matrix is not nilpotent");
  const Index n = x.rows();
  if (n == 0) throw Error(ErrorCode::ShapeMismatch, "empty matrix");
  // at_least[k] = #{parts >= k}
  std::vector<Index> at_least(static_cast<std::size_t>(n) + 1, 0);
  for (Index k = 1; k <= n; ++k) at_least[k] = ranks[k - 1] - ranks[k];
  std::vector<int> parts;
  for (Index i = 1; i <= at_least[1]; ++i) {
    int part = 0;
    for (Index k = 1; k <= n; ++k)
      if (at_least[k] >= i) part = static_cast<int>(k);
    parts.push_back(part);
  }
  return Partition(std::move(parts));
}

bool is_f_symmetric(const Mat& x) {
  if (x.rows() != x.cols()) return false;
  return equal(antidiag_transpose(x), x);
}

bool supported_on(const Mat& x, const BlockLayout& layout) {
  if (x.rows() != layout.n || x.cols() != layout.n) return false;
  for (Index i = 0; i < x.rows(); ++i)
    for (Index j = 0; j < x.cols(); ++j)
      if (!x(i, j).is_zero() &&
          !layout.block_at(static_cast<int>(i) + 1, static_cast<int>(j) + 1))
        return false;
  return true;
}

bool is_zero_one(const Mat& x) {
  for (Index i = 0; i < x.rows(); ++i)
    for (Index j = 0; j < x.cols(); ++j)
      if (!x(i, j).is_zero() && !x(i, j).is_one()) return false;
  return true;
}

bool satisfies_lie_condition(const Mat& x, const Mat& m) {
  if (x.rows() != x.cols() || m.rows() != m.cols() || x.rows() != m.rows())
    throw Error(ErrorCode::ShapeMismatch, "Lie condition needs square matrices of equal size");
  return is_zero_matrix(mat_add(mat_mul(mat_transpose(x), m), mat_mul(m, x)));
}

bool is_F_stable(const Mat& x, std::uint64_t q) {
  const Field field = field_of(x);
  if (!field || field->kind() != FieldKind::QuadraticExt || field->base_order() != q)
    throw Error(ErrorCode::WrongField, "F-stability needs a matrix over F_{q^2} with q = " +
                                           std::to_string(q));
  const Mat f = antidiag_transpose(x);
  for (Index i = 0; i < x.rows(); ++i)
    for (Index j = 0; j < x.cols(); ++j)
      if (frobenius_q(f(i, j).in(field)) != x(i, j).in(field)) return false;
  return true;
}

bool in_dense_orbit(const Mat& x, const Partition& mu) {
  const BlockLayout layout = block_layout(mu);
  if (!supported_on(x, layout))
    throw Error(ErrorCode::NotSupported, "matrix is not supported on the layout of " + mu.to_string());
  return jordan_type(x) == mu;
}

bool composite_ranks_maximal(const Mat& x, const BlockLayout& layout) {
  auto block_of = [&](const Block& b) -> Mat {
    return x.block(b.row_first - 1, b.col_first - 1, b.height, b.width);
  };
  for (Chain c : {Chain::I, Chain::J}) {
    const std::vector<Block> blocks = layout.chain(c);
    const int count = static_cast<int>(blocks.size());
    const int half = count / 2;
    const int reach = c == Chain::I ? half : (count - 1) / 2;
    if (c == Chain::J && count > 0) {
      if (mat_rank(block_of(blocks[half])) != blocks[half].height) return false;
    }
    for (int r = 1; r <= reach; ++r) {
      const int first = half - r;
      const int last = c == Chain::I ? half + r - 1 : half + r;
      Mat product = block_of(blocks[first]);
      for (int k = first + 1; k <= last; ++k) product = mat_mul(product, block_of(blocks[k]));
      if (mat_rank(product) != product.rows()) return false;
    }
  }
  return true;
}

Certificate certify(const Mat& x, const BlockLayout& layout, const CertifyOptions& options) {
  Certificate cert;
  cert.jordan_type = jordan_type(x);
  cert.f_symmetric = is_f_symmetric(x);
  cert.supported = supported_on(x, layout);
  if (options.form) {
    cert.lie_condition = satisfies_lie_condition(x, *options.form);
    cert.lie_type = options.lie_type;
  }
  if (options.q) {
    cert.f_stable = is_F_stable(x, *options.q);
    cert.q = options.q;
  }
  if (options.expected) cert.dense_orbit = cert.supported && cert.jordan_type == *options.expected;
  return cert;
}

}  // namespace nilcanon
