#include "nilcanon/canon.hpp"

#include <deque>
#include <map>
#include <random>

namespace nilcanon {

std::string_view to_string(Variant v) {
  switch (v) {
    case Variant::Symmetric: return "symmetric";
    case Variant::FStable: return "f-stable";
    case Variant::SymplecticAdjusted: return "symplectic";
    case Variant::OrthogonalAdjusted: return "orthogonal";
  }
  return "?";
}

StructureForm structure_matrix(const LieType& type, const Field& field) {
  const int n = type.n();
  switch (type.kind) {
    case LieType::Kind::A:
      throw Error(ErrorCode::TypeA, "gl_n has no defining form");
    case LieType::Kind::B:
    case LieType::Kind::D:
      return {anti_identity(n, field), type};
    case LieType::Kind::C: {
      const int l = type.rank;
      Mat m = zeros(n, n, field);
      const Scalar one = Scalar::one(field);
      for (int i = 0; i < l; ++i) {
        m(i, n - 1 - i) = one;
        m(l + i, l - 1 - i) = -one;
      }
      return {m, type};
    }
  }
  throw Error(ErrorCode::InternalError, "unknown Lie type");
}

namespace {

enum class Flavor { Gl, Unitary, Orthogonal };

std::vector<Index> level_of(const BlockLayout& layout, int level) {
  std::vector<Index> out;
  for (int i : layout.level_indices(level)) out.push_back(i - 1);
  return out;
}

// Writes `block` into the rows at `row_level` and the columns two levels below.
void place(Mat& x, const BlockLayout& layout, int row_level, const Mat& block) {
  const std::vector<Index> rows = level_of(layout, row_level);
  const std::vector<Index> cols = level_of(layout, row_level - 2);
  for (Index r = 0; r < block.rows(); ++r)
    for (Index c = 0; c < block.cols(); ++c)
      if (!block(r, c).is_zero()) x(rows[r], cols[c]) = block(r, c);
}

// Pairs the outermost columns (i, m-1-i) with rows (mp-1-i, i). An odd row
// count takes the centre column when m is odd and otherwise merges the next
// free column pair with coefficients (left, right).
Mat paired_block(int mp, int m, const Scalar& left, const Scalar& right, const Field& field) {
  Mat a = zeros(mp, m, field);
  const Scalar one = Scalar::one(field);
  const int h = mp / 2;
  for (int i = 0; i < h; ++i) {
    a(i, m - 1 - i) = one;
    a(mp - 1 - i, i) = one;
  }
  if (mp % 2 == 1) {
    if (m % 2 == 1) {
      a(h, (m - 1) / 2) = one;
    } else {
      a(h, h) = left;
      a(h, m - 1 - h) = right;
    }
  }
  return a;
}

// [0 | J_mp]
Mat anti_block(int mp, int m, const Field& field) {
  Mat a = zeros(mp, m, field);
  for (int i = 0; i < mp; ++i) a(i, m - 1 - i) = Scalar::one(field);
  return a;
}

Mat frobenius_entries(const Mat& a) {
  Mat out = a;
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j) out(i, j) = frobenius_q(a(i, j));
  return out;
}

Mat assemble(const BlockLayout& layout, const Field& field, Flavor flavor, const Scalar& left,
             const std::vector<Mat>* i_blocks = nullptr) {
  Mat x = zeros(layout.n, layout.n, field);
  const Scalar one = Scalar::one(field);
  const auto& l = layout.l_seq;
  const auto& k = layout.k_seq;
  for (std::size_t r = 1; r < l.size(); ++r) {
    const Mat a = i_blocks ? (*i_blocks)[r - 1] : paired_block(l[r], l[r - 1], left, one, field);
    place(x, layout, 2 * static_cast<int>(r), a);
  }
  for (std::size_t r = 1; r < k.size(); ++r) {
    const Mat a = flavor == Flavor::Orthogonal ? paired_block(k[r], k[r - 1], one, one, field)
                                               : anti_block(k[r], k[r - 1], field);
    place(x, layout, 2 * static_cast<int>(r) + 1, a);
  }
  const Mat mirror = antidiag_transpose(x);
  switch (flavor) {
    case Flavor::Gl: x = x + mirror; break;
    case Flavor::Unitary: x = x + frobenius_entries(mirror); break;
    case Flavor::Orthogonal: x = x - mirror; break;
  }
  if (!k.empty()) {
    const int k1 = k[0];
    Mat c = flavor == Flavor::Orthogonal ? zeros(k1, k1, field) : anti_identity(k1, field);
    if (flavor == Flavor::Orthogonal)
      for (int i = 0; i < k1; ++i) c(i, i) = i < k1 / 2 ? one : -one;
    place(x, layout, 1, c);
  }
  return x;
}

// Depth-first search for 0/1 I-chain blocks A_r whose Gram matrices
// A_r ... A_1 J A_1^T ... A_r^T are all nonsingular. Rows are drawn from the
// vectors of weight one or two.
class ChainSearch {
 public:
  ChainSearch(const std::vector<int>& l, Field field) : l_(l), field_(std::move(field)) {}

  std::optional<std::vector<Mat>> run() {
    if (l_.size() < 2) return std::vector<Mat>{};
    if (stage(1, anti_identity(l_[0], field_))) return chosen_;
    return std::nullopt;
  }

 private:
  bool stage(std::size_t r, const Mat& gram) {
    if (r == l_.size()) return true;
    const int m = l_[r - 1];
    const int mp = l_[r];
    std::vector<std::vector<int>> candidates;
    for (int i = 0; i < m; ++i) candidates.push_back({i});
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) candidates.push_back({i, j});
    std::vector<int> picked;
    return pick(r, gram, m, mp, candidates, 0, picked);
  }

  Mat rows_matrix(const std::vector<std::vector<int>>& candidates, const std::vector<int>& picked,
                  int m) const {
    Mat a = zeros(static_cast<Index>(picked.size()), m, field_);
    for (std::size_t i = 0; i < picked.size(); ++i)
      for (int c : candidates[picked[i]]) a(static_cast<Index>(i), c) = Scalar::one(field_);
    return a;
  }

  bool pick(std::size_t r, const Mat& gram, int m, int mp,
            const std::vector<std::vector<int>>& candidates, std::size_t from,
            std::vector<int>& picked) {
    if (budget_ <= 0) return false;
    const int have = static_cast<int>(picked.size());
    if (have > 0) {
      const Mat a = rows_matrix(candidates, picked, m);
      const Mat g = mat_mul(mat_mul(a, gram), mat_transpose(a));
      --budget_;
      const Index rk = mat_rank(g);
      if (rk < 2 * have - mp) return false;
      if (have == mp) {
        if (rk != mp) return false;
        chosen_.push_back(a);
        if (stage(r + 1, g)) return true;
        chosen_.pop_back();
        return false;
      }
    }
    for (std::size_t c = from; c < candidates.size(); ++c) {
      picked.push_back(static_cast<int>(c));
      if (pick(r, gram, m, mp, candidates, c + 1, picked)) return true;
      picked.pop_back();
      if (budget_ <= 0) return false;
    }
    return false;
  }

  const std::vector<int>& l_;
  Field field_;
  std::vector<Mat> chosen_;
  long budget_ = 200000;
};

bool symmetric_certificate_ok(const Mat& x, const Certificate& cert, const Partition& mu) {
  return cert.jordan_type == mu && cert.f_symmetric && cert.supported && is_zero_one(x);
}

// Conjugates an f-symmetric form by a diagonal +-1 matrix so that it lies in sp_n.
Mat symplectic_signs(const Mat& x) {
  const Index n = x.rows();
  std::vector<std::vector<Index>> adjacent(n);
  for (Index i = 0; i < n; ++i) {
    adjacent[i].push_back(n - 1 - i);
    for (Index j = 0; j < n; ++j)
      if (!x(i, j).is_zero()) {
        adjacent[i].push_back(j);
        adjacent[j].push_back(i);
      }
  }
  std::vector<int> colour(n, 0);
  for (Index s = 0; s < n; ++s) {
    if (colour[s]) continue;
    colour[s] = 1;
    std::deque<Index> queue{s};
    while (!queue.empty()) {
      const Index v = queue.front();
      queue.pop_front();
      for (Index w : adjacent[v]) {
        if (colour[w] == 0) {
          colour[w] = -colour[v];
          queue.push_back(w);
        } else if (colour[w] == colour[v]) {
          throw Error(ErrorCode::InternalError, "no symplectic sign pattern");
        }
      }
    }
  }
  std::vector<int> t(n, 1);
  for (Index i = 0; i < n / 2; ++i) t[n - 1 - i] = colour[i];
  Mat out = x;
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      if (t[i] * t[j] < 0) out(i, j) = -x(i, j);
  return out;
}

}  // namespace

CanonicalForm canonical_gl(const Partition& mu, const Field& field) {
  const BlockLayout layout = block_layout(mu);
  const Scalar one = Scalar::one(field);
  Mat x = assemble(layout, field, Flavor::Gl, one);
  CertifyOptions options;
  options.expected = mu;
  Certificate cert = certify(x, layout, options);
  if (!symmetric_certificate_ok(x, cert, mu) && field->characteristic() == 2) {
    if (auto blocks = ChainSearch(layout.l_seq, field).run()) {
      x = assemble(layout, field, Flavor::Gl, one, &*blocks);
      cert = certify(x, layout, options);
    }
  }
  if (!symmetric_certificate_ok(x, cert, mu)) {
    if (field->characteristic() == 2)
      throw Error(ErrorCode::SymmetricFormImpossible,
                  "no f-symmetric 0/1 form of type " + mu.to_string() + " over " + field->name());
    throw Error(ErrorCode::InternalError, "symmetric form failed certification for " + mu.to_string());
  }
  CanonicalForm form;
  form.matrix = std::move(x);
  form.mu = mu;
  form.type = LieType::gl(mu.n());
  form.variant = Variant::Symmetric;
  form.certificate = std::move(cert);
  return form;
}

Scalar unitary_alpha(std::uint64_t q) {
  const Field field = FieldSpec::quadratic_ext(q);
  const Scalar generator = Scalar::generator(field);
  for (std::uint64_t c = 0; c < q; ++c) {
    const Scalar alpha = generator + Scalar::from_code(field, c);
    if (!trace_to_base(alpha).is_zero()) return alpha;
  }
  throw Error(ErrorCode::InternalError, "no element of nonzero trace");
}

CanonicalForm canonical_unitary_nilpotent(const Partition& mu, std::uint64_t q) {
  const Field field = FieldSpec::quadratic_ext(q);
  const BlockLayout layout = block_layout(mu);
  const Scalar alpha = unitary_alpha(q);
  Mat x = assemble(layout, field, Flavor::Unitary, alpha);
  CertifyOptions options;
  options.q = q;
  options.expected = mu;
  Certificate cert = certify(x, layout, options);
  if (cert.jordan_type != mu || !cert.supported || !cert.f_stable.value_or(false))
    throw Error(ErrorCode::InternalError, "F-stable form failed certification for " + mu.to_string());
  CanonicalForm form;
  form.matrix = std::move(x);
  form.mu = mu;
  form.type = LieType::gl(mu.n());
  form.variant = Variant::FStable;
  form.q = q;
  form.alpha = alpha;
  form.certificate = std::move(cert);
  return form;
}

CanonicalForm canonical_classical(const Partition& mu, const LieType& type, const Field& field) {
  if (type.kind == LieType::Kind::A)
    throw Error(ErrorCode::TypeA, "use canonical_gl for type A");
  const BadCheck bad = is_bad(mu, type);
  if (bad.bad)
    throw Error(ErrorCode::BadPartition,
                mu.to_string() + " is not a partition of type " + std::string(1, type.letter()) +
                    " (part " + std::to_string(*bad.witness) + " has odd multiplicity)",
                bad.witness);
  if (field->characteristic() == 2)
    throw Error(ErrorCode::CharacteristicTwo, "classical forms need characteristic not 2");
  const BlockLayout layout = block_layout(mu);
  Mat x = type.kind == LieType::Kind::C
              ? symplectic_signs(canonical_gl(mu, field).matrix)
              : assemble(layout, field, Flavor::Orthogonal, Scalar::one(field));
  const StructureForm form_m = structure_matrix(type, field);
  CertifyOptions options;
  options.lie_type = type;
  options.form = form_m.M;
  options.expected = mu;
  Certificate cert = certify(x, layout, options);
  if (cert.jordan_type != mu || !cert.supported || !cert.lie_condition.value_or(false))
    throw Error(ErrorCode::InternalError, "classical form failed certification for " + mu.to_string());
  CanonicalForm form;
  form.matrix = std::move(x);
  form.mu = mu;
  form.type = type;
  form.variant = type.kind == LieType::Kind::C ? Variant::SymplecticAdjusted
                                               : Variant::OrthogonalAdjusted;
  form.certificate = std::move(cert);
  form.one_of_two = type.kind == LieType::Kind::D && is_very_even(mu);
  return form;
}

Mat generic_representative(const Partition& mu, const Field& field, std::uint64_t seed) {
  const int n = mu.n();
  if (field->is_finite() && field->order() < static_cast<std::uint64_t>(2 * n * n))
    throw Error(ErrorCode::FieldTooSmall,
                field->name() + " has fewer than 2n^2 elements for n = " + std::to_string(n));
  const BlockLayout layout = block_layout(mu);
  constexpr int kAttempts = 64;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    std::mt19937_64 rng(seed + static_cast<std::uint64_t>(attempt));
    Mat x = zeros(n, n, field);
    for (const Block& b : layout.blocks)
      for (int i = b.row_first - 1; i < b.row_last; ++i)
        for (int j = b.col_first - 1; j < b.col_last; ++j) {
          if (field->is_finite()) {
            std::uniform_int_distribution<std::uint64_t> pick(0, field->order() - 1);
            x(i, j) = Scalar::from_code(field, pick(rng));
          } else {
            std::uniform_int_distribution<long> pick(-9, 9);
            x(i, j) = Scalar::integer(field, pick(rng));
          }
        }
    if (jordan_type(x) == mu) return x;
  }
  throw Error(ErrorCode::FieldTooSmall, "no generic point found for " + mu.to_string());
}

namespace {

// Columns are a graded Jordan basis of x: strings start in the kernel of the
// right power of x at each non-positive level and are pushed up by x. The
// vectors at a level fill that level's ambient slots in string order.
Mat graded_jordan_basis(const Mat& x, const BlockLayout& layout) {
  const Index n = layout.n;
  const Field field = field_of(x) ? field_of(x) : FieldSpec::rationals();
  const auto& nu = layout.diagram.nu;
  const int top = nu.front();
  std::vector<Mat> powers{identity(n, field)};
  for (int k = 1; k <= top + 1; ++k) powers.push_back(mat_mul(powers.back(), x));

  struct Vec {
    Mat v;
    int ends;
  };
  Mat basis = zeros(n, n, field);
  std::map<int, std::vector<Vec>> at_level;
  for (int v = -top; v <= top; ++v) {
    const std::vector<Index> slots = level_of(layout, v);
    if (slots.empty()) continue;
    std::vector<Vec> here;
    if (auto below = at_level.find(v - 2); below != at_level.end())
      for (const Vec& u : below->second)
        if (u.ends >= v) here.push_back({mat_mul(x, u.v), u.ends});
    if (v <= 0 && static_cast<Index>(here.size()) < static_cast<Index>(slots.size())) {
      // ker x^{1-v} restricted to the level
      const Mat& p = powers[1 - v];
      Mat restricted(n, static_cast<Index>(slots.size()));
      for (std::size_t c = 0; c < slots.size(); ++c) restricted.col(c) = p.col(slots[c]);
      const Mat kernel = nullspace(restricted);
      for (Index c = 0; c < kernel.cols(); ++c) {
        Mat vec = zeros(n, 1, field);
        for (std::size_t s = 0; s < slots.size(); ++s) vec(slots[s], 0) = kernel(s, c).in(field);
        here.push_back({vec, -v});
      }
    }
    if (here.size() != slots.size())
      throw Error(ErrorCode::NotGeneric, "level " + std::to_string(v) + " has the wrong dimension");
    for (std::size_t s = 0; s < slots.size(); ++s) basis.col(slots[s]) = here[s].v.col(0);
    at_level[v] = std::move(here);
  }
  if (mat_rank(basis) != n) throw Error(ErrorCode::NotGeneric, "strings are linearly dependent");
  return basis;
}

// Row operations E_1, ..., E_k with E_k ... E_1 g = 1.
std::vector<ElementaryOp> reduce_to_identity(Mat g) {
  std::vector<ElementaryOp> ops;
  const Index n = g.rows();
  for (Index c = 0; c < n; ++c) {
    Index p = c;
    while (p < n && g(p, c).is_zero()) ++p;
    if (p == n) throw Error(ErrorCode::Singular, "intertwiner is singular");
    if (p != c) {
      const ElementaryOp op = ElementaryOp::swap(p, c);
      g.row(p).swap(g.row(c));
      ops.push_back(op);
    }
    if (!g(c, c).is_one()) {
      const Scalar s = g(c, c).inverse();
      for (Index j = 0; j < n; ++j) g(c, j) *= s;
      ops.push_back(ElementaryOp::scale(c, s));
    }
    for (Index i = 0; i < n; ++i) {
      if (i == c || g(i, c).is_zero()) continue;
      const Scalar factor = -g(i, c);
      for (Index j = 0; j < n; ++j) g(i, j) += factor * g(c, j);
      ops.push_back(ElementaryOp::add_multiple(c, i, factor));
    }
  }
  return ops;
}

}  // namespace

Mat replay(const Mat& x, const std::vector<ElementaryOp>& script) {
  Mat y = x;
  for (const ElementaryOp& op : script) y = elementary_conjugate(y, op);
  return y;
}

SymmetrizeResult symmetrize(const Mat& x, const BlockLayout& layout) {
  const Field field = field_of(x) ? field_of(x) : FieldSpec::rationals();
  const Mat input = in_field(x, field);
  if (!supported_on(input, layout))
    throw Error(ErrorCode::NotSupported, "input is not supported on the layout of " + layout.mu.to_string());
  if (jordan_type(input) != layout.mu)
    throw Error(ErrorCode::NotGeneric, "input is not in the dense orbit of " + layout.mu.to_string());
  CanonicalForm target;
  try {
    target = canonical_gl(layout.mu, field);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::SymmetricFormImpossible)
      throw Error(ErrorCode::CharacteristicTwo, e.what());
    throw;
  }
  const Mat g = mat_mul(graded_jordan_basis(target.matrix, layout),
                        mat_inverse(graded_jordan_basis(input, layout)));
  const std::vector<ElementaryOp> reduction = reduce_to_identity(g);
  SymmetrizeResult result;
  for (auto it = reduction.rbegin(); it != reduction.rend(); ++it)
    result.script.push_back(it->inverse());
  result.matrix = replay(input, result.script);
  if (!equal(result.matrix, target.matrix))
    throw Error(ErrorCode::InternalError, "elimination did not reach the canonical form");
  return result;
}

}  // namespace nilcanon
