#include "nilcanon/springer.hpp"

namespace nilcanon {

namespace {

Field field_or_q(const Mat& a) { return field_of(a) ? field_of(a) : FieldSpec::rationals(); }

Mat shifted(const Mat& a, long c) {
  const Field field = field_or_q(a);
  Mat out = in_field(a, field);
  const Scalar s = Scalar::integer(field, c);
  for (Index i = 0; i < a.rows(); ++i) out(i, i) = out(i, i) + s;
  return out;
}

void require_unipotent(const Mat& u) {
  if (!is_unipotent(u)) throw Error(ErrorCode::NotUnipotent, "matrix is not unipotent");
}

void require_nilpotent(const Mat& x) {
  if (!is_nilpotent(x)) throw Error(ErrorCode::NotNilpotent, "matrix is not nilpotent");
}

void require_odd_characteristic(const Mat& a) {
  if (field_or_q(a)->characteristic() == 2)
    throw Error(ErrorCode::CharacteristicTwo, "the Cayley map needs characteristic not 2");
}

Field unitary_field(const Mat& a, const Scalar& alpha) {
  const Field field = alpha.field();
  if (!field || field->kind() != FieldKind::QuadraticExt)
    throw Error(ErrorCode::WrongField, "alpha must lie in a quadratic extension");
  if (in_base_field(alpha))
    throw Error(ErrorCode::AlphaInBaseField, "alpha is fixed by the q-power map");
  const Field mf = field_of(a);
  if (mf && !mf->same_as(*field)) throw Error(ErrorCode::WrongField, "matrix is over " + mf->name());
  return field;
}

Mat entries_to_power(const Mat& m, const FrobeniusSpec& spec) {
  const Field field = field_of(m);
  if (!field || !field->is_finite())
    throw Error(ErrorCode::WrongField, "Frobenius needs a finite field");
  const bool twisted = spec.kind == FrobeniusSpec::Kind::UnitaryTwisted;
  const bool q_matches = field->kind() == FieldKind::QuadraticExt && field->base_order() == spec.q;
  if (twisted && !q_matches)
    throw Error(ErrorCode::WrongField, "unitary Frobenius for q = " + std::to_string(spec.q) +
                                           " needs F_{q^2}, got " + field->name());
  std::uint64_t q = spec.q;
  std::uint64_t p = field->characteristic();
  while (q % p == 0 && q > 1) q /= p;
  if (q != 1) throw Error(ErrorCode::WrongField, std::to_string(spec.q) + " is not a power of the characteristic");
  Mat out = m;
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      out(i, j) = q_matches ? frobenius_q(m(i, j)) : m(i, j).in(field).pow(spec.q);
  return out;
}

Mat jordan_normal_form(const Partition& mu, const Field& field) {
  Mat x = zeros(mu.n(), mu.n(), field);
  Index start = 0;
  for (int part : mu.parts()) {
    for (int i = 0; i + 1 < part; ++i) x(start + i, start + i + 1) = Scalar::one(field);
    start += part;
  }
  return x;
}

}  // namespace

Mat springer_gl(const Mat& u) {
  require_unipotent(u);
  return shifted(u, -1);
}

Mat springer_gl_inv(const Mat& x) {
  require_nilpotent(x);
  return shifted(x, 1);
}

Mat cayley(const Mat& u) {
  require_odd_characteristic(u);
  require_unipotent(u);
  return mat_mul(shifted(u, -1), mat_inverse(shifted(u, 1)));
}

Mat cayley_inv(const Mat& x) {
  require_odd_characteristic(x);
  require_nilpotent(x);
  const Field field = field_or_q(x);
  const Mat one_minus_x = mat_sub(identity(x.rows(), field), in_field(x, field));
  return mat_mul(shifted(x, 1), mat_inverse(one_minus_x));
}

Mat unitary_springer(const Mat& u, const Scalar& alpha) {
  const Field field = unitary_field(u, alpha);
  require_unipotent(u);
  const Scalar alpha_q = frobenius_q(alpha);
  const Mat g = in_field(u, field);
  const Mat denominator =
      mat_sub(mat_scale(identity(g.rows(), field), alpha), mat_scale(g, alpha_q));
  return mat_mul(shifted(g, -1), mat_inverse(denominator));
}

Mat unitary_springer_inv(const Mat& x, const Scalar& alpha) {
  const Field field = unitary_field(x, alpha);
  require_nilpotent(x);
  const Scalar alpha_q = frobenius_q(alpha);
  const Mat y = in_field(x, field);
  const Mat left = shifted(mat_scale(y, alpha_q), 1);
  const Mat right = shifted(mat_scale(y, alpha), 1);
  return mat_mul(mat_inverse(left), right);
}

Mat frobenius_apply(const FrobeniusSpec& spec, const Mat& m, Side side) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::NotSquare, "Frobenius of a non-square matrix");
  if (spec.kind == FrobeniusSpec::Kind::Standard) return entries_to_power(m, spec);
  const Mat twisted = entries_to_power(antidiag_transpose(m), spec);
  if (side == Side::Group) return mat_inverse(twisted);
  return spec.negated ? mat_scale(twisted, Scalar::integer(field_of(m), -1)) : twisted;
}

bool is_group_fixed(const FrobeniusSpec& spec, const Mat& g) {
  return equal(frobenius_apply(spec, g, Side::Group), g);
}

UnipotentRep unipotent_representative(const Partition& mu, const UnipotentTarget& target) {
  UnipotentRep rep;
  rep.mu = mu;
  switch (target.kind) {
    case UnipotentTarget::Kind::GL: {
      if (!is_prime(target.q))
        throw Error(ErrorCode::NotSupported, "GL(q) needs a prime q, got " + std::to_string(target.q));
      const Field field = FieldSpec::prime(target.q);
      try {
        rep.nilpotent = canonical_gl(mu, field).matrix;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::SymmetricFormImpossible) throw;
        rep.nilpotent = jordan_normal_form(mu, field);
        rep.jordan_fallback = true;
      }
      rep.u = springer_gl_inv(rep.nilpotent);
      rep.frobenius = FrobeniusSpec::standard(target.q);
      break;
    }
    case UnipotentTarget::Kind::GU: {
      const CanonicalForm form = canonical_unitary_nilpotent(mu, target.q);
      rep.nilpotent = form.matrix;
      rep.alpha = form.alpha;
      rep.u = unitary_springer_inv(form.matrix, *form.alpha);
      rep.frobenius = FrobeniusSpec::unitary(target.q);
      break;
    }
    case UnipotentTarget::Kind::Classical: {
      if (!is_prime(target.q))
        throw Error(ErrorCode::NotSupported, "classical targets need a prime q");
      const Field field = FieldSpec::prime(target.q);
      rep.nilpotent = canonical_classical(mu, target.type, field).matrix;
      rep.u = cayley_inv(rep.nilpotent);
      rep.frobenius = FrobeniusSpec::standard(target.q);
      const Mat m = structure_matrix(target.type, field).M;
      rep.preserves_form = equal(mat_mul(mat_mul(mat_transpose(rep.u), m), rep.u), m);
      break;
    }
  }
  rep.group_fixed = is_group_fixed(rep.frobenius, rep.u);
  rep.jordan_type = jordan_type(springer_gl(rep.u));
  if (!rep.group_fixed || rep.jordan_type != mu || !rep.preserves_form.value_or(true))
    throw Error(ErrorCode::VerificationFailure,
                "unipotent representative for " + mu.to_string() + " failed certification");
  return rep;
}

}  // namespace nilcanon
