#pragma once

// Exact scalars over Q, prime fields F_p and quadratic extensions F_{q^2}.
//
// Finite field elements are stored as integer codes. For F_p the code is the
// residue. For F_{q^2} = F_q[t]/(t^2 + c1 t + c0) the code is c0 + q * c1 with
// c0, c1 codes of F_q, and an F_q code is the base-p digit vector of a
// polynomial in F_p[s]/(h). F_q therefore sits inside F_{q^2} as codes < q.

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "nilcanon/error.hpp"

namespace nilcanon {

enum class FieldKind { Rationals, Prime, QuadraticExt };

class FieldSpec;
using Field = std::shared_ptr<const FieldSpec>;

class FieldSpec {
 public:
  /// `parameter` is p for Prime and q for QuadraticExt; ignored for Rationals.
  static Field make(FieldKind kind, std::uint64_t parameter = 0);
  static Field rationals() { return make(FieldKind::Rationals); }
  static Field prime(std::uint64_t p) { return make(FieldKind::Prime, p); }
  static Field quadratic_ext(std::uint64_t q) {
    return make(FieldKind::QuadraticExt, q);
  }
  /// Accepts "Q", "F<p>", "F<q>^2" and "GU<q>" (the latter two both name F_{q^2}).
  static Field parse(std::string_view text);

  FieldKind kind() const { return kind_; }
  bool is_finite() const { return kind_ != FieldKind::Rationals; }
  /// 0 for Q.
  std::uint64_t characteristic() const { return p_; }
  /// q for QuadraticExt(q), p for Prime(p).
  std::uint64_t base_order() const { return q_; }
  /// Number of elements; 0 for Q.
  std::uint64_t order() const;
  /// m with q = p^m.
  unsigned base_degree() const { return m_; }
  /// Monic F_p-polynomial defining F_q, coefficients low to high (size m+1).
  const std::vector<std::uint64_t>& base_modulus() const { return base_modulus_; }
  /// (c0, c1) with t^2 + c1 t + c0 the defining polynomial of F_{q^2} over F_q.
  std::pair<std::uint64_t, std::uint64_t> ext_modulus() const { return {c0_, c1_}; }
  std::string name() const;

  bool same_as(const FieldSpec& other) const {
    return kind_ == other.kind_ && p_ == other.p_ && q_ == other.q_;
  }

  // Code-level arithmetic for finite fields.
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t neg(std::uint64_t a) const;
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return add(a, neg(b)); }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t inv(std::uint64_t a) const;
  /// a -> a^q on F_{q^2}.
  std::uint64_t frobenius(std::uint64_t a) const;
  std::uint64_t from_integer(const mpz_class& value) const;

  // Arithmetic inside the subfield F_q (codes < q).
  std::uint64_t base_add(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t base_neg(std::uint64_t a) const;
  std::uint64_t base_mul(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t base_inv(std::uint64_t a) const;

  std::string format_code(std::uint64_t code) const;
  std::uint64_t parse_code(std::string_view text) const;

 private:
  FieldSpec() = default;

  std::string format_base(std::uint64_t code) const;

  FieldKind kind_ = FieldKind::Rationals;
  std::uint64_t p_ = 0;
  std::uint64_t q_ = 0;
  unsigned m_ = 1;
  std::vector<std::uint64_t> base_modulus_;
  std::uint64_t c0_ = 0;
  std::uint64_t c1_ = 0;
};

/// One element of some field. A Scalar without a field is an untyped rational
/// literal (what Eigen produces from `Scalar(0)` or `Scalar(1)`); it adopts the
/// field of whatever typed operand it meets.
class Scalar {
 public:
  Scalar() = default;
  Scalar(int value) : rat_(value) {}  // NOLINT: implicit literals are intended
  Scalar(long value) : rat_(value) {}  // NOLINT

  static Scalar rational(const mpq_class& value);
  static Scalar integer(const Field& field, long value);
  static Scalar from_code(const Field& field, std::uint64_t code);
  static Scalar zero(const Field& field) { return integer(field, 0); }
  static Scalar one(const Field& field) { return integer(field, 1); }
  /// The canonical generator alpha of F_{q^2}.
  static Scalar generator(const Field& field);
  static Scalar parse(const Field& field, std::string_view text);

  const Field& field() const { return field_; }
  bool is_typed() const { return field_ != nullptr; }
  bool is_zero() const;
  bool is_one() const;

  /// Rational value; valid for Q scalars and untyped literals.
  const mpq_class& rational_value() const { return rat_; }
  /// Finite-field code; valid for typed finite scalars.
  std::uint64_t code() const { return code_; }

  /// Re-express this scalar in `field`; untyped literals are reduced, typed
  /// scalars must already belong to `field`.
  Scalar in(const Field& field) const;

  /// Image of a rational under the canonical map into `field`.
  Scalar reduced(const Field& field) const;

  Scalar inverse() const;
  Scalar pow(std::uint64_t exponent) const;

  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  Scalar& operator/=(const Scalar& other);
  Scalar operator-() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  std::string to_string() const;

 private:
  Field field_;
  mpq_class rat_;
  std::uint64_t code_ = 0;
};

inline bool is_zero(const Scalar& s) { return s.is_zero(); }

/// Field of the result of combining a and b; throws FieldMismatch.
Field common_field(const Field& a, const Field& b);

/// a^q for a in F_{q^2}.
Scalar frobenius_q(const Scalar& a);
/// a + a^q, an element of F_q (returned inside F_{q^2}).
Scalar trace_to_base(const Scalar& a);
/// True iff a lies in the subfield F_q of F_{q^2}.
bool in_base_field(const Scalar& a);

bool is_prime(std::uint64_t n);

}  // namespace nilcanon
