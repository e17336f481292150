#include "nilcanon/exactfield.hpp"

#include <cctype>
#include <map>
#include <mutex>

namespace nilcanon {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonPrime: return "NonPrime";
    case ErrorCode::NotPrimePower: return "NotPrimePower";
    case ErrorCode::NoIrreducibleFound: return "NoIrreducibleFound";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::WrongField: return "WrongField";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::ZeroScale: return "ZeroScale";
    case ErrorCode::TypeSizeMismatch: return "TypeSizeMismatch";
    case ErrorCode::BadPartition: return "BadPartition";
    case ErrorCode::SymmetricFormImpossible: return "SymmetricFormImpossible";
    case ErrorCode::CharacteristicTwo: return "CharacteristicTwo";
    case ErrorCode::FieldTooSmall: return "FieldTooSmall";
    case ErrorCode::NotGeneric: return "NotGeneric";
    case ErrorCode::NotNilpotent: return "NotNilpotent";
    case ErrorCode::NotUnipotent: return "NotUnipotent";
    case ErrorCode::NotSupported: return "NotSupported";
    case ErrorCode::AlphaInBaseField: return "AlphaInBaseField";
    case ErrorCode::TypeA: return "TypeA";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::VerificationFailure: return "VerificationFailure";
    case ErrorCode::InternalError: return "InternalError";
  }
  return "Unknown";
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

constexpr std::uint64_t kMaxPrime = (std::uint64_t{1} << 31);

using Poly = std::vector<std::uint64_t>;  // coefficients low to high over F_p

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return result;
}

Poly digits(std::uint64_t code, std::uint64_t p, unsigned m) {
  Poly d(m, 0);
  for (unsigned i = 0; i < m; ++i) {
    d[i] = code % p;
    code /= p;
  }
  return d;
}

std::uint64_t undigits(const Poly& d, std::uint64_t p) {
  std::uint64_t code = 0;
  for (auto it = d.rbegin(); it != d.rend(); ++it) code = code * p + *it;
  return code;
}

// Remainder of a modulo the monic polynomial h.
Poly poly_rem(Poly a, const Poly& h, std::uint64_t p) {
  const std::size_t dh = h.size() - 1;
  for (std::size_t i = a.size(); i-- > dh;) {
    const std::uint64_t c = a[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dh; ++j)
      a[i - dh + j] = (a[i - dh + j] + (p - c) * h[j]) % p;
  }
  a.resize(std::min(a.size(), dh));
  return a;
}

bool poly_is_zero(const Poly& a) {
  for (auto c : a)
    if (c) return false;
  return true;
}

bool irreducible(const Poly& h, std::uint64_t p) {
  const unsigned m = static_cast<unsigned>(h.size() - 1);
  for (unsigned d = 1; 2 * d <= m; ++d) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < d; ++i) count *= p;
    for (std::uint64_t c = 0; c < count; ++c) {
      Poly g = digits(c, p, d);
      g.push_back(1);
      if (poly_is_zero(poly_rem(h, g, p))) return false;
    }
  }
  return true;
}

}  // namespace

Field FieldSpec::make(FieldKind kind, std::uint64_t parameter) {
  static std::mutex mutex;
  static std::map<std::pair<int, std::uint64_t>, Field> cache;
  if (kind == FieldKind::Rationals) parameter = 0;
  const std::lock_guard<std::mutex> lock(mutex);
  const auto key = std::make_pair(static_cast<int>(kind), parameter);
  if (auto it = cache.find(key); it != cache.end()) return it->second;

  auto spec = std::shared_ptr<FieldSpec>(new FieldSpec());
  spec->kind_ = kind;
  switch (kind) {
    case FieldKind::Rationals:
      break;
    case FieldKind::Prime: {
      if (!is_prime(parameter))
        throw Error(ErrorCode::NonPrime, std::to_string(parameter) + " is not prime");
      if (parameter >= kMaxPrime)
        throw Error(ErrorCode::NotSupported, "prime too large");
      spec->p_ = spec->q_ = parameter;
      spec->m_ = 1;
      spec->base_modulus_ = {0, 1};
      break;
    }
    case FieldKind::QuadraticExt: {
      const std::uint64_t q = parameter;
      if (q < 2) throw Error(ErrorCode::NotPrimePower, std::to_string(q) + " is not a prime power");
      std::uint64_t p = 2;
      while (q % p != 0) ++p;
      unsigned m = 0;
      std::uint64_t rest = q;
      while (rest % p == 0) {
        rest /= p;
        ++m;
      }
      if (rest != 1)
        throw Error(ErrorCode::NotPrimePower, std::to_string(q) + " is not a prime power");
      if (q >= (std::uint64_t{1} << 31))
        throw Error(ErrorCode::NotSupported, "field too large");
      spec->p_ = p;
      spec->q_ = q;
      spec->m_ = m;
      if (m == 1) {
        spec->base_modulus_ = {0, 1};
      } else {
        std::uint64_t count = q;  // p^m candidates for the lower coefficients
        bool found = false;
        for (std::uint64_t c = 0; c < count && !found; ++c) {
          Poly h = digits(c, p, m);
          h.push_back(1);
          if (irreducible(h, p)) {
            spec->base_modulus_ = h;
            found = true;
          }
        }
        if (!found) throw Error(ErrorCode::NoIrreducibleFound, "no degree-m irreducible");
      }
      // Smallest t^2 + c1 t + c0 (ordered by (c1, c0)) without a root in F_q.
      bool found = false;
      for (std::uint64_t c1 = 0; c1 < q && !found; ++c1) {
        for (std::uint64_t c0 = 0; c0 < q && !found; ++c0) {
          bool has_root = false;
          for (std::uint64_t r = 0; r < q && !has_root; ++r) {
            const std::uint64_t value = spec->base_add(
                spec->base_add(spec->base_mul(r, r), spec->base_mul(c1, r)), c0);
            has_root = value == 0;
          }
          if (!has_root) {
            spec->c0_ = c0;
            spec->c1_ = c1;
            found = true;
          }
        }
      }
      if (!found) throw Error(ErrorCode::NoIrreducibleFound, "no quadratic irreducible");
      break;
    }
  }
  Field field = spec;
  cache.emplace(key, field);
  return field;
}

Field FieldSpec::parse(std::string_view text) {
  auto number = [&](std::string_view digits_text) -> std::uint64_t {
    if (digits_text.empty() || digits_text.size() > 12)
      throw Error(ErrorCode::ParseError, "bad field '" + std::string(text) + "'");
    std::uint64_t value = 0;
    for (char c : digits_text) {
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw Error(ErrorCode::ParseError, "bad field '" + std::string(text) + "'");
      value = value * 10 + static_cast<std::uint64_t>(c - '0');
    }
    return value;
  };
  if (text == "Q") return rationals();
  if (text.size() > 2 && text.substr(0, 2) == "GU") return quadratic_ext(number(text.substr(2)));
  if (text.size() > 1 && text[0] == 'F') {
    std::string_view rest = text.substr(1);
    if (rest.size() > 2 && rest.substr(rest.size() - 2) == "^2")
      return quadratic_ext(number(rest.substr(0, rest.size() - 2)));
    return prime(number(rest));
  }
  throw Error(ErrorCode::ParseError, "bad field '" + std::string(text) + "'");
}

std::uint64_t FieldSpec::order() const {
  switch (kind_) {
    case FieldKind::Rationals: return 0;
    case FieldKind::Prime: return p_;
    case FieldKind::QuadraticExt: return q_ * q_;
  }
  return 0;
}

std::string FieldSpec::name() const {
  switch (kind_) {
    case FieldKind::Rationals: return "Q";
    case FieldKind::Prime: return "F" + std::to_string(p_);
    case FieldKind::QuadraticExt: return "F" + std::to_string(q_) + "^2";
  }
  return "?";
}

std::uint64_t FieldSpec::base_add(std::uint64_t a, std::uint64_t b) const {
  if (m_ == 1) return (a + b) % p_;
  Poly x = digits(a, p_, m_), y = digits(b, p_, m_);
  for (unsigned i = 0; i < m_; ++i) x[i] = (x[i] + y[i]) % p_;
  return undigits(x, p_);
}

std::uint64_t FieldSpec::base_neg(std::uint64_t a) const {
  if (m_ == 1) return (p_ - a) % p_;
  Poly x = digits(a, p_, m_);
  for (auto& c : x) c = (p_ - c) % p_;
  return undigits(x, p_);
}

std::uint64_t FieldSpec::base_mul(std::uint64_t a, std::uint64_t b) const {
  if (m_ == 1) return a * b % p_;
  const Poly x = digits(a, p_, m_), y = digits(b, p_, m_);
  Poly prod(2 * m_ - 1, 0);
  for (unsigned i = 0; i < m_; ++i)
    for (unsigned j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p_;
  return undigits(poly_rem(prod, base_modulus_, p_), p_);
}

std::uint64_t FieldSpec::base_inv(std::uint64_t a) const {
  if (a == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  if (m_ == 1) return pow_mod(a, p_ - 2, p_);
  std::uint64_t result = 1, base = a, exp = q_ - 2;
  while (exp) {
    if (exp & 1) result = base_mul(result, base);
    base = base_mul(base, base);
    exp >>= 1;
  }
  return result;
}

std::uint64_t FieldSpec::add(std::uint64_t a, std::uint64_t b) const {
  if (kind_ == FieldKind::Prime) return (a + b) % p_;
  return base_add(a % q_, b % q_) + q_ * base_add(a / q_, b / q_);
}

std::uint64_t FieldSpec::neg(std::uint64_t a) const {
  if (kind_ == FieldKind::Prime) return (p_ - a) % p_;
  return base_neg(a % q_) + q_ * base_neg(a / q_);
}

std::uint64_t FieldSpec::mul(std::uint64_t a, std::uint64_t b) const {
  if (kind_ == FieldKind::Prime) return a * b % p_;
  const std::uint64_t a0 = a % q_, a1 = a / q_, b0 = b % q_, b1 = b / q_;
  const std::uint64_t hi = base_mul(a1, b1);
  // t^2 = -c1 t - c0
  const std::uint64_t r0 = base_add(base_mul(a0, b0), base_neg(base_mul(hi, c0_)));
  const std::uint64_t r1 = base_add(base_add(base_mul(a0, b1), base_mul(a1, b0)),
                                    base_neg(base_mul(hi, c1_)));
  return r0 + q_ * r1;
}

std::uint64_t FieldSpec::frobenius(std::uint64_t a) const {
  if (kind_ != FieldKind::QuadraticExt)
    throw Error(ErrorCode::WrongField, "frobenius_q needs a quadratic extension");
  // t^q = -c1 - t
  const std::uint64_t a0 = a % q_, a1 = a / q_;
  return base_add(a0, base_neg(base_mul(a1, c1_))) + q_ * base_neg(a1);
}

std::uint64_t FieldSpec::inv(std::uint64_t a) const {
  if (a == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  if (kind_ == FieldKind::Prime) return pow_mod(a, p_ - 2, p_);
  const std::uint64_t conj = frobenius(a);
  const std::uint64_t norm = mul(a, conj);  // lies in F_q
  return mul(conj, base_inv(norm % q_));
}

std::uint64_t FieldSpec::from_integer(const mpz_class& value) const {
  mpz_class r = value % mpz_class(static_cast<unsigned long>(p_));
  if (r < 0) r += static_cast<unsigned long>(p_);
  return r.get_ui();
}

std::string FieldSpec::format_base(std::uint64_t code) const {
  if (m_ == 1) return std::to_string(code);
  const Poly d = digits(code, p_, m_);
  std::string out;
  for (unsigned e = m_; e-- > 0;) {
    if (d[e] == 0) continue;
    if (!out.empty()) out += "+";
    if (e == 0) {
      out += std::to_string(d[e]);
      continue;
    }
    if (d[e] != 1) out += std::to_string(d[e]) + "*";
    out += "b";
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out.empty() ? "0" : out;
}

std::string FieldSpec::format_code(std::uint64_t code) const {
  if (kind_ == FieldKind::Prime) return std::to_string(code);
  const std::uint64_t c0 = code % q_, c1 = code / q_;
  if (c1 == 0) return format_base(c0);
  std::string out;
  if (c1 != 1) {
    const std::string coef = format_base(c1);
    out = coef.find('+') == std::string::npos ? coef + "*" : "(" + coef + ")*";
  }
  out += "a";
  if (c0 != 0) out += "+" + format_base(c0);
  return out;
}

namespace {

// Recursive-descent evaluator for "c1*a+c0"-style field expressions.
class CodeParser {
 public:
  CodeParser(const FieldSpec& field, std::string_view text) : f_(field), text_(text) {}

  std::uint64_t run() {
    const std::uint64_t value = expr();
    skip();
    if (pos_ != text_.size()) fail();
    return value;
  }

 private:
  [[noreturn]] void fail() const {
    throw Error(ErrorCode::ParseError,
                "cannot parse '" + std::string(text_) + "' in " + f_.name());
  }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  std::uint64_t expr() {
    bool negate = eat('-');
    std::uint64_t value = term();
    if (negate) value = f_.neg(value);
    for (;;) {
      if (eat('+')) value = f_.add(value, term());
      else if (eat('-')) value = f_.sub(value, term());
      else return value;
    }
  }
  std::uint64_t term() {
    std::uint64_t value = factor();
    while (eat('*')) value = f_.mul(value, factor());
    return value;
  }
  std::uint64_t power(std::uint64_t base) {
    if (!eat('^')) return base;
    const mpz_class e = integer();
    std::uint64_t result = 1;
    for (unsigned long i = 0; i < e.get_ui(); ++i) result = f_.mul(result, base);
    return result;
  }
  mpz_class integer() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_ || pos_ - start > 30) fail();
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }
  std::uint64_t factor() {
    skip();
    if (pos_ >= text_.size()) fail();
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      const std::uint64_t value = expr();
      if (!eat(')')) fail();
      return value;
    }
    if (c == 'a') {
      if (f_.kind() != FieldKind::QuadraticExt) fail();
      ++pos_;
      return power(f_.base_order());
    }
    if (c == 'b') {
      if (f_.kind() != FieldKind::QuadraticExt || f_.base_degree() == 1) fail();
      ++pos_;
      return power(f_.characteristic());
    }
    return f_.from_integer(integer());
  }

  const FieldSpec& f_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::uint64_t FieldSpec::parse_code(std::string_view text) const {
  return CodeParser(*this, text).run();
}

Field common_field(const Field& a, const Field& b) {
  if (!a) return b;
  if (!b) return a;
  if (a == b || a->same_as(*b)) return a;
  throw Error(ErrorCode::FieldMismatch, a->name() + " vs " + b->name());
}

Scalar Scalar::rational(const mpq_class& value) {
  Scalar s;
  s.field_ = FieldSpec::rationals();
  s.rat_ = value;
  s.rat_.canonicalize();
  return s;
}

Scalar Scalar::integer(const Field& field, long value) {
  return Scalar(value).in(field);
}

Scalar Scalar::from_code(const Field& field, std::uint64_t code) {
  if (!field || !field->is_finite() || code >= field->order())
    throw Error(ErrorCode::WrongField, "code outside field");
  Scalar s;
  s.field_ = field;
  s.code_ = code;
  return s;
}

Scalar Scalar::generator(const Field& field) {
  if (!field || field->kind() != FieldKind::QuadraticExt)
    throw Error(ErrorCode::WrongField, "generator needs a quadratic extension");
  return from_code(field, field->base_order());
}

Scalar Scalar::parse(const Field& field, std::string_view text) {
  if (!field) throw Error(ErrorCode::WrongField, "parse needs a field");
  if (field->kind() != FieldKind::Rationals) return from_code(field, field->parse_code(text));
  std::string s(text);
  std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
  const std::size_t slash = s.find('/');
  auto all_digits = [&](std::size_t from, std::size_t to) {
    if (from >= to) return false;
    for (std::size_t i = from; i < to; ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  const bool ok = slash == std::string::npos
                      ? all_digits(start, s.size())
                      : all_digits(start, slash) && all_digits(slash + 1, s.size());
  if (!ok) throw Error(ErrorCode::ParseError, "cannot parse rational '" + s + "'");
  mpq_class value;
  if (slash == std::string::npos) {
    value = mpz_class(s);
  } else {
    const mpz_class den(s.substr(slash + 1));
    if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + s + "'");
    value = mpq_class(mpz_class(s.substr(0, slash)), den);
  }
  return rational(value);
}

Scalar Scalar::in(const Field& field) const {
  if (!field) return *this;
  if (field_) {
    if (field_ == field || field_->same_as(*field)) return *this;
    throw Error(ErrorCode::FieldMismatch, field_->name() + " vs " + field->name());
  }
  if (field->kind() == FieldKind::Rationals) return rational(rat_);
  const std::uint64_t num = field->from_integer(rat_.get_num());
  const std::uint64_t den = field->from_integer(rat_.get_den());
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "denominator vanishes in " + field->name());
  Scalar s;
  s.field_ = field;
  s.code_ = field->mul(num, field->inv(den));
  return s;
}

Scalar Scalar::reduced(const Field& field) const {
  if (field_ && field_->is_finite()) return in(field);
  Scalar literal;
  literal.rat_ = rat_;
  return literal.in(field);
}

bool Scalar::is_zero() const {
  if (field_ && field_->is_finite()) return code_ == 0;
  return sgn(rat_) == 0;
}

bool Scalar::is_one() const {
  if (field_ && field_->is_finite()) return code_ == 1;
  return rat_ == 1;
}

Scalar& Scalar::operator+=(const Scalar& other) {
  if (!field_ && !other.field_) {
    rat_ += other.rat_;
    return *this;
  }
  const Field f = common_field(field_, other.field_);
  if (!field_) *this = in(f);
  const Scalar b = other.field_ ? other : other.in(f);
  if (f->is_finite()) code_ = f->add(code_, b.code_);
  else rat_ += b.rat_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) { return *this += -other; }

Scalar& Scalar::operator*=(const Scalar& other) {
  if (!field_ && !other.field_) {
    rat_ *= other.rat_;
    return *this;
  }
  const Field f = common_field(field_, other.field_);
  if (!field_) *this = in(f);
  const Scalar b = other.field_ ? other : other.in(f);
  if (f->is_finite()) code_ = f->mul(code_, b.code_);
  else rat_ *= b.rat_;
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& other) { return *this *= other.inverse(); }

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (field_ && field_->is_finite()) s.code_ = field_->neg(code_);
  else s.rat_ = -rat_;
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
  Scalar s = *this;
  if (field_ && field_->is_finite()) s.code_ = field_->inv(code_);
  else s.rat_ = 1 / rat_;
  return s;
}

Scalar Scalar::pow(std::uint64_t exponent) const {
  Scalar result = field_ ? one(field_) : Scalar(1);
  Scalar base = *this;
  while (exponent) {
    if (exponent & 1) result *= base;
    base *= base;
    exponent >>= 1;
  }
  return result;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (!a.field_ && !b.field_) return a.rat_ == b.rat_;
  const Field f = common_field(a.field_, b.field_);
  const Scalar x = a.in(f), y = b.in(f);
  if (f->is_finite()) return x.code_ == y.code_;
  return x.rat_ == y.rat_;
}

std::string Scalar::to_string() const {
  if (field_ && field_->is_finite()) return field_->format_code(code_);
  return rat_.get_str();
}

Scalar frobenius_q(const Scalar& a) {
  if (!a.field() || a.field()->kind() != FieldKind::QuadraticExt)
    throw Error(ErrorCode::WrongField, "frobenius_q needs a quadratic extension");
  return Scalar::from_code(a.field(), a.field()->frobenius(a.code()));
}

Scalar trace_to_base(const Scalar& a) { return a + frobenius_q(a); }

bool in_base_field(const Scalar& a) {
  if (!a.field() || a.field()->kind() != FieldKind::QuadraticExt)
    throw Error(ErrorCode::WrongField, "in_base_field needs a quadratic extension");
  return a.code() < a.field()->base_order();
}

}  // namespace nilcanon
