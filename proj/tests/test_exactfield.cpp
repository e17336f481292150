#include <doctest.h>

#include <random>

#include "nilcanon/exactfield.hpp"

using namespace nilcanon;

TEST_CASE("field construction and moduli") {
  CHECK(FieldSpec::prime(2)->order() == 2);
  CHECK(FieldSpec::rationals()->characteristic() == 0);
  CHECK_THROWS_AS(FieldSpec::prime(9), Error);
  CHECK_THROWS_AS(FieldSpec::quadratic_ext(6), Error);

  // Every monic quadratic over F_p with no root is irreducible; the chosen
  // modulus must be the first such in (c1, c0) order.
  for (std::uint64_t p : {2, 3, 5, 7}) {
    std::pair<std::uint64_t, std::uint64_t> expected{0, 0};
    bool found = false;
    for (std::uint64_t c1 = 0; c1 < p && !found; ++c1)
      for (std::uint64_t c0 = 0; c0 < p && !found; ++c0) {
        bool has_root = false;
        for (std::uint64_t x = 0; x < p; ++x) has_root |= (x * x + c1 * x + c0) % p == 0;
        if (!has_root) {
          expected = {c0, c1};
          found = true;
        }
      }
    CHECK(FieldSpec::quadratic_ext(p)->ext_modulus() == expected);
  }
  CHECK(FieldSpec::quadratic_ext(2)->ext_modulus() == std::pair<std::uint64_t, std::uint64_t>{1, 1});
  CHECK(FieldSpec::quadratic_ext(3)->ext_modulus() == std::pair<std::uint64_t, std::uint64_t>{1, 0});
}

TEST_CASE("field text formats") {
  CHECK(FieldSpec::parse("Q")->kind() == FieldKind::Rationals);
  CHECK(FieldSpec::parse("F5")->characteristic() == 5);
  CHECK(FieldSpec::parse("GU4")->base_order() == 4);
  CHECK(FieldSpec::parse("F3^2")->order() == 9);
  CHECK_THROWS_AS(FieldSpec::parse("G7"), Error);

  const Field f4 = FieldSpec::quadratic_ext(2);
  for (std::uint64_t c = 0; c < 4; ++c) {
    const Scalar s = Scalar::from_code(f4, c);
    CHECK(Scalar::parse(f4, s.to_string()) == s);
  }
  const Field f16 = FieldSpec::quadratic_ext(4);
  for (std::uint64_t c = 0; c < 16; ++c) {
    const Scalar s = Scalar::from_code(f16, c);
    CHECK(Scalar::parse(f16, s.to_string()) == s);
  }
  const Field q = FieldSpec::rationals();
  CHECK(Scalar::parse(q, "-3/6").to_string() == "-1/2");
  CHECK_THROWS_AS(Scalar::parse(q, "1/0"), Error);
}

TEST_CASE("arithmetic examples") {
  const Field q = FieldSpec::rationals();
  CHECK(Scalar::parse(q, "1/2") + Scalar::parse(q, "1/3") == Scalar::parse(q, "5/6"));
  const Field f2 = FieldSpec::prime(2);
  CHECK((Scalar::one(f2) + Scalar::one(f2)).is_zero());
  const Field f4 = FieldSpec::quadratic_ext(2);
  const Scalar a = Scalar::generator(f4);
  CHECK((a * a).to_string() == "a+1");
  CHECK_THROWS_AS(Scalar::one(f4) / Scalar::zero(f4), Error);
  CHECK_THROWS_AS(Scalar::one(f4) + Scalar::one(f2), Error);
}

TEST_CASE("frobenius and trace") {
  const Field f4 = FieldSpec::quadratic_ext(2);
  const Scalar a = Scalar::generator(f4);
  CHECK(frobenius_q(a) == a * a);
  CHECK(frobenius_q(frobenius_q(a)) == a);
  CHECK(trace_to_base(a).is_one());
  CHECK(trace_to_base(Scalar::zero(f4)).is_zero());
  const Field f9 = FieldSpec::quadratic_ext(3);
  CHECK(trace_to_base(Scalar::one(f9)) == Scalar::integer(f9, 2));
  CHECK_THROWS_AS(frobenius_q(Scalar::one(FieldSpec::prime(3))), Error);

  // Exhaustive automorphism and fixed-field checks for q <= 5.
  for (std::uint64_t qq : {2, 3, 4, 5}) {
    const Field f = FieldSpec::quadratic_ext(qq);
    for (std::uint64_t x = 0; x < f->order(); ++x) {
      const Scalar s = Scalar::from_code(f, x);
      CHECK((frobenius_q(s) == s) == in_base_field(s));
      CHECK(frobenius_q(s) == s.pow(qq));
      for (std::uint64_t y = 0; y < f->order(); y += 3) {
        const Scalar t = Scalar::from_code(f, y);
        CHECK(frobenius_q(s + t) == frobenius_q(s) + frobenius_q(t));
        CHECK(frobenius_q(s * t) == frobenius_q(s) * frobenius_q(t));
      }
    }
  }
}

TEST_CASE("field axioms on random samples") {
  std::mt19937_64 rng(11);
  for (const char* name : {"F7", "F5^2", "F4^2", "F9^2"}) {
    const Field f = FieldSpec::parse(name);
    std::uniform_int_distribution<std::uint64_t> pick(0, f->order() - 1);
    for (int trial = 0; trial < 200; ++trial) {
      const Scalar a = Scalar::from_code(f, pick(rng));
      const Scalar b = Scalar::from_code(f, pick(rng));
      const Scalar c = Scalar::from_code(f, pick(rng));
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a - a == Scalar::zero(f));
      if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
    }
  }
}
