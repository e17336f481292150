#pragma once

// Springer maps between unipotent and nilpotent matrices, and Frobenius maps.

#include <cstdint>
#include <optional>

#include "nilcanon/canon.hpp"

namespace nilcanon {

Mat springer_gl(const Mat& u);      // u - 1
Mat springer_gl_inv(const Mat& x);  // x + 1

/// (u - 1)(u + 1)^-1 and its inverse (1 + x)(1 - x)^-1.
Mat cayley(const Mat& u);
Mat cayley_inv(const Mat& x);

/// s(g) = (g - 1)(alpha - alpha^q g)^-1 over F_{q^2}.
Mat unitary_springer(const Mat& u, const Scalar& alpha);
/// s^-1(x) = (1 + alpha^q x)^-1 (alpha x + 1).
Mat unitary_springer_inv(const Mat& x, const Scalar& alpha);

struct FrobeniusSpec {
  enum class Kind { Standard, UnitaryTwisted };
  Kind kind = Kind::Standard;
  std::uint64_t q = 0;
  /// Lie side of the twisted map uses x -> -(x_{n+1-j,n+1-i}^q).
  bool negated = false;

  static FrobeniusSpec standard(std::uint64_t q) { return {Kind::Standard, q, false}; }
  static FrobeniusSpec unitary(std::uint64_t q, bool negated = false) {
    return {Kind::UnitaryTwisted, q, negated};
  }
};

enum class Side { Group, Lie };

Mat frobenius_apply(const FrobeniusSpec& spec, const Mat& m, Side side);
/// g lies in GL_n(F_q) or GU_n(F_q) according to spec.
bool is_group_fixed(const FrobeniusSpec& spec, const Mat& g);

struct UnipotentTarget {
  enum class Kind { GL, GU, Classical };
  Kind kind = Kind::GL;
  std::uint64_t q = 0;
  /// For Classical: B, C or D.
  LieType type;

  static UnipotentTarget gl(std::uint64_t q) { return {Kind::GL, q, {}}; }
  static UnipotentTarget gu(std::uint64_t q) { return {Kind::GU, q, {}}; }
  static UnipotentTarget classical(LieType type, std::uint64_t q) {
    return {Kind::Classical, q, type};
  }
};

struct UnipotentRep {
  Mat u;
  Partition mu;
  FrobeniusSpec frobenius;
  std::optional<Scalar> alpha;
  Partition jordan_type;  // of u - 1
  bool group_fixed = false;
  /// For Classical targets: u^T M u == M.
  std::optional<bool> preserves_form;
  /// The nilpotent matrix u was built from.
  Mat nilpotent;
  /// GL in characteristic 2 without a symmetric form: built from the Jordan form.
  bool jordan_fallback = false;
};

UnipotentRep unipotent_representative(const Partition& mu, const UnipotentTarget& target);

}  // namespace nilcanon
