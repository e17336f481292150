#pragma once

// Exact checks that certify a matrix against a nilpotent orbit.

#include <cstdint>
#include <optional>
#include <string>

#include "nilcanon/matrix.hpp"
#include "nilcanon/orbitstruct.hpp"

namespace nilcanon {

struct Certificate {
  Partition jordan_type;
  bool f_symmetric = false;
  bool supported = false;
  std::optional<bool> lie_condition;
  /// Lie type whose form M was used for lie_condition.
  std::optional<LieType> lie_type;
  std::optional<bool> f_stable;
  std::optional<std::uint64_t> q;
  std::optional<bool> dense_orbit;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

bool is_nilpotent(const Mat& x);
bool is_unipotent(const Mat& u);

/// Jordan type of a nilpotent matrix from the ranks of its powers.
/// Throws NotNilpotent.
Partition jordan_type(const Mat& x);
/// rank(x^k) for k = 0..n.
std::vector<Index> power_ranks(const Mat& x);

bool is_f_symmetric(const Mat& x);
bool supported_on(const Mat& x, const BlockLayout& layout);
/// Every entry is 0 or 1.
bool is_zero_one(const Mat& x);

/// x^T M + M x == 0.
bool satisfies_lie_condition(const Mat& x, const Mat& m);
/// Fixed by x -> (x_{n+1-j,n+1-i}^q). Throws WrongField unless x lives in F_{q^2}.
bool is_F_stable(const Mat& x, std::uint64_t q);

/// jordan_type(x) == mu for x supported on the layout of mu; throws NotSupported.
bool in_dense_orbit(const Mat& x, const Partition& mu);

/// Every chain composite A_r...A_1 (C) B_1...B_r has full rank.
bool composite_ranks_maximal(const Mat& x, const BlockLayout& layout);

struct CertifyOptions {
  /// Lie type and its form matrix M, checked together.
  std::optional<LieType> lie_type;
  std::optional<Mat> form;
  std::optional<std::uint64_t> q;
  std::optional<Partition> expected;
};

/// Recomputes every applicable certificate field from the matrix.
Certificate certify(const Mat& x, const BlockLayout& layout, const CertifyOptions& options = {});

}  // namespace nilcanon
