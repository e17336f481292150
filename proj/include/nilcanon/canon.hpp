#pragma once

// Canonical representatives of nilpotent orbits supported on g_2.

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "nilcanon/matrix.hpp"
#include "nilcanon/orbitstruct.hpp"
#include "nilcanon/verify.hpp"

namespace nilcanon {

enum class Variant { Symmetric, FStable, SymplecticAdjusted, OrthogonalAdjusted };
std::string_view to_string(Variant v);

struct CanonicalForm {
  Mat matrix;
  Partition mu;
  LieType type;
  Variant variant = Variant::Symmetric;
  /// Set for the F-stable variant.
  std::optional<std::uint64_t> q;
  std::optional<Scalar> alpha;
  Certificate certificate;
  /// Type D, very even: the form represents only one of the two orbits.
  bool one_of_two = false;
};

struct StructureForm {
  Mat M;
  LieType type;
};

/// The form M with x^T M + M x = 0 defining the classical algebra. Throws TypeA.
StructureForm structure_matrix(const LieType& type, const Field& field = FieldSpec::rationals());

/// f-symmetric 0/1 representative in gl_n. Throws SymmetricFormImpossible when
/// no such form is found (only in characteristic 2).
CanonicalForm canonical_gl(const Partition& mu, const Field& field);

/// The element of F_{q^2} used by the F-stable construction: the field
/// generator, shifted by the smallest c in F_q when its trace vanishes.
Scalar unitary_alpha(std::uint64_t q);

/// Representative over F_{q^2} fixed by x -> (x_{n+1-j,n+1-i}^q); any characteristic.
CanonicalForm canonical_unitary_nilpotent(const Partition& mu, std::uint64_t q);

/// Representative in sp_n (type C) or so_n (types B, D) with respect to structure_matrix.
CanonicalForm canonical_classical(const Partition& mu, const LieType& type, const Field& field);

/// Random matrix supported on the layout of mu, redrawn until its Jordan type is mu.
Mat generic_representative(const Partition& mu, const Field& field, std::uint64_t seed);

struct SymmetrizeResult {
  Mat matrix;
  /// Conjugations that carry the input to `matrix`, in application order.
  std::vector<ElementaryOp> script;
};

/// Conjugates a generic element of g_2 to canonical_gl by weight-0 elementary operations.
SymmetrizeResult symmetrize(const Mat& x, const BlockLayout& layout);

Mat replay(const Mat& x, const std::vector<ElementaryOp>& script);

}  // namespace nilcanon
