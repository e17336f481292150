#pragma once

// Partitions and the block structure of the degree-2 piece g_2 of the grading
// attached to a nilpotent orbit of gl_n.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nilcanon/error.hpp"

namespace nilcanon {

class Partition {
 public:
  Partition() = default;
  /// Parts must be positive; they are sorted into weakly decreasing order.
  explicit Partition(std::vector<int> parts);
  /// "4,4,2"
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int n() const { return n_; }
  int size() const { return static_cast<int>(parts_.size()); }
  int multiplicity(int part) const;
  std::string to_string() const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

struct LieType {
  enum class Kind { A, B, C, D };
  Kind kind = Kind::A;
  /// n for type A; l for B_l, C_l, D_l.
  int rank = 0;

  static LieType gl(int n) { return {Kind::A, n}; }
  /// The classical type of the given letter acting on k^n; throws
  /// TypeSizeMismatch when n has the wrong parity.
  static LieType for_dimension(Kind kind, int n);
  static Kind parse_kind(std::string_view text);

  /// Size of the natural representation.
  int n() const;
  char letter() const;
  std::string to_string() const;

  friend bool operator==(const LieType&, const LieType&) = default;
};

struct WeightedDiagram {
  /// weights[i] = h(alpha_{i+1}) = nu_{i+1} - nu_{i+2}, length n-1.
  std::vector<int> weights;
  /// nu_1 >= ... >= nu_n.
  std::vector<int> nu;
};

enum class Chain { I, J };
enum class BlockSide { A, B, C };

/// A rectangular block of g_2 in ambient 1-based inclusive coordinates.
struct Block {
  int row_first = 0, row_last = 0;
  int col_first = 0, col_last = 0;
  Chain chain = Chain::I;
  /// Distance from the anti-diagonal along the chain; the central block C is 0.
  int position = 0;
  BlockSide side = BlockSide::A;
  int height = 0, width = 0;
  /// nu-value shared by the rows of the block (the columns sit at row_level - 2).
  int row_level = 0;

  bool contains(int row, int col) const {
    return row_first <= row && row <= row_last && col_first <= col && col <= col_last;
  }
  std::string label() const;
};

struct BlockLayout {
  Partition mu;
  int n = 0;
  std::vector<Block> blocks;
  std::vector<int> l_seq;
  std::vector<int> k_seq;
  WeightedDiagram diagram;

  /// Blocks of one chain ordered from the top-left corner to the bottom-right.
  std::vector<Block> chain(Chain c) const;
  /// Block containing (row, col), 1-based.
  const Block* block_at(int row, int col) const;
  /// Ambient 1-based indices whose nu-value is `level`.
  std::vector<int> level_indices(int level) const;
  int dimension() const;  // dim g_2
};

/// All partitions of n in reverse-lexicographic order.
std::vector<Partition> enumerate_partitions(int n);

WeightedDiagram weighted_dynkin(const Partition& mu);

struct LkSequences {
  std::vector<int> l;
  std::vector<int> k;
};
LkSequences lk_sequences(const Partition& mu);

BlockLayout block_layout(const Partition& mu);

struct BadCheck {
  bool bad = false;
  std::optional<int> witness;
};

/// Outside the image of the orbit map for the classical type: for C an odd
/// part of odd multiplicity, for B/D an even part of odd multiplicity.
BadCheck is_bad(const Partition& mu, const LieType& type);
/// The same property read off the block layout: an odd-height block in I (C)
/// or in J (B/D).
bool bad_block_criterion(const Partition& mu, const LieType& type);
bool is_very_even(const Partition& mu);

struct OrbitClass {
  Partition mu;
  int orbit_count = 1;
};
std::vector<OrbitClass> classify_orbits(int n, const LieType& type);

}  // namespace nilcanon
