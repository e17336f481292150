#include <doctest.h>

#include <set>

#include "nilcanon/orbitstruct.hpp"
#include "oracles.hpp"

using namespace nilcanon;

namespace {

using Kind = LieType::Kind;

std::vector<LieType> applicable_types(int n) {
  std::vector<LieType> out{LieType::gl(n)};
  for (Kind k : {Kind::B, Kind::C, Kind::D}) {
    try {
      out.push_back(LieType::for_dimension(k, n));
    } catch (const Error&) {
    }
  }
  return out;
}

std::set<std::pair<int, int>> positions(const BlockLayout& layout) {
  std::set<std::pair<int, int>> out;
  for (const Block& b : layout.blocks)
    for (int i = b.row_first; i <= b.row_last; ++i)
      for (int j = b.col_first; j <= b.col_last; ++j) out.insert({i, j});
  return out;
}

}  // namespace

TEST_CASE("partition parsing") {
  CHECK(Partition::parse("1,3").parts() == std::vector<int>{3, 1});
  CHECK(Partition::parse("4,4,2").n() == 10);
  CHECK(Partition::parse("4,4,2").to_string() == "4,4,2");
  for (const char* bad : {"", "3,", ",1", "3;1", "0", "a", "-1", "1234567"})
    CHECK_THROWS_AS(Partition::parse(bad), Error);
}

TEST_CASE("enumerate partitions") {
  const auto three = enumerate_partitions(3);
  REQUIRE(three.size() == 3);
  CHECK(three[0] == Partition({3}));
  CHECK(three[1] == Partition({2, 1}));
  CHECK(three[2] == Partition({1, 1, 1}));
  CHECK(enumerate_partitions(4).size() == 5);
  CHECK(enumerate_partitions(10).size() == 42);
  for (int n = 1; n <= 16; ++n) {
    const auto all = enumerate_partitions(n);
    CHECK(static_cast<long long>(all.size()) == oracle::partition_count(n));
    std::set<std::vector<int>> seen;
    for (const Partition& mu : all) {
      CHECK(mu.n() == n);
      seen.insert(mu.parts());
    }
    CHECK(seen.size() == all.size());
    for (std::size_t i = 0; i + 1 < all.size(); ++i) CHECK(all[i].parts() > all[i + 1].parts());
  }
}

TEST_CASE("weighted diagram and l/k sequences") {
  const WeightedDiagram d = weighted_dynkin(Partition({3, 1}));
  CHECK(d.nu == std::vector<int>{2, 0, 0, -2});
  CHECK(d.weights == std::vector<int>{2, 0, 2});
  CHECK(weighted_dynkin(Partition({1, 1, 1, 1})).weights == std::vector<int>{0, 0, 0});
  const WeightedDiagram e = weighted_dynkin(Partition({4, 4, 2}));
  CHECK(e.nu == std::vector<int>{3, 3, 1, 1, 1, -1, -1, -1, -3, -3});
  CHECK(e.weights == std::vector<int>{0, 2, 0, 0, 2, 0, 0, 2, 0});

  CHECK(lk_sequences(Partition({3, 1})).l == std::vector<int>{2, 1});
  CHECK(lk_sequences(Partition({3, 1})).k.empty());
  CHECK(lk_sequences(Partition({4, 4, 2})).l.empty());
  CHECK(lk_sequences(Partition({4, 4, 2})).k == std::vector<int>{3, 2});
  CHECK(lk_sequences(Partition({2})).k == std::vector<int>{1});
}

TEST_CASE("block layout examples") {
  const BlockLayout a = block_layout(Partition({3, 1}));
  REQUIRE(a.blocks.size() == 2);
  CHECK(a.blocks[0].row_first == 1);
  CHECK(a.blocks[0].row_last == 1);
  CHECK(a.blocks[0].col_first == 2);
  CHECK(a.blocks[0].col_last == 3);
  CHECK(a.blocks[0].label() == "A_i1");
  CHECK(a.blocks[1].row_first == 2);
  CHECK(a.blocks[1].row_last == 3);
  CHECK(a.blocks[1].col_first == 4);
  CHECK(a.blocks[1].label() == "B_i1");
  CHECK(a.chain(Chain::J).empty());

  const BlockLayout b = block_layout(Partition({4, 4, 2}));
  REQUIRE(b.blocks.size() == 3);
  CHECK(b.blocks[0].label() == "A_j1");
  CHECK(b.blocks[0].row_first == 1);
  CHECK(b.blocks[0].row_last == 2);
  CHECK(b.blocks[0].col_first == 3);
  CHECK(b.blocks[0].col_last == 5);
  CHECK(b.blocks[1].label() == "C");
  CHECK(b.blocks[1].row_first == 3);
  CHECK(b.blocks[1].col_first == 6);
  CHECK(b.blocks[1].col_last == 8);
  CHECK(b.blocks[2].label() == "B_j1");
  CHECK(b.blocks[2].row_first == 6);
  CHECK(b.blocks[2].row_last == 8);
  CHECK(b.blocks[2].col_first == 9);
  CHECK(b.blocks[2].col_last == 10);
  CHECK(b.chain(Chain::I).empty());
  CHECK(b.block_at(1, 3)->label() == "A_j1");
  CHECK(b.block_at(8, 10)->label() == "B_j1");
  CHECK(b.block_at(1, 2) == nullptr);
  CHECK(b.level_indices(3) == std::vector<int>{1, 2});

  CHECK(block_layout(Partition({1, 1})).blocks.empty());
}

TEST_CASE("layout invariants for n <= 14") {
  for (int n = 1; n <= 14; ++n) {
    for (const Partition& mu : enumerate_partitions(n)) {
      const BlockLayout layout = block_layout(mu);
      const auto& w = layout.diagram.weights;
      for (std::size_t i = 0; i < w.size(); ++i) {
        CHECK(w[i] >= 0);
        CHECK(w[i] <= 2);
        CHECK(w[i] == w[w.size() - 1 - i]);
      }

      const auto pos = positions(layout);
      CHECK(pos == oracle::g2_positions(mu.parts()));
      CHECK(static_cast<int>(pos.size()) == layout.dimension());
      for (const auto& [i, j] : pos) CHECK(pos.count({n + 1 - j, n + 1 - i}) == 1);

      std::vector<int> row_hits(n + 1, 0), col_hits(n + 1, 0);
      for (const Block& b : layout.blocks) {
        CHECK(b.row_last < b.col_first);
        for (int i = b.row_first; i <= b.row_last; ++i) ++row_hits[i];
        for (int j = b.col_first; j <= b.col_last; ++j) ++col_hits[j];
      }
      for (int i = 1; i <= n; ++i) {
        CHECK(row_hits[i] <= 1);
        CHECK(col_hits[i] <= 1);
      }

      bool has_even = false;
      for (int p : mu.parts()) has_even = has_even || p % 2 == 0;
      int centres = 0;
      for (const Block& b : layout.blocks) {
        const auto& seq = b.chain == Chain::I ? layout.l_seq : layout.k_seq;
        if (b.side == BlockSide::C) {
          ++centres;
          CHECK(b.height == layout.k_seq[0]);
          CHECK(b.width == layout.k_seq[0]);
        } else if (b.side == BlockSide::A) {
          const int r = b.position;
          CHECK(b.height == seq[r]);
          CHECK(b.width == seq[r - 1]);
        } else {
          CHECK(b.height == seq[b.position - 1]);
          CHECK(b.width == seq[b.position]);
        }
      }
      CHECK((centres == 1) == has_even);
      CHECK(centres <= 1);
    }
  }
}

TEST_CASE("bad partitions") {
  const LieType c4 = LieType::for_dimension(Kind::C, 4);
  const LieType d10 = LieType::for_dimension(Kind::D, 10);
  BadCheck check = is_bad(Partition({3, 1}), c4);
  CHECK(check.bad);
  CHECK(check.witness == 3);
  check = is_bad(Partition({4, 4, 2}), d10);
  CHECK(check.bad);
  CHECK(check.witness == 2);
  CHECK(!is_bad(Partition({2, 2}), c4).bad);
  CHECK(bad_block_criterion(Partition({3, 1}), c4));
  CHECK(!bad_block_criterion(Partition({2, 2}), c4));
  CHECK(bad_block_criterion(Partition({4, 4, 2}), d10));
  CHECK_THROWS_AS(is_bad(Partition({3, 1}), LieType::for_dimension(Kind::C, 6)), Error);
  CHECK_THROWS_AS(LieType::for_dimension(Kind::B, 4), Error);
  CHECK_THROWS_AS(LieType::for_dimension(Kind::C, 5), Error);

  for (int n = 1; n <= 14; ++n)
    for (const LieType& type : applicable_types(n))
      for (const Partition& mu : enumerate_partitions(n)) {
        const BadCheck bad = is_bad(mu, type);
        CHECK(bad.bad == bad_block_criterion(mu, type));
        if (bad.bad) {
          const int parity = type.kind == Kind::C ? 1 : 0;
          CHECK(*bad.witness % 2 == parity);
          CHECK(mu.multiplicity(*bad.witness) % 2 == 1);
        }
      }
}

TEST_CASE("very even and orbit classification") {
  CHECK(is_very_even(Partition({2, 2})));
  CHECK(!is_very_even(Partition({4, 4, 2})));
  CHECK(is_very_even(Partition({4, 4, 2, 2})));

  const auto c = classify_orbits(4, LieType::for_dimension(Kind::C, 4));
  REQUIRE(c.size() == 4);
  CHECK(c[0].mu == Partition({4}));
  CHECK(c[1].mu == Partition({2, 2}));
  CHECK(c[2].mu == Partition({2, 1, 1}));
  CHECK(c[3].mu == Partition({1, 1, 1, 1}));
  for (const auto& o : c) CHECK(o.orbit_count == 1);

  const auto d = classify_orbits(4, LieType::for_dimension(Kind::D, 4));
  REQUIRE(d.size() == 3);
  CHECK(d[0].mu == Partition({3, 1}));
  CHECK(d[0].orbit_count == 1);
  CHECK(d[1].mu == Partition({2, 2}));
  CHECK(d[1].orbit_count == 2);
  CHECK(d[2].mu == Partition({1, 1, 1, 1}));

  const auto b = classify_orbits(3, LieType::for_dimension(Kind::B, 3));
  REQUIRE(b.size() == 2);
  CHECK(b[0].mu == Partition({3}));
  CHECK(b[1].mu == Partition({1, 1, 1}));
  CHECK_THROWS_AS(classify_orbits(5, LieType::for_dimension(Kind::B, 3)), Error);
}
