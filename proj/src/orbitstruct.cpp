#include "nilcanon/orbitstruct.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace nilcanon {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw Error(ErrorCode::ParseError, "empty partition");
  for (int p : parts_)
    if (p <= 0) throw Error(ErrorCode::ParseError, "partition parts must be positive");
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  for (int p : parts_) n_ += p;
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    const std::string_view piece =
        text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    if (piece.empty() || piece.size() > 6 ||
        !std::all_of(piece.begin(), piece.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw Error(ErrorCode::ParseError, "bad partition '" + std::string(text) + "'");
    parts.push_back(std::stoi(std::string(piece)));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Partition(std::move(parts));
}

int Partition::multiplicity(int part) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), part));
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(parts_[i]);
  }
  return out;
}

LieType LieType::for_dimension(Kind kind, int n) {
  switch (kind) {
    case Kind::A:
      return {Kind::A, n};
    case Kind::B:
      if (n % 2 == 0 || n < 3)
        throw Error(ErrorCode::TypeSizeMismatch, "type B needs odd n >= 3");
      return {Kind::B, (n - 1) / 2};
    case Kind::C:
    case Kind::D:
      if (n % 2 != 0 || n < 2)
        throw Error(ErrorCode::TypeSizeMismatch, "types C and D need even n");
      return {kind, n / 2};
  }
  return {};
}

LieType::Kind LieType::parse_kind(std::string_view text) {
  if (text == "A") return Kind::A;
  if (text == "B") return Kind::B;
  if (text == "C") return Kind::C;
  if (text == "D") return Kind::D;
  throw Error(ErrorCode::ParseError, "unknown Lie type '" + std::string(text) + "'");
}

int LieType::n() const {
  switch (kind) {
    case Kind::A: return rank;
    case Kind::B: return 2 * rank + 1;
    case Kind::C:
    case Kind::D: return 2 * rank;
  }
  return 0;
}

char LieType::letter() const {
  switch (kind) {
    case Kind::A: return 'A';
    case Kind::B: return 'B';
    case Kind::C: return 'C';
    case Kind::D: return 'D';
  }
  return '?';
}

std::string LieType::to_string() const {
  if (kind == Kind::A) return "gl" + std::to_string(rank);
  return std::string(1, letter()) + std::to_string(rank);
}

std::string Block::label() const {
  if (side == BlockSide::C) return "C";
  std::string out(1, side == BlockSide::A ? 'A' : 'B');
  out += chain == Chain::I ? "_i" : "_j";
  return out + std::to_string(position);
}

std::vector<Block> BlockLayout::chain(Chain c) const {
  std::vector<Block> out;
  for (const Block& b : blocks)
    if (b.chain == c) out.push_back(b);
  std::sort(out.begin(), out.end(),
            [](const Block& x, const Block& y) { return x.row_first < y.row_first; });
  return out;
}

const Block* BlockLayout::block_at(int row, int col) const {
  for (const Block& b : blocks)
    if (b.contains(row, col)) return &b;
  return nullptr;
}

std::vector<int> BlockLayout::level_indices(int level) const {
  std::vector<int> out;
  for (int i = 0; i < n; ++i)
    if (diagram.nu[i] == level) out.push_back(i + 1);
  return out;
}

int BlockLayout::dimension() const {
  int total = 0;
  for (const Block& b : blocks) total += b.height * b.width;
  return total;
}

std::vector<Partition> enumerate_partitions(int n) {
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      rec(remaining - part, part);
      current.pop_back();
    }
  };
  if (n >= 1) rec(n, n);
  return out;
}

WeightedDiagram weighted_dynkin(const Partition& mu) {
  WeightedDiagram d;
  for (int part : mu.parts())
    for (int v = part - 1; v >= 1 - part; v -= 2) d.nu.push_back(v);
  std::sort(d.nu.begin(), d.nu.end(), std::greater<>());
  for (std::size_t i = 0; i + 1 < d.nu.size(); ++i) d.weights.push_back(d.nu[i] - d.nu[i + 1]);
  return d;
}

LkSequences lk_sequences(const Partition& mu) {
  LkSequences s;
  for (int i = 1;; ++i) {
    int l = 0, k = 0;
    for (int part : mu.parts()) {
      if (part % 2 == 1 && part >= 2 * i - 1) ++l;
      if (part % 2 == 0 && part >= 2 * i) ++k;
    }
    if (l > 0) s.l.push_back(l);
    if (k > 0) s.k.push_back(k);
    if (l == 0 && k == 0) break;
  }
  return s;
}

BlockLayout block_layout(const Partition& mu) {
  BlockLayout layout;
  layout.mu = mu;
  layout.n = mu.n();
  layout.diagram = weighted_dynkin(mu);
  const LkSequences lk = lk_sequences(mu);
  layout.l_seq = lk.l;
  layout.k_seq = lk.k;

  const int n = layout.n;
  const auto& w = layout.diagram.weights;
  auto h = [&](int i) { return w[i - 1]; };  // h(alpha_i), 1 <= i <= n-1
  auto a_of = [&](int i) {
    for (int j = i + 1; j <= n - 1; ++j)
      if (h(j) != 0) return j;
    return n;
  };
  auto b_of = [&](int i) {
    for (int j = i - 1; j >= 1; --j)
      if (h(j) != 0) return j;
    return 0;
  };

  // Family A holds the Psi_k with h(alpha_k) = 2 and Psi_{m1,m2}, Psi_{m3,m4}, ...;
  // family B holds Psi_{m2,m3}, Psi_{m4,m5}, ...
  struct Raw {
    Block block;
    bool family_a;
  };
  std::vector<Raw> raw;
  auto make = [&](int row_first, int row_last, int col_first, int col_last) {
    Block b;
    b.row_first = row_first;
    b.row_last = row_last;
    b.col_first = col_first;
    b.col_last = col_last;
    b.height = row_last - row_first + 1;
    b.width = col_last - col_first + 1;
    b.row_level = layout.diagram.nu[row_first - 1];
    return b;
  };
  std::vector<int> weight_one;
  for (int i = 1; i <= n - 1; ++i) {
    if (h(i) == 2) raw.push_back({make(b_of(i) + 1, i, i + 1, a_of(i)), true});
    if (h(i) == 1) weight_one.push_back(i);
  }
  for (std::size_t k = 0; k + 1 < weight_one.size(); ++k) {
    const int i = weight_one[k], j = weight_one[k + 1];
    bool adjacent = true;
    for (int t = i + 1; t < j; ++t) adjacent = adjacent && h(t) == 0;
    if (!adjacent) continue;
    raw.push_back({make(b_of(i) + 1, i, j + 1, a_of(j)), k % 2 == 0});
  }

  // The central block is the one mapped onto itself by f.
  std::optional<bool> central_family;
  for (const Raw& r : raw)
    if (r.block.col_first == n + 1 - r.block.row_last &&
        r.block.col_last == n + 1 - r.block.row_first)
      central_family = r.family_a;

  for (Raw& r : raw) {
    const bool in_j = central_family && r.family_a == *central_family;
    r.block.chain = in_j ? Chain::J : Chain::I;
    // I lives on even nu-levels (odd parts), J on odd ones (even parts).
    const bool even_level = r.block.row_level % 2 == 0;
    if (even_level == in_j)
      throw Error(ErrorCode::InternalError, "chain labelling disagrees with level parity");
    layout.blocks.push_back(r.block);
  }
  std::sort(layout.blocks.begin(), layout.blocks.end(),
            [](const Block& x, const Block& y) { return x.row_first < y.row_first; });

  for (Chain c : {Chain::I, Chain::J}) {
    std::vector<Block*> members;
    for (Block& b : layout.blocks)
      if (b.chain == c) members.push_back(&b);
    const int count = static_cast<int>(members.size());
    const int half = count / 2;
    for (int idx = 0; idx < count; ++idx) {
      Block& b = *members[idx];
      if (c == Chain::J && count % 2 == 1 && idx == half) {
        b.side = BlockSide::C;
        b.position = 0;
      } else if (idx < half) {
        b.side = BlockSide::A;
        b.position = half - idx;
      } else {
        b.side = BlockSide::B;
        b.position = idx - (count - half) + 1;
      }
    }
  }
  return layout;
}

BadCheck is_bad(const Partition& mu, const LieType& type) {
  if (type.n() != mu.n())
    throw Error(ErrorCode::TypeSizeMismatch,
                "partition of " + std::to_string(mu.n()) + " for " + type.to_string());
  BadCheck check;
  if (type.kind == LieType::Kind::A) return check;
  const int parity = type.kind == LieType::Kind::C ? 1 : 0;
  for (int part : mu.parts()) {
    if (part % 2 == parity && mu.multiplicity(part) % 2 == 1) {
      check.bad = true;
      check.witness = part;
      return check;
    }
  }
  return check;
}

bool bad_block_criterion(const Partition& mu, const LieType& type) {
  if (type.n() != mu.n())
    throw Error(ErrorCode::TypeSizeMismatch,
                "partition of " + std::to_string(mu.n()) + " for " + type.to_string());
  if (type.kind == LieType::Kind::A) return false;
  const Chain target = type.kind == LieType::Kind::C ? Chain::I : Chain::J;
  const BlockLayout layout = block_layout(mu);
  for (const Block& b : layout.blocks)
    if (b.chain == target && b.height % 2 == 1) return true;
  return false;
}

bool is_very_even(const Partition& mu) {
  for (int part : mu.parts())
    if (part % 2 != 0 || mu.multiplicity(part) % 2 != 0) return false;
  return true;
}

std::vector<OrbitClass> classify_orbits(int n, const LieType& type) {
  if (type.n() != n)
    throw Error(ErrorCode::TypeSizeMismatch, "n = " + std::to_string(n) + " for " + type.to_string());
  std::vector<OrbitClass> out;
  for (const Partition& mu : enumerate_partitions(n)) {
    if (is_bad(mu, type).bad) continue;
    const int count = type.kind == LieType::Kind::D && is_very_even(mu) ? 2 : 1;
    out.push_back({mu, count});
  }
  return out;
}

}  // namespace nilcanon
