// Acceptance runner: one PASS/FAIL line per criterion, with wall-clock limits.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <string>

#include "nilcanon/springer.hpp"
#include "oracles.hpp"

using namespace nilcanon;

namespace {

using Kind = LieType::Kind;

struct Tally {
  long checks = 0;
  long failures = 0;
  std::string first_failure;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    if (failures++ == 0) first_failure = what;
  }
};

int failed_criteria = 0;

void criterion(int id, const std::string& title, double limit_seconds,
               const std::function<void(Tally&)>& body) {
  Tally tally;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(tally);
  } catch (const std::exception& e) {
    tally.expect(false, std::string("exception: ") + e.what());
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = elapsed < limit_seconds;
  const bool pass = tally.failures == 0 && in_time;
  if (!pass) ++failed_criteria;
  std::printf("%s criterion %d: %s (%ld checks, %.2f s, limit %.0f s)", pass ? "PASS" : "FAIL", id,
              title.c_str(), tally.checks, elapsed, limit_seconds);
  if (tally.failures) std::printf(" - %ld failures, first: %s", tally.failures,
                                  tally.first_failure.c_str());
  if (!in_time) std::printf(" - over time");
  std::printf("\n");
  std::fflush(stdout);
}

std::set<std::pair<int, int>> nonzero(const Mat& x) {
  std::set<std::pair<int, int>> out;
  for (Index i = 0; i < x.rows(); ++i)
    for (Index j = 0; j < x.cols(); ++j)
      if (!x(i, j).is_zero()) out.insert({static_cast<int>(i) + 1, static_cast<int>(j) + 1});
  return out;
}

bool all_ones(const Mat& x) {
  for (Index i = 0; i < x.rows(); ++i)
    for (Index j = 0; j < x.cols(); ++j)
      if (!x(i, j).is_zero() && !x(i, j).is_one()) return false;
  return true;
}

std::string tag(const Partition& mu, const std::string& where) {
  return "(" + mu.to_string() + ") " + where;
}

Scalar random_scalar(std::mt19937_64& rng, const Field& f) {
  if (!f->is_finite()) return Scalar::integer(f, std::uniform_int_distribution<long>(-4, 4)(rng));
  return Scalar::from_code(f, std::uniform_int_distribution<std::uint64_t>(0, f->order() - 1)(rng));
}

Mat random_strict_upper(std::mt19937_64& rng, Index n, const Field& f) {
  Mat y = zeros(n, n, f);
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j) y(i, j) = random_scalar(rng, f);
  return y;
}

Mat random_invertible(std::mt19937_64& rng, Index n, const Field& f) {
  for (;;) {
    Mat g(n, n);
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j) g(i, j) = random_scalar(rng, f);
    if (mat_rank(g) == n) return g;
  }
}

Mat conj(const Mat& g, const Mat& x) { return mat_mul(mat_mul(g, x), mat_inverse(g)); }

std::vector<LieType> classical_types(int n) {
  std::vector<LieType> out;
  for (Kind k : {Kind::B, Kind::C, Kind::D}) {
    try {
      out.push_back(LieType::for_dimension(k, n));
    } catch (const Error&) {
    }
  }
  return out;
}

}  // namespace

int main() {
  const Field Q = FieldSpec::rationals();

  criterion(1, "fixture (3,1) over Q and F2", 1.0, [&](Tally& t) {
    const Mat x = canonical_gl(Partition({3, 1}), Q).matrix;
    t.expect(nonzero(x) == std::set<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 4}, {3, 4}},
             "support differs from the fixture");
    t.expect(all_ones(x), "entries are not 1");
    t.expect(jordan_type(x) == Partition({3, 1}), "jordan type over Q");
    t.expect(jordan_type(reduce(x, FieldSpec::prime(2))) == Partition({2, 2}),
             "jordan type over F2");
  });

  criterion(2, "fixture (4,4,2) over Q", 1.0, [&](Tally& t) {
    const Mat x = canonical_gl(Partition({4, 4, 2}), Q).matrix;
    t.expect(nonzero(x) == std::set<std::pair<int, int>>{{1, 5}, {2, 4}, {3, 8}, {4, 7},
                                                         {5, 6}, {6, 10}, {7, 9}},
             "support differs from the fixture");
    t.expect(all_ones(x), "entries are not 1");
    t.expect(jordan_type(x) == Partition({4, 4, 2}), "jordan type");
  });

  criterion(3, "exhaustive type A, n <= 12, over Q, F3, F5 (and F2 obstructions)", 60.0,
            [&](Tally& t) {
              int partitions = 0;
              for (int n = 1; n <= 12; ++n) {
                t.expect(static_cast<long long>(enumerate_partitions(n).size()) ==
                             oracle::partition_count(n),
                         "partition count n=" + std::to_string(n));
                for (const Partition& mu : enumerate_partitions(n)) {
                  ++partitions;
                  const BlockLayout layout = block_layout(mu);
                  for (std::uint64_t p : {0, 3, 5, 2}) {
                    const Field f = p ? FieldSpec::prime(p) : Q;
                    CanonicalForm form;
                    try {
                      form = canonical_gl(mu, f);
                    } catch (const Error& e) {
                      t.expect(p == 2 && e.code() == ErrorCode::SymmetricFormImpossible,
                               tag(mu, f->name() + " raised " + e.what()));
                      continue;
                    }
                    const Mat& x = form.matrix;
                    const std::string where = tag(mu, f->name());
                    t.expect(supported_on(x, layout), where + " support");
                    t.expect(is_f_symmetric(x), where + " f-symmetry");
                    t.expect(is_zero_one(x), where + " entries");
                    t.expect(oracle::jordan_from_kernels(oracle::to_ints(x),
                                                         static_cast<long long>(p)) == mu.parts(),
                             where + " jordan type (oracle)");
                    t.expect(form.certificate.jordan_type == mu, where + " certificate");
                  }
                }
              }
              t.expect(partitions == 271, "expected 271 partitions of n <= 12");
            });

  criterion(4, "symmetrize(generic) == canonical_gl, n <= 8, 3 seeds, over Q", 120.0,
            [&](Tally& t) {
              for (int n = 1; n <= 8; ++n)
                for (const Partition& mu : enumerate_partitions(n)) {
                  const BlockLayout layout = block_layout(mu);
                  const Mat canon = canonical_gl(mu, Q).matrix;
                  for (std::uint64_t seed : {1, 2, 3}) {
                    const Mat x = generic_representative(mu, Q, seed);
                    const SymmetrizeResult r = symmetrize(x, layout);
                    const std::string where = tag(mu, "seed " + std::to_string(seed));
                    t.expect(equal(r.matrix, canon), where);
                    t.expect(equal(replay(x, r.script), canon), where + " replay");
                  }
                }
            });

  criterion(5, "classical types B/C/D, n <= 12, over Q and F5; bad partitions", 60.0,
            [&](Tally& t) {
              for (int n = 2; n <= 12; ++n)
                for (const LieType& type : classical_types(n))
                  for (const Field& f : {Q, FieldSpec::prime(5)}) {
                    const Mat m = structure_matrix(type, f).M;
                    for (const Partition& mu : enumerate_partitions(n)) {
                      const std::string where = tag(mu, type.to_string() + " " + f->name());
                      // Independent badness rule straight from multiplicities.
                      int witness = 0;
                      for (int part : mu.parts())
                        if ((part % 2 == 1) == (type.kind == Kind::C) &&
                            mu.multiplicity(part) % 2 == 1) {
                          witness = part;
                          break;
                        }
                      if (witness) {
                        try {
                          canonical_classical(mu, type, f);
                          t.expect(false, where + " bad partition accepted");
                        } catch (const Error& e) {
                          t.expect(e.code() == ErrorCode::BadPartition && e.witness() == witness,
                                   where + " wrong rejection");
                        }
                        continue;
                      }
                      const Mat x = canonical_classical(mu, type, f).matrix;
                      t.expect(satisfies_lie_condition(x, m), where + " x^T M + M x");
                      t.expect(oracle::jordan_from_kernels(
                                   oracle::to_ints(x),
                                   static_cast<long long>(f->characteristic())) == mu.parts(),
                               where + " jordan type (oracle)");
                    }
                  }
              for (int n = 2; n <= 14; ++n)
                for (const LieType& type : classical_types(n))
                  for (const Partition& mu : enumerate_partitions(n))
                    t.expect(is_bad(mu, type).bad == bad_block_criterion(mu, type),
                             tag(mu, type.to_string() + " block criterion"));
            });

  criterion(6, "unitary forms and GU unipotents, n <= 8, q in {2,3,4,5}", 120.0, [&](Tally& t) {
    for (std::uint64_t q : {2, 3, 4, 5}) {
      const FrobeniusSpec frob = FrobeniusSpec::unitary(q);
      for (int n = 1; n <= 8; ++n)
        for (const Partition& mu : enumerate_partitions(n)) {
          const std::string where = tag(mu, "q=" + std::to_string(q));
          const CanonicalForm form = canonical_unitary_nilpotent(mu, q);
          t.expect(is_F_stable(form.matrix, q), where + " F-stable");
          t.expect(jordan_type(form.matrix) == mu, where + " jordan type");
          const Mat u = unitary_springer_inv(form.matrix, *form.alpha);
          t.expect(is_group_fixed(frob, u), where + " GU membership");
          t.expect(is_unipotent(u), where + " unipotent");
          t.expect(jordan_type(springer_gl(u)) == mu, where + " jordan type of u - 1");
        }
    }
    const Field f4 = FieldSpec::quadratic_ext(2);
    Mat expected = identity(2, f4);
    expected(0, 1) = Scalar::one(f4);
    t.expect(equal(unipotent_representative(Partition({2}), UnipotentTarget::gu(2)).u, expected),
             "GU2(F2) example");
  });

  criterion(7, "Springer round trips, equivariance, F-commutation, Cayley", 60.0, [&](Tally& t) {
    std::mt19937_64 rng(2024);
    const int samples = 500;
    {
      const Field f = FieldSpec::quadratic_ext(3);
      const FrobeniusSpec frob = FrobeniusSpec::standard(3);
      for (int s = 0; s < samples; ++s) {
        const Index n = 2 + s % 4;
        const Mat x = random_strict_upper(rng, n, f);
        const Mat u = springer_gl_inv(x);
        const Mat g = random_invertible(rng, n, f);
        t.expect(equal(springer_gl(u), x), "GL round trip");
        t.expect(equal(springer_gl(conj(g, u)), conj(g, x)), "GL equivariance");
        t.expect(equal(springer_gl(frobenius_apply(frob, u, Side::Group)),
                       frobenius_apply(frob, x, Side::Lie)),
                 "GL F-commutation");
      }
    }
    for (std::uint64_t q : {2, 3, 4, 5}) {
      const Field f = FieldSpec::quadratic_ext(q);
      const Scalar alpha = unitary_alpha(q);
      const FrobeniusSpec frob = FrobeniusSpec::unitary(q);
      for (int s = 0; s < samples; ++s) {
        const Index n = 2 + s % 4;
        const Mat x = random_strict_upper(rng, n, f);
        const Mat u = unitary_springer_inv(x, alpha);
        const Mat g = random_invertible(rng, n, f);
        const std::string where = "GU q=" + std::to_string(q);
        t.expect(equal(unitary_springer(u, alpha), x), where + " round trip");
        t.expect(equal(unitary_springer(conj(g, u), alpha), conj(g, x)), where + " equivariance");
        t.expect(equal(unitary_springer(frobenius_apply(frob, u, Side::Group), alpha),
                       frobenius_apply(frob, x, Side::Lie)),
                 where + " F-commutation");
      }
    }
    for (const Field& f : {Q, FieldSpec::prime(5)})
      for (Kind kind : {Kind::B, Kind::C, Kind::D})
        for (int s = 0; s < samples; ++s) {
          const int n = kind == Kind::B ? 3 + 2 * (s % 3) : 2 + 2 * (s % 3);
          const LieType type = LieType::for_dimension(kind, n);
          const Mat m = structure_matrix(type, f).M;
          const Mat y = random_strict_upper(rng, n, f);
          const Mat x = mat_sub(y, mat_mul(mat_mul(mat_inverse(m), mat_transpose(y)), m));
          const Mat u = cayley_inv(x);
          const std::string where = "Cayley " + type.to_string() + " " + f->name();
          t.expect(equal(cayley(u), x), where + " round trip");
          t.expect(equal(mat_mul(mat_mul(mat_transpose(u), m), u), m), where + " form preserved");
        }
  });

  criterion(8, "jordan_type vs kernel oracle, 0/1 upper triangular n <= 4, Q and F2", 30.0,
            [&](Tally& t) {
              for (long long p : {0LL, 2LL}) {
                const Field f = p ? FieldSpec::prime(2) : Q;
                for (int n = 1; n <= 4; ++n) {
                  std::vector<std::pair<int, int>> slots;
                  for (int i = 0; i < n; ++i)
                    for (int j = i + 1; j < n; ++j) slots.push_back({i, j});
                  for (unsigned mask = 0; mask < (1u << slots.size()); ++mask) {
                    Mat x = zeros(n, n, f);
                    for (std::size_t s = 0; s < slots.size(); ++s)
                      if (mask >> s & 1) x(slots[s].first, slots[s].second) = Scalar::one(f);
                    t.expect(jordan_type(x).parts() ==
                                 oracle::jordan_from_kernels(oracle::to_ints(x), p),
                             "mask " + std::to_string(mask) + " over " + f->name());
                  }
                }
              }
            });

  criterion(9, "structural invariants, n <= 14", 10.0, [&](Tally& t) {
    for (int n = 1; n <= 14; ++n)
      for (const Partition& mu : enumerate_partitions(n)) {
        const BlockLayout layout = block_layout(mu);
        const std::string where = tag(mu, "");
        const auto& w = layout.diagram.weights;
        for (std::size_t i = 0; i < w.size(); ++i)
          t.expect(w[i] == w[w.size() - 1 - i], where + "palindromy");

        std::set<std::pair<int, int>> region;
        for (const Block& b : layout.blocks)
          for (int i = b.row_first; i <= b.row_last; ++i)
            for (int j = b.col_first; j <= b.col_last; ++j) region.insert({i, j});
        t.expect(region == oracle::g2_positions(mu.parts()), where + "region equals g_2");
        for (const auto& [i, j] : region)
          t.expect(region.count({n + 1 - j, n + 1 - i}) == 1, where + "f-symmetry");

        std::vector<int> rows(n + 1, 0), cols(n + 1, 0);
        for (const Block& b : layout.blocks) {
          for (int i = b.row_first; i <= b.row_last; ++i) ++rows[i];
          for (int j = b.col_first; j <= b.col_last; ++j) ++cols[j];
        }
        for (int i = 1; i <= n; ++i)
          t.expect(rows[i] <= 1 && cols[i] <= 1, where + "row/column disjointness");

        // l and k counted directly from the parts.
        std::vector<int> l, k;
        for (int i = 1; i <= n; ++i) {
          int li = 0, ki = 0;
          for (int part : mu.parts()) {
            li += part % 2 == 1 && part >= 2 * i - 1;
            ki += part % 2 == 0 && part >= 2 * i;
          }
          if (li) l.push_back(li);
          if (ki) k.push_back(ki);
        }
        int centres = 0;
        for (const Block& b : layout.blocks) {
          const auto& seq = b.chain == Chain::I ? l : k;
          const int r = b.position;
          bool ok = false;
          if (b.side == BlockSide::C) {
            ++centres;
            ok = b.chain == Chain::J && b.height == k[0] && b.width == k[0];
          } else if (b.side == BlockSide::A) {
            ok = r >= 1 && r < static_cast<int>(seq.size()) && b.height == seq[r] &&
                 b.width == seq[r - 1];
          } else {
            ok = r >= 1 && r < static_cast<int>(seq.size()) && b.height == seq[r - 1] &&
                 b.width == seq[r];
          }
          t.expect(ok, where + "shape of " + b.label());
        }
        bool has_even = false;
        for (int part : mu.parts()) has_even = has_even || part % 2 == 0;
        t.expect((centres == 1) == has_even && centres <= 1, where + "C exists iff even part");
      }
  });

  return failed_criteria == 0 ? 0 : 1;
}
