#include "ocha/cochain.hpp"
#include "ocha/linalg.hpp"
#include "ocha/partitions.hpp"
#include "ocha/random.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

using namespace ocha;

TEST(Scalar, ParseAndPrint) {
  EXPECT_EQ(Scalar::parse("3").to_string(), "3/1");
  EXPECT_EQ(Scalar::parse("-6/4").to_string(), "-3/2");
  EXPECT_EQ(Scalar::parse("0/7").to_string(), "0/1");
  EXPECT_EQ(Scalar::parse("123456789012345678901234567890/3").to_string(),
            "41152263004115226300411522630/1");
  EXPECT_THROW(Scalar::parse(""), AlgebraError);
  EXPECT_THROW(Scalar::parse("1/0"), AlgebraError);
  EXPECT_THROW(Scalar::parse("1.5"), AlgebraError);
  EXPECT_THROW(Scalar::parse("x"), AlgebraError);
}

TEST(Scalar, Arithmetic) {
  Scalar a(1, 2), b(-1, 3);
  EXPECT_EQ(a + b, Scalar(1, 6));
  EXPECT_EQ(a * b, Scalar(-1, 6));
  EXPECT_EQ(a / b, Scalar(-3, 2));
  EXPECT_EQ(-a, Scalar(-1, 2));
  EXPECT_LT(b, a);
  EXPECT_THROW(a / Scalar(0), AlgebraError);
  EXPECT_EQ(Scalar(2, -4), Scalar(-1, 2));
}

TEST(Sign, KoszulOfSwaps) {
  const int odd_odd[] = {1, 1};
  const int odd_even[] = {1, 2};
  const int swap[] = {1, 0};
  const int keep[] = {0, 1};
  EXPECT_EQ(koszul_sign(odd_odd, swap), Sign::minus());
  EXPECT_EQ(koszul_sign(odd_even, swap), Sign::plus());
  EXPECT_EQ(koszul_sign(odd_odd, keep), Sign::plus());
  const int cycle[] = {1, 2, 0};
  const int degs[] = {1, 1, 1};
  EXPECT_EQ(koszul_sign(degs, cycle), Sign::plus());
  const int bad[] = {0, 0};
  EXPECT_THROW(koszul_sign(odd_odd, bad), AlgebraError);
}

TEST(Sign, KoszulIsMultiplicative) {
  // sign(perm2 after perm1) = sign(perm1, degs) * sign(perm2, permuted degs)
  Rng rng(1);
  for (int t = 0; t < 50; ++t) {
    const int n = rng.range(1, 5);
    std::vector<int> degs(n), p1(n), p2(n);
    for (auto& d : degs) d = rng.range(-2, 3);
    std::iota(p1.begin(), p1.end(), 0);
    std::iota(p2.begin(), p2.end(), 0);
    for (int i = n - 1; i > 0; --i) {
      std::swap(p1[i], p1[rng.below(i + 1)]);
      std::swap(p2[i], p2[rng.below(i + 1)]);
    }
    std::vector<int> moved(n), comp(n);
    for (int i = 0; i < n; ++i) moved[p1[i]] = degs[i];
    for (int i = 0; i < n; ++i) comp[i] = p2[p1[i]];
    EXPECT_EQ(koszul_sign(degs, comp), koszul_sign(degs, p1) * koszul_sign(moved, p2));
  }
}

TEST(GradedSpace, ShiftedDegreesAndLookup) {
  auto b = make_space("B", {{"a", 0}, {"b", 3}}, 2);
  EXPECT_EQ(b->shifted_degree(0), -2);
  EXPECT_EQ(b->shifted_degree(1), 1);
  EXPECT_EQ(b->index_of("b"), 1);
  EXPECT_THROW(b->index_of("c"), AlgebraError);
  EXPECT_TRUE(same_space(b, make_space("B", {{"a", 0}, {"b", 3}}, 2)));
  EXPECT_FALSE(same_space(b, make_space("B", {{"a", 0}, {"b", 3}}, 1)));
}

TEST(GradedSpace, MapDegrees) {
  EXPECT_EQ(shifted_map_degree(1, 2, 0, 2, 1, 1), 3);
  EXPECT_THROW(shifted_map_degree(0, 0, 0, 2, 1, 1), AlgebraError);
  EXPECT_EQ(shifted_sym_degree(2, 0, 2, 2), 2);
  EXPECT_THROW(shifted_sym_degree(0, 0, 2, 2), AlgebraError);
}

TEST(Wedge, NormalizeSortsWithKoszulSign) {
  // shifted degrees: e (odd), f (odd), h (even)
  auto b = make_space("B", {{"e", 3}, {"f", 1}, {"h", 2}}, 2);
  auto w = normalize_wedge(*b, std::vector<std::string>{"f", "e"});
  ASSERT_TRUE(w);
  EXPECT_EQ(w->factors, (std::vector<int>{0, 1}));
  EXPECT_EQ(w->normalization_sign, Sign::minus());
  auto w2 = normalize_wedge(*b, std::vector<std::string>{"h", "e"});
  ASSERT_TRUE(w2);
  EXPECT_EQ(w2->normalization_sign, Sign::plus());
  EXPECT_FALSE(normalize_wedge(*b, std::vector<std::string>{"e", "e"}));
  EXPECT_TRUE(normalize_wedge(*b, std::vector<std::string>{"h", "h"}));
}

TEST(Wedge, CanonicalWordCount) {
  // 2 odd + 1 even generators: words of length l number sum_i C(2,i)
  auto b = make_space("B", {{"e", 3}, {"f", 1}, {"h", 2}}, 2);
  for (int l = 1; l <= 4; ++l) {
    int count = 0;
    for_each_canonical_word(*b, l, [&](const std::vector<int>&) { ++count; });
    int expect = 0;
    for (int i = 0; i <= std::min(l, 2); ++i) expect += static_cast<int>(binomial(2, i));
    EXPECT_EQ(count, expect) << l;
  }
}

TEST(Wedge, MergeWordsMatchesNormalize) {
  auto b = make_space("B", {{"e", 3}, {"f", 1}, {"h", 2}, {"g", 0}}, 2);
  Rng rng(4);
  for (int t = 0; t < 100; ++t) {
    std::vector<std::vector<int>> blocks(rng.range(1, 3));
    std::vector<int> flat;
    for (auto& blk : blocks) {
      const int n = rng.range(0, 2);
      for (int i = 0; i < n; ++i) blk.push_back(static_cast<int>(rng.below(4)));
      auto nw = normalize_wedge(*b, blk);
      blk = nw ? nw->factors : std::vector<int>{0, 0};
      flat.insert(flat.end(), blk.begin(), blk.end());
    }
    std::vector<const std::vector<int>*> ptrs;
    for (const auto& blk : blocks) ptrs.push_back(&blk);
    auto merged = merge_words(*b, ptrs);
    auto direct = normalize_wedge(*b, flat);
    ASSERT_EQ(bool(merged), bool(direct));
    if (!merged) continue;
    EXPECT_EQ(merged->merged, direct->factors);
    EXPECT_EQ(merged->sign, direct->normalization_sign);
  }
}

TEST(Partitions, Counts) {
  EXPECT_EQ(enumerate_partitions(3, 2).size(), 8u);
  EXPECT_EQ(enumerate_dotted_partitions(4, 3).size(), binomial(6, 2));
  int bell = 0;
  for_each_set_partition(4, [&](const OrderedPartition&) { ++bell; });
  EXPECT_EQ(bell, 15);
  EXPECT_EQ(factorial(5), 120u);
  EXPECT_EQ(binomial(5, 7), 0u);
}

TEST(Cochain, DegreeAndHomogeneousParts) {
  auto b = make_space("B", {{"e", 3}, {"h", 2}}, 2);
  auto a = make_space("A", {{"x", 1}, {"y", 2}}, 1);
  OCCochain c(b, a, a);
  // shifted degree of an entry: out - (sum of shifted inputs)
  c.add(std::vector<std::string>{"e"}, std::vector<std::string>{}, "x", Scalar(1));
  EXPECT_EQ(c.degree(), (1 - 1) - (3 - 2));
  c.add(std::vector<std::string>{}, std::vector<std::string>{"x"}, "y", Scalar(2));
  EXPECT_FALSE(c.is_homogeneous());
  EXPECT_THROW(c.degree(), AlgebraError);
  auto parts = c.homogeneous_parts();
  EXPECT_EQ(parts.size(), 2u);
  OCCochain sum = c.zero_like();
  for (const auto& [d, p] : parts) {
    EXPECT_EQ(p.degree(), d);
    sum += p;
  }
  EXPECT_EQ(sum, c);
  EXPECT_THROW(c.zero_like().degree(), AlgebraError);
}

TEST(Cochain, AddCancelsAndScales) {
  auto b = make_space("B", {{"e", 3}}, 2);
  auto a = make_space("A", {{"x", 1}}, 1);
  OCCochain c(b, a, a);
  c.add(std::vector<std::string>{}, std::vector<std::string>{"x", "x"}, "x", Scalar(3));
  EXPECT_TRUE((c - c).is_zero());
  EXPECT_EQ(Scalar(2) * c, c + c);
  EXPECT_THROW(c.add(std::vector<int>{}, std::vector<int>{}, 0, Scalar(1)), AlgebraError);
  OCCochain other(make_space("B2", {{"e", 3}}, 2), a, a);
  EXPECT_THROW(c += other, AlgebraError);
}

TEST(Cochain, OddRepeatIsZeroAndSwapNegates) {
  auto b = make_space("B", {{"e", 3}, {"f", 1}}, 2);
  auto a = make_space("A", {{"x", 1}}, 1);
  OCCochain c(b, a, a);
  c.add(std::vector<std::string>{"e", "e"}, std::vector<std::string>{}, "x", Scalar(1));
  EXPECT_TRUE(c.is_zero());
  c.add(std::vector<std::string>{"f", "e"}, std::vector<std::string>{}, "x", Scalar(1));
  EXPECT_EQ(c.coefficient(OCKey{{0, 1}, {}, 0}), Scalar(-1));
}

TEST(Cochain, EvaluateIsGradedSymmetricInClosedSlots) {
  Rng rng(11);
  for (int t = 0; t < 30; ++t) {
    auto b = random_space(rng, "B", 3, 2);
    auto a = random_space(rng, "A", 2, 1);
    OCCochain c = random_cochain(b, a, a, SupportSpec{2, 1, 6}, rng).cochain;
    if (c.is_zero()) continue;
    const int y1 = static_cast<int>(rng.below(b->dim())), y2 = static_cast<int>(rng.below(b->dim()));
    const int x = static_cast<int>(rng.below(a->dim()));
    Vector v1 = basis_vector(*b, y1), v2 = basis_vector(*b, y2), vx = basis_vector(*a, x);
    Vector fwd = c.evaluate({v1, v2}, {vx});
    Vector bwd = c.evaluate({v2, v1}, {vx});
    const bool odd = ((b->shifted_degree(y1) * b->shifted_degree(y2)) & 1) != 0;
    for (std::size_t i = 0; i < fwd.size(); ++i) EXPECT_EQ(fwd[i], odd ? -bwd[i] : bwd[i]);
  }
}

TEST(Cochain, TruncationAndRestriction) {
  Rng rng(13);
  auto b = random_space(rng, "B", 2, 2);
  auto a = random_space(rng, "A", 2, 1);
  OCCochain c = random_cochain(b, a, a, 0, SupportSpec{3, 3, 20}, rng).cochain;
  for (int w = 1; w <= 6; ++w) {
    OCCochain t = c.truncated(w);
    for (const auto& [key, v] : t.entries()) EXPECT_LE(key.weight(), w);
    const OCCochain rest = c - t;
    for (const auto& [key, v] : rest.entries()) EXPECT_GT(key.weight(), w);
  }
  OCCochain r = c.restricted(ArityCap{1, 2});
  EXPECT_LE(r.max_l(), 1);
  EXPECT_LE(r.max_k(), 2);
  OCCochain sum = c.zero_like();
  for (const auto& [l, k] : c.support()) sum += c.component(l, k);
  EXPECT_EQ(sum, c);
}

TEST(Random, ZeroWithWarningWhenNoKeyHasTheDegree) {
  auto b = make_space("B", {{"e", 2}}, 2);
  auto a = make_space("A", {{"x", 1}}, 1);
  Rng rng(0);
  // every key has shifted degree 0 here
  RandomCochain r = random_cochain(b, a, a, 5, SupportSpec{2, 2, 4}, rng);
  EXPECT_TRUE(r.cochain.is_zero());
  EXPECT_FALSE(r.warning.empty());
  RandomCochain ok = random_cochain(b, a, a, 0, SupportSpec{2, 2, 4}, rng);
  EXPECT_FALSE(ok.cochain.is_zero());
  EXPECT_TRUE(ok.warning.empty());
}

TEST(Random, Deterministic) {
  Rng r1(99), r2(99);
  auto b1 = random_space(r1, "B", 3, 2), b2 = random_space(r2, "B", 3, 2);
  EXPECT_TRUE(same_space(b1, b2));
  auto c1 = random_cochain(b1, b1, b1, SupportSpec{}, r1).cochain;
  auto c2 = random_cochain(b2, b2, b2, SupportSpec{}, r2).cochain;
  EXPECT_EQ(c1, c2);
}

namespace {

Matrix random_matrix(Rng& rng, int rows, int cols, int rank_bound) {
  // product of rows x r and r x cols factors
  Matrix u(rows, rank_bound), v(rank_bound, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < rank_bound; ++j) u.at(i, j) = Scalar(rng.range(-3, 3));
  for (int i = 0; i < rank_bound; ++i)
    for (int j = 0; j < cols; ++j) v.at(i, j) = Scalar(rng.range(-3, 3), rng.range(1, 3));
  return u * v;
}

}  // namespace

TEST(Linalg, RankNullityAndKernel) {
  Rng rng(5);
  for (int t = 0; t < 60; ++t) {
    const int rows = rng.range(1, 6), cols = rng.range(1, 6);
    Matrix m = random_matrix(rng, rows, cols, rng.range(1, 4));
    const int r = rank(m);
    EXPECT_LE(r, std::min(rows, cols));
    auto ker = kernel_basis(m);
    EXPECT_EQ(r + static_cast<int>(ker.size()), cols);
    Matrix k(cols, static_cast<int>(ker.size()));
    for (std::size_t j = 0; j < ker.size(); ++j)
      for (int i = 0; i < cols; ++i) k.at(i, static_cast<int>(j)) = ker[j][i];
    if (!ker.empty()) {
      EXPECT_TRUE((m * k).is_zero());
      EXPECT_EQ(rank(k), static_cast<int>(ker.size()));
    }
  }
}

TEST(Linalg, SolveFindsPreimagesAndRejectsOthers) {
  Rng rng(6);
  for (int t = 0; t < 60; ++t) {
    const int rows = rng.range(1, 5), cols = rng.range(1, 5);
    Matrix m = random_matrix(rng, rows, cols, rng.range(1, 3));
    Matrix x(cols, 1);
    for (int i = 0; i < cols; ++i) x.at(i, 0) = Scalar(rng.range(-4, 4));
    auto b = (m * x).column(0);
    auto sol = solve(m, b);
    ASSERT_TRUE(sol);
    Matrix s(cols, 1);
    for (int i = 0; i < cols; ++i) s.at(i, 0) = (*sol)[i];
    EXPECT_EQ((m * s).column(0), b);
    // a vector outside the column span when rank < rows
    if (rank(m) < rows) {
      bool found = false;
      for (int i = 0; i < rows && !found; ++i) {
        std::vector<Scalar> e(rows);
        e[i] = Scalar(1);
        found = !solve(m, e).has_value();
      }
      EXPECT_TRUE(found);
    }
  }
}

TEST(Linalg, EchelonReduceAgainst) {
  std::vector<std::vector<Scalar>> rows{{Scalar(2), Scalar(4), Scalar(0)},
                                        {Scalar(1), Scalar(2), Scalar(1)}};
  Echelon e = row_reduce(rows, 3);
  EXPECT_EQ(e.rank(), 2);
  EXPECT_EQ(e.pivots, (std::vector<int>{0, 2}));
  auto in = reduce_against(e, {Scalar(3), Scalar(6), Scalar(-1)});
  EXPECT_TRUE(std::all_of(in.begin(), in.end(), [](const Scalar& s) { return s.is_zero(); }));
  auto out = reduce_against(e, {Scalar(0), Scalar(1), Scalar(0)});
  EXPECT_FALSE(std::all_of(out.begin(), out.end(), [](const Scalar& s) { return s.is_zero(); }));
}
