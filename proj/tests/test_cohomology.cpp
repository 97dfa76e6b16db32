#include "ocha/campaign.hpp"
#include "ocha/cohomology.hpp"
#include "ocha/fixtures.hpp"
#include "classical.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace ocha;
using classical::Classical;
using classical::classical_dual_numbers;
using classical::from_classical;
using classical::to_classical;

namespace {

Scalar sgn(long long e) { return (e & 1) ? Scalar(-1) : Scalar(1); }

OchaStructure fixture(const std::string& name) {
  OchaData d = build_fixture(name);
  return *make_ocha(d.l, d.q);
}

}  // namespace

TEST(Complex, SquaresToZeroAndIsFiltered) {
  for (const auto& [name, s] : campaign_structures())
    for (int w = 1; w <= 4; ++w) {
      TruncatedComplex c = assemble_complex(s, w);
      EXPECT_TRUE(c.squares_to_zero()) << name << " W=" << w;
      EXPECT_EQ(c.weight_violations(), 0u) << name << " W=" << w;
      EXPECT_TRUE((c.full_matrix() * c.full_matrix()).is_zero())
          << name << " W=" << w;
    }
}

TEST(Complex, CellsRespectWeightCap) {
  OchaStructure s = fixture("cdga-circle");
  TruncatedComplex c = assemble_complex(s, 3);
  for (const auto& cell : c.cells()) {
    EXPECT_GE(cell.weight, 1);
    EXPECT_LE(cell.weight, 3);
    EXPECT_EQ(cell.weight, cell.key.weight());
  }
}

TEST(Complex, ResourceCapIsReported) {
  OchaStructure s = fixture("dual-numbers");
  AssembleOptions o;
  o.max_cells = 10;
  EXPECT_THROW(assemble_complex(s, 4, o), ResourceError);
  EXPECT_THROW(assemble_complex(s, 0), AlgebraError);
}

TEST(Cohomology, ZeroDifferentialKeepsEveryCell) {
  OchaStructure s = fixture("trivial-b0");
  TruncatedComplex c = assemble_complex(s, 3);
  Cohomology h(c);
  for (int deg : c.degrees())
    EXPECT_EQ(h.dimension(deg), static_cast<int>(c.cells_in_degree(deg).size()));
}

TEST(Cohomology, RankNullityPerDegree) {
  for (const auto& [name, s] : campaign_structures()) {
    TruncatedComplex c = assemble_complex(s, 3);
    Cohomology h(c);
    for (const auto& [deg, dc] : h.by_degree()) {
      EXPECT_EQ(dc.cycles + dc.rank_out, dc.cells) << name;
      EXPECT_EQ(dc.dimension(), dc.cycles - dc.boundaries) << name;
    }
  }
}

TEST(Cohomology, DimensionsIndependentOfCellOrder) {
  for (const auto& [name, s] : campaign_structures()) {
    AssembleOptions rev;
    rev.reverse_order = true;
    TruncatedComplex c1 = assemble_complex(s, 4), c2 = assemble_complex(s, 4, rev);
    Cohomology h1(c1), h2(c2);
    for (int deg : c1.degrees()) EXPECT_EQ(h1.dimension(deg), h2.dimension(deg)) << name;
  }
}

TEST(Cohomology, AcyclicModelHasNoCohomologyAtWeightFour) {
  OchaStructure s = fixture("cdga-acyclic");
  TruncatedComplex c = assemble_complex(s, 4);
  Cohomology h(c);
  for (int deg : c.degrees()) EXPECT_EQ(h.dimension(deg), 0);
}

TEST(Cohomology, BoundariesAreExactAndReduceToZero) {
  OchaStructure s = fixture("cdga-circle");
  TruncatedComplex c = assemble_complex(s, 4);
  Cohomology h(c);
  Rng rng(3);
  for (int t = 0; t < 10; ++t) {
    OCCochain x = random_cochain(s.closed_space(), s.open_space(), s.open_space(),
                                 SupportSpec{1, 2, 4}, rng)
                      .cochain;
    OCCochain b = c.truncated_delta(x);
    if (b.is_zero()) continue;
    EXPECT_TRUE(h.is_cycle(b));
    EXPECT_TRUE(h.is_exact(b));
    EXPECT_TRUE(h.reduce(b, b.degree()).is_zero());
  }
}

TEST(Cohomology, NonCycleIsRejected) {
  OchaStructure s = fixture("cdga-acyclic");
  TruncatedComplex c = assemble_complex(s, 2);
  Cohomology h(c);
  OCCochain u = s.q().zero_like();
  u.add(std::vector<std::string>{"v"}, std::vector<std::string>{}, "one_N", Scalar(1));
  ASSERT_FALSE(h.is_cycle(u));
  EXPECT_THROW(h.class_coordinates(u, u.degree()), AlgebraError);
}

TEST(Cohomology, RepresentativeIndependence) {
  OchaStructure s = fixture("cdga-circle");
  TruncatedComplex c = assemble_complex(s, 4);
  Cohomology h(c);
  Rng rng(11);
  const auto classes = h.classes();
  for (const auto& a : classes)
    for (const auto& b : classes) {
      OCCochain noise = random_cochain(s.closed_space(), s.open_space(), s.open_space(),
                                       a.degree - 1, SupportSpec{1, 1, 3}, rng)
                            .cochain;
      CohomologyClass a2 = a;
      a2.representative = a.representative + c.truncated_delta(noise);
      a2.id = -1;
      try {
        const auto br = induced_bracket(h, a, b);
        const auto br2 = induced_bracket(h, a2, b);
        EXPECT_EQ(br.coordinates, br2.coordinates);
      } catch (const WeightOverflow&) {
      }
      try {
        const auto cp = induced_cup(h, a, b);
        const auto cp2 = induced_cup(h, a2, b);
        EXPECT_EQ(cp.coordinates, cp2.coordinates);
      } catch (const WeightOverflow&) {
      }
    }
}

TEST(Cohomology, ZeroClassAnnihilates) {
  OchaStructure s = fixture("trivial-b0");
  TruncatedComplex c = assemble_complex(s, 4);
  Cohomology h(c);
  const auto classes = h.classes();
  ASSERT_FALSE(classes.empty());
  CohomologyClass zero = classes.front();
  zero.representative = zero.representative.zero_like();
  zero.coordinates.assign(zero.coordinates.size(), Scalar(0));
  zero.id = -1;
  EXPECT_TRUE(induced_bracket(h, zero, classes.front()).is_zero());
  EXPECT_TRUE(induced_cup(h, zero, classes.front()).is_zero());
}

TEST(Cohomology, ProductsOutsideWindowAreRefused) {
  OchaStructure s = fixture("dual-numbers");
  TruncatedComplex c = assemble_complex(s, 2);
  Cohomology h(c);
  bool refused = false;
  for (const auto& a : h.classes())
    for (const auto& b : h.classes()) {
      try {
        induced_cup(h, a, b);
      } catch (const WeightOverflow&) {
        refused = true;
      }
    }
  EXPECT_TRUE(refused);
}

TEST(Cohomology, ClassLevelAntisymmetry) {
  OchaStructure s = fixture("cdga-circle");
  TruncatedComplex c = assemble_complex(s, 4);
  Cohomology h(c);
  for (const auto& a : h.classes())
    for (const auto& b : h.classes()) {
      try {
        auto ab = induced_bracket(h, a, b);
        auto ba = induced_bracket(h, b, a);
        ASSERT_EQ(ab.coordinates.size(), ba.coordinates.size());
        const Scalar e = -sgn(static_cast<long long>(a.degree) * b.degree);
        for (std::size_t i = 0; i < ab.coordinates.size(); ++i)
          EXPECT_EQ(ab.coordinates[i], e * ba.coordinates[i]);
      } catch (const WeightOverflow&) {
      }
    }
}

TEST(Gerstenhaber, AxiomsHoldOnFixturesAtWeightFour) {
  for (const auto& [name, s] : campaign_structures()) {
    TruncatedComplex c = assemble_complex(s, name.find('+') == std::string::npos ? 4 : 3);
    Cohomology h(c);
    GerstenhaberReport r = verify_gerstenhaber(h);
    EXPECT_TRUE(r.passed()) << name << "\n" << r.summary();
    ASSERT_EQ(r.axioms.size(), 7u);
  }
}

TEST(Gerstenhaber, CorruptedDifferentialIsCaught) {
  OchaStructure s = fixture("dual-numbers");
  AssembleOptions o;
  o.mutation = DeltaMutation::flip_right_brace;
  TruncatedComplex c = assemble_complex(s, 4, o);
  Cohomology h(c);
  GerstenhaberReport r = verify_gerstenhaber(h);
  EXPECT_FALSE(r.passed());
}

TEST(ClassicalReduction, DeltaCupBracketAgree) {
  OchaStructure s = fixture("dual-numbers");
  Classical cl = classical_dual_numbers(s);
  Rng rng(2024);
  std::vector<std::pair<OCCochain, int>> sample;
  for (int n = 1; n <= 3; ++n)
    for (int t = 0; t < 4; ++t) {
      OCCochain d = random_cochain(s.closed_space(), s.open_space(), s.open_space(), n - 1,
                                   SupportSpec{0, n, 4}, rng)
                        .cochain;
      // keep only arity n
      sample.emplace_back(d.component(0, n), n);
    }
  for (const auto& [d, n] : sample) {
    OCCochain ours = hochschild_differential(s, d);
    OCCochain theirs = from_classical(cl.delta(to_classical(d), n), d);
    EXPECT_EQ(ours, sgn(n - 1) * theirs);
  }
  for (const auto& [d1, p] : sample)
    for (const auto& [d2, q] : sample) {
      if (p + q > 4) continue;
      EXPECT_EQ(cup(s, d1, d2),
                sgn(p * q) * from_classical(cl.cup(to_classical(d1), p, to_classical(d2), q), d1));
      EXPECT_EQ(gerstenhaber_bracket(d1, d2),
                from_classical(cl.bracket(to_classical(d1), p, to_classical(d2), q), d1));
    }
}

TEST(ClassicalReduction, CohomologyDimensionsAgree) {
  OchaStructure s = fixture("dual-numbers");
  Classical cl = classical_dual_numbers(s);
  for (int w = 1; w <= 4; ++w) {
    TruncatedComplex c = assemble_complex(s, w);
    Cohomology h(c);
    for (int n = 1; n <= w; ++n) {
      int cells = 1;
      for (int i = 0; i <= n; ++i) cells *= cl.dim;
      const int out = n < w ? cl.rank_delta(n) : 0;
      const int in = n > 1 ? cl.rank_delta(n - 1) : 0;
      EXPECT_EQ(h.dimension(n - 1), cells - out - in) << "W=" << w << " n=" << n;
    }
  }
}
