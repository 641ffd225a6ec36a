#include <gtest/gtest.h>

#include "deltafilt/hsys.hpp"
#include "support.hpp"

using namespace deltafilt;
using namespace testsupport;

namespace {

/// Random acyclic quiver on n vertices (arrows only go from i to j > i).
Algebra random_dag(std::size_t n, Rng& rng, std::uint64_t p = 3) {
  std::vector<std::string> verts;
  for (std::size_t i = 0; i < n; ++i) verts.push_back(std::to_string(i + 1));
  std::vector<std::tuple<std::string, std::string, std::string>> arrows;
  std::uniform_int_distribution<int> count(0, 3);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const int k = count(rng) == 0 ? 1 : 0;
      for (int c = 0; c < k + (count(rng) == 3 ? 1 : 0); ++c)
        arrows.emplace_back("x" + std::to_string(arrows.size()), verts[i], verts[j]);
    }
  return Algebra(Quiver(verts, arrows), Field(p), {}, n);
}

const Witness* find_witness(const AxiomReport& r, const std::string& kind) {
  for (const auto& w : r.witnesses)
    if (w.kind == kind) return &w;
  return nullptr;
}

}  // namespace

TEST(Validate, A2Projectives) {
  HomologicalSystem s = projective_system(a2());
  EXPECT_TRUE(s.is_valid());
  EXPECT_TRUE(s.preorder().leq("2", "1"));
  EXPECT_FALSE(s.preorder().leq("1", "2"));
  EXPECT_EQ(s.report().hom_dims[1][0], 1u);
  EXPECT_EQ(s.report().ext_dims[0][1], 0u);
  EXPECT_EQ(s.report().certainty, Certainty::Certain);
}

TEST(Validate, A2SimplesOrdered) {
  HomologicalSystem s = simple_system(a2(), {{"1", "2"}});
  EXPECT_TRUE(s.is_valid());
  EXPECT_EQ(s.report().ext_dims[0][1], 1u);
}

TEST(Validate, A2SimplesDiscreteFailsHs4) {
  HomologicalSystem s = simple_system(a2(), {});
  EXPECT_FALSE(s.is_valid());
  EXPECT_TRUE(s.report().hs1.passed);
  EXPECT_TRUE(s.report().hs2.passed);
  EXPECT_TRUE(s.report().hs3.passed);
  ASSERT_FALSE(s.report().hs4.passed);
  ASSERT_EQ(s.report().hs4.witnesses.size(), 1u);
  EXPECT_EQ(s.report().hs4.witnesses[0].omegas, (std::vector<std::string>{"1", "2"}));
  EXPECT_EQ(s.report().hs4.witnesses[0].dim, 1u);
  EXPECT_ERRC(s.require_valid(), Errc::NotValidated);
  EXPECT_ERRC(ext_pattern(s), Errc::NotValidated);
}

TEST(Validate, Hs2AndHs3Failures) {
  Algebra alg = a2();
  auto s1 = simple(alg, 0), s2 = simple(alg, 1);
  auto p1 = projective(alg, 0).rep;
  HomologicalSystem dec(alg, close_transitive({"x"}, {}), {direct_sum(alg, {s1, s2}).rep});
  ASSERT_NE(find_witness(dec.report().hs2, "decomposable"), nullptr);

  HomologicalSystem iso(alg, close_transitive({"x", "y"}, {}), {p1, p1});
  ASSERT_NE(find_witness(iso.report().hs2, "isomorphic"), nullptr);

  // Hom(S2, P1) ≠ 0 but S2 ≰ P1.
  HomologicalSystem hom(alg, close_transitive({"p", "s"}, {}), {p1, s2});
  const Witness* w = find_witness(hom.report().hs3, "nonzero_hom");
  ASSERT_NE(w, nullptr);
  EXPECT_EQ(w->omegas, (std::vector<std::string>{"s", "p"}));

  EXPECT_ERRC(HomologicalSystem(alg, close_transitive({"x"}, {}), {}), Errc::PreconditionViolated);
}

TEST(Validate, SelfExtensionIsHs4Failure) {
  // One vertex with a loop x and x^2 = 0: Ext^1(S, S) = 1.
  Quiver q({"1"}, {{"x", "1", "1"}});
  Algebra alg(q, Field(5), {{RelationTerm{1, Path{0, 0, {0, 0}}}}}, 2);
  EXPECT_EQ(projective(alg, 0).rep.dims, (std::vector<std::size_t>{2}));
  HomologicalSystem s(alg, close_transitive({"s"}, {}), {simple(alg, 0)});
  EXPECT_FALSE(s.report().hs4.passed);
  EXPECT_EQ(s.report().hs4.witnesses.at(0).omegas, (std::vector<std::string>{"s", "s"}));
}

TEST(ValidatePrime, Examples) {
  HomologicalSystem proj = projective_system(a2());
  PrimeReport r = validate_prime(proj, 100);
  EXPECT_EQ(r.linearizations, 1u);
  EXPECT_TRUE(r.passed());
  EXPECT_TRUE(r.agrees_with_validate);

  PrimeReport bad = validate_prime(simple_system(a2(), {}), 100);
  EXPECT_FALSE(bad.hs4_prime);
  EXPECT_TRUE(bad.agrees_with_validate);

  HomologicalSystem one = projective_system(single_vertex());
  EXPECT_TRUE(one.is_valid());
  EXPECT_TRUE(validate_prime(one, 1).passed());
  EXPECT_ERRC(validate_prime(simple_system(a3(), {}), 5), Errc::CapExceeded);
}

TEST(ProjectiveSystem, A3Chain) {
  HomologicalSystem s = projective_system(a3());
  EXPECT_TRUE(s.is_valid());
  EXPECT_TRUE(s.preorder().leq("3", "2"));
  EXPECT_TRUE(s.preorder().leq("2", "1"));
  EXPECT_TRUE(s.preorder().leq("3", "1"));
  EXPECT_FALSE(s.preorder().leq("1", "3"));
}

TEST(ProjectiveSystem, PassesOnSmallHereditaryQuivers) {
  Rng rng(31);
  for (std::size_t n = 1; n <= 4; ++n)
    for (int t = 0; t < 6; ++t) {
      Algebra alg = random_dag(n, rng);
      HomologicalSystem s = projective_system(alg);
      EXPECT_TRUE(s.is_valid());
    }
}

TEST(ValidatePrime, AgreesWithValidateRandomized) {
  Rng rng(41);
  std::bernoulli_distribution coin(0.3);
  int passing = 0, failing = 0;
  for (std::size_t n = 1; n <= 5; ++n)
    for (int t = 0; t < 10; ++t) {
      Algebra alg = random_dag(n, rng);
      std::vector<std::pair<std::string, std::string>> pairs;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (i != j && coin(rng)) pairs.emplace_back(std::to_string(i + 1), std::to_string(j + 1));
      // Alternate between simples and projectives so both Δ families are covered.
      std::vector<Representation> delta;
      for (std::size_t v = 0; v < n; ++v) delta.push_back(t % 2 ? simple(alg, v) : projective(alg, v).rep);
      std::vector<std::string> verts = alg.quiver().vertices();
      HomologicalSystem s(alg, close_transitive(verts, pairs), delta);
      if (s.quotient().size() > 5) continue;
      PrimeReport r = validate_prime(s, 1000);
      EXPECT_TRUE(r.agrees_with_validate);
      const bool hs34 = s.report().hs3.passed && s.report().hs4.passed;
      EXPECT_EQ(r.passed(), hs34);
      (hs34 ? passing : failing)++;
    }
  EXPECT_GT(passing, 0);
  EXPECT_GT(failing, 0);
}

TEST(ExtPattern, Examples) {
  ExtPattern simples = ext_pattern(simple_system(a2(), {{"1", "2"}}));
  EXPECT_TRUE(simples.hom_nonzero(0, 0));
  EXPECT_TRUE(simples.hom_nonzero(1, 1));
  EXPECT_FALSE(simples.hom_nonzero(0, 1));
  EXPECT_FALSE(simples.hom_nonzero(1, 0));
  EXPECT_TRUE(simples.ext_nonzero(0, 1));
  EXPECT_FALSE(simples.ext_nonzero(1, 0));
  EXPECT_FALSE(simples.ext_nonzero(0, 0));

  ExtPattern proj = ext_pattern(projective_system(a2()));
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b) EXPECT_FALSE(proj.ext_nonzero(a, b));
}

TEST(ExtPattern, RankLevelInvariantAllLinearizations) {
  for (const HomologicalSystem& s :
       {projective_system(a3()), projective_system(a3(5, true)), simple_system(a2(), {{"1", "2"}}),
        simple_system(a3(5, true), {{"1", "2"}, {"2", "3"}})}) {
    ASSERT_TRUE(s.is_valid());
    for (const auto& l : enumerate_linearizations(s.quotient(), 1000)) {
      HomologicalSystem sl = s.with_linearization(l);
      for (std::size_t a = 0; a < s.size(); ++a)
        for (std::size_t b = 0; b < s.size(); ++b) {
          if (sl.rank_of(b) <= sl.rank_of(a)) {
            EXPECT_EQ(s.report().ext_dims[a][b], 0u);
          }
          if (sl.rank_of(b) < sl.rank_of(a)) {
            EXPECT_EQ(s.report().hom_dims[a][b], 0u);
          }
        }
    }
  }
}
