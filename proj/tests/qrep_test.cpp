#include <gtest/gtest.h>

#include <algorithm>

#include "support.hpp"

using namespace deltafilt;
using namespace testsupport;

namespace {

Representation random_rep(const Algebra& alg, std::size_t max_dim, Rng& rng) {
  std::uniform_int_distribution<std::size_t> dd(0, max_dim);
  std::vector<std::size_t> dims;
  for (std::size_t v = 0; v < alg.quiver().num_vertices(); ++v) dims.push_back(dd(rng));
  Representation m = zero_maps(alg, dims);
  for (std::size_t a = 0; a < alg.quiver().num_arrows(); ++a) {
    const auto& arr = alg.quiver().arrow(a);
    m.maps[a] = random_mat(alg.field(), dims[arr.target], dims[arr.source], rng);
  }
  return m;
}

/// Multiset of (dims, multiplicity) over the groups of a decomposition.
std::vector<std::pair<std::vector<std::size_t>, std::size_t>> signature(const Decomposition& d) {
  std::vector<std::pair<std::vector<std::size_t>, std::size_t>> s;
  for (const auto& g : d.groups) s.emplace_back(g.rep.dims, g.multiplicity());
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace

TEST(Quiver, RejectsMalformedInput) {
  EXPECT_ERRC(Quiver({"1", "1"}, {}), Errc::InvalidAlgebra);
  EXPECT_ERRC(Quiver({"1"}, {{"a", "1", "9"}}), Errc::UnknownLabel);
  Quiver q({"1", "2"}, {{"a", "1", "2"}});
  EXPECT_ERRC(Algebra(q, Field(5), {{RelationTerm{1, Path{0, 1, {0}}}}}, 2), Errc::InvalidAlgebra);
  EXPECT_ERRC(Algebra(q, Field(5), {}, 1), Errc::InvalidAlgebra);
}

TEST(Representation, ValidationReportsShapeAndRelation) {
  Algebra alg = a2();
  EXPECT_TRUE(validate_representation(alg, rep(alg, {1, 1}, {{"a", {{1}}}})).empty());

  Representation bad = zero_maps(alg, {1, 1});
  bad.maps[0] = Mat(alg.field(), 2, 1);
  auto v = validate_representation(alg, bad);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].kind, Violation::Kind::Shape);

  Algebra rel = a3(5, true);
  Representation r = zero_maps(rel, {1, 1, 1});
  r.maps[0] = Mat::identity(rel.field(), 1);
  r.maps[1] = Mat::identity(rel.field(), 1);
  v = validate_representation(rel, r);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].kind, Violation::Kind::Relation);
}

TEST(Representation, SimplesAndProjectives) {
  Algebra alg = a2();
  EXPECT_EQ(projective(alg, 0).rep.dims, (std::vector<std::size_t>{1, 1}));
  EXPECT_EQ(projective(alg, 1).rep.dims, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(simple(alg, 0).dims, (std::vector<std::size_t>{1, 0}));
  EXPECT_TRUE(simple(alg, 0).maps[0].is_zero());
  EXPECT_EQ(projective(single_vertex(), 0).rep.dims, (std::vector<std::size_t>{1}));

  EXPECT_EQ(projective(a3(), 0).rep.dims, (std::vector<std::size_t>{1, 1, 1}));
  EXPECT_EQ(projective(a3(5, true), 0).rep.dims, (std::vector<std::size_t>{1, 1, 0}));
  for (std::size_t v = 0; v < 3; ++v) EXPECT_TRUE(validate_representation(a3(5, true), projective(a3(5, true), v).rep).empty());
}

TEST(Hom, A2Dimensions) {
  Algebra alg = a2();
  auto p1 = projective(alg, 0).rep, p2 = projective(alg, 1).rep;
  EXPECT_EQ(hom_dim(alg, p2, p1), 1u);
  EXPECT_EQ(hom_dim(alg, p1, p2), 0u);
  EXPECT_EQ(hom_dim(alg, simple(alg, 0), p1), 0u);
  EXPECT_GE(hom_dim(alg, p1, p1), 1u);
  for (const auto& h : hom_basis(alg, p2, p1).basis) EXPECT_TRUE(is_hom(alg, h, p2, p1));
}

TEST(EulerForm, Values) {
  Algebra alg = a2();
  EXPECT_EQ(euler_form(alg, {1, 0}, {0, 1}), -1);
  EXPECT_EQ(euler_form(alg, {1, 0}, {1, 0}), 1);
  EXPECT_EQ(euler_form(alg, {1, 1}, {0, 1}), 0);
  EXPECT_ERRC(euler_form(a3(5, true), {1, 0, 0}, {0, 0, 1}), Errc::NotHereditary);
}

TEST(Radical, CoverAndPresentation) {
  Algebra alg = a2();
  auto p1 = projective(alg, 0).rep;
  Submodule rad = radical(alg, p1);
  EXPECT_EQ(rad.dims(), (std::vector<std::size_t>{0, 1}));
  EXPECT_TRUE(radical(alg, direct_sum(alg, {simple(alg, 0), simple(alg, 1)}).rep).is_zero());

  ProjectiveCover c = projective_cover(alg, simple(alg, 0));
  EXPECT_EQ(c.cover.dims, p1.dims);
  EXPECT_EQ(c.summand_vertices, (std::vector<std::size_t>{0}));
  EXPECT_EQ(kernel_submodule(c.epi).dims(), (std::vector<std::size_t>{0, 1}));

  Presentation pr = presentation(alg, simple(alg, 0));
  EXPECT_EQ(pr.syzygy_rep.dims, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(pr.p1.summand_vertices, (std::vector<std::size_t>{1}));
  EXPECT_TRUE(is_hom(alg, pr.differential, pr.p1.cover, pr.p0.cover));
  EXPECT_TRUE(is_zero(compose(pr.p0.epi, pr.differential)));
}

TEST(Ext, A2Values) {
  Algebra alg = a2();
  auto s1 = simple(alg, 0), s2 = simple(alg, 1);
  EXPECT_EQ(ext1_dim(alg, s1, s2), 1u);
  EXPECT_EQ(ext1_dim(alg, s2, s1), 0u);
  for (std::size_t v = 0; v < 2; ++v) {
    auto p = projective(alg, v).rep;
    for (const auto& n : {s1, s2, p, projective(alg, 0).rep}) EXPECT_EQ(ext1_dim(alg, p, n), 0u);
  }
}

TEST(Ext, NonHereditaryA3) {
  // With ab = 0: 0 -> S2 -> P1 -> S1 -> 0 and 0 -> S3 -> P2 -> S2 -> 0, Ext^1(S1,S3) = 0.
  Algebra alg = a3(5, true);
  auto s = [&](std::size_t v) { return simple(alg, v); };
  EXPECT_EQ(ext1_dim(alg, s(0), s(1)), 1u);
  EXPECT_EQ(ext1_dim(alg, s(1), s(2)), 1u);
  EXPECT_EQ(ext1_dim(alg, s(0), s(2)), 0u);
  EXPECT_EQ(ext1_dim(alg, s(2), s(0)), 0u);
  // Ext^1(S1, P2): Ω(S1) = S2, Hom(S2, P2) = 0 and the term is k^0, so Ext = 0.
  EXPECT_EQ(ext1_dim(alg, s(0), projective(alg, 1).rep), 0u);
  // Ext^1(S1, S2 ⊕ S2) doubles.
  EXPECT_EQ(ext1_dim(alg, s(0), direct_sum(alg, {s(1), s(1)}).rep), 2u);
}

TEST(Ext, HereditaryEulerOracleRandomized) {
  Rng rng(2024);
  for (const Algebra& alg : {a2(5), a3(3), a3(2)}) {
    for (int t = 0; t < 40; ++t) {
      Representation m = random_rep(alg, 2, rng), n = random_rep(alg, 2, rng);
      const long long lhs = static_cast<long long>(hom_dim(alg, m, n)) - static_cast<long long>(ext1_dim(alg, m, n));
      EXPECT_EQ(lhs, euler_form(alg, m.dims, n.dims));
    }
  }
}

TEST(Ext, AdditiveOnFiniteSums) {
  Algebra alg = a3(3, true);
  std::vector<Representation> ind = {simple(alg, 0), simple(alg, 1), simple(alg, 2), projective(alg, 0).rep,
                                     projective(alg, 1).rep};
  for (std::size_t i = 0; i < ind.size(); ++i)
    for (std::size_t j = 0; j < ind.size(); ++j)
      for (std::size_t s = 1; s <= 3; s += 2)
        for (std::size_t t = 1; t <= 2; ++t) {
          std::vector<Representation> as(s, ind[i]), bs(t, ind[j]);
          EXPECT_EQ(ext1_dim(alg, direct_sum(alg, as).rep, direct_sum(alg, bs).rep),
                    s * t * ext1_dim(alg, ind[i], ind[j]));
        }
}

TEST(Iso, Basics) {
  Algebra alg = a2();
  auto p1 = projective(alg, 0).rep;
  EXPECT_TRUE(is_isomorphic(alg, p1, p1));
  EXPECT_FALSE(is_isomorphic(alg, simple(alg, 0), simple(alg, 1)));
  IsoResult r = is_isomorphic(alg, p1, direct_sum(alg, {simple(alg, 0), simple(alg, 1)}).rep);
  EXPECT_EQ(r.verdict, IsoVerdict::NotIsomorphic);

  Rng rng(7);
  Representation m = direct_sum(alg, {p1, simple(alg, 1)}).rep;
  std::vector<Mat> g{random_invertible(alg.field(), 1, rng), random_invertible(alg.field(), 2, rng)};
  IsoResult moved = is_isomorphic(alg, m, change_basis(alg, m, g));
  ASSERT_TRUE(moved);
  EXPECT_TRUE(is_iso_hom(*moved.witness));
  EXPECT_TRUE(is_hom(alg, *moved.witness, m, change_basis(alg, m, g)));
}

TEST(Indecomposable, Examples) {
  Algebra alg = a2();
  EXPECT_TRUE(is_indecomposable(alg, simple(alg, 0)).indecomposable);
  EXPECT_TRUE(is_indecomposable(alg, projective(alg, 0).rep).indecomposable);
  EXPECT_FALSE(is_indecomposable(alg, direct_sum(alg, {simple(alg, 0), simple(alg, 1)}).rep).indecomposable);
  EXPECT_ERRC(is_indecomposable(alg, zero_rep(alg)), Errc::ZeroModule);
}

TEST(Decompose, A2RankOneOracle) {
  Algebra alg = a2();
  Representation m = rep(alg, {2, 2}, {{"a", {{1, 0}, {0, 0}}}});
  Decomposition d = decompose(alg, m);
  EXPECT_EQ(d.summands.size(), 3u);
  auto sig = signature(d);
  decltype(sig) expected{{{0, 1}, 1}, {{1, 0}, 1}, {{1, 1}, 1}};
  EXPECT_EQ(sig, expected);
  EXPECT_EQ(dims_of(d), m.dims);
}

TEST(Decompose, A2ClosedFormRandomized) {
  // On A2 a rep with dims (d1, d2) and arrow rank r is S1^(d1-r) ⊕ S2^(d2-r) ⊕ P1^r.
  Rng rng(99);
  Algebra alg = a2(3);
  for (int t = 0; t < 25; ++t) {
    Representation m = random_rep(alg, 3, rng);
    if (m.is_zero()) continue;
    const std::size_t r = rank(m.maps[0]);
    std::map<std::vector<std::size_t>, std::size_t> want;
    if (m.dims[0] > r) want[{1, 0}] = m.dims[0] - r;
    if (m.dims[1] > r) want[{0, 1}] = m.dims[1] - r;
    if (r > 0) want[{1, 1}] = r;
    std::map<std::vector<std::size_t>, std::size_t> got;
    for (const auto& g : decompose(alg, m).groups) got[g.rep.dims] += g.multiplicity();
    EXPECT_EQ(got, want);
  }
}

TEST(Decompose, InvariantUnderChangeOfBasis) {
  Rng rng(5);
  Algebra alg = a3(3, true);
  for (int t = 0; t < 12; ++t) {
    Representation m = random_rep(alg, 2, rng);
    // force ab = 0
    m.maps[1] = Mat(alg.field(), m.dims[2], m.dims[1]);
    if (m.is_zero()) continue;
    std::vector<Mat> g;
    for (auto d : m.dims) g.push_back(random_invertible(alg.field(), d, rng));
    Representation moved = change_basis(alg, m, g);
    EXPECT_EQ(signature(decompose(alg, m)), signature(decompose(alg, moved)));
    EXPECT_EQ(dims_of(decompose(alg, m)), m.dims);
  }
}

TEST(DirectSum, BiproductLaws) {
  Algebra alg = a2();
  DirectSum ds = direct_sum(alg, {simple(alg, 0), simple(alg, 1)});
  EXPECT_EQ(ds.rep.dims, (std::vector<std::size_t>{1, 1}));
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      Hom pij = compose(ds.projections[i], ds.injections[j]);
      if (i == j) {
        EXPECT_EQ(pij, identity_hom(i == 0 ? simple(alg, 0) : simple(alg, 1)));
      } else {
        EXPECT_TRUE(is_zero(pij));
      }
    }
  Hom sum = compose(ds.injections[0], ds.projections[0]) + compose(ds.injections[1], ds.projections[1]);
  EXPECT_EQ(sum, identity_hom(ds.rep));
  auto p1 = projective(alg, 0).rep;
  EXPECT_EQ(direct_sum(alg, {p1, p1}).rep.dims, (std::vector<std::size_t>{2, 2}));
  EXPECT_TRUE(direct_sum(alg, {}).rep.is_zero());
}

TEST(Submodules, GeneratedQuotientPreimage) {
  Algebra alg = a2();
  auto p1 = projective(alg, 0).rep;
  Submodule gen = sub_generated(alg, p1, {Mat::from_columns(alg.field(), 1, {{1}}), Mat(alg.field(), 1, 0)});
  EXPECT_TRUE(is_full(gen, p1));

  Submodule socle = sub(alg, p1, {{}, {{1}}});
  QuotientRep q = quotient_rep(alg, p1, socle);
  EXPECT_TRUE(is_isomorphic(alg, q.rep, simple(alg, 0)));

  QuotientRep id = quotient_rep(alg, p1, zero_sub(p1));
  EXPECT_EQ(preimage(alg, p1, id.projection, push_forward(id.projection, socle)), socle);
}

TEST(Trace, Examples) {
  Algebra alg = a2();
  auto p1 = projective(alg, 0).rep;
  EXPECT_EQ(trace(alg, simple(alg, 1), p1).dims(), (std::vector<std::size_t>{0, 1}));
  EXPECT_TRUE(trace(alg, p1, simple(alg, 1)).is_zero());
  EXPECT_TRUE(is_full(trace(alg, p1, p1), p1));

  Rng rng(3);
  Algebra alg3 = a3(3);
  for (int t = 0; t < 15; ++t) {
    Representation l = random_rep(alg3, 2, rng), n = random_rep(alg3, 2, rng);
    Submodule tr = trace(alg3, l, n);
    EXPECT_TRUE(is_submodule(alg3, n, tr));
    EXPECT_EQ(tr.is_zero(), hom_dim(alg3, l, n) == 0);
  }
}

TEST(SplitRetraction, Examples) {
  Algebra alg = a2();
  Representation b = direct_sum(alg, {simple(alg, 0), simple(alg, 1)}).rep;
  Submodule a = sub(alg, b, {{}, {{1}}});
  SplitRetraction sr = split_retraction(alg, b, a);
  EXPECT_EQ(sr.complement, sub(alg, b, {{{1}}, {}}));
  EXPECT_EQ(compose(sr.retraction, sr.sub.inclusion), identity_hom(sr.sub.rep));

  EXPECT_ERRC(split_retraction(alg, projective(alg, 0).rep, sub(alg, projective(alg, 0).rep, {{}, {{1}}})),
              Errc::NoRetraction);

  Representation s22 = zero_maps(alg, {0, 2});
  Submodule diag = sub(alg, s22, {{}, {{1, 1}}});
  SplitRetraction d = split_retraction(alg, s22, diag);
  EXPECT_EQ(d.complement.dims(), (std::vector<std::size_t>{0, 1}));
  EXPECT_TRUE(sub_intersect(d.complement, diag).is_zero());
  EXPECT_TRUE(is_full(sub_sum(d.complement, diag), s22));
}
