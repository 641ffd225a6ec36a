#include <gtest/gtest.h>

#include "deltafilt/symb.hpp"
#include "support.hpp"

using namespace deltafilt;
using namespace testsupport;

namespace {

const Cardinal aleph0 = Cardinal::aleph(0);

ExtPattern simples_pattern() { return ext_pattern(simple_system(a2(), {{"1", "2"}})); }

std::vector<Cardinal> all_small_cardinals() {
  std::vector<Cardinal> c;
  for (std::uint64_t n = 0; n <= 10; ++n) c.push_back(Cardinal::finite(n));
  for (std::uint64_t k = 0; k <= 3; ++k) c.push_back(Cardinal::aleph(k));
  return c;
}

}  // namespace

TEST(Cardinal, Addition) {
  EXPECT_EQ(card_add(Cardinal::finite(2), Cardinal::finite(3)), Cardinal::finite(5));
  EXPECT_EQ(card_add(Cardinal::finite(7), aleph0), aleph0);
  EXPECT_EQ(card_add(aleph0, Cardinal::aleph(1)), Cardinal::aleph(1));
  EXPECT_EQ(aleph0.str(), "aleph_0");
  EXPECT_ERRC(Cardinal::aleph(kDefaultMaxAleph + 1), Errc::PreconditionViolated);
  EXPECT_NO_THROW(Cardinal::aleph(40, 64));
}

TEST(Cardinal, AssociativeAndCommutative) {
  const auto cs = all_small_cardinals();
  for (const auto& a : cs)
    for (const auto& b : cs) {
      EXPECT_EQ(card_add(a, b), card_add(b, a));
      for (const auto& c : cs) EXPECT_EQ(card_add(card_add(a, b), c), card_add(a, card_add(b, c)));
    }
}

TEST(SymbSort, Examples) {
  ExtPattern pat = simples_pattern();
  SymbolicFiltration f{{{0, aleph0}, {1, Cardinal::finite(3)}}};
  std::size_t swaps = 0;
  SymbolicFiltration sorted = symb_sort(pat, f, &swaps);
  EXPECT_EQ(swaps, 1u);
  EXPECT_EQ(sorted.steps, (std::vector<SymbolicStep>{{1, Cardinal::finite(3)}, {0, aleph0}}));

  SymbolicFiltration again = symb_sort(pat, sorted, &swaps);
  EXPECT_EQ(swaps, 0u);
  EXPECT_EQ(again.steps, sorted.steps);

  SymbolicFiltration same_class{{{0, Cardinal::finite(2)}, {0, aleph0}}};
  EXPECT_EQ(symb_sort(pat, same_class).steps, same_class.steps);
  auto layers = symb_merge(pat, same_class);
  ASSERT_EQ(layers.size(), 1u);
  EXPECT_EQ(layers[0].card, aleph0);
}

TEST(SymbSort, RejectsInconsistentPattern) {
  ExtPattern pat = simples_pattern();
  pat.ext_nonzero.set(1, 0);
  EXPECT_ERRC(symb_sort(pat, SymbolicFiltration{{{0, aleph0}, {1, Cardinal::finite(1)}}}), Errc::IllegalSwap);
  EXPECT_ERRC(symb_sort(pat, SymbolicFiltration{{{0, Cardinal::finite(0)}}}), Errc::PreconditionViolated);
  EXPECT_ERRC(symb_sort(pat, SymbolicFiltration{{{7, Cardinal::finite(1)}}}), Errc::UnknownLabel);
}

TEST(SymbMerge, Examples) {
  ExtPattern pat = simples_pattern();
  SymbolicFiltration f{{{1, Cardinal::finite(3)}, {1, aleph0}, {0, Cardinal::finite(1)}}};
  auto layers = symb_merge(pat, f);
  ASSERT_EQ(layers.size(), 2u);
  EXPECT_EQ(layers[0].cls, 1u);
  EXPECT_EQ(layers[0].card, aleph0);
  EXPECT_EQ(layers[1].cls, 0u);
  EXPECT_EQ(layers[1].card, Cardinal::finite(1));

  EXPECT_TRUE(symb_merge(pat, SymbolicFiltration{}).empty());
  auto zero = symb_ell(pat, SymbolicFiltration{});
  for (const auto& c : zero) EXPECT_TRUE(c.is_zero());

  EXPECT_ERRC(symb_merge(pat, SymbolicFiltration{{{0, aleph0}, {1, Cardinal::finite(3)}}}), Errc::NotSorted);
}

TEST(SymbEll, InvariantUnderSortAndMerge) {
  ExtPattern pat = simples_pattern();
  SymbolicFiltration f{{{0, aleph0}, {1, Cardinal::finite(3)}}};
  auto before = symb_ell(pat, f);
  EXPECT_EQ(before, (std::vector<Cardinal>{aleph0, Cardinal::finite(3)}));
  SymbolicFiltration sorted = symb_sort(pat, f);
  EXPECT_EQ(symb_ell(pat, sorted), before);
  EXPECT_EQ(symb_ell(pat, symb_merge(pat, sorted)), before);

  Rng rng(4);
  ExtPattern a3pat = ext_pattern(simple_system(a3(5, true), {{"1", "2"}, {"2", "3"}}));
  std::uniform_int_distribution<std::size_t> omega(0, 2), len(0, 7), kind(0, 5);
  for (int t = 0; t < 50; ++t) {
    SymbolicFiltration g;
    for (std::size_t j = 0, n = len(rng); j < n; ++j) {
      const std::size_t k = kind(rng);
      g.steps.push_back({omega(rng), k < 2 ? Cardinal::aleph(k) : Cardinal::finite(k)});
    }
    auto ell0 = symb_ell(a3pat, g);
    SymbolicFiltration s = symb_sort(a3pat, g);
    EXPECT_EQ(symb_ell(a3pat, s), ell0);
    EXPECT_EQ(symb_ell(a3pat, symb_merge(a3pat, s)), ell0);
  }
}

TEST(SymbSort, AgreesWithConcreteSorter) {
  Rng rng(12);
  struct Case {
    HomologicalSystem sys;
    Representation m;
  };
  Algebra a = a2();
  Algebra r = a3(3, true);
  std::vector<Case> cases = {
      {simple_system(a, {{"1", "2"}}), direct_sum(a, {simple(a, 0), simple(a, 1), projective(a, 0).rep}).rep},
      {projective_system(a), direct_sum(a, {projective(a, 0).rep, projective(a, 0).rep, projective(a, 1).rep}).rep},
      {simple_system(r, {{"1", "2"}, {"2", "3"}}),
       direct_sum(r, {projective(r, 0).rep, simple(r, 2), simple(r, 0), projective(r, 1).rep}).rep},
  };
  for (const auto& c : cases) {
    ExtPattern pat = ext_pattern(c.sys);
    for (int t = 0; t < 6; ++t) {
      auto f = random_slim_filtration(c.sys, c.m, rng);
      ASSERT_TRUE(f);
      SymbolicFiltration sf;
      for (const auto& fl : f->factors) sf.steps.push_back({fl[0].omega, Cardinal::finite(fl[0].mult)});
      SymbolicFiltration sorted = symb_sort(pat, sf);
      EXPECT_EQ(symb_classes(pat, sorted), order_vector(c.sys, sort_slim(c.sys, *f).filtration));
    }
  }
}
