#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "deltafilt/preord.hpp"
#include "support.hpp"

using namespace deltafilt;

namespace {

std::vector<std::string> labels(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(std::string(1, static_cast<char>('a' + i)));
  return out;
}

std::size_t brute_force_extensions(const QuotientPoset& q) {
  std::vector<std::size_t> perm(q.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::size_t count = 0;
  do {
    if (extends(Linearization(perm), q)) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

Preorder random_preorder(std::size_t n, double density, Rng& rng) {
  std::bernoulli_distribution coin(density);
  std::vector<std::pair<std::string, std::string>> pairs;
  auto l = labels(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (a != b && coin(rng)) pairs.emplace_back(l[a], l[b]);
  return close_transitive(l, pairs);
}

}  // namespace

TEST(Preorder, ValidatesAxioms) {
  Relation r(2);
  r.set(0, 0);
  EXPECT_ERRC(Preorder({"x", "y"}, r), Errc::PreconditionViolated);
  Relation t(3);
  for (std::size_t i = 0; i < 3; ++i) t.set(i, i);
  t.set(0, 1);
  t.set(1, 2);
  EXPECT_ERRC(Preorder({"x", "y", "z"}, t), Errc::PreconditionViolated);
  EXPECT_ERRC(Preorder({"x", "x"}, Relation(2)), Errc::PreconditionViolated);
}

TEST(CloseTransitive, Examples) {
  Preorder p = close_transitive({"1", "2"}, {{"2", "1"}});
  EXPECT_TRUE(p.leq("2", "1"));
  EXPECT_FALSE(p.leq("1", "2"));
  EXPECT_TRUE(p.leq("1", "1"));

  Preorder d = close_transitive({"a", "b", "c"}, {});
  EXPECT_FALSE(d.leq("a", "b"));
  EXPECT_TRUE(d.leq("c", "c"));

  Preorder c = close_transitive({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  EXPECT_TRUE(c.leq("a", "c"));
  EXPECT_ERRC(close_transitive({"a"}, {{"a", "z"}}), Errc::UnknownLabel);
}

TEST(Quotient, Examples) {
  EXPECT_EQ(quotient(close_transitive(labels(4), {})).size(), 4u);
  QuotientPoset q = quotient(close_transitive({"a", "b"}, {{"a", "b"}, {"b", "a"}}));
  ASSERT_EQ(q.size(), 1u);
  EXPECT_EQ(q.classes[0], (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(quotient(divisibility(6)).size(), 6u);
}

TEST(Quotient, AntisymmetricAndWellDefinedRandomized) {
  Rng rng(11);
  for (std::size_t n = 1; n <= 8; ++n)
    for (int t = 0; t < 20; ++t) {
      Preorder p = random_preorder(n, 0.25, rng);
      QuotientPoset q = quotient(p);
      for (std::size_t u = 0; u < q.size(); ++u)
        for (std::size_t v = 0; v < q.size(); ++v)
          if (u != v) {
            EXPECT_FALSE(q.leq(u, v) && q.leq(v, u));
          }
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
          EXPECT_EQ(p.leq(a, b), q.leq(q.projection[a], q.projection[b]));
          EXPECT_EQ(q.projection[a] == q.projection[b], p.leq(a, b) && p.leq(b, a));
        }
    }
}

TEST(Linearize, Examples) {
  QuotientPoset chain = quotient(close_transitive({"a", "b", "c"}, {{"c", "b"}, {"b", "a"}}));
  EXPECT_EQ(linearize(chain).order(), (std::vector<std::size_t>{2, 1, 0}));
  QuotientPoset anti = quotient(close_transitive({"a", "b"}, {}));
  EXPECT_EQ(linearize(anti).order(), (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(linearize(anti, [](std::size_t c) { return 10 - c; }).order(), (std::vector<std::size_t>{1, 0}));

  QuotientPoset div = quotient(divisibility(4));
  Linearization l = linearize(div);
  EXPECT_EQ(l.order().front(), 0u);
  EXPECT_TRUE(l.precedes(1, 3));
  EXPECT_TRUE(extends(l, div));
}

TEST(Enumerate, Examples) {
  EXPECT_EQ(enumerate_linearizations(quotient(close_transitive(labels(3), {})), 100).size(), 6u);
  QuotientPoset chain = quotient(close_transitive(labels(4), {{"a", "b"}, {"b", "c"}, {"c", "d"}}));
  EXPECT_EQ(enumerate_linearizations(chain, 100).size(), 1u);
  EXPECT_ERRC(enumerate_linearizations(quotient(close_transitive(labels(4), {})), 23), Errc::CapExceeded);

  // divisibility restricted to {2,3,4}
  QuotientPoset d = quotient(close_transitive({"2", "3", "4"}, {{"2", "4"}}));
  bool three_first = false, two_first = false;
  for (const auto& l : enumerate_linearizations(d, 100)) {
    EXPECT_TRUE(extends(l, d));
    (l.precedes(1, 0) ? three_first : two_first) = true;
  }
  EXPECT_TRUE(three_first && two_first);
}

TEST(Enumerate, MatchesBruteForce) {
  Rng rng(23);
  for (std::size_t n = 1; n <= 6; ++n)
    for (int t = 0; t < 10; ++t) {
      QuotientPoset q = quotient(random_preorder(n, 0.2, rng));
      auto all = enumerate_linearizations(q, 1000);
      EXPECT_EQ(all.size(), brute_force_extensions(q));
      std::set<std::vector<std::size_t>> distinct;
      for (const auto& l : all) {
        EXPECT_TRUE(extends(l, q));
        distinct.insert(l.order());
      }
      EXPECT_EQ(distinct.size(), all.size());
      EXPECT_TRUE(extends(linearize(q), q));
    }
}

TEST(Divisibility, Examples) {
  Preorder d = divisibility(6);
  EXPECT_TRUE(d.leq("2", "4"));
  EXPECT_FALSE(d.leq("4", "2"));
  for (int k = 1; k <= 6; ++k) {
    EXPECT_TRUE(d.leq("1", std::to_string(k)));
    EXPECT_TRUE(d.leq(std::to_string(k), std::to_string(k)));
  }
}

TEST(QLength, Examples) {
  EXPECT_EQ(q_length(12), 3u);
  EXPECT_EQ(q_length(1), 0u);
  for (std::uint64_t p : {2u, 3u, 5u, 97u, 7919u}) EXPECT_EQ(q_length(p), 1u);
  EXPECT_EQ(q_length(1024), 10u);
}

TEST(QLex, Examples) {
  Linearization l = q_lex_linearization(6);
  EXPECT_EQ(l.order(), (std::vector<std::size_t>{0, 1, 2, 4, 3, 5}));

  Linearization rev = q_lex_linearization(6, {{1, {5, 3, 2}}});
  EXPECT_TRUE(rev.precedes(4, 2));
  EXPECT_TRUE(rev.precedes(2, 1));
  EXPECT_TRUE(extends(rev, quotient(divisibility(6))));

  EXPECT_EQ(q_lex_linearization(1).size(), 1u);
  EXPECT_ERRC(q_lex_linearization(6, {{1, {4}}}), Errc::PreconditionViolated);
}

TEST(Inverter, EightAndSix) {
  InverterResult r = inverter_linearization(8, 6, 24);
  EXPECT_EQ(r.gcd, 2u);
  EXPECT_EQ(r.n_reduced, 4u);
  EXPECT_EQ(r.m_reduced, 3u);
  EXPECT_EQ(r.image[6 - 1], 24u);
  EXPECT_EQ(r.image[8 - 1], 8u);
  EXPECT_TRUE(r.order.precedes(8 - 1, 6 - 1));
  for (std::uint64_t a = 1; a <= 24; ++a)
    if (a % 3 != 0) {
      EXPECT_EQ(r.image[a - 1], a);
    }
  for (std::uint64_t a = 1; a <= 24; ++a)
    for (std::uint64_t b = a; b <= 24; b += a) EXPECT_LE(r.order.rank(a - 1), r.order.rank(b - 1));
  std::set<std::uint64_t> img(r.image.begin(), r.image.end());
  EXPECT_EQ(img.size(), r.image.size());
}

TEST(Inverter, RejectsBadInputs) {
  EXPECT_ERRC(inverter_linearization(4, 8, 24), Errc::PreconditionViolated);  // 4 | 8
  EXPECT_ERRC(inverter_linearization(6, 8, 24), Errc::PreconditionViolated);  // q(8) > q(6)
  EXPECT_ERRC(inverter_linearization(8, 6, 7), Errc::PreconditionViolated);   // out of range
}
