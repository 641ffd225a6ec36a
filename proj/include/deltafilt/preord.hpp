#pragma once

// Finite preorders, their partial-order quotients and linear extensions,
// plus the divisibility orders on {1..n} and their lexicographic extensions.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "deltafilt/error.hpp"

namespace deltafilt {

/// Square boolean relation stored flat.
class Relation {
 public:
  Relation() = default;
  explicit Relation(std::size_t n) : n_(n), bits_(n * n, 0) {}

  std::size_t size() const noexcept { return n_; }
  bool operator()(std::size_t a, std::size_t b) const { return bits_[a * n_ + b] != 0; }
  void set(std::size_t a, std::size_t b, bool v = true) { bits_[a * n_ + b] = v ? 1 : 0; }

  friend bool operator==(const Relation&, const Relation&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint8_t> bits_;
};

/// Reflexive, transitive relation on a finite list of distinct labels.
class Preorder {
 public:
  Preorder() = default;

  /// Validates reflexivity and transitivity of an explicit relation.
  Preorder(std::vector<std::string> carrier, Relation leq)
      : carrier_(std::move(carrier)), leq_(std::move(leq)) {
    if (leq_.size() != carrier_.size()) {
      throw Error(Errc::PreconditionViolated, "relation size differs from carrier size");
    }
    check_distinct();
    for (std::size_t a = 0; a < size(); ++a) {
      if (!leq_(a, a)) throw Error(Errc::PreconditionViolated, "relation is not reflexive at " + carrier_[a]);
      for (std::size_t b = 0; b < size(); ++b) {
        if (!leq_(a, b)) continue;
        for (std::size_t c = 0; c < size(); ++c) {
          if (leq_(b, c) && !leq_(a, c)) {
            throw Error(Errc::PreconditionViolated, "relation is not transitive: " + carrier_[a] + "<=" +
                                                        carrier_[b] + "<=" + carrier_[c]);
          }
        }
      }
    }
  }

  std::size_t size() const noexcept { return carrier_.size(); }
  const std::vector<std::string>& carrier() const noexcept { return carrier_; }
  const Relation& relation() const noexcept { return leq_; }
  bool leq(std::size_t a, std::size_t b) const { return leq_(a, b); }

  std::size_t index_of(const std::string& label) const {
    auto it = std::find(carrier_.begin(), carrier_.end(), label);
    if (it == carrier_.end()) throw Error(Errc::UnknownLabel, "'" + label + "' is not in the carrier");
    return static_cast<std::size_t>(it - carrier_.begin());
  }
  bool leq(const std::string& a, const std::string& b) const { return leq_(index_of(a), index_of(b)); }

  /// Non-reflexive pairs of the relation, in carrier order.
  std::vector<std::pair<std::string, std::string>> pairs() const {
    std::vector<std::pair<std::string, std::string>> out;
    for (std::size_t a = 0; a < size(); ++a)
      for (std::size_t b = 0; b < size(); ++b)
        if (a != b && leq_(a, b)) out.emplace_back(carrier_[a], carrier_[b]);
    return out;
  }

 private:
  void check_distinct() const {
    std::vector<std::string> s = carrier_;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
      throw Error(Errc::PreconditionViolated, "carrier labels are not distinct");
    }
  }

  std::vector<std::string> carrier_;
  Relation leq_;
};

/// Smallest reflexive-transitive relation containing `pairs` (Warshall closure).
inline Preorder close_transitive(std::vector<std::string> carrier,
                                 const std::vector<std::pair<std::string, std::string>>& pairs) {
  const std::size_t n = carrier.size();
  Relation r(n);
  auto find = [&](const std::string& l) {
    auto it = std::find(carrier.begin(), carrier.end(), l);
    if (it == carrier.end()) throw Error(Errc::UnknownLabel, "'" + l + "' is not in the carrier");
    return static_cast<std::size_t>(it - carrier.begin());
  };
  for (std::size_t a = 0; a < n; ++a) r.set(a, a);
  for (const auto& [a, b] : pairs) r.set(find(a), find(b));
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (r(i, k))
        for (std::size_t j = 0; j < n; ++j)
          if (r(k, j)) r.set(i, j);
  return Preorder(std::move(carrier), std::move(r));
}

/// The partial order on classes of mutually related elements.
struct QuotientPoset {
  std::vector<std::vector<std::size_t>> classes;  // carrier indices, ascending
  Relation leq;                                   // on class indices
  std::vector<std::size_t> projection;            // carrier index -> class index

  std::size_t size() const noexcept { return classes.size(); }
  bool less(std::size_t u, std::size_t v) const { return u != v && leq(u, v); }
  bool comparable(std::size_t u, std::size_t v) const { return leq(u, v) || leq(v, u); }
};

/// Classes are numbered by their smallest carrier index.
inline QuotientPoset quotient(const Preorder& p) {
  const std::size_t n = p.size();
  QuotientPoset q;
  q.projection.assign(n, SIZE_MAX);
  for (std::size_t a = 0; a < n; ++a) {
    if (q.projection[a] != SIZE_MAX) continue;
    const std::size_t cls = q.classes.size();
    q.classes.emplace_back();
    for (std::size_t b = a; b < n; ++b) {
      if (p.leq(a, b) && p.leq(b, a)) {
        q.projection[b] = cls;
        q.classes.back().push_back(b);
      }
    }
  }
  const std::size_t m = q.classes.size();
  q.leq = Relation(m);
  for (std::size_t u = 0; u < m; ++u) {
    for (std::size_t v = 0; v < m; ++v) {
      // well-defined: every representative pair must agree
      const bool rep = p.leq(q.classes[u].front(), q.classes[v].front());
      for (auto a : q.classes[u])
        for (auto b : q.classes[v])
          if (p.leq(a, b) != rep) {
            throw Error(Errc::PreconditionViolated, "induced class relation depends on representatives");
          }
      q.leq.set(u, v, rep);
    }
  }
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = 0; v < m; ++v)
      if (u != v && q.leq(u, v) && q.leq(v, u)) {
        throw Error(Errc::PreconditionViolated, "quotient relation is not antisymmetric");
      }
  return q;
}

/// Total order on the classes of a QuotientPoset; order[r] is the class with rank r.
class Linearization {
 public:
  Linearization() = default;
  explicit Linearization(std::vector<std::size_t> order) : order_(std::move(order)), rank_(order_.size()) {
    for (std::size_t r = 0; r < order_.size(); ++r) {
      if (order_[r] >= order_.size()) throw Error(Errc::PreconditionViolated, "not a permutation");
      rank_[order_[r]] = r;
    }
    std::vector<std::size_t> s = order_;
    std::sort(s.begin(), s.end());
    for (std::size_t i = 0; i < s.size(); ++i)
      if (s[i] != i) throw Error(Errc::PreconditionViolated, "not a permutation");
  }

  const std::vector<std::size_t>& order() const noexcept { return order_; }
  std::size_t rank(std::size_t cls) const { return rank_[cls]; }
  std::size_t size() const noexcept { return order_.size(); }
  bool precedes(std::size_t u, std::size_t v) const { return rank_[u] < rank_[v]; }

  friend bool operator==(const Linearization& a, const Linearization& b) { return a.order_ == b.order_; }

 private:
  std::vector<std::size_t> order_;
  std::vector<std::size_t> rank_;
};

inline bool extends(const Linearization& l, const QuotientPoset& q) {
  if (l.size() != q.size()) return false;
  for (std::size_t u = 0; u < q.size(); ++u)
    for (std::size_t v = 0; v < q.size(); ++v)
      if (q.leq(u, v) && l.rank(u) > l.rank(v)) return false;
  return true;
}

/// Kahn's algorithm, always removing the minimal class with the smallest
/// tiebreak key. Default key: the class index (i.e. carrier label order).
inline Linearization linearize(const QuotientPoset& q,
                               const std::function<std::size_t(std::size_t)>& tiebreak = {}) {
  const std::size_t m = q.size();
  auto key = [&](std::size_t c) { return tiebreak ? tiebreak(c) : c; };
  std::vector<std::size_t> indeg(m, 0);
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = 0; v < m; ++v)
      if (q.less(u, v)) ++indeg[v];
  std::vector<bool> used(m, false);
  std::vector<std::size_t> order;
  for (std::size_t step = 0; step < m; ++step) {
    std::optional<std::size_t> best;
    for (std::size_t c = 0; c < m; ++c)
      if (!used[c] && indeg[c] == 0 && (!best || key(c) < key(*best))) best = c;
    if (!best) throw Error(Errc::CycleDetected, "quotient relation has a cycle");
    used[*best] = true;
    order.push_back(*best);
    for (std::size_t v = 0; v < m; ++v)
      if (q.less(*best, v)) --indeg[v];
  }
  return Linearization(std::move(order));
}

/// All linear extensions, in lexicographic order of class sequences.
inline std::vector<Linearization> enumerate_linearizations(const QuotientPoset& q, std::size_t cap) {
  const std::size_t m = q.size();
  std::vector<Linearization> out;
  std::vector<std::size_t> indeg(m, 0);
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = 0; v < m; ++v)
      if (q.less(u, v)) ++indeg[v];
  std::vector<bool> used(m, false);
  std::vector<std::size_t> current;
  std::function<void()> rec = [&]() {
    if (current.size() == m) {
      if (out.size() == cap) {
        throw Error(Errc::CapExceeded, "more than " + std::to_string(cap) + " linear extensions");
      }
      out.emplace_back(current);
      return;
    }
    for (std::size_t c = 0; c < m; ++c) {
      if (used[c] || indeg[c] != 0) continue;
      used[c] = true;
      current.push_back(c);
      for (std::size_t v = 0; v < m; ++v)
        if (q.less(c, v)) --indeg[v];
      rec();
      for (std::size_t v = 0; v < m; ++v)
        if (q.less(c, v)) ++indeg[v];
      current.pop_back();
      used[c] = false;
    }
  };
  rec();
  return out;
}

// --- the divisibility examples on {1..n} -------------------------------------

/// Divisibility on {1..n}; labels are the decimal numerals.
inline Preorder divisibility(std::uint64_t n) {
  if (n < 1) throw Error(Errc::PreconditionViolated, "divisibility needs n >= 1");
  std::vector<std::string> carrier;
  for (std::uint64_t k = 1; k <= n; ++k) carrier.push_back(std::to_string(k));
  Relation r(n);
  for (std::uint64_t a = 1; a <= n; ++a)
    for (std::uint64_t b = a; b <= n; b += a) r.set(a - 1, b - 1);
  return Preorder(std::move(carrier), std::move(r));
}

/// Number of prime factors counted with multiplicity; q_length(1) = 0.
inline std::uint32_t q_length(std::uint64_t a) {
  if (a < 1) throw Error(Errc::PreconditionViolated, "q_length needs a >= 1");
  std::uint32_t count = 0;
  for (std::uint64_t d = 2; d * d <= a; ++d) {
    while (a % d == 0) {
      a /= d;
      ++count;
    }
  }
  if (a > 1) ++count;
  return count;
}

/// Per-level total orders: level -> the numbers of that level listed from
/// smallest to largest. Missing levels fall back to numeric order.
using LevelOrders = std::map<std::uint32_t, std::vector<std::uint64_t>>;

namespace detail {

/// Sort key (level, position within level) under explicit level orders.
inline std::pair<std::uint32_t, std::uint64_t> q_lex_key(std::uint64_t a, const LevelOrders& levels) {
  const std::uint32_t q = q_length(a);
  auto it = levels.find(q);
  if (it != levels.end()) {
    auto pos = std::find(it->second.begin(), it->second.end(), a);
    if (pos == it->second.end()) {
      throw Error(Errc::PreconditionViolated,
                  "level order for q=" + std::to_string(q) + " does not list " + std::to_string(a));
    }
    return {q, static_cast<std::uint64_t>(pos - it->second.begin())};
  }
  return {q, a};
}

inline void check_level_orders(const LevelOrders& levels) {
  for (const auto& [q, seq] : levels) {
    std::vector<std::uint64_t> s = seq;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
      throw Error(Errc::PreconditionViolated, "level order for q=" + std::to_string(q) + " repeats an entry");
    }
    for (auto a : seq)
      if (a < 1 || q_length(a) != q) {
        throw Error(Errc::PreconditionViolated,
                    std::to_string(a) + " does not have q-length " + std::to_string(q));
      }
  }
}

inline void require_extends_divisibility(const Linearization& l, std::uint64_t n) {
  for (std::uint64_t a = 1; a <= n; ++a)
    for (std::uint64_t b = 2 * a; b <= n; b += a)
      if (l.rank(a - 1) > l.rank(b - 1)) {
        throw Error(Errc::PreconditionViolated, "order does not extend divisibility at " + std::to_string(a) +
                                                    "|" + std::to_string(b));
      }
}

}  // namespace detail

/// Lexicographic order on {1..n}: q_length first, then the level order.
/// The class index of a is a - 1.
inline Linearization q_lex_linearization(std::uint64_t n, const LevelOrders& levels = {}) {
  detail::check_level_orders(levels);
  std::vector<std::uint64_t> nums(n);
  std::iota(nums.begin(), nums.end(), 1);
  std::stable_sort(nums.begin(), nums.end(), [&](std::uint64_t a, std::uint64_t b) {
    return detail::q_lex_key(a, levels) < detail::q_lex_key(b, levels);
  });
  std::vector<std::size_t> order;
  for (auto a : nums) order.push_back(a - 1);
  Linearization l(std::move(order));
  detail::require_extends_divisibility(l, n);
  return l;
}

/// Data of the order pulled back along a ↦ (a if m' ∤ a, else n'·a).
struct InverterResult {
  std::uint64_t gcd = 0;
  std::uint64_t n_reduced = 0;  // n' = n / gcd
  std::uint64_t m_reduced = 0;  // m' = m / gcd
  std::vector<std::uint64_t> image;  // image[a-1] = i(a)
  Linearization order;
};

inline std::uint64_t inverter_map(std::uint64_t a, std::uint64_t n_reduced, std::uint64_t m_reduced) {
  return a % m_reduced == 0 ? n_reduced * a : a;
}

/// Total order on {1..bound} in which n precedes m although q(m) < q(n).
inline InverterResult inverter_linearization(std::uint64_t n, std::uint64_t m, std::uint64_t bound,
                                             const LevelOrders& levels = {}) {
  if (n < 1 || m < 1 || n > bound || m > bound) {
    throw Error(Errc::PreconditionViolated, "n and m must lie in {1..bound}");
  }
  if (m % n == 0 || n % m == 0) throw Error(Errc::PreconditionViolated, "n and m must not divide each other");
  if (q_length(m) >= q_length(n)) throw Error(Errc::PreconditionViolated, "requires q(m) < q(n)");
  detail::check_level_orders(levels);

  InverterResult res;
  res.gcd = std::gcd(n, m);
  res.n_reduced = n / res.gcd;
  res.m_reduced = m / res.gcd;
  for (std::uint64_t a = 1; a <= bound; ++a) res.image.push_back(inverter_map(a, res.n_reduced, res.m_reduced));

  std::vector<std::uint64_t> sorted = res.image;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(Errc::PreconditionViolated, "pull-back map is not injective");
  }

  std::vector<std::uint64_t> nums(bound);
  std::iota(nums.begin(), nums.end(), 1);
  std::stable_sort(nums.begin(), nums.end(), [&](std::uint64_t a, std::uint64_t b) {
    const std::uint64_t ia = res.image[a - 1], ib = res.image[b - 1];
    const auto ka = levels.count(q_length(ia)) ? detail::q_lex_key(ia, levels) : std::pair{q_length(ia), ia};
    const auto kb = levels.count(q_length(ib)) ? detail::q_lex_key(ib, levels) : std::pair{q_length(ib), ib};
    return ka < kb;
  });
  std::vector<std::size_t> order;
  for (auto a : nums) order.push_back(a - 1);
  res.order = Linearization(std::move(order));
  detail::require_extends_divisibility(res.order, bound);
  if (!res.order.precedes(n - 1, m - 1)) {
    throw Error(Errc::PreconditionViolated, "constructed order does not place n before m");
  }
  return res;
}

}  // namespace deltafilt
