#pragma once

// Extended filtrations with cardinal multiplicities |I_ω|, finite or ℵ_k,
// sorted and merged over the Hom/Ext pattern of a validated system.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "deltafilt/error.hpp"
#include "deltafilt/hsys.hpp"

namespace deltafilt {

/// Largest aleph index accepted by default.
inline constexpr std::uint32_t kDefaultMaxAleph = 16;

class Cardinal {
 public:
  constexpr Cardinal() = default;

  static constexpr Cardinal finite(std::uint64_t n) { return Cardinal(false, n); }
  static Cardinal aleph(std::uint64_t k, std::uint32_t max_aleph = kDefaultMaxAleph) {
    if (k > max_aleph) {
      throw Error(Errc::PreconditionViolated,
                  "aleph_" + std::to_string(k) + " exceeds the configured bound " + std::to_string(max_aleph));
    }
    return Cardinal(true, k);
  }

  constexpr bool is_finite() const noexcept { return !infinite_; }
  constexpr bool is_zero() const noexcept { return !infinite_ && value_ == 0; }
  /// The count for finite cardinals, the aleph index otherwise.
  constexpr std::uint64_t value() const noexcept { return value_; }

  std::string str() const { return infinite_ ? "aleph_" + std::to_string(value_) : std::to_string(value_); }

  friend constexpr bool operator==(const Cardinal&, const Cardinal&) = default;
  friend constexpr std::strong_ordering operator<=>(const Cardinal& a, const Cardinal& b) {
    if (a.infinite_ != b.infinite_) return a.infinite_ ? std::strong_ordering::greater : std::strong_ordering::less;
    return a.value_ <=> b.value_;
  }

 private:
  constexpr Cardinal(bool inf, std::uint64_t v) : infinite_(inf), value_(v) {}

  bool infinite_ = false;
  std::uint64_t value_ = 0;
};

constexpr Cardinal card_add(const Cardinal& a, const Cardinal& b) {
  if (a.is_finite() && b.is_finite()) return Cardinal::finite(a.value() + b.value());
  return std::max(a, b);
}

struct SymbolicStep {
  std::size_t omega = 0;
  Cardinal card;

  friend bool operator==(const SymbolicStep&, const SymbolicStep&) = default;
};

struct SymbolicFiltration {
  std::vector<SymbolicStep> steps;  // bottom step first
};

struct SymbolicLayer {
  std::size_t cls = 0;
  Cardinal card;
  std::vector<SymbolicStep> members;  // aggregated per ω

  friend bool operator==(const SymbolicLayer&, const SymbolicLayer&) = default;
};

inline void require_symbolic(const ExtPattern& pat, const SymbolicFiltration& f) {
  for (const auto& st : f.steps) {
    if (st.omega >= pat.omega.size()) throw Error(Errc::UnknownLabel, "omega index out of range");
    if (st.card.is_zero()) throw Error(Errc::PreconditionViolated, "multiplicities must be nonzero");
  }
}

/// Bubble passes of adjacent swaps; every swap is licensed by
/// Ext^1(Δ_upper, Δ_lower) = 0 in the pattern.
inline SymbolicFiltration symb_sort(const ExtPattern& pat, SymbolicFiltration f, std::size_t* swaps = nullptr) {
  require_symbolic(pat, f);
  std::size_t count = 0;
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t j = 1; j < f.steps.size(); ++j) {
      const std::size_t lower = f.steps[j - 1].omega, upper = f.steps[j].omega;
      if (!(pat.rank_of(lower) < pat.rank_of(upper))) continue;
      if (pat.ext_nonzero(upper, lower)) {
        throw Error(Errc::IllegalSwap,
                    "Ext^1(Delta_" + pat.omega[upper] + ", Delta_" + pat.omega[lower] + ") is nonzero");
      }
      std::swap(f.steps[j - 1], f.steps[j]);
      ++count;
      changed = true;
    }
  }
  if (swaps) *swaps = count;
  return f;
}

inline std::vector<SymbolicLayer> symb_merge(const ExtPattern& pat, const SymbolicFiltration& f) {
  require_symbolic(pat, f);
  for (std::size_t j = 1; j < f.steps.size(); ++j) {
    if (pat.rank_of(f.steps[j - 1].omega) < pat.rank_of(f.steps[j].omega)) {
      throw Error(Errc::NotSorted, "symbolic steps are not descending at step " + std::to_string(j));
    }
  }
  std::vector<SymbolicLayer> layers;
  for (const auto& st : f.steps) {
    const std::size_t cls = pat.quotient.projection[st.omega];
    if (layers.empty() || layers.back().cls != cls) layers.push_back({cls, Cardinal::finite(0), {}});
    SymbolicLayer& l = layers.back();
    l.card = card_add(l.card, st.card);
    auto it = std::find_if(l.members.begin(), l.members.end(), [&](const SymbolicStep& m) { return m.omega == st.omega; });
    if (it == l.members.end()) {
      l.members.push_back(st);
    } else {
      it->card = card_add(it->card, st.card);
    }
  }
  for (auto& l : layers)
    std::sort(l.members.begin(), l.members.end(), [](const auto& a, const auto& b) { return a.omega < b.omega; });
  return layers;
}

/// ℓ_ω as a cardinal sum, indexed by ω.
inline std::vector<Cardinal> symb_ell(const ExtPattern& pat, const SymbolicFiltration& f) {
  std::vector<Cardinal> ell(pat.omega.size());
  for (const auto& st : f.steps) ell.at(st.omega) = card_add(ell.at(st.omega), st.card);
  return ell;
}

inline std::vector<Cardinal> symb_ell(const ExtPattern& pat, const std::vector<SymbolicLayer>& layers) {
  std::vector<Cardinal> ell(pat.omega.size());
  for (const auto& l : layers)
    for (const auto& m : l.members) ell.at(m.omega) = card_add(ell.at(m.omega), m.card);
  return ell;
}

/// Class sequence of the steps, bottom first.
inline std::vector<std::size_t> symb_classes(const ExtPattern& pat, const SymbolicFiltration& f) {
  std::vector<std::size_t> out;
  for (const auto& st : f.steps) out.push_back(pat.quotient.projection[st.omega]);
  return out;
}

}  // namespace deltafilt
