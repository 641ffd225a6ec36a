#pragma once

// Isomorphism tests, indecomposability and Krull-Schmidt decomposition at
// desk scale. Searches are exhaustive over coefficient vectors when
// p^dim <= exhaustive_limit and otherwise randomized with a reported outcome.

#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include "deltafilt/error.hpp"
#include "deltafilt/gfmat.hpp"
#include "deltafilt/homology.hpp"
#include "deltafilt/representation.hpp"

namespace deltafilt {

struct SearchOptions {
  std::uint64_t seed = 0x5EED'DE17A;
  std::size_t random_trials = 64;
  std::uint64_t exhaustive_limit = 1'000'000;
};

enum class Certainty { Certain, Probable };

enum class IsoVerdict { Isomorphic, NotIsomorphic, ProbablyNot };

struct IsoResult {
  IsoVerdict verdict = IsoVerdict::NotIsomorphic;
  std::size_t trials = 0;
  std::optional<Hom> witness;  // an isomorphism M -> N when found

  explicit operator bool() const noexcept { return verdict == IsoVerdict::Isomorphic; }
};

namespace detail {

/// p^d when it does not exceed `limit`.
inline std::optional<std::uint64_t> bounded_power(std::uint64_t p, std::size_t d, std::uint64_t limit) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < d; ++i) {
    if (r > limit / p) return std::nullopt;
    r *= p;
  }
  return r;
}

inline std::vector<Elem> random_coeffs(const Field& f, std::size_t d, Rng& rng) {
  std::uniform_int_distribution<Elem> dist(0, f.p() - 1);
  std::vector<Elem> c(d);
  for (auto& x : c) x = dist(rng);
  return c;
}

/// Calls visit(coeffs) for every vector in GF(p)^d until it returns true.
template <typename Visit>
bool enumerate_coeffs(const Field& f, std::size_t d, Visit&& visit) {
  std::vector<Elem> c(d, 0);
  for (;;) {
    if (visit(c)) return true;
    std::size_t i = 0;
    while (i < d && ++c[i] == f.p()) c[i++] = 0;
    if (i == d) return false;
  }
}

}  // namespace detail

inline IsoResult is_isomorphic(const Algebra& alg, const Representation& m, const Representation& n,
                               const SearchOptions& opts = {}) {
  IsoResult res;
  if (m.dims != n.dims) return res;
  if (m.is_zero()) {
    res.verdict = IsoVerdict::Isomorphic;
    res.witness = identity_hom(m);
    return res;
  }
  HomSpace hs = hom_basis(alg, m, n);
  if (hs.dim() == 0) return res;
  // Isomorphic modules have equal Hom dimensions against both of them.
  if (hom_dim(alg, m, m) != hs.dim() || hom_dim(alg, n, n) != hs.dim() || hom_dim(alg, n, m) != hs.dim()) {
    return res;
  }
  const Field& f = alg.field();
  auto found = [&](const Hom& h) {
    res.verdict = IsoVerdict::Isomorphic;
    res.witness = h;
    return res;
  };
  for (const auto& h : hs.basis) {
    ++res.trials;
    if (is_iso_hom(h)) return found(h);
  }
  Rng rng(opts.seed);
  for (std::size_t t = 0; t < opts.random_trials; ++t) {
    ++res.trials;
    Hom h = hs.element(detail::random_coeffs(f, hs.dim(), rng));
    if (is_iso_hom(h)) return found(h);
  }
  if (detail::bounded_power(f.p(), hs.dim(), opts.exhaustive_limit)) {
    std::optional<Hom> hit;
    detail::enumerate_coeffs(f, hs.dim(), [&](const std::vector<Elem>& c) {
      ++res.trials;
      Hom h = hs.element(c);
      if (!is_iso_hom(h)) return false;
      hit = std::move(h);
      return true;
    });
    if (hit) return found(*hit);
    res.verdict = IsoVerdict::NotIsomorphic;
    return res;
  }
  res.verdict = IsoVerdict::ProbablyNot;
  return res;
}

struct FittingSplit {
  Submodule kernel;  // ker φ^k
  Submodule image;   // im φ^k
};

/// M = ker φ^k ⊕ im φ^k with k = max vertex dimension; nullopt when one part is zero.
inline std::optional<FittingSplit> fitting_split(const Representation& m, const Hom& phi) {
  std::size_t k = 0;
  for (auto d : m.dims) k = std::max(k, d);
  Hom power;
  for (const auto& c : phi.comps) power.comps.push_back(mat_pow(c, k));
  FittingSplit s{kernel_submodule(power), image_submodule(power)};
  if (s.kernel.is_zero() || s.image.is_zero()) return std::nullopt;
  return s;
}

struct IndecomposableResult {
  bool indecomposable = true;
  Certainty certainty = Certainty::Certain;
  std::optional<FittingSplit> split;  // present when decomposable
  std::size_t trials = 0;
};

/// Indecomposable iff End(M) is local, i.e. every endomorphism is nilpotent
/// or invertible; any other endomorphism yields a Fitting splitting.
inline IndecomposableResult is_indecomposable(const Algebra& alg, const Representation& m,
                                              const SearchOptions& opts = {}) {
  if (m.is_zero()) throw Error(Errc::ZeroModule, "is_indecomposable of the zero module");
  IndecomposableResult res;
  HomSpace end = hom_basis(alg, m, m);
  if (end.dim() == 1) return res;
  const Field& f = alg.field();
  const Hom id = identity_hom(m);

  std::vector<Elem> shifts;
  if (f.p() <= 7) {
    for (Elem l = 0; l < f.p(); ++l) shifts.push_back(l);
  } else {
    shifts = {0, 1, f.p() - 1};
  }
  auto attempt = [&](const Hom& phi) {
    for (Elem l : shifts) {
      ++res.trials;
      auto s = fitting_split(m, l == 0 ? phi : phi - scaled(id, l));
      if (s) {
        res.indecomposable = false;
        res.split = std::move(s);
        return true;
      }
    }
    return false;
  };
  for (const auto& b : end.basis)
    if (attempt(b)) return res;
  Rng rng(opts.seed);
  for (std::size_t t = 0; t < opts.random_trials; ++t)
    if (attempt(end.element(detail::random_coeffs(f, end.dim(), rng)))) return res;

  if (detail::bounded_power(f.p(), end.dim(), opts.exhaustive_limit)) {
    detail::enumerate_coeffs(f, end.dim(), [&](const std::vector<Elem>& c) {
      ++res.trials;
      auto s = fitting_split(m, end.element(c));
      if (!s) return false;
      res.indecomposable = false;
      res.split = std::move(s);
      return true;
    });
    return res;
  }
  res.certainty = Certainty::Probable;
  return res;
}

struct Summand {
  Submodule sub;            // position inside the decomposed module
  Representation rep;       // the summand in its own coordinates
  Hom inclusion;            // rep -> module
};

struct SummandGroup {
  Representation rep;               // representative of the isomorphism class
  std::vector<std::size_t> members; // indices into Decomposition::summands
  std::size_t multiplicity() const noexcept { return members.size(); }
};

struct Decomposition {
  std::vector<Summand> summands;
  std::vector<SummandGroup> groups;
  Certainty certainty = Certainty::Certain;
};

/// Splits M into indecomposable summands by repeated Fitting decompositions,
/// then groups the summands by isomorphism class.
inline Decomposition decompose(const Algebra& alg, const Representation& m, const SearchOptions& opts = {}) {
  Decomposition out;
  if (m.is_zero()) return out;
  std::vector<SubRep> work{restrict_to(alg, m, full_sub(m))};
  while (!work.empty()) {
    SubRep cur = std::move(work.back());
    work.pop_back();
    IndecomposableResult r = is_indecomposable(alg, cur.rep, opts);
    if (r.certainty == Certainty::Probable) out.certainty = Certainty::Probable;
    if (r.indecomposable) {
      out.summands.push_back({image_submodule(cur.inclusion), cur.rep, cur.inclusion});
      continue;
    }
    // push image first so the kernel part is processed first
    for (const Submodule* part : {&r.split->image, &r.split->kernel}) {
      SubRep piece = restrict_to(alg, cur.rep, *part);
      work.push_back({piece.rep, compose(cur.inclusion, piece.inclusion)});
    }
  }
  for (std::size_t i = 0; i < out.summands.size(); ++i) {
    bool placed = false;
    for (auto& g : out.groups) {
      IsoResult iso = is_isomorphic(alg, g.rep, out.summands[i].rep, opts);
      if (iso.verdict == IsoVerdict::ProbablyNot) out.certainty = Certainty::Probable;
      if (iso) {
        g.members.push_back(i);
        placed = true;
        break;
      }
    }
    if (!placed) out.groups.push_back({out.summands[i].rep, {i}});
  }
  return out;
}

}  // namespace deltafilt
