#pragma once

// Δ-filtrations of concrete modules: validation with factor identification,
// slim refinement, Ext-driven sorting, ordered filtrations, uniqueness,
// multiplicities ℓ_ω and splitting along direct summands.

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "deltafilt/decompose.hpp"
#include "deltafilt/error.hpp"
#include "deltafilt/homology.hpp"
#include "deltafilt/hsys.hpp"
#include "deltafilt/representation.hpp"

namespace deltafilt {

struct FactorEntry {
  std::size_t omega = 0;
  std::size_t mult = 0;

  friend bool operator==(const FactorEntry&, const FactorEntry&) = default;
};

/// Δ_ω multiplicities of one step, sorted by ω index.
using FactorList = std::vector<FactorEntry>;

/// ℓ_ω indexed by ω.
using MultiplicityMap = std::vector<std::size_t>;

/// How one step H_j / H_{j-1} was identified as a sum of Δ's.
struct StepWitness {
  SubRep step;                                          // H_j with its inclusion into M
  QuotientRep quotient;                                 // H_j / H_{j-1}
  std::vector<std::pair<std::size_t, Submodule>> summands;  // (ω, summand of the quotient)
};

struct Filtration {
  Representation module;
  std::vector<Submodule> chain;      // 0 = H_0 ⊊ H_1 ⊊ ... ⊊ H_t = M
  std::vector<FactorList> factors;   // factors[j-1] describes H_j / H_{j-1}
  std::vector<StepWitness> witnesses;  // empty unless freshly validated

  std::size_t steps() const noexcept { return factors.size(); }
  bool is_slim() const {
    return std::all_of(factors.begin(), factors.end(), [](const FactorList& f) { return f.size() == 1; });
  }
};

struct Layer {
  std::size_t cls = 0;   // quotient class of every ω in this layer
  Submodule top;         // W_{u_s}
  FactorList factors;
};

/// Layers bottom-up: layers[0] = W_{u_a} carries the largest class and
/// layers.back().top is the whole module.
struct OrderedFiltration {
  Representation module;
  std::vector<Layer> layers;

  std::vector<std::size_t> classes() const {
    std::vector<std::size_t> c;
    for (const auto& l : layers) c.push_back(l.cls);
    return c;
  }
};

namespace detail {

inline bool same_module(const Representation& a, const Representation& b) {
  return a.dims == b.dims && a.maps == b.maps && a.field == b.field;
}

inline FactorList aggregate(const std::vector<std::size_t>& omegas) {
  FactorList out;
  std::vector<std::size_t> sorted = omegas;
  std::sort(sorted.begin(), sorted.end());
  for (auto w : sorted) {
    if (!out.empty() && out.back().omega == w) {
      ++out.back().mult;
    } else {
      out.push_back({w, 1});
    }
  }
  return out;
}

inline std::string dims_str(const std::vector<std::size_t>& d) {
  std::string s = "(";
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
  return s + ")";
}

/// Submodule of M lying over a submodule of the step quotient.
inline Submodule lift(const Algebra& alg, const StepWitness& w, const Submodule& in_quotient) {
  return push_forward(w.step.inclusion, preimage(alg, w.step.rep, w.quotient.projection, in_quotient));
}

}  // namespace detail

/// Decomposes H / H_prev and matches every summand with some Δ_ω.
inline std::pair<StepWitness, FactorList> identify_step(const HomologicalSystem& s, const Representation& m,
                                                        const Submodule& lower, const Submodule& upper) {
  const Algebra& alg = s.algebra();
  StepWitness w;
  w.step = restrict_to(alg, m, upper);
  w.quotient = quotient_rep(alg, w.step.rep, to_sub_coords(upper, lower));
  Decomposition d = decompose(alg, w.quotient.rep, s.options());
  std::vector<std::size_t> omegas;
  for (const auto& g : d.groups) {
    std::optional<std::size_t> match;
    for (std::size_t o = 0; o < s.size() && !match; ++o) {
      if (s.delta(o).dims != g.rep.dims) continue;
      if (is_isomorphic(alg, g.rep, s.delta(o), s.options())) match = o;
    }
    if (!match) {
      throw Error(Errc::FactorNotInDelta, "a factor summand with dimension vector " + detail::dims_str(g.rep.dims) +
                                              " is not isomorphic to any Delta");
    }
    for (auto idx : g.members) {
      w.summands.emplace_back(*match, d.summands[idx].sub);
      omegas.push_back(*match);
    }
  }
  return {std::move(w), detail::aggregate(omegas)};
}

/// Certifies nesting, arrow-closure and the factor identification of every step.
inline Filtration validate_filtration(const HomologicalSystem& s, const Representation& m,
                                      const std::vector<Submodule>& chain,
                                      const std::optional<std::vector<FactorList>>& declared = std::nullopt) {
  s.require_valid();
  const Algebra& alg = s.algebra();
  require_valid(alg, m);
  if (chain.empty() || !chain.front().is_zero() || !is_full(chain.back(), m)) {
    throw Error(Errc::NestingViolation, "a chain must run from the zero submodule to the whole module");
  }
  Filtration f;
  f.module = m;
  f.chain = chain;
  for (const auto& sub : chain) require_submodule(alg, m, sub);
  for (std::size_t j = 1; j < chain.size(); ++j) {
    if (!contained(chain[j - 1], chain[j]) || chain[j - 1].total_dim() == chain[j].total_dim()) {
      throw Error(Errc::NestingViolation, "step " + std::to_string(j) + " is not a strict inclusion");
    }
    auto [w, factors] = identify_step(s, m, chain[j - 1], chain[j]);
    f.witnesses.push_back(std::move(w));
    f.factors.push_back(std::move(factors));
  }
  if (declared && *declared != f.factors) {
    throw Error(Errc::FactorNotInDelta, "declared factors differ from the computed identification");
  }
  return f;
}

inline Filtration validate_filtration(const HomologicalSystem& s, const Filtration& f) {
  return validate_filtration(s, f.module, f.chain);
}

/// The chain 0 ⊆ P_1 ⊆ P_1+P_2 ⊆ ... of cumulative sums, dropping repeats.
inline std::vector<Submodule> cumulative_chain(const Representation& m, const std::vector<Submodule>& pieces) {
  std::vector<Submodule> chain{zero_sub(m)};
  for (const auto& p : pieces) {
    Submodule next = sub_sum(chain.back(), p);
    if (next.total_dim() != chain.back().total_dim()) chain.push_back(std::move(next));
  }
  return chain;
}

inline MultiplicityMap ell(const HomologicalSystem& s, const std::vector<FactorList>& factors) {
  MultiplicityMap m(s.size(), 0);
  for (const auto& fl : factors)
    for (const auto& e : fl) m[e.omega] += e.mult;
  return m;
}

inline MultiplicityMap ell(const HomologicalSystem& s, const Filtration& f) { return ell(s, f.factors); }

inline MultiplicityMap ell(const HomologicalSystem& s, const OrderedFiltration& w) {
  MultiplicityMap m(s.size(), 0);
  for (const auto& l : w.layers)
    for (const auto& e : l.factors) m[e.omega] += e.mult;
  return m;
}

/// Splits every multi-ω step along the stored decomposition of its quotient:
/// ω groups with larger linearization rank go lower.
inline Filtration refine_to_slim(const HomologicalSystem& s, const Filtration& input) {
  const Filtration f = input.witnesses.size() == input.steps() ? input : validate_filtration(s, input);
  Filtration out;
  out.module = f.module;
  out.chain.push_back(f.chain.front());
  for (std::size_t j = 0; j < f.steps(); ++j) {
    if (f.factors[j].size() == 1) {
      out.chain.push_back(f.chain[j + 1]);
      out.factors.push_back(f.factors[j]);
      continue;
    }
    FactorList groups = f.factors[j];
    std::stable_sort(groups.begin(), groups.end(), [&](const FactorEntry& a, const FactorEntry& b) {
      return s.rank_of(a.omega) > s.rank_of(b.omega);
    });
    const StepWitness& w = f.witnesses[j];
    Submodule partial = zero_sub(w.quotient.rep);
    for (std::size_t g = 0; g < groups.size(); ++g) {
      for (const auto& [omega, sub] : w.summands)
        if (omega == groups[g].omega) partial = sub_sum(partial, sub);
      out.chain.push_back(g + 1 == groups.size() ? f.chain[j + 1] : detail::lift(s.algebra(), w, partial));
      out.factors.push_back({groups[g]});
    }
  }
  return out;
}

/// h(F) = classes of the slim factors from the bottom step up.
inline std::vector<std::size_t> order_vector(const HomologicalSystem& s, const Filtration& f) {
  if (!f.is_slim()) throw Error(Errc::PreconditionViolated, "order_vector needs a slim filtration");
  std::vector<std::size_t> h;
  for (const auto& fl : f.factors) h.push_back(s.class_of(fl.front().omega));
  return h;
}

struct SortResult {
  Filtration filtration;
  std::size_t swaps = 0;
};

/// Called after every swap with the current filtration and the lower step index.
using SwapObserver = std::function<void(const Filtration&, std::size_t)>;

/// Adjacent-swap passes until the order vector is descending in the
/// linearization. Each swap replaces H_j by the preimage of a complement of
/// H_j/H_{j-1} inside H_{j+1}/H_{j-1}.
inline SortResult sort_slim(const HomologicalSystem& s, const Filtration& input, const SwapObserver& observe = {}) {
  s.require_valid();
  if (!input.is_slim()) throw Error(Errc::PreconditionViolated, "sort_slim needs a slim filtration");
  const Algebra& alg = s.algebra();
  SortResult res{input, 0};
  Filtration& f = res.filtration;
  f.witnesses.clear();
  const std::size_t t = f.steps();
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t j = 1; j < t; ++j) {
      const std::size_t lower = f.factors[j - 1].front().omega;
      const std::size_t upper = f.factors[j].front().omega;
      if (!(s.rank_of(lower) < s.rank_of(upper))) continue;
      if (s.report().ext_dims[upper][lower] != 0) {
        throw Error(Errc::SplitFailed, "Ext^1(Delta_" + s.omega()[upper] + ", Delta_" + s.omega()[lower] +
                                           ") is nonzero although the classes are out of order");
      }
      SubRep top = restrict_to(alg, f.module, f.chain[j + 1]);
      QuotientRep q = quotient_rep(alg, top.rep, to_sub_coords(f.chain[j + 1], f.chain[j - 1]));
      Submodule middle = push_forward(q.projection, to_sub_coords(f.chain[j + 1], f.chain[j]));
      SplitRetraction split;
      try {
        split = split_retraction(alg, q.rep, middle);
      } catch (const Error& e) {
        throw Error(Errc::SplitFailed, e.what());
      }
      f.chain[j] = push_forward(top.inclusion, preimage(alg, top.rep, q.projection, split.complement));
      std::swap(f.factors[j - 1], f.factors[j]);
      ++res.swaps;
      changed = true;
      if (observe) observe(f, j);
    }
  }
  return res;
}

/// Coalesces adjacent steps of equal class into the layers of an ordered filtration.
inline OrderedFiltration merge_to_ordered(const HomologicalSystem& s, const Filtration& f) {
  if (!f.is_slim()) throw Error(Errc::PreconditionViolated, "merge_to_ordered needs a slim filtration");
  for (std::size_t j = 1; j < f.steps(); ++j) {
    if (s.rank_of(f.factors[j - 1].front().omega) < s.rank_of(f.factors[j].front().omega)) {
      throw Error(Errc::NotSorted, "order vector is not descending at step " + std::to_string(j));
    }
  }
  OrderedFiltration w;
  w.module = f.module;
  std::vector<std::size_t> omegas;
  for (std::size_t j = 0; j < f.steps(); ++j) {
    const std::size_t cls = s.class_of(f.factors[j].front().omega);
    for (const auto& e : f.factors[j])
      for (std::size_t k = 0; k < e.mult; ++k) omegas.push_back(e.omega);
    const bool last_of_class = j + 1 == f.steps() || s.class_of(f.factors[j + 1].front().omega) != cls;
    if (last_of_class) {
      w.layers.push_back({cls, f.chain[j + 1], detail::aggregate(omegas)});
      omegas.clear();
    }
  }
  return w;
}

/// refine -> sort -> merge.
inline OrderedFiltration ordered_filtration(const HomologicalSystem& s, const Filtration& f) {
  return merge_to_ordered(s, sort_slim(s, refine_to_slim(s, f)).filtration);
}

/// Checks an ordered filtration: strict nesting, strictly decreasing class
/// ranks going up, and every layer a sum of Δ's of its class.
inline void validate_ordered(const HomologicalSystem& s, const OrderedFiltration& w) {
  if (w.layers.empty()) {
    if (!w.module.is_zero()) throw Error(Errc::NestingViolation, "nonzero module with no layers");
    return;
  }
  std::vector<Submodule> chain{zero_sub(w.module)};
  for (const auto& l : w.layers) chain.push_back(l.top);
  Filtration f = validate_filtration(s, w.module, chain);
  for (std::size_t k = 0; k < w.layers.size(); ++k) {
    if (f.factors[k] != w.layers[k].factors) {
      throw Error(Errc::FactorNotInDelta, "layer " + std::to_string(k) + " factors differ from its identification");
    }
    for (const auto& e : f.factors[k])
      if (s.class_of(e.omega) != w.layers[k].cls) {
        throw Error(Errc::NotSorted, "layer " + std::to_string(k) + " mixes classes");
      }
    if (k > 0 && !(s.linearization().rank(w.layers[k].cls) < s.linearization().rank(w.layers[k - 1].cls))) {
      throw Error(Errc::NotSorted, "layer classes do not strictly decrease going up");
    }
  }
}

inline bool same_chain(const OrderedFiltration& a, const OrderedFiltration& b) {
  if (a.layers.size() != b.layers.size()) return false;
  for (std::size_t k = 0; k < a.layers.size(); ++k) {
    if (a.layers[k].cls != b.layers[k].cls || !(a.layers[k].top == b.layers[k].top)) return false;
  }
  return true;
}

struct UniquenessVerdict {
  OrderedFiltration first;
  OrderedFiltration second;
  bool same_classes = false;
  bool same_subspaces = false;
  bool same_ell = false;

  bool holds() const { return same_classes && same_subspaces && same_ell; }
};

inline UniquenessVerdict check_uniqueness(const HomologicalSystem& s, const Filtration& f1, const Filtration& f2) {
  if (!detail::same_module(f1.module, f2.module)) {
    throw Error(Errc::ModuleMismatch, "the two filtrations are of different modules");
  }
  UniquenessVerdict v{ordered_filtration(s, f1), ordered_filtration(s, f2)};
  v.same_classes = v.first.classes() == v.second.classes();
  v.same_subspaces = v.first.layers.size() == v.second.layers.size();
  for (std::size_t k = 0; v.same_subspaces && k < v.first.layers.size(); ++k)
    v.same_subspaces = v.first.layers[k].top == v.second.layers[k].top;
  v.same_ell = ell(s, f1) == ell(s, f2) && ell(s, v.first) == ell(s, f1);
  return v;
}

struct AdditivityVerdict {
  MultiplicityMap ell_sub;       // ℓ(L)
  MultiplicityMap ell_middle;    // ℓ(M)
  MultiplicityMap ell_quotient;  // ℓ(N)
  bool holds = false;
};

/// ℓ(M) = ℓ(L) + ℓ(N) for an exact 0 -> L -> M -> N -> 0. Without a
/// filtration of M, one is glued from those of L and N and re-identified.
inline AdditivityVerdict additivity_check(const HomologicalSystem& s, const Filtration& fl, const Representation& m,
                                          const Filtration& fn, const Hom& inclusion, const Hom& projection,
                                          const std::optional<Filtration>& fm = std::nullopt) {
  const Algebra& alg = s.algebra();
  const Representation& l = fl.module;
  const Representation& n = fn.module;
  if (!is_hom(alg, inclusion, l, m) || !is_hom(alg, projection, m, n)) {
    throw Error(Errc::NotExact, "inclusion or projection is not a homomorphism");
  }
  for (std::size_t v = 0; v < m.dims.size(); ++v) {
    if (rank(inclusion.comps[v]) != l.dims[v]) throw Error(Errc::NotExact, "inclusion is not injective");
    if (rank(projection.comps[v]) != n.dims[v]) throw Error(Errc::NotExact, "projection is not surjective");
  }
  if (!(image_submodule(inclusion) == kernel_submodule(projection))) {
    throw Error(Errc::NotExact, "image of the inclusion differs from the kernel of the projection");
  }
  AdditivityVerdict v;
  v.ell_sub = ell(s, validate_filtration(s, fl));
  v.ell_quotient = ell(s, validate_filtration(s, fn));
  if (fm) {
    if (!detail::same_module(fm->module, m)) throw Error(Errc::ModuleMismatch, "filtration is not of M");
    v.ell_middle = ell(s, validate_filtration(s, *fm));
  } else {
    std::vector<Submodule> chain;
    for (const auto& sub : fl.chain) chain.push_back(push_forward(inclusion, sub));
    for (std::size_t k = 1; k < fn.chain.size(); ++k) chain.push_back(preimage(alg, m, projection, fn.chain[k]));
    if (chain.size() > 1 && chain[1].is_zero()) chain.erase(chain.begin() + 1);
    v.ell_middle = ell(s, validate_filtration(s, m, chain));
  }
  v.holds = true;
  for (std::size_t w = 0; w < s.size(); ++w)
    if (v.ell_middle[w] != v.ell_sub[w] + v.ell_quotient[w]) v.holds = false;
  return v;
}

struct LayerCertificate {
  std::size_t cls = 0;
  MultiplicityMap ell_layer;
  MultiplicityMap ell_image;
  MultiplicityMap ell_kernel;
};

struct SummandSplit {
  SubRep image;    // L = im e
  SubRep kernel;   // N = ker e
  OrderedFiltration image_filtration;
  OrderedFiltration kernel_filtration;
  std::vector<LayerCertificate> certificate;
};

inline bool is_idempotent(const Algebra& alg, const Representation& m, const Hom& e) {
  return is_hom(alg, e, m, m) && compose(e, e) == e;
}

namespace detail {

/// Ordered filtration of a summand from its per-layer submodules of M.
inline OrderedFiltration summand_filtration(const HomologicalSystem& s, const Submodule& whole, const SubRep& rep,
                                            const std::vector<Submodule>& tops, const std::vector<Layer>& layers,
                                            std::vector<MultiplicityMap>& per_layer) {
  OrderedFiltration out;
  out.module = rep.rep;
  Submodule prev = zero_sub(rep.rep);
  for (std::size_t k = 0; k < tops.size(); ++k) {
    Submodule cur = to_sub_coords(whole, tops[k]);
    per_layer.push_back(MultiplicityMap(s.size(), 0));
    if (cur.total_dim() == prev.total_dim()) continue;
    auto [w, factors] = identify_step(s, rep.rep, prev, cur);
    for (const auto& e : factors) {
      if (s.class_of(e.omega) != layers[k].cls) {
        throw Error(Errc::TraceSumMismatch, "summand layer contains a factor of another class");
      }
      per_layer.back()[e.omega] += e.mult;
    }
    out.layers.push_back({layers[k].cls, cur, std::move(factors)});
    prev = std::move(cur);
  }
  return out;
}

}  // namespace detail

/// Splits an ordered filtration of M along M = im e ⊕ ker e: layer by layer,
/// W = tr_W(L) ⊕ tr_W(N) computed in M / (previous layer).
inline SummandSplit summand_split(const HomologicalSystem& s, const OrderedFiltration& w, const Hom& e) {
  s.require_valid();
  const Algebra& alg = s.algebra();
  const Representation& m = w.module;
  if (!is_idempotent(alg, m, e)) throw Error(Errc::NotIdempotent, "e is not an idempotent endomorphism");
  const Submodule lsub = image_submodule(e);
  const Submodule nsub = kernel_submodule(e);

  std::vector<Submodule> ltops, ntops;
  Submodule prev = zero_sub(m);
  for (const auto& layer : w.layers) {
    QuotientRep cur = quotient_rep(alg, m, prev);
    Submodule wq = push_forward(cur.projection, layer.top);
    SubRep wrep = restrict_to(alg, cur.rep, wq);
    auto trace_in = [&](const Submodule& part) {
      SubRep prep = restrict_to(alg, cur.rep, push_forward(cur.projection, part));
      return push_forward(prep.inclusion, trace(alg, wrep.rep, prep.rep));
    };
    Submodule tl = trace_in(lsub);
    Submodule tn = trace_in(nsub);
    if (!sub_intersect(tl, tn).is_zero() || !(sub_sum(tl, tn) == wq)) {
      throw Error(Errc::TraceSumMismatch, "traces of the layer in the two summands do not add up to the layer");
    }
    ltops.push_back(sub_intersect(lsub, preimage(alg, m, cur.projection, tl)));
    ntops.push_back(sub_intersect(nsub, preimage(alg, m, cur.projection, tn)));
    if (!(sub_sum(ltops.back(), ntops.back()) == layer.top) || !sub_intersect(ltops.back(), ntops.back()).is_zero()) {
      throw Error(Errc::TraceSumMismatch, "layer is not the direct sum of its parts in the summands");
    }
    prev = layer.top;
  }

  SummandSplit out;
  out.image = restrict_to(alg, m, lsub);
  out.kernel = restrict_to(alg, m, nsub);
  std::vector<MultiplicityMap> ell_l, ell_n;
  out.image_filtration = detail::summand_filtration(s, lsub, out.image, ltops, w.layers, ell_l);
  out.kernel_filtration = detail::summand_filtration(s, nsub, out.kernel, ntops, w.layers, ell_n);
  for (std::size_t k = 0; k < w.layers.size(); ++k) {
    LayerCertificate c{w.layers[k].cls, ell(s, std::vector<FactorList>{w.layers[k].factors}), ell_l[k], ell_n[k]};
    for (std::size_t o = 0; o < s.size(); ++o) {
      if (c.ell_layer[o] != c.ell_image[o] + c.ell_kernel[o]) {
        throw Error(Errc::TraceSumMismatch, "multiplicity of Delta_" + s.omega()[o] + " is not additive in layer " +
                                                std::to_string(k));
      }
    }
    out.certificate.push_back(std::move(c));
  }
  return out;
}

}  // namespace deltafilt
