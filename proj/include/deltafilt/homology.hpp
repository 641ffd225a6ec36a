#pragma once

// Hom spaces, projective presentations, Ext^1, traces and split retractions.

#include <numeric>
#include <string>
#include <vector>

#include "deltafilt/error.hpp"
#include "deltafilt/gfmat.hpp"
#include "deltafilt/quiver.hpp"
#include "deltafilt/representation.hpp"

namespace deltafilt {

struct HomSpace {
  Representation source;
  Representation target;
  std::vector<Hom> basis;

  std::size_t dim() const noexcept { return basis.size(); }

  /// Σ coeffs[i] · basis[i]
  Hom element(const std::vector<Elem>& coeffs) const {
    Hom h = zero_hom(source, target);
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (coeffs[i] != 0) h = h + scaled(basis[i], coeffs[i]);
    return h;
  }
};

namespace detail {

// Unknown layout: vertex blocks of N_v x M_v entries, row-major inside a block.
struct HomLayout {
  std::vector<std::size_t> offset;
  std::size_t total = 0;

  HomLayout(const Representation& m, const Representation& n) {
    for (std::size_t v = 0; v < m.dims.size(); ++v) {
      offset.push_back(total);
      total += n.dims[v] * m.dims[v];
    }
  }
};

inline std::vector<Elem> flatten(const Hom& h) {
  std::vector<Elem> out;
  for (const auto& c : h.comps) out.insert(out.end(), c.data().begin(), c.data().end());
  return out;
}

}  // namespace detail

/// Basis of all intertwiners M -> N: the kernel of the stacked linear system
/// N_a f_src - f_tgt M_a = 0 over the arrows.
inline HomSpace hom_basis(const Algebra& alg, const Representation& m, const Representation& n) {
  const Field& f = alg.field();
  const Quiver& q = alg.quiver();
  detail::HomLayout lay(m, n);
  std::size_t eqs = 0;
  for (const auto& arr : q.arrows()) eqs += n.dims[arr.target] * m.dims[arr.source];
  Mat sys(f, eqs, lay.total);
  std::size_t row = 0;
  for (std::size_t a = 0; a < q.num_arrows(); ++a) {
    const auto& arr = q.arrow(a);
    const std::size_t s = arr.source, t = arr.target;
    const Mat& na = n.maps[a];
    const Mat& ma = m.maps[a];
    for (std::size_t i = 0; i < n.dims[t]; ++i) {
      for (std::size_t j = 0; j < m.dims[s]; ++j, ++row) {
        // (N_a f_s)(i,j) = Σ_k N_a(i,k) f_s(k,j)
        for (std::size_t k = 0; k < n.dims[s]; ++k) {
          auto& cell = sys.at(row, lay.offset[s] + k * m.dims[s] + j);
          cell = f.add(cell, na(i, k));
        }
        // -(f_t M_a)(i,j) = -Σ_k f_t(i,k) M_a(k,j)
        for (std::size_t k = 0; k < m.dims[t]; ++k) {
          auto& cell = sys.at(row, lay.offset[t] + i * m.dims[t] + k);
          cell = f.sub(cell, ma(k, j));
        }
      }
    }
  }
  Subspace ker = kernel_basis(sys);
  HomSpace hs{m, n, {}};
  for (std::size_t c = 0; c < ker.dim(); ++c) {
    Hom h;
    for (std::size_t v = 0; v < m.dims.size(); ++v) {
      Mat comp(f, n.dims[v], m.dims[v]);
      for (std::size_t i = 0; i < n.dims[v]; ++i)
        for (std::size_t j = 0; j < m.dims[v]; ++j) comp.at(i, j) = ker.basis()(lay.offset[v] + i * m.dims[v] + j, c);
      h.comps.push_back(std::move(comp));
    }
    hs.basis.push_back(std::move(h));
  }
  return hs;
}

inline std::size_t hom_dim(const Algebra& alg, const Representation& m, const Representation& n) {
  return hom_basis(alg, m, n).dim();
}

/// Σ_v d_v e_v - Σ_{a:i->j} d_i e_j; equals dim Hom - dim Ext^1 on hereditary algebras.
inline long long euler_form(const Algebra& alg, const std::vector<std::size_t>& d, const std::vector<std::size_t>& e) {
  if (!alg.is_hereditary()) throw Error(Errc::NotHereditary, "euler_form needs a relation-free algebra");
  long long s = 0;
  for (std::size_t v = 0; v < d.size(); ++v) s += static_cast<long long>(d[v] * e[v]);
  for (const auto& arr : alg.quiver().arrows()) s -= static_cast<long long>(d[arr.source] * e[arr.target]);
  return s;
}

/// rad M = Σ_a image(M_a).
inline Submodule radical(const Algebra& alg, const Representation& m) {
  Submodule s = zero_sub(m);
  for (std::size_t a = 0; a < alg.quiver().num_arrows(); ++a) {
    const auto& arr = alg.quiver().arrow(a);
    s.spaces[arr.target] = subspace_sum(s.spaces[arr.target], Subspace::span(m.maps[a]));
  }
  return s;
}

inline std::vector<std::size_t> top(const Algebra& alg, const Representation& m) {
  Submodule r = radical(alg, m);
  std::vector<std::size_t> t;
  for (std::size_t v = 0; v < m.dims.size(); ++v) t.push_back(m.dims[v] - r.spaces[v].dim());
  return t;
}

struct ProjectiveCover {
  Representation cover;              // ⊕ P_v^{top_v}
  std::vector<std::size_t> summand_vertices;
  Hom epi;                           // cover -> M
};

inline ProjectiveCover projective_cover(const Algebra& alg, const Representation& m) {
  Submodule rad = radical(alg, m);
  ProjectiveCover out;
  std::vector<Representation> pieces;
  std::vector<Hom> maps;
  for (std::size_t v = 0; v < m.dims.size(); ++v) {
    QuotientCoords qc = quotient_coords(m.dims[v], rad.spaces[v]);
    if (qc.section.cols() == 0) continue;
    Projective p = projective(alg, v);
    for (std::size_t k = 0; k < qc.section.cols(); ++k) {
      pieces.push_back(p.rep);
      maps.push_back(hom_from_projective(alg, p, m, qc.section.column(k)));
      out.summand_vertices.push_back(v);
    }
  }
  out.cover = direct_sum(alg, pieces).rep;
  for (std::size_t w = 0; w < m.dims.size(); ++w) {
    Mat comp(alg.field(), m.dims[w], 0);
    for (const auto& h : maps) comp = hconcat(comp, h.comps[w]);
    out.epi.comps.push_back(std::move(comp));
  }
  return out;
}

/// P1 -> P0 -> M -> 0 with P0 -> M and P1 -> syzygy projective covers.
struct Presentation {
  ProjectiveCover p0;
  Submodule syzygy;  // kernel of p0.epi inside p0.cover
  Representation syzygy_rep;
  ProjectiveCover p1;  // cover of syzygy_rep
  Hom differential;    // P1 -> P0
};

inline Presentation presentation(const Algebra& alg, const Representation& m) {
  Presentation out;
  out.p0 = projective_cover(alg, m);
  out.syzygy = kernel_submodule(out.p0.epi);
  SubRep omega = restrict_to(alg, out.p0.cover, out.syzygy);
  out.syzygy_rep = omega.rep;
  out.p1 = projective_cover(alg, omega.rep);
  out.differential = compose(omega.inclusion, out.p1.epi);
  return out;
}

/// dim Ext^1(M, N) from 0 -> Hom(M,N) -> Hom(P0,N) -> Hom(Ω,N) -> Ext^1(M,N) -> 0.
inline std::size_t ext1_dim(const Algebra& alg, const Representation& m, const Representation& n) {
  if (m.is_zero() || n.is_zero()) return 0;
  ProjectiveCover p0 = projective_cover(alg, m);
  Submodule omega = kernel_submodule(p0.epi);
  if (omega.is_zero()) return 0;
  SubRep omega_rep = restrict_to(alg, p0.cover, omega);
  std::size_t hom_p0 = 0;
  for (auto v : p0.summand_vertices) hom_p0 += n.dims[v];
  const std::size_t hom_omega = hom_dim(alg, omega_rep.rep, n);
  const std::size_t hom_mn = hom_dim(alg, m, n);
  return hom_omega + hom_mn - hom_p0;
}

/// tr_L(N): the sum of the images of all homomorphisms L -> N.
inline Submodule trace(const Algebra& alg, const Representation& l, const Representation& n) {
  HomSpace hs = hom_basis(alg, l, n);
  Submodule s = zero_sub(n);
  for (const auto& h : hs.basis) s = sub_sum(s, image_submodule(h));
  return s;
}

struct SplitRetraction {
  SubRep sub;          // A with its inclusion into B
  Hom retraction;      // B -> A, retraction ∘ inclusion = id
  Submodule complement;  // ker retraction
};

/// Splits 0 -> A -> B -> B/A -> 0 by solving for a retraction B -> A.
inline SplitRetraction split_retraction(const Algebra& alg, const Representation& b, const Submodule& a) {
  SplitRetraction out;
  out.sub = restrict_to(alg, b, a);
  HomSpace hs = hom_basis(alg, b, out.sub.rep);
  const Field& f = alg.field();
  const std::vector<Elem> target = detail::flatten(identity_hom(out.sub.rep));
  std::vector<std::vector<Elem>> cols;
  for (const auto& h : hs.basis) cols.push_back(detail::flatten(compose(h, out.sub.inclusion)));
  Mat sys = Mat::from_columns(f, target.size(), cols);
  auto coeff = solve(sys, Mat::from_columns(f, target.size(), {target}));
  if (!coeff) {
    QuotientRep q = quotient_rep(alg, b, a);
    throw Error(Errc::NoRetraction, "the extension does not split (dim Ext^1(B/A, A) = " +
                                        std::to_string(ext1_dim(alg, q.rep, out.sub.rep)) + ")");
  }
  std::vector<Elem> c(hs.dim());
  for (std::size_t i = 0; i < hs.dim(); ++i) c[i] = (*coeff)(i, 0);
  out.retraction = hs.element(c);
  out.complement = kernel_submodule(out.retraction);
  return out;
}

}  // namespace deltafilt
