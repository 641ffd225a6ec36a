#pragma once

// Finite-dimensional modules over kQ/I as quiver representations, their
// homomorphisms and submodules, and the basic constructions on them.

#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "deltafilt/error.hpp"
#include "deltafilt/gfmat.hpp"
#include "deltafilt/quiver.hpp"

namespace deltafilt {

/// One vector space per vertex, one matrix (target dim x source dim) per arrow.
struct Representation {
  Field field;
  std::vector<std::size_t> dims;
  std::vector<Mat> maps;

  std::size_t dim(std::size_t v) const { return dims[v]; }
  std::size_t total_dim() const { return std::accumulate(dims.begin(), dims.end(), std::size_t{0}); }
  bool is_zero() const { return total_dim() == 0; }
};

struct Violation {
  enum class Kind { Shape, Relation, Field };
  Kind kind;
  std::string detail;
};

/// Matrix of the action of a path on `m`.
inline Mat evaluate_path(const Algebra& alg, const Representation& m, const Path& p) {
  Mat r = Mat::identity(alg.field(), m.dims[p.source]);
  for (auto a : p.arrows) r = m.maps[a] * r;
  return r;
}

inline std::vector<Violation> validate_representation(const Algebra& alg, const Representation& m) {
  std::vector<Violation> out;
  const Quiver& q = alg.quiver();
  if (m.field.p() != alg.field().p()) {
    out.push_back({Violation::Kind::Field, "representation is over GF(" + std::to_string(m.field.p()) + ")"});
    return out;
  }
  if (m.dims.size() != q.num_vertices() || m.maps.size() != q.num_arrows()) {
    out.push_back({Violation::Kind::Shape, "expected " + std::to_string(q.num_vertices()) + " dims and " +
                                               std::to_string(q.num_arrows()) + " maps"});
    return out;
  }
  bool shapes_ok = true;
  for (std::size_t a = 0; a < q.num_arrows(); ++a) {
    const auto& arr = q.arrow(a);
    const Mat& mat = m.maps[a];
    if (mat.rows() != m.dims[arr.target] || mat.cols() != m.dims[arr.source]) {
      shapes_ok = false;
      out.push_back({Violation::Kind::Shape, "arrow " + arr.name + " has shape " + mat.shape() + ", expected " +
                                                 std::to_string(m.dims[arr.target]) + "x" +
                                                 std::to_string(m.dims[arr.source])});
    }
  }
  if (!shapes_ok) return out;
  for (std::size_t r = 0; r < alg.relations().size(); ++r) {
    const auto& rel = alg.relations()[r];
    Mat sum(alg.field(), m.dims[rel.front().path.target], m.dims[rel.front().path.source]);
    for (const auto& t : rel) sum = sum + evaluate_path(alg, m, t.path).scaled(t.coeff);
    if (!sum.is_zero()) {
      out.push_back({Violation::Kind::Relation, "relation #" + std::to_string(r) + " evaluates to " + sum.str()});
    }
  }
  return out;
}

inline void require_valid(const Algebra& alg, const Representation& m) {
  auto v = validate_representation(alg, m);
  if (!v.empty()) throw Error(Errc::InvalidRepresentation, v.front().detail);
}

inline Representation zero_rep(const Algebra& alg) {
  Representation r{alg.field(), std::vector<std::size_t>(alg.quiver().num_vertices(), 0), {}};
  for (std::size_t a = 0; a < alg.quiver().num_arrows(); ++a) r.maps.emplace_back(alg.field(), 0, 0);
  return r;
}

/// Representation with the given dims and zero arrow maps.
inline Representation zero_maps(const Algebra& alg, std::vector<std::size_t> dims) {
  Representation r{alg.field(), std::move(dims), {}};
  for (const auto& arr : alg.quiver().arrows()) r.maps.emplace_back(alg.field(), r.dims[arr.target], r.dims[arr.source]);
  return r;
}

inline Representation simple(const Algebra& alg, std::size_t v) {
  std::vector<std::size_t> dims(alg.quiver().num_vertices(), 0);
  dims.at(v) = 1;
  return zero_maps(alg, std::move(dims));
}

// --- homomorphisms ----------------------------------------------------------

/// Per-vertex matrices f_v : M_v -> N_v.
struct Hom {
  std::vector<Mat> comps;

  friend bool operator==(const Hom&, const Hom&) = default;
};

inline Hom zero_hom(const Representation& m, const Representation& n) {
  Hom h;
  for (std::size_t v = 0; v < m.dims.size(); ++v) h.comps.emplace_back(m.field, n.dims[v], m.dims[v]);
  return h;
}

inline Hom identity_hom(const Representation& m) {
  Hom h;
  for (auto d : m.dims) h.comps.push_back(Mat::identity(m.field, d));
  return h;
}

/// g ∘ f
inline Hom compose(const Hom& g, const Hom& f) {
  Hom h;
  for (std::size_t v = 0; v < f.comps.size(); ++v) h.comps.push_back(g.comps[v] * f.comps[v]);
  return h;
}

inline Hom operator+(const Hom& a, const Hom& b) {
  Hom h;
  for (std::size_t v = 0; v < a.comps.size(); ++v) h.comps.push_back(a.comps[v] + b.comps[v]);
  return h;
}

inline Hom operator-(const Hom& a, const Hom& b) {
  Hom h;
  for (std::size_t v = 0; v < a.comps.size(); ++v) h.comps.push_back(a.comps[v] - b.comps[v]);
  return h;
}

inline Hom scaled(const Hom& a, Elem c) {
  Hom h;
  for (const auto& m : a.comps) h.comps.push_back(m.scaled(c));
  return h;
}

inline bool is_zero(const Hom& f) {
  return std::all_of(f.comps.begin(), f.comps.end(), [](const Mat& m) { return m.is_zero(); });
}

/// Shapes match and N_a f_src = f_tgt M_a for every arrow.
inline bool is_hom(const Algebra& alg, const Hom& f, const Representation& m, const Representation& n) {
  if (f.comps.size() != m.dims.size()) return false;
  for (std::size_t v = 0; v < m.dims.size(); ++v)
    if (f.comps[v].rows() != n.dims[v] || f.comps[v].cols() != m.dims[v]) return false;
  for (std::size_t a = 0; a < alg.quiver().num_arrows(); ++a) {
    const auto& arr = alg.quiver().arrow(a);
    if (!(n.maps[a] * f.comps[arr.source] == f.comps[arr.target] * m.maps[a])) return false;
  }
  return true;
}

inline bool is_iso_hom(const Hom& f) {
  for (const auto& c : f.comps)
    if (c.rows() != c.cols() || rank(c) != c.rows()) return false;
  return true;
}

inline std::optional<Hom> inverse_hom(const Hom& f) {
  Hom h;
  for (const auto& c : f.comps) {
    auto inv = inverse(c);
    if (!inv) return std::nullopt;
    h.comps.push_back(*inv);
  }
  return h;
}

// --- submodules -------------------------------------------------------------

/// Per-vertex subspaces of a representation, closed under the arrows.
struct Submodule {
  std::vector<Subspace> spaces;

  std::size_t dim(std::size_t v) const { return spaces[v].dim(); }
  std::vector<std::size_t> dims() const {
    std::vector<std::size_t> d;
    for (const auto& s : spaces) d.push_back(s.dim());
    return d;
  }
  std::size_t total_dim() const {
    std::size_t t = 0;
    for (const auto& s : spaces) t += s.dim();
    return t;
  }
  bool is_zero() const { return total_dim() == 0; }

  friend bool operator==(const Submodule&, const Submodule&) = default;
};

inline Submodule zero_sub(const Representation& m) {
  Submodule s;
  for (auto d : m.dims) s.spaces.push_back(Subspace::zero(m.field, d));
  return s;
}

inline Submodule full_sub(const Representation& m) {
  Submodule s;
  for (auto d : m.dims) s.spaces.push_back(Subspace::full(m.field, d));
  return s;
}

inline bool is_full(const Submodule& u, const Representation& m) {
  for (std::size_t v = 0; v < m.dims.size(); ++v)
    if (u.spaces[v].dim() != m.dims[v]) return false;
  return true;
}

inline bool is_submodule(const Algebra& alg, const Representation& m, const Submodule& u) {
  if (u.spaces.size() != m.dims.size()) return false;
  for (std::size_t v = 0; v < m.dims.size(); ++v)
    if (u.spaces[v].ambient_dim() != m.dims[v]) return false;
  for (std::size_t a = 0; a < alg.quiver().num_arrows(); ++a) {
    const auto& arr = alg.quiver().arrow(a);
    if (!is_contained(image_of(m.maps[a], u.spaces[arr.source]), u.spaces[arr.target])) return false;
  }
  return true;
}

inline void require_submodule(const Algebra& alg, const Representation& m, const Submodule& u) {
  if (!is_submodule(alg, m, u)) throw Error(Errc::NotASubmodule, "subspaces are not closed under the arrows");
}

inline bool contained(const Submodule& u, const Submodule& w) {
  for (std::size_t v = 0; v < u.spaces.size(); ++v)
    if (!is_contained(u.spaces[v], w.spaces[v])) return false;
  return true;
}

inline Submodule sub_sum(const Submodule& u, const Submodule& w) {
  Submodule s;
  for (std::size_t v = 0; v < u.spaces.size(); ++v) s.spaces.push_back(subspace_sum(u.spaces[v], w.spaces[v]));
  return s;
}

inline Submodule sub_intersect(const Submodule& u, const Submodule& w) {
  Submodule s;
  for (std::size_t v = 0; v < u.spaces.size(); ++v)
    s.spaces.push_back(subspace_intersect(u.spaces[v], w.spaces[v]));
  return s;
}

/// Arrow-action closure of the spans of the given vectors (columns, per vertex).
inline Submodule sub_generated(const Algebra& alg, const Representation& m, const std::vector<Mat>& vectors) {
  Submodule s;
  for (std::size_t v = 0; v < m.dims.size(); ++v) s.spaces.push_back(Subspace::span(vectors[v]));
  for (bool grew = true; grew;) {
    grew = false;
    for (std::size_t a = 0; a < alg.quiver().num_arrows(); ++a) {
      const auto& arr = alg.quiver().arrow(a);
      Subspace next = subspace_sum(s.spaces[arr.target], image_of(m.maps[a], s.spaces[arr.source]));
      if (next.dim() != s.spaces[arr.target].dim()) {
        s.spaces[arr.target] = std::move(next);
        grew = true;
      }
    }
  }
  return s;
}

inline Submodule image_submodule(const Hom& f) {
  Submodule s;
  for (const auto& c : f.comps) s.spaces.push_back(Subspace::span(c));
  return s;
}

inline Submodule kernel_submodule(const Hom& f) {
  Submodule s;
  for (const auto& c : f.comps) s.spaces.push_back(kernel_basis(c));
  return s;
}

/// {x in M : f(x) in target}, where f : M -> Q.
inline Submodule preimage(const Algebra& alg, const Representation& m, const Hom& f, const Submodule& target) {
  Submodule s;
  for (std::size_t v = 0; v < m.dims.size(); ++v) s.spaces.push_back(preimage_of(f.comps[v], target.spaces[v]));
  require_submodule(alg, m, s);
  return s;
}

/// Image of a submodule of M under f : M -> N.
inline Submodule push_forward(const Hom& f, const Submodule& u) {
  Submodule s;
  for (std::size_t v = 0; v < f.comps.size(); ++v) s.spaces.push_back(image_of(f.comps[v], u.spaces[v]));
  return s;
}

/// A submodule as a representation in the coordinates of its canonical bases,
/// together with the inclusion into M.
struct SubRep {
  Representation rep;
  Hom inclusion;  // rep -> M, components are the basis matrices
};

inline SubRep restrict_to(const Algebra& alg, const Representation& m, const Submodule& u) {
  require_submodule(alg, m, u);
  SubRep out;
  out.rep.field = m.field;
  for (const auto& s : u.spaces) {
    out.rep.dims.push_back(s.dim());
    out.inclusion.comps.push_back(s.basis());
  }
  for (std::size_t a = 0; a < alg.quiver().num_arrows(); ++a) {
    const auto& arr = alg.quiver().arrow(a);
    const Mat& src = u.spaces[arr.source].basis();
    out.rep.maps.push_back(coordinates_in(u.spaces[arr.target].basis(), m.maps[a] * src));
  }
  return out;
}

/// Coordinates of a submodule W ⊆ U of M relative to restrict_to(U).
inline Submodule to_sub_coords(const Submodule& u, const Submodule& w) {
  Submodule s;
  for (std::size_t v = 0; v < u.spaces.size(); ++v)
    s.spaces.push_back(Subspace::span(coordinates_in(u.spaces[v].basis(), w.spaces[v].basis())));
  return s;
}

struct QuotientRep {
  Representation rep;
  Hom projection;            // M -> M/U
  std::vector<Mat> section;  // per vertex, projection * section = I
};

inline QuotientRep quotient_rep(const Algebra& alg, const Representation& m, const Submodule& u) {
  require_submodule(alg, m, u);
  QuotientRep out;
  out.rep.field = m.field;
  std::vector<QuotientCoords> qc;
  for (std::size_t v = 0; v < m.dims.size(); ++v) {
    qc.push_back(quotient_coords(m.dims[v], u.spaces[v]));
    out.rep.dims.push_back(qc.back().projection.rows());
    out.projection.comps.push_back(qc.back().projection);
    out.section.push_back(qc.back().section);
  }
  for (std::size_t a = 0; a < alg.quiver().num_arrows(); ++a) {
    const auto& arr = alg.quiver().arrow(a);
    out.rep.maps.push_back(qc[arr.target].projection * m.maps[a] * qc[arr.source].section);
  }
  return out;
}

struct DirectSum {
  Representation rep;
  std::vector<Hom> injections;
  std::vector<Hom> projections;
};

inline DirectSum direct_sum(const Algebra& alg, const std::vector<Representation>& reps) {
  DirectSum out;
  out.rep = zero_rep(alg);
  const std::size_t nv = alg.quiver().num_vertices();
  for (const auto& r : reps) {
    for (std::size_t v = 0; v < nv; ++v) out.rep.dims[v] += r.dims[v];
    for (std::size_t a = 0; a < alg.quiver().num_arrows(); ++a) out.rep.maps[a] = block_diag(out.rep.maps[a], r.maps[a]);
  }
  std::vector<std::size_t> offset(nv, 0);
  for (const auto& r : reps) {
    Hom inj, proj;
    for (std::size_t v = 0; v < nv; ++v) {
      Mat i(alg.field(), out.rep.dims[v], r.dims[v]);
      for (std::size_t k = 0; k < r.dims[v]; ++k) i.at(offset[v] + k, k) = 1;
      proj.comps.push_back(i.transpose());
      inj.comps.push_back(std::move(i));
      offset[v] += r.dims[v];
    }
    out.injections.push_back(std::move(inj));
    out.projections.push_back(std::move(proj));
  }
  return out;
}

/// The isomorphic representation g·M·g^{-1} for per-vertex invertible g;
/// `g` itself is then an isomorphism M -> result.
inline Representation change_basis(const Algebra& alg, const Representation& m, const std::vector<Mat>& g) {
  Representation r = m;
  for (std::size_t a = 0; a < alg.quiver().num_arrows(); ++a) {
    const auto& arr = alg.quiver().arrow(a);
    r.maps[a] = g[arr.target] * m.maps[a] * *inverse(g[arr.source]);
  }
  return r;
}

// --- indecomposable projectives --------------------------------------------

/// P_v = e_v(kQ/I) realized on path classes: at vertex w, the span of the
/// paths v ~> w of length < bound modulo the ideal.
struct Projective {
  std::size_t vertex = 0;
  Representation rep;
  std::vector<std::vector<Path>> paths;  // per target vertex
  std::vector<Mat> to_classes;           // dim P(w) x #paths(w)
  std::vector<Mat> from_classes;         // #paths(w) x dim P(w)
};

inline Projective projective(const Algebra& alg, std::size_t v) {
  const Quiver& q = alg.quiver();
  const Field& f = alg.field();
  const std::size_t bound = alg.nilpotency_bound();
  Projective out;
  out.vertex = v;
  out.paths = alg.paths_from(v).by_target;
  const std::size_t nv = q.num_vertices();

  auto index_of = [&](const Path& p) -> std::optional<std::size_t> {
    if (p.length() >= bound) return std::nullopt;
    const auto& list = out.paths[p.target];
    auto it = std::find(list.begin(), list.end(), p);
    if (it == list.end()) return std::nullopt;
    return static_cast<std::size_t>(it - list.begin());
  };

  // Truncated generators u·rho·w of the ideal, grouped by end vertex.
  std::vector<std::vector<std::vector<Elem>>> gens(nv);
  for (const auto& rel : alg.relations()) {
    const std::size_t rs = rel.front().path.source;
    const std::size_t rt = rel.front().path.target;
    std::size_t minlen = SIZE_MAX;
    for (const auto& t : rel) minlen = std::min(minlen, t.path.length());
    for (const auto& pre : out.paths[rs]) {
      for (std::size_t slen = 0; pre.length() + minlen + slen < bound; ++slen) {
        for (const auto& suf : alg.paths_of_length(rt, slen)) {
          const std::size_t w = suf.target;
          std::vector<Elem> vec(out.paths[w].size(), 0);
          for (const auto& t : rel) {
            Path full = pre;
            full.arrows.insert(full.arrows.end(), t.path.arrows.begin(), t.path.arrows.end());
            full.arrows.insert(full.arrows.end(), suf.arrows.begin(), suf.arrows.end());
            full.target = w;
            if (auto idx = index_of(full)) vec[*idx] = f.add(vec[*idx], t.coeff);
          }
          gens[w].push_back(std::move(vec));
        }
      }
    }
  }

  out.rep.field = f;
  for (std::size_t w = 0; w < nv; ++w) {
    Subspace ideal = Subspace::span(Mat::from_columns(f, out.paths[w].size(), gens[w]));
    QuotientCoords qc = quotient_coords(out.paths[w].size(), ideal);
    out.rep.dims.push_back(qc.projection.rows());
    out.to_classes.push_back(qc.projection);
    out.from_classes.push_back(qc.section);
  }
  for (std::size_t a = 0; a < q.num_arrows(); ++a) {
    const auto& arr = q.arrow(a);
    Mat extend(f, out.paths[arr.target].size(), out.paths[arr.source].size());
    for (std::size_t k = 0; k < out.paths[arr.source].size(); ++k) {
      Path p = out.paths[arr.source][k];
      p.arrows.push_back(a);
      p.target = arr.target;
      if (auto idx = index_of(p)) extend.at(*idx, k) = 1;
    }
    out.rep.maps.push_back(out.to_classes[arr.target] * extend * out.from_classes[arr.source]);
  }
  return out;
}

/// The homomorphism P_v -> M sending the trivial path e_v to x ∈ M_v.
inline Hom hom_from_projective(const Algebra& alg, const Projective& p, const Representation& m,
                               const std::vector<Elem>& x) {
  Hom h;
  const Field& f = alg.field();
  Mat xv = Mat::from_columns(f, m.dims[p.vertex], {x});
  for (std::size_t w = 0; w < m.dims.size(); ++w) {
    Mat images(f, m.dims[w], p.paths[w].size());
    for (std::size_t k = 0; k < p.paths[w].size(); ++k) {
      Mat y = evaluate_path(alg, m, p.paths[w][k]) * xv;
      for (std::size_t i = 0; i < m.dims[w]; ++i) images.at(i, k) = y(i, 0);
    }
    h.comps.push_back(images * p.from_classes[w]);
  }
  return h;
}

}  // namespace deltafilt
