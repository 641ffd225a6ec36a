#pragma once

// Quivers and finite-dimensional path algebras kQ/I over GF(p).

#include <algorithm>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "deltafilt/error.hpp"
#include "deltafilt/gfmat.hpp"

namespace deltafilt {

struct Arrow {
  std::string name;
  std::size_t source = 0;
  std::size_t target = 0;
};

class Quiver {
 public:
  Quiver() = default;

  Quiver(std::vector<std::string> vertices,
         const std::vector<std::tuple<std::string, std::string, std::string>>& arrows)
      : vertices_(std::move(vertices)) {
    std::vector<std::string> sorted = vertices_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw Error(Errc::InvalidAlgebra, "vertex labels are not distinct");
    }
    for (const auto& [name, from, to] : arrows) {
      if (arrow_lookup_.count(name)) throw Error(Errc::InvalidAlgebra, "duplicate arrow name '" + name + "'");
      arrow_lookup_[name] = arrows_.size();
      arrows_.push_back({name, vertex(from), vertex(to)});
    }
  }

  std::size_t num_vertices() const noexcept { return vertices_.size(); }
  std::size_t num_arrows() const noexcept { return arrows_.size(); }
  const std::vector<std::string>& vertices() const noexcept { return vertices_; }
  const std::vector<Arrow>& arrows() const noexcept { return arrows_; }
  const Arrow& arrow(std::size_t a) const { return arrows_[a]; }

  std::size_t vertex(const std::string& label) const {
    auto it = std::find(vertices_.begin(), vertices_.end(), label);
    if (it == vertices_.end()) throw Error(Errc::UnknownLabel, "unknown vertex '" + label + "'");
    return static_cast<std::size_t>(it - vertices_.begin());
  }
  std::size_t arrow_index(const std::string& name) const {
    auto it = arrow_lookup_.find(name);
    if (it == arrow_lookup_.end()) throw Error(Errc::UnknownLabel, "unknown arrow '" + name + "'");
    return it->second;
  }

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::map<std::string, std::size_t> arrow_lookup_;
};

/// A path is a composable arrow sequence read left to right (first arrow
/// first). The trivial path at a vertex has no arrows.
struct Path {
  std::size_t source = 0;
  std::size_t target = 0;
  std::vector<std::size_t> arrows;

  std::size_t length() const noexcept { return arrows.size(); }
  friend bool operator==(const Path&, const Path&) = default;
  friend auto operator<=>(const Path&, const Path&) = default;
};

struct RelationTerm {
  Elem coeff = 0;
  Path path;
};

/// Linear combination of parallel paths of length >= 2.
using PathRelation = std::vector<RelationTerm>;

/// All paths starting at one vertex of length < bound, grouped by end vertex.
struct PathBasis {
  std::vector<std::vector<Path>> by_target;
};

/// kQ/I with I generated by admissible relations and containing every path of
/// length `nilpotency_bound`.
class Algebra {
 public:
  Algebra(Quiver quiver, Field field, std::vector<PathRelation> relations, std::size_t nilpotency_bound)
      : quiver_(std::move(quiver)), field_(field), relations_(std::move(relations)), bound_(nilpotency_bound) {
    if (bound_ == 0) throw Error(Errc::InvalidAlgebra, "nilpotency_bound must be positive");
    for (auto& rel : relations_) {
      if (rel.empty()) throw Error(Errc::InvalidAlgebra, "empty relation");
      for (auto& t : rel) {
        t.coeff %= field_.p();
        check_path(t.path);
        if (t.path.length() < 2) throw Error(Errc::InvalidAlgebra, "relation paths must have length >= 2");
        if (t.path.source != rel.front().path.source || t.path.target != rel.front().path.target) {
          throw Error(Errc::InvalidAlgebra, "relation paths are not parallel");
        }
      }
    }
    certify_nilpotency();
  }

  const Quiver& quiver() const noexcept { return quiver_; }
  const Field& field() const noexcept { return field_; }
  const std::vector<PathRelation>& relations() const noexcept { return relations_; }
  std::size_t nilpotency_bound() const noexcept { return bound_; }
  bool is_hereditary() const noexcept { return relations_.empty(); }

  Path path_from_names(const std::vector<std::string>& names) const {
    if (names.empty()) throw Error(Errc::InvalidAlgebra, "empty path");
    Path p;
    for (const auto& n : names) p.arrows.push_back(quiver_.arrow_index(n));
    p.source = quiver_.arrow(p.arrows.front()).source;
    p.target = quiver_.arrow(p.arrows.back()).target;
    check_path(p);
    return p;
  }

  /// Paths from `v` of length < nilpotency_bound.
  PathBasis paths_from(std::size_t v) const {
    PathBasis pb;
    pb.by_target.resize(quiver_.num_vertices());
    std::vector<Path> frontier{Path{v, v, {}}};
    for (std::size_t len = 0; len < bound_ && !frontier.empty(); ++len) {
      std::vector<Path> next;
      for (const auto& p : frontier) {
        pb.by_target[p.target].push_back(p);
        for (std::size_t a = 0; a < quiver_.num_arrows(); ++a) {
          if (quiver_.arrow(a).source != p.target) continue;
          Path q = p;
          q.arrows.push_back(a);
          q.target = quiver_.arrow(a).target;
          next.push_back(std::move(q));
        }
      }
      frontier = std::move(next);
    }
    return pb;
  }

  /// Every path from `v` of length exactly `len`.
  std::vector<Path> paths_of_length(std::size_t v, std::size_t len) const {
    std::vector<Path> frontier{Path{v, v, {}}};
    for (std::size_t l = 0; l < len; ++l) {
      std::vector<Path> next;
      for (const auto& p : frontier)
        for (std::size_t a = 0; a < quiver_.num_arrows(); ++a) {
          if (quiver_.arrow(a).source != p.target) continue;
          Path q = p;
          q.arrows.push_back(a);
          q.target = quiver_.arrow(a).target;
          next.push_back(std::move(q));
        }
      frontier = std::move(next);
    }
    return frontier;
  }

 private:
  void check_path(const Path& p) const {
    for (std::size_t i = 0; i + 1 < p.arrows.size(); ++i) {
      if (quiver_.arrow(p.arrows[i]).target != quiver_.arrow(p.arrows[i + 1]).source) {
        throw Error(Errc::InvalidAlgebra, "path is not composable");
      }
    }
  }

  /// Checks that every path of length `bound_` lies in the span of the
  /// ideal elements u·rho·w whose terms all have length <= bound_.
  void certify_nilpotency() const {
    const std::size_t n = quiver_.num_vertices();
    for (std::size_t v = 0; v < n; ++v) {
      std::vector<Path> longest = paths_of_length(v, bound_);
      if (longest.empty()) continue;
      // index all paths from v of length <= bound_
      std::map<Path, std::size_t> index;
      std::vector<Path> all;
      for (std::size_t len = 0; len <= bound_; ++len)
        for (auto& p : paths_of_length(v, len)) {
          index[p] = all.size();
          all.push_back(p);
        }
      std::vector<std::vector<Elem>> gens;
      for (const auto& rel : relations_) {
        std::size_t maxlen = 0;
        for (const auto& t : rel) maxlen = std::max(maxlen, t.path.length());
        if (maxlen > bound_) continue;
        const std::size_t rs = rel.front().path.source;
        for (std::size_t plen = 0; plen + maxlen <= bound_; ++plen) {
          for (const auto& pre : paths_of_length(v, plen)) {
            if (pre.target != rs) continue;
            for (std::size_t slen = 0; plen + maxlen + slen <= bound_; ++slen) {
              for (const auto& suf : paths_of_length(rel.front().path.target, slen)) {
                std::vector<Elem> vec(all.size(), 0);
                for (const auto& t : rel) {
                  Path full = pre;
                  full.arrows.insert(full.arrows.end(), t.path.arrows.begin(), t.path.arrows.end());
                  full.arrows.insert(full.arrows.end(), suf.arrows.begin(), suf.arrows.end());
                  full.target = suf.target;
                  auto& slot = vec[index.at(full)];
                  slot = field_.add(slot, t.coeff);
                }
                gens.push_back(std::move(vec));
              }
            }
          }
        }
      }
      Mat ideal = Mat::from_columns(field_, all.size(), gens);
      const std::size_t r = rank(ideal);
      for (const auto& p : longest) {
        Mat e(field_, all.size(), 1);
        e.at(index.at(p), 0) = 1;
        if (rank(hconcat(ideal, e)) != r) {
          throw Error(Errc::InvalidAlgebra, "nilpotency_bound " + std::to_string(bound_) +
                                                " is not certified: a path of that length from vertex " +
                                                quiver_.vertices()[v] + " is not in the ideal");
        }
      }
    }
  }

  Quiver quiver_;
  Field field_;
  std::vector<PathRelation> relations_;
  std::size_t bound_;
};

}  // namespace deltafilt
