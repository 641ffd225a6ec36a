#pragma once

// Homological systems (Δ; Ω, ≤): a family of modules indexed by a preordered
// set, validated against axioms HS1-HS4 and their linearized forms.

#include <string>
#include <utility>
#include <vector>

#include "deltafilt/decompose.hpp"
#include "deltafilt/error.hpp"
#include "deltafilt/homology.hpp"
#include "deltafilt/preord.hpp"
#include "deltafilt/quiver.hpp"
#include "deltafilt/representation.hpp"

namespace deltafilt {

struct Witness {
  std::string kind;                 // e.g. "nonzero_hom", "nonzero_ext", "decomposable"
  std::vector<std::string> omegas;  // the offending labels
  std::size_t dim = 0;              // Hom/Ext dimension when relevant
};

struct AxiomReport {
  std::string axiom;
  bool passed = true;
  std::vector<Witness> witnesses;

  void fail(Witness w) {
    passed = false;
    witnesses.push_back(std::move(w));
  }
};

struct ValidationReport {
  AxiomReport hs1{"HS1", true, {}}, hs2{"HS2", true, {}}, hs3{"HS3", true, {}}, hs4{"HS4", true, {}};
  std::vector<std::vector<std::size_t>> hom_dims;  // [ω][ω']
  std::vector<std::vector<std::size_t>> ext_dims;  // [ω][ω']
  Certainty certainty = Certainty::Certain;

  bool passed() const { return hs1.passed && hs2.passed && hs3.passed && hs4.passed; }
};

class HomologicalSystem {
 public:
  /// Validates eagerly; the report is cached and the value is immutable afterwards.
  HomologicalSystem(Algebra algebra, Preorder preorder, std::vector<Representation> delta,
                    SearchOptions options = {})
      : algebra_(std::move(algebra)),
        preorder_(std::move(preorder)),
        delta_(std::move(delta)),
        options_(options) {
    if (delta_.size() != preorder_.size()) {
      throw Error(Errc::PreconditionViolated, "one module per element of Omega is required");
    }
    for (std::size_t i = 0; i < delta_.size(); ++i) {
      auto v = validate_representation(algebra_, delta_[i]);
      if (!v.empty()) throw Error(Errc::InvalidRepresentation, "Delta_" + omega()[i] + ": " + v.front().detail);
    }
    quotient_ = deltafilt::quotient(preorder_);
    linearization_ = linearize(quotient_);
    run_validation();
  }

  const Algebra& algebra() const noexcept { return algebra_; }
  const Preorder& preorder() const noexcept { return preorder_; }
  const std::vector<std::string>& omega() const noexcept { return preorder_.carrier(); }
  std::size_t size() const noexcept { return delta_.size(); }
  const Representation& delta(std::size_t w) const { return delta_[w]; }
  const std::vector<Representation>& deltas() const noexcept { return delta_; }
  std::size_t index_of(const std::string& label) const { return preorder_.index_of(label); }
  const SearchOptions& options() const noexcept { return options_; }

  const QuotientPoset& quotient() const noexcept { return quotient_; }
  const Linearization& linearization() const noexcept { return linearization_; }
  std::size_t class_of(std::size_t w) const { return quotient_.projection[w]; }
  /// Position of ω's class in the linearization.
  std::size_t rank_of(std::size_t w) const { return linearization_.rank(class_of(w)); }

  const ValidationReport& report() const noexcept { return report_; }
  bool is_valid() const noexcept { return report_.passed(); }

  void require_valid() const {
    if (!is_valid()) throw Error(Errc::NotValidated, "the homological system does not satisfy HS1-HS4");
  }

  /// Same system ordered by another linear extension of its quotient.
  HomologicalSystem with_linearization(Linearization l) const {
    if (!extends(l, quotient_)) throw Error(Errc::PreconditionViolated, "linearization does not extend the quotient");
    HomologicalSystem copy = *this;
    copy.linearization_ = std::move(l);
    return copy;
  }

 private:
  void run_validation() {
    const std::size_t n = size();
    ValidationReport& r = report_;

    // HS1: (Ω, ≤) is a nonempty preorder; the Preorder type enforces the axioms.
    if (n == 0) r.hs1.fail({"empty_omega", {}, 0});

    // HS2: nonzero, indecomposable, pairwise non-isomorphic.
    for (std::size_t w = 0; w < n; ++w) {
      if (delta_[w].is_zero()) {
        r.hs2.fail({"zero_module", {omega()[w]}, 0});
        continue;
      }
      IndecomposableResult ind = is_indecomposable(algebra_, delta_[w], options_);
      if (ind.certainty == Certainty::Probable) r.certainty = Certainty::Probable;
      if (!ind.indecomposable) r.hs2.fail({"decomposable", {omega()[w]}, 0});
    }
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b) {
        IsoResult iso = is_isomorphic(algebra_, delta_[a], delta_[b], options_);
        if (iso.verdict == IsoVerdict::ProbablyNot) r.certainty = Certainty::Probable;
        if (iso) r.hs2.fail({"isomorphic", {omega()[a], omega()[b]}, 0});
      }

    // HS3/HS4 over all ordered pairs, including ω = ω'.
    r.hom_dims.assign(n, std::vector<std::size_t>(n, 0));
    r.ext_dims.assign(n, std::vector<std::size_t>(n, 0));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        r.hom_dims[a][b] = hom_dim(algebra_, delta_[a], delta_[b]);
        r.ext_dims[a][b] = ext1_dim(algebra_, delta_[a], delta_[b]);
        if (r.hom_dims[a][b] != 0 && !preorder_.leq(a, b)) {
          r.hs3.fail({"nonzero_hom", {omega()[a], omega()[b]}, r.hom_dims[a][b]});
        }
        if (r.ext_dims[a][b] != 0 && !(preorder_.leq(a, b) && !preorder_.leq(b, a))) {
          r.hs4.fail({"nonzero_ext", {omega()[a], omega()[b]}, r.ext_dims[a][b]});
        }
      }
  }

  Algebra algebra_;
  Preorder preorder_;
  std::vector<Representation> delta_;
  SearchOptions options_;
  QuotientPoset quotient_;
  Linearization linearization_;
  ValidationReport report_;
};

inline const ValidationReport& validate(const HomologicalSystem& s) { return s.report(); }

struct PrimeViolation {
  std::string axiom;                 // "HS3'" or "HS4'"
  std::size_t linearization = 0;     // index into the enumerated extensions
  std::vector<std::string> omegas;
};

struct PrimeReport {
  std::size_t linearizations = 0;
  bool hs3_prime = true;
  bool hs4_prime = true;
  std::vector<PrimeViolation> violations;
  bool agrees_with_validate = true;

  bool passed() const { return hs3_prime && hs4_prime; }
};

/// HS3'/HS4' checked against every linear extension of the quotient.
inline PrimeReport validate_prime(const HomologicalSystem& s, std::size_t cap) {
  PrimeReport out;
  const auto lins = enumerate_linearizations(s.quotient(), cap);
  out.linearizations = lins.size();
  const auto& r = s.report();
  for (std::size_t li = 0; li < lins.size(); ++li) {
    const Linearization& l = lins[li];
    for (std::size_t a = 0; a < s.size(); ++a)
      for (std::size_t b = 0; b < s.size(); ++b) {
        const std::size_t ra = l.rank(s.class_of(a)), rb = l.rank(s.class_of(b));
        if (r.hom_dims[a][b] != 0 && !(ra <= rb)) {
          out.hs3_prime = false;
          out.violations.push_back({"HS3'", li, {s.omega()[a], s.omega()[b]}});
        }
        if (r.ext_dims[a][b] != 0 && !(ra < rb)) {
          out.hs4_prime = false;
          out.violations.push_back({"HS4'", li, {s.omega()[a], s.omega()[b]}});
        }
      }
  }
  out.agrees_with_validate = (r.hs3.passed == out.hs3_prime) && (r.hs4.passed == out.hs4_prime);
  return out;
}

/// Ω = vertices, Δ_v = P_v, ≤ = transitive closure of Hom(P_i, P_j) ≠ 0.
inline HomologicalSystem projective_system(const Algebra& alg, const SearchOptions& opts = {}) {
  const auto& verts = alg.quiver().vertices();
  std::vector<Representation> delta;
  for (std::size_t v = 0; v < verts.size(); ++v) delta.push_back(projective(alg, v).rep);
  std::vector<std::pair<std::string, std::string>> pairs;
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = 0; j < verts.size(); ++j)
      if (i != j && hom_dim(alg, delta[i], delta[j]) != 0) pairs.emplace_back(verts[i], verts[j]);
  return HomologicalSystem(alg, close_transitive(verts, pairs), std::move(delta), opts);
}

/// Ω = vertices, Δ_v = S_v with the given order pairs.
inline HomologicalSystem simple_system(const Algebra& alg, const std::vector<std::pair<std::string, std::string>>& pairs,
                                       const SearchOptions& opts = {}) {
  const auto& verts = alg.quiver().vertices();
  std::vector<Representation> delta;
  for (std::size_t v = 0; v < verts.size(); ++v) delta.push_back(simple(alg, v));
  return HomologicalSystem(alg, close_transitive(verts, pairs), std::move(delta), opts);
}

struct ExtPattern {
  std::vector<std::string> omega;
  Relation hom_nonzero;
  Relation ext_nonzero;
  QuotientPoset quotient;
  Linearization linearization;

  std::size_t rank_of(std::size_t w) const { return linearization.rank(quotient.projection[w]); }
  std::size_t index_of(const std::string& label) const {
    for (std::size_t i = 0; i < omega.size(); ++i)
      if (omega[i] == label) return i;
    throw Error(Errc::UnknownLabel, "'" + label + "' is not in Omega");
  }
};

inline ExtPattern ext_pattern(const HomologicalSystem& s) {
  s.require_valid();
  ExtPattern p{s.omega(), Relation(s.size()), Relation(s.size()), s.quotient(), s.linearization()};
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = 0; b < s.size(); ++b) {
      p.hom_nonzero.set(a, b, s.report().hom_dims[a][b] != 0);
      p.ext_nonzero.set(a, b, s.report().ext_dims[a][b] != 0);
    }
  return p;
}

}  // namespace deltafilt
