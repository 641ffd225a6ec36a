#pragma once

// JSON workspace loading and report serialization.
//
// A workspace is one document holding an algebra plus named modules,
// systems, filtrations, idempotents and symbolic filtrations; see
// docs/workspace.md for the schema. Parse and reference errors raise
// Errc::ParseError (or the more specific algebra/label errors).

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "deltafilt/decompose.hpp"
#include "deltafilt/error.hpp"
#include "deltafilt/filt.hpp"
#include "deltafilt/gfmat.hpp"
#include "deltafilt/hsys.hpp"
#include "deltafilt/preord.hpp"
#include "deltafilt/quiver.hpp"
#include "deltafilt/representation.hpp"
#include "deltafilt/symb.hpp"

namespace deltafilt::io {

using json = nlohmann::ordered_json;

// --- primitive conversions --------------------------------------------------

/// Labels may be written as strings or integers.
inline std::string label(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw Error(Errc::ParseError, "expected a label (string or integer), got " + j.dump());
}

/// Numeric labels are written back as numbers.
inline json label_json(const std::string& s) {
  if (!s.empty() && s.size() < 18 && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }) &&
      (s == "0" || s[0] != '0')) {
    return json(std::stoll(s));
  }
  return json(s);
}

inline const json& need(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw Error(Errc::ParseError, where + ": missing \"" + key + "\"");
  return j.at(key);
}

inline std::uint64_t count(const json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 0) {
    throw Error(Errc::ParseError, where + ": expected a nonnegative integer, got " + j.dump());
  }
  return j.get<std::uint64_t>();
}

/// Matrix as an array of rows; `cols` is used when there are no rows.
inline Mat matrix(const Field& f, const json& j, std::size_t rows, std::size_t cols, const std::string& where) {
  if (!j.is_array()) throw Error(Errc::ParseError, where + ": matrix must be an array of rows");
  std::vector<std::vector<std::int64_t>> data;
  for (const auto& r : j) {
    if (!r.is_array()) throw Error(Errc::ParseError, where + ": matrix row must be an array");
    std::vector<std::int64_t> row;
    for (const auto& x : r) {
      if (!x.is_number_integer()) throw Error(Errc::ParseError, where + ": matrix entries must be integers");
      row.push_back(x.get<std::int64_t>());
    }
    if (row.size() != cols) {
      throw Error(Errc::ParseError, where + ": expected rows of length " + std::to_string(cols));
    }
    data.push_back(std::move(row));
  }
  if (data.size() != rows) throw Error(Errc::ParseError, where + ": expected " + std::to_string(rows) + " rows");
  return Mat::from_rows(f, data, cols);
}

inline json to_json(const Mat& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(m(i, j));
    rows.push_back(std::move(r));
  }
  return rows;
}

// --- algebra and preorders --------------------------------------------------

inline Algebra parse_algebra(const json& j) {
  const std::string where = "algebra";
  std::vector<std::string> verts;
  for (const auto& v : need(j, "vertices", where)) verts.push_back(label(v));
  std::vector<std::tuple<std::string, std::string, std::string>> arrows;
  if (j.contains("arrows")) {
    for (const auto& a : j.at("arrows"))
      arrows.emplace_back(label(need(a, "name", "arrow")), label(need(a, "from", "arrow")), label(need(a, "to", "arrow")));
  }
  Quiver q(verts, arrows);
  Field f(count(need(j, "p", where), "p"));
  if (!j.contains("nilpotency_bound")) {
    throw Error(Errc::InvalidAlgebra, "algebra: \"nilpotency_bound\" is required");
  }
  const std::size_t bound = count(j.at("nilpotency_bound"), "nilpotency_bound");
  std::vector<PathRelation> rels;
  if (j.contains("relations")) {
    for (const auto& r : j.at("relations")) {
      PathRelation rel;
      for (const auto& t : r) {
        const json& c = need(t, "coeff", "relation term");
        if (!c.is_number_integer()) throw Error(Errc::ParseError, "relation coefficient must be an integer");
        Path p;
        std::vector<std::string> names;
        for (const auto& n : need(t, "path", "relation term")) names.push_back(label(n));
        if (names.empty()) throw Error(Errc::InvalidAlgebra, "relation paths must have length >= 2");
        for (const auto& n : names) p.arrows.push_back(q.arrow_index(n));
        p.source = q.arrow(p.arrows.front()).source;
        p.target = q.arrow(p.arrows.back()).target;
        for (std::size_t k = 1; k < p.arrows.size(); ++k)
          if (q.arrow(p.arrows[k - 1]).target != q.arrow(p.arrows[k]).source) {
            throw Error(Errc::InvalidAlgebra, "relation path is not composable");
          }
        rel.push_back({f.reduce(c.get<std::int64_t>()), std::move(p)});
      }
      rels.push_back(std::move(rel));
    }
  }
  return Algebra(std::move(q), f, std::move(rels), bound);
}

inline json to_json(const Algebra& alg) {
  json j;
  json verts = json::array();
  for (const auto& v : alg.quiver().vertices()) verts.push_back(label_json(v));
  j["vertices"] = verts;
  json arrows = json::array();
  for (const auto& a : alg.quiver().arrows())
    arrows.push_back({{"name", a.name},
                      {"from", label_json(alg.quiver().vertices()[a.source])},
                      {"to", label_json(alg.quiver().vertices()[a.target])}});
  j["arrows"] = arrows;
  j["p"] = alg.field().p();
  json rels = json::array();
  for (const auto& rel : alg.relations()) {
    json terms = json::array();
    for (const auto& t : rel) {
      json path = json::array();
      for (auto a : t.path.arrows) path.push_back(alg.quiver().arrow(a).name);
      terms.push_back({{"coeff", t.coeff}, {"path", path}});
    }
    rels.push_back(terms);
  }
  j["relations"] = rels;
  j["nilpotency_bound"] = alg.nilpotency_bound();
  return j;
}

using LabelPairs = std::vector<std::pair<std::string, std::string>>;

inline LabelPairs parse_pairs(const json& j, const std::string& where) {
  LabelPairs out;
  if (!j.is_array()) throw Error(Errc::ParseError, where + ": pairs must be an array");
  for (const auto& p : j) {
    if (!p.is_array() || p.size() != 2) throw Error(Errc::ParseError, where + ": each pair must have two labels");
    out.emplace_back(label(p[0]), label(p[1]));
  }
  return out;
}

/// {"carrier": [...], "pairs": [[a, b], ...]}
inline Preorder parse_preorder(const json& j) {
  std::vector<std::string> carrier;
  for (const auto& c : need(j, "carrier", "preorder")) carrier.push_back(label(c));
  LabelPairs pairs = j.contains("pairs") ? parse_pairs(j.at("pairs"), "preorder") : LabelPairs{};
  return close_transitive(std::move(carrier), pairs);
}

// --- workspace ---------------------------------------------------------------

struct FiltrationSpec {
  std::string system;
  std::string module;
  std::vector<Submodule> chain;  // normalized: starts at 0, ends at the module
  std::optional<std::vector<FactorList>> factors;
};

struct IdempotentSpec {
  std::string module;
  Hom map;
};

struct SymbolicSpec {
  std::string system;
  SymbolicFiltration filtration;
};

struct Workspace {
  std::optional<Algebra> algebra;
  std::optional<Preorder> preorder;
  std::map<std::string, Representation> modules;
  std::map<std::string, HomologicalSystem> systems;
  std::map<std::string, FiltrationSpec> filtrations;
  std::map<std::string, IdempotentSpec> idempotents;
  std::map<std::string, SymbolicSpec> symbolic;

  const Algebra& alg() const {
    if (!algebra) throw Error(Errc::ParseError, "workspace has no \"algebra\"");
    return *algebra;
  }

  template <typename T>
  static const T& lookup(const std::map<std::string, T>& m, const std::string& name, const char* kind) {
    auto it = m.find(name);
    if (it == m.end()) throw Error(Errc::ParseError, std::string("unknown ") + kind + " '" + name + "'");
    return it->second;
  }

  const Representation& module(const std::string& n) const { return lookup(modules, n, "module"); }
  const HomologicalSystem& system(const std::string& n) const { return lookup(systems, n, "system"); }
  const FiltrationSpec& filtration(const std::string& n) const { return lookup(filtrations, n, "filtration"); }
  const IdempotentSpec& idempotent(const std::string& n) const { return lookup(idempotents, n, "idempotent"); }
  const SymbolicSpec& symbolic_filtration(const std::string& n) const { return lookup(symbolic, n, "symbolic filtration"); }

  /// The only system, or the named one.
  const HomologicalSystem& system_or_default(const std::optional<std::string>& name) const {
    if (name) return system(*name);
    if (systems.size() != 1) throw Error(Errc::ParseError, "several systems present; choose one with --system");
    return systems.begin()->second;
  }
  std::string system_name(const std::optional<std::string>& name) const {
    if (name) return *name;
    if (systems.size() != 1) throw Error(Errc::ParseError, "several systems present; choose one with --system");
    return systems.begin()->first;
  }
};

namespace detail {

class ModuleResolver {
 public:
  ModuleResolver(const Algebra& alg, const json& specs) : alg_(alg), specs_(specs) {}

  Representation resolve_name(const std::string& name) {
    if (auto it = done_.find(name); it != done_.end()) return it->second;
    if (!specs_.is_object() || !specs_.contains(name)) throw Error(Errc::ParseError, "unknown module '" + name + "'");
    if (!active_.insert(name).second) throw Error(Errc::ParseError, "module '" + name + "' refers to itself");
    Representation r = resolve(specs_.at(name), "module '" + name + "'");
    active_.erase(name);
    done_.emplace(name, r);
    return r;
  }

  Representation resolve(const json& j, const std::string& where) {
    const Quiver& q = alg_.quiver();
    if (j.is_string() || j.is_number_integer()) return resolve_name(label(j));
    if (!j.is_object()) throw Error(Errc::ParseError, where + ": module must be a name or an object");
    if (j.contains("simple")) return simple(alg_, q.vertex(label(j.at("simple"))));
    if (j.contains("projective")) return projective(alg_, q.vertex(label(j.at("projective")))).rep;
    if (j.contains("direct_sum")) {
      std::vector<Representation> parts;
      for (const auto& p : j.at("direct_sum")) parts.push_back(resolve(p, where));
      return direct_sum(alg_, parts).rep;
    }
    std::vector<std::size_t> dims(q.num_vertices(), 0);
    const json& d = need(j, "dims", where);
    if (d.is_array()) {
      if (d.size() != dims.size()) throw Error(Errc::ParseError, where + ": dims array has the wrong length");
      for (std::size_t v = 0; v < dims.size(); ++v) dims[v] = count(d[v], where);
    } else if (d.is_object()) {
      for (const auto& [k, v] : d.items()) dims[q.vertex(k)] = count(v, where);
    } else {
      throw Error(Errc::ParseError, where + ": dims must be an object or an array");
    }
    Representation m = zero_maps(alg_, dims);
    if (j.contains("maps")) {
      for (const auto& [name, mat] : j.at("maps").items()) {
        const std::size_t a = q.arrow_index(name);
        const auto& arr = q.arrow(a);
        m.maps[a] = matrix(alg_.field(), mat, dims[arr.target], dims[arr.source], where + " arrow " + name);
      }
    }
    auto viol = validate_representation(alg_, m);
    if (!viol.empty()) throw Error(Errc::InvalidRepresentation, where + ": " + viol.front().detail);
    return m;
  }

 private:
  const Algebra& alg_;
  const json& specs_;
  std::map<std::string, Representation> done_;
  std::set<std::string> active_;
};

/// Per-vertex subspaces from {"spaces": {v: rows}} or {"generators": {v: rows}}.
inline Submodule parse_submodule(const Algebra& alg, const Representation& m, const json& j, const std::string& where) {
  const Quiver& q = alg.quiver();
  const bool gens = j.is_object() && j.contains("generators");
  const json& spec = gens ? j.at("generators") : need(j, "spaces", where);
  if (!spec.is_object()) throw Error(Errc::ParseError, where + ": spaces must map vertices to row lists");
  std::vector<Mat> cols;
  for (std::size_t v = 0; v < q.num_vertices(); ++v) cols.emplace_back(alg.field(), m.dims[v], 0);
  for (const auto& [k, rows] : spec.items()) {
    const std::size_t v = q.vertex(k);
    if (!rows.is_array()) throw Error(Errc::ParseError, where + ": vertex entry must be a list of vectors");
    cols[v] = matrix(alg.field(), rows, rows.size(), m.dims[v], where + " vertex " + k).transpose();
  }
  if (gens) return sub_generated(alg, m, cols);
  Submodule s;
  for (const auto& c : cols) s.spaces.push_back(Subspace::span(c));
  return s;
}

inline Hom parse_hom(const Algebra& alg, const Representation& src, const Representation& dst, const json& j,
                     const std::string& where) {
  const Quiver& q = alg.quiver();
  Hom h = zero_hom(src, dst);
  if (!j.is_object()) throw Error(Errc::ParseError, where + ": expected {vertex: matrix}");
  for (const auto& [k, mat] : j.items()) {
    const std::size_t v = q.vertex(k);
    h.comps[v] = matrix(alg.field(), mat, dst.dims[v], src.dims[v], where + " vertex " + k);
  }
  return h;
}

inline Cardinal parse_cardinal(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Cardinal::finite(count(j, where));
  if (j.is_object() && j.contains("finite")) return Cardinal::finite(count(j.at("finite"), where));
  if (j.is_object() && j.contains("aleph")) return Cardinal::aleph(count(j.at("aleph"), where));
  throw Error(Errc::ParseError, where + ": cardinal must be {\"finite\": n} or {\"aleph\": k}");
}

inline HomologicalSystem parse_system(const Algebra& alg, ModuleResolver& mods, const json& j, const SearchOptions& opts,
                                      const std::string& where) {
  if (j.contains("builtin")) {
    const std::string kind = label(j.at("builtin"));
    if (kind == "projectives") return projective_system(alg, opts);
    if (kind == "simples") {
      LabelPairs pairs = j.contains("preorder_pairs") ? parse_pairs(j.at("preorder_pairs"), where) : LabelPairs{};
      return simple_system(alg, pairs, opts);
    }
    throw Error(Errc::ParseError, where + ": unknown builtin '" + kind + "'");
  }
  std::vector<std::string> omega;
  for (const auto& w : need(j, "omega", where)) omega.push_back(label(w));
  LabelPairs pairs = j.contains("preorder_pairs") ? parse_pairs(j.at("preorder_pairs"), where) : LabelPairs{};
  const json& delta = need(j, "delta", where);
  std::vector<Representation> reps;
  for (const auto& w : omega) {
    if (!delta.contains(w)) throw Error(Errc::ParseError, where + ": no Delta given for '" + w + "'");
    reps.push_back(mods.resolve(delta.at(w), where + " Delta_" + w));
  }
  return HomologicalSystem(alg, close_transitive(omega, pairs), std::move(reps), opts);
}

}  // namespace detail

/// Normalizes a chain so it starts at 0 and ends at the whole module.
inline std::vector<Submodule> normalize_chain(const Representation& m, std::vector<Submodule> chain) {
  if (chain.empty() || !chain.front().is_zero()) chain.insert(chain.begin(), zero_sub(m));
  if (!is_full(chain.back(), m)) chain.push_back(full_sub(m));
  if (chain.size() == 2 && m.is_zero()) chain.pop_back();
  return chain;
}

inline Workspace parse_workspace(const json& doc, const SearchOptions& opts = {}) {
  if (!doc.is_object()) throw Error(Errc::ParseError, "workspace must be a JSON object");
  Workspace ws;
  if (doc.contains("preorder")) ws.preorder = parse_preorder(doc.at("preorder"));
  if (doc.contains("carrier")) ws.preorder = parse_preorder(doc);
  if (!doc.contains("algebra")) return ws;
  ws.algebra = parse_algebra(doc.at("algebra"));
  const Algebra& alg = *ws.algebra;

  const json empty = json::object();
  const json& mod_specs = doc.contains("modules") ? doc.at("modules") : empty;
  detail::ModuleResolver mods(alg, mod_specs);
  for (const auto& [name, spec] : mod_specs.items()) ws.modules.emplace(name, mods.resolve_name(name));

  // A document that is itself a system description.
  if (doc.contains("omega")) ws.systems.emplace("default", detail::parse_system(alg, mods, doc, opts, "system"));
  if (doc.contains("systems"))
    for (const auto& [name, spec] : doc.at("systems").items())
      ws.systems.emplace(name, detail::parse_system(alg, mods, spec, opts, "system '" + name + "'"));

  if (doc.contains("filtrations")) {
    for (const auto& [name, spec] : doc.at("filtrations").items()) {
      const std::string where = "filtration '" + name + "'";
      FiltrationSpec fs;
      fs.system = spec.contains("system") ? label(spec.at("system")) : ws.system_name(std::nullopt);
      ws.system(fs.system);
      fs.module = label(need(spec, "module", where));
      const Representation& m = ws.module(fs.module);
      std::vector<Submodule> chain;
      for (const auto& step : need(spec, "chain", where)) chain.push_back(detail::parse_submodule(alg, m, step, where));
      fs.chain = normalize_chain(m, std::move(chain));
      if (spec.contains("factors")) {
        const HomologicalSystem& s = ws.system(fs.system);
        std::vector<FactorList> fl;
        for (const auto& stepf : spec.at("factors")) {
          std::vector<std::size_t> omegas;
          for (const auto& e : stepf) {
            const std::size_t w = s.index_of(label(need(e, "omega", where)));
            const std::size_t mult = e.contains("mult") ? count(e.at("mult"), where) : 1;
            for (std::size_t k = 0; k < mult; ++k) omegas.push_back(w);
          }
          fl.push_back(deltafilt::detail::aggregate(omegas));
        }
        fs.factors = std::move(fl);
      }
      ws.filtrations.emplace(name, std::move(fs));
    }
  }

  if (doc.contains("idempotents")) {
    for (const auto& [name, spec] : doc.at("idempotents").items()) {
      const std::string where = "idempotent '" + name + "'";
      IdempotentSpec is;
      is.module = label(need(spec, "module", where));
      const Representation& m = ws.module(is.module);
      is.map = detail::parse_hom(alg, m, m, need(spec, "maps", where), where);
      ws.idempotents.emplace(name, std::move(is));
    }
  }

  if (doc.contains("symbolic")) {
    for (const auto& [name, spec] : doc.at("symbolic").items()) {
      const std::string where = "symbolic filtration '" + name + "'";
      SymbolicSpec ss;
      ss.system = spec.contains("system") ? label(spec.at("system")) : ws.system_name(std::nullopt);
      const HomologicalSystem& s = ws.system(ss.system);
      for (const auto& st : need(spec, "steps", where))
        ss.filtration.steps.push_back(
            {s.index_of(label(need(st, "omega", where))), detail::parse_cardinal(need(st, "card", where), where)});
      ws.symbolic.emplace(name, std::move(ss));
    }
  }
  return ws;
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, path + ": " + e.what());
  }
}

/// Merges several workspace documents. Named sections are combined entry by
/// entry; any other key must agree wherever it appears.
inline json merge_documents(const std::vector<std::pair<std::string, json>>& docs) {
  static const std::set<std::string> sections{"modules", "systems", "filtrations", "idempotents", "symbolic"};
  json out = json::object();
  for (const auto& [origin, doc] : docs) {
    if (!doc.is_object()) throw Error(Errc::ParseError, origin + ": workspace must be a JSON object");
    for (const auto& [key, value] : doc.items()) {
      if (sections.count(key)) {
        if (!value.is_object()) throw Error(Errc::ParseError, origin + ": \"" + key + "\" must be an object");
        json& target = out[key];
        if (target.is_null()) target = json::object();
        for (const auto& [name, entry] : value.items()) {
          if (target.contains(name)) throw Error(Errc::ParseError, origin + ": duplicate " + key + " entry '" + name + "'");
          target[name] = entry;
        }
      } else if (out.contains(key) && out.at(key) != value) {
        throw Error(Errc::ParseError, origin + ": \"" + key + "\" conflicts with an earlier file");
      } else {
        out[key] = value;
      }
    }
  }
  return out;
}

/// Reads one JSON file, or every *.json file of a directory in name order.
inline json read_workspace_document(const std::string& path) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (!fs::is_directory(path, ec)) return read_json_file(path);
  std::vector<std::string> files;
  for (const auto& entry : fs::directory_iterator(path, ec))
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path().string());
  if (ec) throw Error(Errc::ParseError, "cannot read directory '" + path + "'");
  std::sort(files.begin(), files.end());
  std::vector<std::pair<std::string, json>> docs;
  for (const auto& f : files) docs.emplace_back(f, read_json_file(f));
  return merge_documents(docs);
}

inline Workspace load_workspace(const std::string& path, const SearchOptions& opts = {}) {
  return parse_workspace(read_workspace_document(path), opts);
}

// --- report serialization ---------------------------------------------------

inline json to_json(const Representation& m, const Algebra& alg) {
  json dims = json::object();
  for (std::size_t v = 0; v < m.dims.size(); ++v) dims[alg.quiver().vertices()[v]] = m.dims[v];
  json maps = json::object();
  for (std::size_t a = 0; a < m.maps.size(); ++a) maps[alg.quiver().arrow(a).name] = to_json(m.maps[a]);
  return {{"dims", dims}, {"maps", maps}};
}

/// Rows are basis vectors.
inline json to_json(const Submodule& s, const Algebra& alg) {
  json spaces = json::object();
  for (std::size_t v = 0; v < s.spaces.size(); ++v)
    if (s.spaces[v].dim() > 0) spaces[alg.quiver().vertices()[v]] = to_json(s.spaces[v].basis().transpose());
  return {{"spaces", spaces}};
}

inline json to_json(const Hom& h, const Algebra& alg) {
  json j = json::object();
  for (std::size_t v = 0; v < h.comps.size(); ++v) j[alg.quiver().vertices()[v]] = to_json(h.comps[v]);
  return j;
}

inline json factors_json(const HomologicalSystem& s, const FactorList& fl) {
  json arr = json::array();
  for (const auto& e : fl) arr.push_back({{"omega", label_json(s.omega()[e.omega])}, {"mult", e.mult}});
  return arr;
}

inline json ell_json(const HomologicalSystem& s, const MultiplicityMap& m) {
  json j = json::object();
  for (std::size_t w = 0; w < m.size(); ++w) j[s.omega()[w]] = m[w];
  return j;
}

inline json class_json(const HomologicalSystem& s, std::size_t cls) {
  json arr = json::array();
  for (auto w : s.quotient().classes[cls]) arr.push_back(label_json(s.omega()[w]));
  return arr;
}

inline json order_vector_json(const HomologicalSystem& s, const std::vector<std::size_t>& h) {
  json arr = json::array();
  for (auto c : h) arr.push_back(class_json(s, c));
  return arr;
}

inline json to_json(const HomologicalSystem& s, const Filtration& f) {
  json chain = json::array();
  for (const auto& c : f.chain) chain.push_back(to_json(c, s.algebra()));
  json factors = json::array();
  for (const auto& fl : f.factors) factors.push_back(factors_json(s, fl));
  return {{"chain", chain}, {"factors", factors}, {"ell", ell_json(s, ell(s, f))}};
}

inline json to_json(const HomologicalSystem& s, const OrderedFiltration& w) {
  json layers = json::array();
  for (const auto& l : w.layers)
    layers.push_back(
        {{"class", class_json(s, l.cls)}, {"top", to_json(l.top, s.algebra())}, {"factors", factors_json(s, l.factors)}});
  return {{"layers", layers}, {"ell", ell_json(s, ell(s, w))}};
}

inline json to_json(const Cardinal& c) {
  return c.is_finite() ? json{{"finite", c.value()}} : json{{"aleph", c.value()}};
}

inline json to_json(const HomologicalSystem& s, const SymbolicFiltration& f) {
  json steps = json::array();
  for (const auto& st : f.steps) steps.push_back({{"omega", label_json(s.omega()[st.omega])}, {"card", to_json(st.card)}});
  return {{"steps", steps}};
}

inline json to_json(const AxiomReport& r) {
  json w = json::array();
  for (const auto& x : r.witnesses) {
    json omegas = json::array();
    for (const auto& o : x.omegas) omegas.push_back(label_json(o));
    w.push_back({{"kind", x.kind}, {"omegas", omegas}, {"dim", x.dim}});
  }
  return {{"passed", r.passed}, {"witnesses", w}};
}

inline json to_json(const HomologicalSystem& s, const ValidationReport& r) {
  json matrix_h = json::object(), matrix_e = json::object();
  for (std::size_t a = 0; a < s.size(); ++a) {
    json hr = json::object(), er = json::object();
    for (std::size_t b = 0; b < s.size(); ++b) {
      hr[s.omega()[b]] = r.hom_dims[a][b];
      er[s.omega()[b]] = r.ext_dims[a][b];
    }
    matrix_h[s.omega()[a]] = hr;
    matrix_e[s.omega()[a]] = er;
  }
  return {{"passed", r.passed()},
          {"HS1", to_json(r.hs1)},
          {"HS2", to_json(r.hs2)},
          {"HS3", to_json(r.hs3)},
          {"HS4", to_json(r.hs4)},
          {"hom_dims", matrix_h},
          {"ext_dims", matrix_e},
          {"certainty", r.certainty == Certainty::Certain ? "certain" : "probable"}};
}

inline json linearization_json(const std::vector<std::string>& carrier, const QuotientPoset& q,
                               const Linearization& l) {
  json arr = json::array();
  for (auto c : l.order()) {
    json cls = json::array();
    for (auto w : q.classes[c]) cls.push_back(label_json(carrier[w]));
    arr.push_back(cls);
  }
  return arr;
}

}  // namespace deltafilt::io
