#pragma once

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "deltafilt/json_io.hpp"

namespace deltafilt::cli {

using io::json;

enum ExitCode : int { kPass = 0, kFail = 1, kInputError = 2 };

struct Outcome {
  json report = json::object();
  std::vector<std::string> summary;
  int code = kPass;
};

/// Raised for problems with the input files or command-line names.
struct InputError {
  std::string message;
};

struct Options {
  std::string workspace;
  std::optional<std::string> system, module, filtration, idempotent, symbolic, check_unique, out;
  std::vector<std::string> positional;
  bool pretty = false;
  bool no_timestamp = false;
  bool all_linearizations = false;
  bool enumerate = false;
  bool euler = false;
  bool q_lex = false;
  std::size_t cap = 720;
  std::optional<std::uint64_t> divisibility;
  std::vector<std::uint64_t> inverter;
};

namespace detail {

inline SearchOptions search_options() {
  SearchOptions opts;
  if (const char* env = std::getenv("DELTAFILT_SEED")) {
    try {
      std::size_t pos = 0;
      opts.seed = std::stoull(env, &pos, 0);
      if (pos != std::string(env).size()) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      throw InputError{std::string("DELTAFILT_SEED is not an integer: '") + env + "'"};
    }
  }
  return opts;
}

inline io::Workspace load(const Options& o) {
  if (o.workspace.empty()) throw InputError{"no workspace file given"};
  try {
    return io::load_workspace(o.workspace, search_options());
  } catch (const Error& e) {
    throw InputError{e.what()};
  }
}

inline std::string timestamp() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

inline std::string class_label(const HomologicalSystem& s, std::size_t cls) {
  std::string out = "{";
  for (auto w : s.quotient().classes[cls]) out += (out.size() > 1 ? "," : "") + s.omega()[w];
  return out + "}";
}

inline std::string classes_str(const HomologicalSystem& s, const std::vector<std::size_t>& h) {
  std::string out = "(";
  for (std::size_t i = 0; i < h.size(); ++i) out += (i ? " " : "") + class_label(s, h[i]);
  return out + ")";
}

inline std::string ell_str(const HomologicalSystem& s, const MultiplicityMap& m) {
  std::string out;
  for (std::size_t w = 0; w < m.size(); ++w) out += (w ? " " : "") + s.omega()[w] + ":" + std::to_string(m[w]);
  return out;
}

inline std::string dims_str(const std::vector<std::size_t>& d) {
  std::string out = "(";
  for (std::size_t i = 0; i < d.size(); ++i) out += (i ? "," : "") + std::to_string(d[i]);
  return out + ")";
}

inline json dims_json(const Algebra& alg, const std::vector<std::size_t>& d) {
  json j = json::object();
  for (std::size_t v = 0; v < d.size(); ++v) j[alg.quiver().vertices()[v]] = d[v];
  return j;
}

inline Filtration load_filtration(const io::Workspace& ws, const HomologicalSystem& s, const std::string& name) {
  const io::FiltrationSpec& fs = ws.filtration(name);
  return validate_filtration(s, ws.module(fs.module), fs.chain, fs.factors);
}

}  // namespace detail

// --- commands ----------------------------------------------------------------

inline Outcome cmd_validate(const io::Workspace& ws, const Options& o) {
  Outcome out;
  const HomologicalSystem& s = ws.system_or_default(o.system);
  const ValidationReport& r = s.report();
  out.report = io::to_json(s, r);
  out.report["system"] = ws.system_name(o.system);
  json classes = json::array();
  for (std::size_t c = 0; c < s.quotient().size(); ++c) classes.push_back(io::class_json(s, c));
  out.report["classes"] = classes;
  out.report["linearization"] = io::order_vector_json(s, s.linearization().order());
  bool ok = r.passed();
  for (const AxiomReport* a : {&r.hs1, &r.hs2, &r.hs3, &r.hs4}) {
    out.summary.push_back(a->axiom + (a->passed ? " pass" : " FAIL"));
    for (const auto& w : a->witnesses) {
      std::string line = "  " + w.kind + " (";
      for (std::size_t i = 0; i < w.omegas.size(); ++i) line += (i ? "," : "") + w.omegas[i];
      out.summary.push_back(line + ") dim " + std::to_string(w.dim));
    }
  }
  if (o.all_linearizations) {
    try {
      PrimeReport pr = validate_prime(s, o.cap);
      json viol = json::array();
      for (const auto& v : pr.violations) {
        json om = json::array();
        for (const auto& x : v.omegas) om.push_back(io::label_json(x));
        viol.push_back({{"axiom", v.axiom}, {"linearization", v.linearization}, {"omegas", om}});
      }
      out.report["all_linearizations"] = {{"count", pr.linearizations},
                                          {"hs3_prime", pr.hs3_prime},
                                          {"hs4_prime", pr.hs4_prime},
                                          {"agrees_with_validate", pr.agrees_with_validate},
                                          {"violations", viol}};
      out.summary.push_back("all " + std::to_string(pr.linearizations) + " linearizations: " +
                            (pr.passed() ? "pass" : "FAIL"));
      ok = ok && pr.passed() && pr.agrees_with_validate;
    } catch (const Error& e) {
      if (e.code() != Errc::CapExceeded) throw;
      out.report["all_linearizations"] = {{"error", e.what()}};
      out.summary.push_back(e.what());
      ok = false;
    }
  }
  out.report["passed"] = ok;
  out.code = ok ? kPass : kFail;
  return out;
}

inline Outcome cmd_linearize(const Options& o) {
  Outcome out;
  std::vector<std::string> carrier;
  QuotientPoset q;
  std::optional<Linearization> fixed;

  if (o.divisibility && !o.inverter.empty()) throw InputError{"--divisibility and --inverter are exclusive"};
  if (o.q_lex && !o.divisibility) throw InputError{"--q-lex needs --divisibility N"};
  if (!o.inverter.empty()) {
    const std::uint64_t n = o.inverter[0], m = o.inverter[1], bound = o.inverter[2];
    Preorder p = divisibility(bound);
    carrier = p.carrier();
    q = quotient(p);
    InverterResult r = inverter_linearization(n, m, bound);
    out.report["inverter"] = {{"n", n}, {"m", m}, {"gcd", r.gcd}, {"n_reduced", r.n_reduced},
                              {"m_reduced", r.m_reduced}, {"image", r.image},
                              {"n_before_m", r.order.precedes(n - 1, m - 1)}};
    fixed = r.order;
  } else if (o.divisibility) {
    Preorder p = divisibility(*o.divisibility);
    carrier = p.carrier();
    q = quotient(p);
    if (o.q_lex) fixed = q_lex_linearization(*o.divisibility);
  } else {
    io::Workspace ws = detail::load(o);
    if (ws.preorder && !o.system) {
      carrier = ws.preorder->carrier();
      q = quotient(*ws.preorder);
    } else {
      const HomologicalSystem& s = ws.system_or_default(o.system);
      carrier = s.omega();
      q = s.quotient();
    }
  }

  json classes = json::array();
  for (const auto& c : q.classes) {
    json cls = json::array();
    for (auto w : c) cls.push_back(io::label_json(carrier[w]));
    classes.push_back(cls);
  }
  out.report["classes"] = classes;

  auto flat = [&](const Linearization& l) {
    std::string s;
    for (auto c : l.order()) {
      std::string cls;
      for (auto w : q.classes[c]) cls += (cls.empty() ? "" : "~") + carrier[w];
      s += (s.empty() ? "" : ",") + cls;
    }
    return s;
  };

  bool ok = true;
  if (o.enumerate) {
    try {
      auto all = enumerate_linearizations(q, o.cap);
      json arr = json::array();
      for (const auto& l : all) {
        ok = ok && extends(l, q);
        arr.push_back(io::linearization_json(carrier, q, l));
        out.summary.push_back(flat(l));
      }
      out.report["count"] = all.size();
      out.report["linearizations"] = arr;
      out.summary.insert(out.summary.begin(), std::to_string(all.size()) + " linearization(s)");
    } catch (const Error& e) {
      if (e.code() != Errc::CapExceeded) throw;
      out.report["error"] = e.what();
      out.summary.push_back(e.what());
      ok = false;
    }
  } else {
    Linearization l = fixed ? *fixed : linearize(q);
    ok = extends(l, q);
    out.report["linearization"] = io::linearization_json(carrier, q, l);
    out.summary.push_back(flat(l));
  }
  out.report["extends"] = ok;
  out.code = ok ? kPass : kFail;
  return out;
}

inline std::pair<std::string, std::string> module_pair(const Options& o) {
  if (o.positional.size() != 2) throw InputError{"expected two module names"};
  return {o.positional[0], o.positional[1]};
}

inline Outcome cmd_hom(const io::Workspace& ws, const Options& o) {
  Outcome out;
  const auto [mn, nn] = module_pair(o);
  const Algebra& alg = ws.alg();
  HomSpace hs = hom_basis(alg, ws.module(mn), ws.module(nn));
  json basis = json::array();
  for (const auto& h : hs.basis) basis.push_back(io::to_json(h, alg));
  out.report = {{"from", mn}, {"to", nn}, {"dim", hs.dim()}, {"basis", basis}};
  out.summary.push_back("dim Hom(" + mn + ", " + nn + ") = " + std::to_string(hs.dim()));
  return out;
}

inline Outcome cmd_ext(const io::Workspace& ws, const Options& o) {
  Outcome out;
  const auto [mn, nn] = module_pair(o);
  const Algebra& alg = ws.alg();
  const Representation& m = ws.module(mn);
  const Representation& n = ws.module(nn);
  const std::size_t ext = ext1_dim(alg, m, n);
  const std::size_t hom = hom_dim(alg, m, n);
  out.report = {{"from", mn}, {"to", nn}, {"dim", ext}, {"hom_dim", hom}};
  if (!m.is_zero()) {
    ProjectiveCover p0 = projective_cover(alg, m);
    SubRep syz = restrict_to(alg, p0.cover, kernel_submodule(p0.epi));
    std::size_t hom_p0 = 0;
    for (auto v : p0.summand_vertices) hom_p0 += n.dims[v];
    json top_json = json::array();
    for (auto v : p0.summand_vertices) top_json.push_back(io::label_json(alg.quiver().vertices()[v]));
    out.report["sequence"] = {{"cover_tops", top_json},
                              {"hom_cover", hom_p0},
                              {"syzygy_dims", detail::dims_json(alg, syz.rep.dims)},
                              {"hom_syzygy", hom_dim(alg, syz.rep, n)}};
  }
  out.summary.push_back("dim Ext^1(" + mn + ", " + nn + ") = " + std::to_string(ext));
  if (o.euler) {
    const long long e = euler_form(alg, m.dims, n.dims);
    const bool agree = e == static_cast<long long>(hom) - static_cast<long long>(ext);
    out.report["euler"] = {{"value", e}, {"agrees", agree}};
    out.summary.push_back("Euler form " + std::to_string(e) + (agree ? " agrees" : " DISAGREES"));
    if (!agree) out.code = kFail;
  }
  return out;
}

inline Outcome cmd_filter(const io::Workspace& ws, const Options& o) {
  Outcome out;
  bool ok = true;
  std::optional<std::string> sys_name = o.system;
  if (!sys_name && o.filtration) sys_name = ws.filtration(*o.filtration).system;
  if (!sys_name && o.symbolic) sys_name = ws.symbolic_filtration(*o.symbolic).system;
  const HomologicalSystem& s = ws.system_or_default(sys_name);
  out.report["system"] = ws.system_name(sys_name);

  if (o.filtration) {
    const io::FiltrationSpec& spec = ws.filtration(*o.filtration);
    if (o.module && *o.module != spec.module) {
      throw InputError{"filtration '" + *o.filtration + "' is of module '" + spec.module + "', not '" + *o.module + "'"};
    }
    Filtration f = detail::load_filtration(ws, s, *o.filtration);
    Filtration slim = refine_to_slim(s, f);
    std::vector<std::size_t> before = order_vector(s, slim);
    SortResult sorted = sort_slim(s, slim);
    std::vector<std::size_t> after = order_vector(s, sorted.filtration);
    OrderedFiltration w = merge_to_ordered(s, sorted.filtration);
    validate_ordered(s, w);

    out.report["module"] = spec.module;
    out.report["filtration"] = *o.filtration;
    out.report["input"] = io::to_json(s, f);
    out.report["order_before"] = io::order_vector_json(s, before);
    out.report["order_after"] = io::order_vector_json(s, after);
    out.report["swaps"] = sorted.swaps;
    out.report["ordered"] = io::to_json(s, w);
    const bool ell_kept = ell(s, f) == ell(s, w);
    out.report["ell_preserved"] = ell_kept;
    ok = ok && ell_kept;
    out.summary.push_back("order before " + detail::classes_str(s, before));
    out.summary.push_back("order after  " + detail::classes_str(s, after) + " (" + std::to_string(sorted.swaps) +
                          " swaps)");
    for (std::size_t k = 0; k < w.layers.size(); ++k)
      out.summary.push_back("layer " + std::to_string(k + 1) + " " + detail::class_label(s, w.layers[k].cls) +
                            " dims " + detail::dims_str(w.layers[k].top.dims()));
    out.summary.push_back("ell " + detail::ell_str(s, ell(s, w)));

    if (o.check_unique) {
      Filtration g = detail::load_filtration(ws, s, *o.check_unique);
      UniquenessVerdict v = check_uniqueness(s, f, g);
      out.report["uniqueness"] = {{"other", *o.check_unique},
                                  {"same_classes", v.same_classes},
                                  {"same_subspaces", v.same_subspaces},
                                  {"same_ell", v.same_ell},
                                  {"holds", v.holds()},
                                  {"other_ordered", io::to_json(s, v.second)}};
      out.summary.push_back(std::string("uniqueness against ") + *o.check_unique + ": " +
                            (v.holds() ? "identical chains" : "MISMATCH"));
      ok = ok && v.holds();
    }

    if (o.all_linearizations) {
      try {
        auto lins = enumerate_linearizations(s.quotient(), o.cap);
        json runs = json::array();
        bool all_same = true;
        for (const auto& l : lins) {
          HomologicalSystem sl = s.with_linearization(l);
          OrderedFiltration wl = ordered_filtration(sl, f);
          const bool same = same_chain(wl, w);
          all_same = all_same && same;
          runs.push_back({{"linearization", io::order_vector_json(s, l.order())}, {"identical", same}});
        }
        out.report["all_linearizations"] = {{"count", lins.size()}, {"identical", all_same}, {"runs", runs}};
        out.summary.push_back("all " + std::to_string(lins.size()) + " linearizations: " +
                              (all_same ? "identical chains" : "chains DIFFER"));
        ok = ok && all_same;
      } catch (const Error& e) {
        if (e.code() != Errc::CapExceeded) throw;
        out.report["all_linearizations"] = {{"error", e.what()}};
        out.summary.push_back(e.what());
        ok = false;
      }
    }
  }

  if (o.symbolic) {
    const io::SymbolicSpec& spec = ws.symbolic_filtration(*o.symbolic);
    ExtPattern pat = ext_pattern(ws.system(spec.system));
    std::size_t swaps = 0;
    SymbolicFiltration sorted = symb_sort(pat, spec.filtration, &swaps);
    auto layers = symb_merge(pat, sorted);
    json lj = json::array();
    for (const auto& l : layers) {
      json members = json::array();
      for (const auto& st : l.members)
        members.push_back({{"omega", io::label_json(pat.omega[st.omega])}, {"card", io::to_json(st.card)}});
      lj.push_back({{"class", io::class_json(s, l.cls)}, {"card", io::to_json(l.card)}, {"members", members}});
    }
    json ellj = json::object();
    const auto e = symb_ell(pat, layers);
    for (std::size_t w = 0; w < e.size(); ++w) ellj[pat.omega[w]] = io::to_json(e[w]);
    const bool kept = symb_ell(pat, spec.filtration) == e;
    out.report["symbolic"] = {{"name", *o.symbolic},
                              {"sorted", io::to_json(s, sorted)},
                              {"swaps", swaps},
                              {"layers", lj},
                              {"ell", ellj},
                              {"ell_preserved", kept}};
    std::string line = "symbolic sorted:";
    for (const auto& st : sorted.steps) line += " " + pat.omega[st.omega] + "^" + st.card.str();
    out.summary.push_back(line + " (" + std::to_string(swaps) + " swaps)");
    line = "symbolic layers:";
    for (const auto& l : layers) line += " " + detail::class_label(s, l.cls) + "^" + l.card.str();
    out.summary.push_back(line);
    ok = ok && kept;
  }

  if (!o.filtration && !o.symbolic) throw InputError{"filter needs --filtration or --symbolic"};
  out.report["passed"] = ok;
  out.code = ok ? kPass : kFail;
  return out;
}

inline Outcome cmd_split(const io::Workspace& ws, const Options& o) {
  Outcome out;
  if (!o.filtration || !o.idempotent) throw InputError{"split needs --filtration and --idempotent"};
  const io::FiltrationSpec& fs = ws.filtration(*o.filtration);
  const io::IdempotentSpec& is = ws.idempotent(*o.idempotent);
  if (o.module && *o.module != fs.module) throw InputError{"--module does not match the filtration"};
  if (is.module != fs.module) throw InputError{"idempotent and filtration refer to different modules"};
  const HomologicalSystem& s = ws.system(o.system ? *o.system : fs.system);
  const Algebra& alg = s.algebra();
  OrderedFiltration w = ordered_filtration(s, detail::load_filtration(ws, s, *o.filtration));
  SummandSplit sp = summand_split(s, w, is.map);
  validate_ordered(s, sp.image_filtration);
  validate_ordered(s, sp.kernel_filtration);

  bool additive = true;
  json cert = json::array();
  for (const auto& c : sp.certificate) {
    bool layer_ok = true;
    for (std::size_t k = 0; k < s.size(); ++k) layer_ok = layer_ok && c.ell_layer[k] == c.ell_image[k] + c.ell_kernel[k];
    additive = additive && layer_ok;
    cert.push_back({{"class", io::class_json(s, c.cls)},
                    {"ell_layer", io::ell_json(s, c.ell_layer)},
                    {"ell_image", io::ell_json(s, c.ell_image)},
                    {"ell_kernel", io::ell_json(s, c.ell_kernel)},
                    {"additive", layer_ok}});
    for (std::size_t k = 0; k < s.size(); ++k)
      if (c.ell_layer[k] != 0)
        out.summary.push_back("layer " + detail::class_label(s, c.cls) + " ell_" + s.omega()[k] + ": " +
                              std::to_string(c.ell_layer[k]) + "=" + std::to_string(c.ell_image[k]) + "+" +
                              std::to_string(c.ell_kernel[k]));
  }
  out.report = {{"module", fs.module},
                {"filtration", *o.filtration},
                {"idempotent", *o.idempotent},
                {"image", {{"dims", detail::dims_json(alg, sp.image.rep.dims)},
                           {"ordered", io::to_json(s, sp.image_filtration)}}},
                {"kernel", {{"dims", detail::dims_json(alg, sp.kernel.rep.dims)},
                            {"ordered", io::to_json(s, sp.kernel_filtration)}}},
                {"certificate", cert},
                {"passed", additive}};
  out.summary.insert(out.summary.begin(), "image dims " + detail::dims_str(sp.image.rep.dims) + ", kernel dims " +
                                              detail::dims_str(sp.kernel.rep.dims));
  out.code = additive ? kPass : kFail;
  return out;
}

inline Outcome cmd_decompose(const io::Workspace& ws, const Options& o) {
  Outcome out;
  if (!o.module) throw InputError{"decompose needs --module"};
  const Algebra& alg = ws.alg();
  const SearchOptions opts = detail::search_options();
  Decomposition d = decompose(alg, ws.module(*o.module), opts);
  const HomologicalSystem* s = nullptr;
  if (o.system || ws.systems.size() == 1) s = &ws.system_or_default(o.system);
  json groups = json::array();
  for (const auto& g : d.groups) {
    json entry = {{"dims", detail::dims_json(alg, g.rep.dims)},
                  {"multiplicity", g.multiplicity()},
                  {"module", io::to_json(g.rep, alg)}};
    std::string line = detail::dims_str(g.rep.dims) + " x" + std::to_string(g.multiplicity());
    if (s) {
      json omega = nullptr;
      for (std::size_t w = 0; w < s->size(); ++w)
        if (is_isomorphic(alg, s->delta(w), g.rep, opts)) {
          omega = io::label_json(s->omega()[w]);
          line += " = Delta_" + s->omega()[w];
          break;
        }
      entry["omega"] = omega;
    }
    groups.push_back(entry);
    out.summary.push_back(line);
  }
  out.report = {{"module", *o.module},
                {"summands", groups},
                {"certainty", d.certainty == Certainty::Certain ? "certain" : "probable"}};
  if (groups.empty()) out.summary.push_back("zero module");
  return out;
}

// --- driver -----------------------------------------------------------------

inline void emit(const Outcome& r, const std::string& command, const Options& o, std::ostream& os) {
  json doc = {{"command", command}};
  if (!o.no_timestamp) doc["timestamp"] = detail::timestamp();
  doc["exit_code"] = r.code;
  for (const auto& [k, v] : r.report.items()) doc[k] = v;
  const std::string text = doc.dump(2) + "\n";
  if (o.out) {
    std::ofstream f(*o.out);
    if (!f) throw InputError{"cannot write '" + *o.out + "'"};
    f << text;
  }
  if (o.pretty) {
    for (const auto& line : r.summary) os << line << "\n";
  } else if (!o.out) {
    os << text;
  }
}

inline int run(int argc, const char* const* argv, std::ostream& os = std::cout, std::ostream& es = std::cerr) {
  Options o;
  CLI::App app{"Exact filtration calculus for homological systems over path algebras"};
  app.require_subcommand(1);
  auto common = [&](CLI::App* c, bool needs_file = true) {
    if (needs_file) {
      c->add_option("workspace", o.workspace, "workspace JSON file or directory")->required();
    }
    c->add_option("--system", o.system, "system name");
    c->add_option("--out", o.out, "also write the JSON report to this file");
    c->add_flag("--pretty", o.pretty, "print a human-readable summary instead of JSON");
    c->add_flag("--no-timestamp", o.no_timestamp, "omit the timestamp field");
  };

  auto* validate = app.add_subcommand("validate", "check the axioms of a system");
  common(validate);
  validate->add_flag("--all-linearizations", o.all_linearizations, "also check every linear extension");
  validate->add_option("--cap", o.cap, "linearization enumeration cap");

  auto* lin = app.add_subcommand("linearize", "quotient classes and linearizations of a preorder");
  common(lin, false);
  lin->add_option("workspace", o.workspace, "preorder or workspace JSON");
  lin->add_flag("--enumerate", o.enumerate, "list every linear extension");
  lin->add_option("--cap", o.cap, "enumeration cap");
  lin->add_option("--divisibility", o.divisibility, "use divisibility on {1..N}");
  lin->add_flag("--q-lex", o.q_lex, "q-length lexicographic order (with --divisibility)");
  lin->add_option("--inverter", o.inverter, "n m N: an order on {1..N} placing n before m")->expected(3);

  auto* hom = app.add_subcommand("hom", "Hom dimension and basis");
  common(hom);
  hom->add_option("modules", o.positional, "M N")->expected(2)->required();

  auto* ext = app.add_subcommand("ext", "Ext^1 dimension");
  common(ext);
  ext->add_option("modules", o.positional, "M N")->expected(2)->required();
  ext->add_flag("--euler", o.euler, "cross-check against the Euler form");

  auto* filter = app.add_subcommand("filter", "slim refinement, sorting and the ordered filtration");
  common(filter);
  filter->add_option("--module", o.module, "module name (checked against the filtration)");
  filter->add_option("--filtration", o.filtration, "filtration name");
  filter->add_option("--check-unique", o.check_unique, "second filtration to compare against");
  filter->add_flag("--all-linearizations", o.all_linearizations, "re-derive under every linear extension");
  filter->add_option("--cap", o.cap, "linearization enumeration cap");
  filter->add_option("--symbolic", o.symbolic, "symbolic filtration name");

  auto* split = app.add_subcommand("split", "split an ordered filtration along an idempotent");
  common(split);
  split->add_option("--module", o.module, "module name (checked against the filtration)");
  split->add_option("--filtration", o.filtration, "filtration name")->required();
  split->add_option("--idempotent", o.idempotent, "idempotent name")->required();

  auto* dec = app.add_subcommand("decompose", "indecomposable summands with multiplicities");
  common(dec);
  dec->add_option("--module", o.module, "module name")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, os, es);
  } catch (const CLI::ParseError& e) {
    app.exit(e, os, es);
    return kInputError;
  }

  CLI::App* cmd = app.get_subcommands().front();
  const std::string name = cmd->get_name();
  try {
    Outcome r;
    if (name == "linearize") {
      r = cmd_linearize(o);
    } else {
      io::Workspace ws = detail::load(o);
      if (name == "validate") r = cmd_validate(ws, o);
      else if (name == "hom") r = cmd_hom(ws, o);
      else if (name == "ext") r = cmd_ext(ws, o);
      else if (name == "filter") r = cmd_filter(ws, o);
      else if (name == "split") r = cmd_split(ws, o);
      else r = cmd_decompose(ws, o);
    }
    emit(r, name, o, os);
    return r.code;
  } catch (const InputError& e) {
    es << "error: " << e.message << "\n";
    return kInputError;
  } catch (const Error& e) {
    if (e.code() == Errc::ParseError || e.code() == Errc::UnknownLabel) {
      es << "error: " << e.what() << "\n";
      return kInputError;
    }
    Outcome r;
    r.code = kFail;
    r.report = {{"passed", false}, {"error", {{"code", std::string(errc_name(e.code()))}, {"message", e.what()}}}};
    r.summary.push_back(std::string("FAIL ") + e.what());
    try {
      emit(r, name, o, os);
    } catch (const InputError& w) {
      es << "error: " << w.message << "\n";
    }
    return kFail;
  }
}

}  // namespace deltafilt::cli
