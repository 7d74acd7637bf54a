#include "starcomp/cli/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <sstream>

#include "starcomp/catalog/catalog.hpp"
#include "starcomp/errors.hpp"
#include "starcomp/graph/canonical.hpp"
#include "starcomp/graph/graph6.hpp"
#include "starcomp/kts/analysis.hpp"
#include "starcomp/star/search.hpp"

namespace starcomp::cli {

namespace {

using Json = nlohmann::ordered_json;
constexpr int kSchemaVersion = 1;

Json type_json(const VertexType& t) { return Json::array({t.a, t.b}); }

std::string type_text(const VertexType& t) { return "(" + std::to_string(t.a) + "," + std::to_string(t.b) + ")"; }

Json srg_json(const std::optional<SrgParams>& p) {
  if (!p) return nullptr;
  return Json::array({p->n, p->r, p->e, p->f});
}

Json certificate_json(const StarCertificate& c) {
  Json j;
  j["pass"] = c.pass;
  j["complementOk"] = c.complement_ok;
  j["multiplicity"] = c.multiplicity;
  j["reconstructionOk"] = c.reconstruction_ok;
  j["regularDegree"] = c.regular_degree ? Json(*c.regular_degree) : Json(nullptr);
  j["charPoly"] = c.char_poly.to_string();
  if (!c.detail.empty()) j["detail"] = c.detail;
  return j;
}

Json spectrum_split_json(const IntPolynomial& p, Json& record) {
  auto split = split_integer_roots(p);
  Json roots = Json::array();
  for (const auto& [root, m] : split.roots) roots.push_back(Json::array({root.get_si(), m}));
  record["spectrumIntegerRoots"] = roots;
  record["residualFactor"] = split.residual.to_string();
  return record;
}

Json solution_json(const StarContext& ctx, const StarSolution& s) {
  Json j;
  j["schemaVersion"] = kSchemaVersion;
  j["graph6"] = encode_graph6(s.g);
  j["order"] = s.g.order();
  j["degree"] = s.regular_degree ? Json(*s.regular_degree) : Json(nullptr);
  spectrum_split_json(s.cert.char_poly, j);
  Json star = Json::array(), types = Json::array(), nbhd = Json::array();
  for (std::size_t i = 0; i < s.x.size(); ++i) {
    star.push_back(ctx.q() + i);
    types.push_back(s.x[i].type ? type_json(*s.x[i].type) : Json(nullptr));
    Json vs = Json::array();
    for (std::size_t v = 0; v < ctx.q(); ++v) {
      if ((s.x[i].bits >> v) & 1) vs.push_back(v);
    }
    nbhd.push_back(vs);
  }
  j["starSet"] = star;
  j["types"] = types;
  j["neighbourhoods"] = nbhd;
  j["srg"] = srg_json(srg_check(s.g));
  j["certificate"] = certificate_json(s.cert);
  return j;
}

std::vector<std::size_t> parse_csv(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    if (item.empty()) continue;
    std::size_t used = 0;
    unsigned long v = std::stoul(item, &used);
    if (used != item.size()) throw std::invalid_argument("bad vertex '" + item + "' in star set");
    out.push_back(v);
  }
  return out;
}

// ---- analyze ----------------------------------------------------------------

struct RhoRow {
  VertexType u, v;
  bool adjacent;
  AlgebraicNumber rho;
  bool feasible;
};

int analyze(std::size_t t, std::size_t s, const AlgebraicNumber& mu, bool json, std::ostream& out) {
  auto types = solve_types_fixed(t, s, mu);
  std::vector<ParametricType> param;
  const bool has_param = !(mu.is_zero() || mu == AlgebraicNumber(-1L) || mu == AlgebraicNumber(-long(t)));
  if (has_param) param = solve_types_parametric(t, mu);
  std::vector<RhoRow> rows;
  for (std::size_t i = 0; i < types.size(); ++i) {
    for (std::size_t k = i; k < types.size(); ++k) {
      for (bool adj : {false, true}) {
        rows.push_back({types[i], types[k], adj, rho_value(t, s, mu, types[i], types[k], adj),
                        rho_of_pair(t, s, mu, types[i], types[k], adj).has_value()});
      }
    }
  }
  std::optional<KssAnalysis> kss;
  if (t == s && t >= 2 && mu != AlgebraicNumber(-1L) && mu != AlgebraicNumber(long(s)) &&
      mu != AlgebraicNumber(-long(s))) {
    kss = kss_analysis(s, mu);
  }

  if (json) {
    Json j;
    j["schemaVersion"] = kSchemaVersion;
    j["t"] = t;
    j["s"] = s;
    j["mu"] = mu.to_string();
    Json jt = Json::array();
    for (const auto& ty : types) jt.push_back(type_json(ty));
    j["types"] = jt;
    Json jp = Json::array();
    for (const auto& p : param) {
      jp.push_back(Json{{"a", p.a}, {"b", p.b.to_string()}, {"s", p.s.to_string()}, {"feasible", p.feasible}});
    }
    j["parametric"] = jp;
    Json jr = Json::array();
    for (const auto& r : rows) {
      jr.push_back(Json{{"u", type_json(r.u)},
                        {"v", type_json(r.v)},
                        {"adjacent", r.adjacent ? 1 : 0},
                        {"rho", r.rho.to_string()},
                        {"feasible", r.feasible}});
    }
    j["rho"] = jr;
    if (kss) {
      Json jk;
      jk["discriminant"] = kss->discriminant.to_string();
      jk["roots"] = kss->roots ? Json::array({kss->roots->first.get_si(), kss->roots->second.get_si()}) : Json(nullptr);
      jk["muIntegral"] = kss->mu_integral;
      j["kss"] = jk;
    }
    out << j.dump() << "\n";
  } else {
    out << "H = K_{" << t << "," << s << "}, mu = " << mu.to_string() << "\n\n";
    out << "types:";
    if (types.empty()) out << " none";
    for (const auto& ty : types) out << " " << type_text(ty);
    out << "\n";
    if (has_param) {
      out << "\nparametric types for t = " << t << ":\n";
      out << std::left << std::setw(4) << "a" << std::setw(14) << "b" << std::setw(14) << "s" << "status\n";
      for (const auto& p : param) {
        out << std::setw(4) << p.a << std::setw(14) << p.b.to_string() << std::setw(14) << p.s.to_string()
            << (p.feasible ? "feasible" : "infeasible") << "\n";
      }
    }
    if (!rows.empty()) {
      out << "\n" << std::left << std::setw(10) << "(a,b)" << std::setw(10) << "(c,d)" << std::setw(6) << "a_uv"
          << std::setw(14) << "rho" << "status\n";
      for (const auto& r : rows) {
        out << std::setw(10) << type_text(r.u) << std::setw(10) << type_text(r.v) << std::setw(6) << (r.adjacent ? 1 : 0)
            << std::setw(14) << r.rho.to_string() << (r.feasible ? "feasible" : "infeasible") << "\n";
      }
    }
    if (kss) {
      out << "\nK_{s,s}: discriminant " << kss->discriminant.to_string() << ", roots ";
      if (kss->roots) {
        out << "(" << kss->roots->first.get_str() << "," << kss->roots->second.get_str() << ")";
      } else {
        out << "none";
      }
      out << ", mu integral with |mu| < s: " << (kss->mu_integral ? "yes" : "no") << "\n";
    }
  }
  return types.empty() ? kExitEmpty : kExitOk;
}

// ---- search -----------------------------------------------------------------

struct SearchArgs {
  std::size_t t = 0, s = 0;
  std::string mu;
  std::optional<std::size_t> r;
  bool sweep = false;
  bool maximal = false;
  bool non_main = false;
  std::optional<std::size_t> max_x;
  std::optional<std::size_t> max_solutions;
  unsigned jobs = 1;
  bool no_symmetry = false;
  std::string format = "json";
  std::string output;
};

int search(const SearchArgs& a, std::ostream& out) {
  const AlgebraicNumber mu = AlgebraicNumber::parse(a.mu);
  auto ctx = StarContext::make(make_kts(a.t, a.s), mu, KtsTag{a.t, a.s});
  SearchOptions o;
  if (a.r) {
    o.mode = SearchOptions::Mode::Regular;
    o.r = *a.r;
  } else if (a.maximal) {
    o.mode = SearchOptions::Mode::Maximal;
    o.non_main = a.non_main;
  } else {
    o.mode = SearchOptions::Mode::Sweep;
  }
  o.max_x = a.max_x;
  o.max_solutions = a.max_solutions;
  o.jobs = std::max(1u, a.jobs);
  o.symmetry = !a.no_symmetry;
  auto res = search_star_sets(ctx, o);

  std::ofstream file;
  if (!a.output.empty()) {
    file.open(a.output);
    if (!file) throw std::runtime_error("cannot open '" + a.output + "' for writing");
  }
  std::ostream& dst = a.output.empty() ? out : file;
  for (const auto& sol : res.solutions) {
    if (a.format == "graph6") {
      dst << encode_graph6(sol.g) << "\n";
    } else {
      dst << solution_json(ctx, sol).dump() << "\n";
    }
  }
  if (a.format != "graph6") {
    Json summary;
    summary["schemaVersion"] = kSchemaVersion;
    summary["count"] = res.solutions.size();
    summary["dedupedBy"] = res.deduped_by;
    summary["candidates"] = res.candidate_count;
    summary["raw"] = res.raw_count;
    dst << summary.dump() << "\n";
  }
  return res.solutions.empty() ? kExitEmpty : kExitOk;
}

// ---- verify / catalog / bound -------------------------------------------------

int verify(const std::string& graph6, const std::string& input, const std::string& star, const std::string& mu_text,
           std::ostream& out) {
  std::string line = graph6;
  if (!input.empty()) {
    std::ifstream in(input);
    if (!in) throw std::runtime_error("cannot open '" + input + "'");
    std::getline(in, line);
  }
  if (line.empty()) throw std::invalid_argument("verify needs --graph6 or --input");
  Graph g = decode_graph6(line);
  auto x = parse_csv(star);
  auto cert = verify_star_pair(g, x, AlgebraicNumber::parse(mu_text));
  Json j;
  j["schemaVersion"] = kSchemaVersion;
  j["graph6"] = encode_graph6(g);
  j["order"] = g.order();
  j["starSet"] = x;
  j["mu"] = AlgebraicNumber::parse(mu_text).to_string();
  spectrum_split_json(cert.char_poly, j);
  j["certificate"] = certificate_json(cert);
  out << j.dump() << "\n";
  return cert.pass ? kExitOk : kExitEmpty;
}

Json catalog_json(const NamedGraphEntry& e) {
  Json j;
  j["name"] = e.name;
  j["graph6"] = encode_graph6(e.graph);
  j["canonical"] = e.graph.order() <= kCanonicalMaxOrder ? Json(canonical(e.graph).bytes) : Json(nullptr);
  j["order"] = e.graph.order();
  j["degree"] = regular_degree(e.graph) ? Json(*regular_degree(e.graph)) : Json(nullptr);
  j["spectrum"] = e.spectrum ? Json(spectrum_to_string(*e.spectrum)) : Json(nullptr);
  j["srg"] = srg_json(e.srg);
  if (e.star) {
    j["star"] = Json{{"complement", e.star->complement}, {"mu", e.star->mu.to_string()}, {"x", e.star->x}};
  } else {
    j["star"] = nullptr;
  }
  return j;
}

int catalog(const std::vector<std::string>& names, const std::string& fixtures, const std::string& format,
            std::ostream& out) {
  if (!fixtures.empty()) {
    std::ofstream g6(fixtures + "/catalog.g6"), js(fixtures + "/catalog.json");
    if (!g6 || !js) throw std::runtime_error("cannot write fixtures into '" + fixtures + "'");
    Json all;
    all["schemaVersion"] = kSchemaVersion;
    all["graphs"] = Json::array();
    for (const auto& name : catalog_names()) {
      auto e = catalog_entry(name);
      g6 << encode_graph6(e.graph) << "\n";
      all["graphs"].push_back(catalog_json(e));
    }
    js << all.dump(2) << "\n";
    out << "wrote " << catalog_names().size() << " graphs to " << fixtures << "\n";
    return kExitOk;
  }
  const auto& list = names.empty() ? catalog_names() : names;
  for (const auto& name : list) {
    auto e = catalog_entry(name);
    if (format == "graph6") {
      out << encode_graph6(e.graph) << "\n";
    } else {
      Json j = catalog_json(e);
      j["schemaVersion"] = kSchemaVersion;
      out << j.dump() << "\n";
    }
  }
  return kExitOk;
}

int bound(std::size_t q, std::optional<std::size_t> s, std::optional<std::size_t> r, std::ostream& out) {
  Json j;
  j["schemaVersion"] = kSchemaVersion;
  j["q"] = q;
  j["starSetCap"] = q >= 3 ? Json(star_set_cap(q)) : Json(nullptr);
  if (s && r) {
    if (*r < *s) throw std::invalid_argument("bound needs r >= s");
    j["s"] = *s;
    j["r"] = *r;
    j["kssBound"] = *s * (*r - *s);
    j["kssOrderBound"] = *s * (*r - *s + 2);
  } else if (s || r) {
    throw std::invalid_argument("--s and --r go together");
  }
  out << j.dump() << "\n";
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Star complement search for regular graphs with a K_{t,s} star complement", "starcomp"};
  app.require_subcommand(1);

  std::string format = "text";
  std::size_t t = 0, s = 0;
  std::string mu;

  auto* an = app.add_subcommand("analyze", "Vertex types and rho tables for K_{t,s} at mu");
  an->add_option("t", t)->required();
  an->add_option("s", s)->required();
  an->add_option("mu", mu, "integer, p/q or root(c0,c1):pos|neg")->required();
  an->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  SearchArgs sa;
  auto* se = app.add_subcommand("search", "Regular graphs with K_{t,s} as a star complement for mu");
  se->add_option("t", sa.t)->required();
  se->add_option("s", sa.s)->required();
  se->add_option("mu", sa.mu)->required();
  auto* r_opt = se->add_option("--r", sa.r, "require this regular degree");
  auto* sweep_flag = se->add_flag("--sweep", sa.sweep, "every admissible degree (default)");
  auto* max_flag = se->add_flag("--maximal", sa.maximal, "maximal compatible sets, no degree condition");
  r_opt->excludes(sweep_flag)->excludes(max_flag);
  sweep_flag->excludes(max_flag);
  se->add_flag("--non-main", sa.non_main, "with --maximal: keep only non-main candidates");
  se->add_option("--max-x", sa.max_x, "cap on |X|");
  se->add_option("--max-solutions", sa.max_solutions);
  se->add_option("--jobs", sa.jobs)->check(CLI::Range(1u, 256u));
  se->add_flag("--no-symmetry", sa.no_symmetry);
  se->add_option("--format", sa.format)->check(CLI::IsMember({"json", "graph6"}));
  se->add_option("--output", sa.output, "write records here instead of standard output");

  std::string graph6, input, star;
  auto* ve = app.add_subcommand("verify", "Certify a star set");
  auto* g6_opt = ve->add_option("--graph6", graph6);
  ve->add_option("--input", input, "file whose first line is graph6")->excludes(g6_opt);
  ve->add_option("--star-set", star, "comma separated vertices")->required();
  ve->add_option("--mu", mu)->required();

  std::vector<std::string> names;
  std::string fixtures;
  std::string cat_format = "json";
  auto* ca = app.add_subcommand("catalog", "Named graphs with their expected data");
  ca->add_option("names", names, "G1..G5, C3, C5, Petersen, Clebsch, Knn(n), Kts(t,s), Gr(t,s,r)");
  ca->add_option("--fixtures", fixtures, "write catalog.g6 and catalog.json into this directory");
  ca->add_option("--format", cat_format)->check(CLI::IsMember({"json", "graph6"}));

  std::size_t q = 0;
  std::optional<std::size_t> bs, br;
  auto* bo = app.add_subcommand("bound", "Star set size bounds");
  bo->add_option("--q", q)->required();
  bo->add_option("--s", bs);
  bo->add_option("--r", br);

  std::vector<std::string> args(argv + 1, argv + argc);
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (*an) return analyze(t, s, AlgebraicNumber::parse(mu), format == "json", out);
    if (*se) return search(sa, out);
    if (*ve) return verify(graph6, input, star, mu, out);
    if (*ca) return catalog(names, fixtures, cat_format, out);
    if (*bo) return bound(q, bs, br, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

}  // namespace starcomp::cli
