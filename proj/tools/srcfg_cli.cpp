// srcfg: command-line front end for the srcfg library.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "srcfg/claims.hpp"
#include "srcfg/classify.hpp"
#include "srcfg/constructions.hpp"
#include "srcfg/errors.hpp"
#include "srcfg/feasibility.hpp"
#include "srcfg/generators.hpp"
#include "srcfg/iso.hpp"
#include "srcfg/parallel.hpp"
#include "srcfg/sdds.hpp"

using nlohmann::json;
using namespace srcfg;

namespace {

struct Report {
  std::string command;
  json inputs = json::object();
  json results = json::object();
  std::optional<json> check;
  double seconds = 0;

  json to_json() const {
    json j = {{"command", command}, {"inputs", inputs}, {"results", results}, {"timing", {{"seconds", seconds}}}};
    if (check) j["check"] = *check;
    return j;
  }
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) {
    const auto a = cur.find_first_not_of(" \t");
    if (a == std::string::npos) continue;
    out.push_back(cur.substr(a, cur.find_last_not_of(" \t") - a + 1));
  }
  return out;
}

// Elements given as labels or 0-based indices, separated by ';'.
std::vector<GroupElement> parse_elements(const Group& g, const std::string& text) {
  std::vector<GroupElement> out;
  for (const auto& token : split(text, ';')) {
    if (auto e = g.find(token)) {
      out.push_back(*e);
      continue;
    }
    try {
      std::size_t used = 0;
      const auto idx = std::stoul(token, &used);
      if (used == token.size() && idx < g.order()) {
        out.push_back(static_cast<GroupElement>(idx));
        continue;
      }
    } catch (const std::exception&) {
    }
    throw InvalidSpec("'" + token + "' is neither an element label nor an index");
  }
  return out;
}

json params_or_null(const std::optional<SrcParams>& p) {
  if (!p) return nullptr;
  return {{"v", p->v}, {"k", p->k}, {"lambda", p->lambda}, {"mu", p->mu}, {"str", p->str()}};
}

json geometry_json(const GeometryClass& g) {
  json spectrum = json::object();
  for (auto [value, count] : g.spectrum) spectrum[std::to_string(value)] = count;
  return {{"summary", g.str()}, {"alpha", g.alpha}, {"beta", g.beta}, {"mu", g.mu}, {"spectrum", spectrum}};
}

PolarityFlags parse_flags(const std::string& s) {
  if (s == "none") return {false, false};
  if (s == "hyperplane") return {true, false};
  if (s == "point") return {false, true};
  if (s == "both") return {true, true};
  throw InvalidSpec("flags must be none, hyperplane, point or both");
}

void emit_configuration(const Configuration& c, const std::string& out, const std::string& format) {
  const std::string text = format == "json" ? configuration_to_json(c) + "\n" : format_configuration(c);
  if (out.empty() || out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw FileNotFound(out);
  f << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Strongly regular configurations: feasibility, constructions, search and classification"};
  app.require_subcommand(1);
  unsigned threads = 0;
  bool as_json = false;
  app.add_option("--threads", threads, "Worker thread cap (default: all cores)");
  app.add_flag("--json", as_json, "Print a JSON report");

  // feasible-table
  auto* ft = app.add_subcommand("feasible-table", "Feasible (v_k;lambda,mu) parameter sets");
  std::uint32_t vmax = 200;
  bool all_rows = false;
  std::string exclusions_file;
  ft->add_option("--vmax", vmax, "Largest v")->check(CLI::Range(4u, 1000u));
  ft->add_flag("--all", all_rows, "Also list eliminated candidates");
  ft->add_option("--exclusions", exclusions_file, "Exclusion list (default: shipped data)");

  // construct
  auto* co = app.add_subcommand("construct", "Build a configuration");
  std::string family, flags_text = "none", group_text, set_text, graph_text, out_file, format = "text";
  std::uint32_t q = 0;
  std::vector<std::uint32_t> triangle;
  co->add_option("family", family, "plane | triangle-removal | moore | lp4 | development | fq-sdds | published")
      ->required();
  co->add_option("--q", q, "Field order");
  co->add_option("--flags", flags_text, "lp4 polarity flags: none | hyperplane | point | both");
  co->add_option("--group", group_text, "Group spec for development");
  co->add_option("--set", set_text, "Difference set: labels or indices separated by ';' (or a published id)");
  co->add_option("--graph", graph_text, "Graph spec for moore");
  co->add_option("--triangle", triangle, "Three point indices for triangle-removal")->expected(3);
  co->add_option("-o,--output", out_file, "Output file (default stdout)");
  co->add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));

  // verify
  auto* ve = app.add_subcommand("verify", "Validate a configuration and report its parameters");
  std::string cfg_a;
  ve->add_option("config", cfg_a, "Configuration file")->required();

  // classify
  auto* cl = app.add_subcommand("classify", "All configurations with a given point graph");
  std::uint32_t k = 0;
  std::size_t limit = 0;
  cl->add_option("--graph", graph_text, "Graph spec or graph6 file")->required();
  cl->add_option("--k", k, "Line size")->required();
  cl->add_option("--limit", limit, "Stop after N configurations");

  // sdds-check
  auto* sc = app.add_subcommand("sdds-check", "Test a strong deficient difference set");
  sc->add_option("--group", group_text, "Group spec");
  sc->add_option("--set", set_text, "Labels or indices separated by ';', or a published id")->required();

  // sdds-search
  auto* ss = app.add_subcommand("sdds-search", "Exhaustive strong deficient difference set search");
  std::int64_t lambda = 0, mu = 0;
  bool all_translates = false, developments = false;
  ss->add_option("--group", group_text, "Group spec or cayley:PATH")->required();
  ss->add_option("--k", k, "Set size")->required();
  ss->add_option("--lambda", lambda, "lambda")->required();
  ss->add_option("--mu", mu, "mu")->required();
  ss->add_flag("--all-translates", all_translates, "List every translate instead of one per class");
  ss->add_flag("--developments", developments, "Classify the developments up to isomorphism");
  ss->add_option("--limit", limit, "Stop after N sets");

  // iso / aut / dual / spectrum / selfdual
  auto* is = app.add_subcommand("iso", "Are two configurations isomorphic?");
  std::string cfg_b;
  is->add_option("a", cfg_a, "First configuration")->required();
  is->add_option("b", cfg_b, "Second configuration")->required();
  auto* au = app.add_subcommand("aut", "Automorphism group order and canonical form");
  au->add_option("config", cfg_a, "Configuration file")->required();
  auto* du = app.add_subcommand("dual", "Dual configuration");
  du->add_option("config", cfg_a, "Configuration file")->required();
  du->add_option("-o,--output", out_file, "Output file (default stdout)");
  du->add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));
  auto* sp = app.add_subcommand("spectrum", "Alpha-spectrum geometry class");
  sp->add_option("config", cfg_a, "Configuration file")->required();
  auto* sd = app.add_subcommand("selfdual", "Is the configuration isomorphic to its dual?");
  sd->add_option("config", cfg_a, "Configuration file")->required();

  // reproduce
  auto* rp = app.add_subcommand("reproduce", "Run a published-claim check");
  std::string claim_id;
  rp->add_option("claim", claim_id, "Claim id or number, 'all', or 'list'")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  if (threads) set_thread_limit(threads);

  Report report;
  const auto start = std::chrono::steady_clock::now();
  std::ostringstream text;
  int exit_code = 0;
  try {
    if (*ft) {
      report.command = "feasible-table";
      report.inputs = {{"vmax", vmax}, {"exclusions", exclusions_file.empty() ? "default" : exclusions_file}};
      const auto excl = exclusions_file.empty() ? ExclusionList::load_default() : ExclusionList::load(exclusions_file);
      auto rows = enumerate_feasible(vmax, excl);
      const auto s = summarize(rows);
      report.results = {{"battery_survivors", s.battery_survivors},
                        {"externally_excluded", s.externally_excluded},
                        {"candidates", s.candidates},
                        {"clique_fail", s.clique_fail},
                        {"partial_geometries", s.partial_geometries},
                        {"square_fail", s.square_fail},
                        {"feasible", s.feasible},
                        {"rows", json::parse(table_json(rows))}};
      text << format_table(rows, all_rows);
      text << "candidates " << s.candidates << ", clique bound fails " << s.clique_fail << ", partial geometries "
           << s.partial_geometries << ", square condition fails " << s.square_fail << ", feasible " << s.feasible
           << " (externally excluded " << s.externally_excluded << ")\n";
    } else if (*co) {
      report.command = "construct";
      report.inputs = {{"family", family}, {"q", q}, {"flags", flags_text}, {"group", group_text}, {"set", set_text}};
      Configuration c;
      if (family == "plane") {
        c = projective_plane(q);
      } else if (family == "triangle-removal") {
        if (triangle.empty()) c = triangle_removal(q);
        else c = triangle_removal(projective_plane(q), triangle[0], triangle[1], triangle[2]);
      } else if (family == "moore") {
        c = moore_configuration(make_graph(parse_graph_spec(graph_text.empty() ? "petersen" : graph_text)));
      } else if (family == "lp4") {
        c = lp4(q, parse_flags(flags_text));
      } else if (family == "fq-sdds") {
        c = development(fq_star_group(q), fq_star_sdds(q));
      } else if (family == "development" || family == "published") {
        if (family == "published" || group_text.empty()) {
          const auto& pub = published_sdds(set_text);
          const Group g = make_group(parse_group_spec(pub.group));
          c = development(g, elements_by_name(g, pub.labels));
        } else {
          const Group g = make_group(parse_group_spec(group_text));
          c = development(g, parse_elements(g, set_text));
        }
      } else {
        throw InvalidSpec("unknown family '" + family + "'");
      }
      report.results = {{"v", c.v}, {"k", c.k}, {"src", params_or_null(src_check(c))}};
      if (as_json && out_file.empty()) report.results["configuration"] = json::parse(configuration_to_json(c));
      else emit_configuration(c, out_file, format);
    } else if (*ve) {
      report.command = "verify";
      report.inputs = {{"config", cfg_a}};
      const auto c = load_configuration(cfg_a);
      const auto violations = validate(c);
      json vj = json::array();
      for (const auto& v : violations) vj.push_back({{"kind", to_string(v.kind)}, {"message", v.message}, {"where", v.where}});
      report.results = {{"v", c.v}, {"k", c.k}, {"valid", violations.empty()}, {"violations", vj}};
      text << "v=" << c.v << " k=" << c.k << (violations.empty() ? " valid\n" : " INVALID\n");
      for (const auto& v : violations) text << "  " << to_string(v.kind) << ": " << v.message << "\n";
      if (violations.empty()) {
        const auto p = src_check(c);
        report.results["src"] = params_or_null(p);
        report.results["proper"] = is_proper(c);
        report.results["geometry"] = geometry_json(alpha_spectrum(c));
        text << "strongly regular: " << (p ? p->str() : "no") << "\nproper: " << (is_proper(c) ? "yes" : "no")
             << "\ngeometry: " << alpha_spectrum(c).str() << "\n";
      } else {
        exit_code = 1;
      }
    } else if (*cl) {
      report.command = "classify";
      report.inputs = {{"graph", graph_text}, {"k", k}, {"limit", limit}};
      const Graph g = make_graph(parse_graph_spec(graph_text));
      const auto srg = srg_check(g);
      if (!srg || srg->d != static_cast<std::int64_t>(k) * (k - 1))
        std::cerr << "warning: graph is not SRG(v," << k * (k - 1) << ",lambda,mu)\n";
      const auto cg = clique_graph(g, k);
      const auto configs = find_configurations(cg, FindOptions{limit});
      const auto classes = reduce_isomorphs(configs);
      json cj = json::array();
      for (const auto& c : classes)
        cj.push_back({{"count", c.count}, {"aut_order", c.aut_order}, {"self_dual", c.self_dual},
                      {"canonical_form", c.form.hex()}, {"geometry", alpha_spectrum(c.representative).str()}});
      report.results = {{"graph_srg", srg ? json(srg->str()) : json(nullptr)},
                        {"cliques", cg.cliques.size()},
                        {"edges", cg.compat.edge_count()},
                        {"configurations", configs.size()},
                        {"classes", cj}};
      text << "cliques " << cg.cliques.size() << ", clique graph edges " << cg.compat.edge_count()
           << ", configurations " << configs.size() << ", classes " << classes.size() << "\n";
      for (const auto& c : classes) {
        const auto p = src_check(c.representative);
        text << "  " << (p ? p->str() : "not strongly regular") << ", count " << c.count << ", |Aut| "
             << c.aut_order << (c.self_dual ? ", self-dual" : "") << "\n";
      }
    } else if (*sc) {
      report.command = "sdds-check";
      std::vector<GroupElement> d;
      std::optional<Group> g;
      if (group_text.empty()) {
        const auto& pub = published_sdds(set_text);
        g.emplace(make_group(parse_group_spec(pub.group)));
        d = elements_by_name(*g, pub.labels);
        group_text = pub.group;
      } else {
        g.emplace(make_group(parse_group_spec(group_text)));
        d = parse_elements(*g, set_text);
      }
      report.inputs = {{"group", group_text}, {"set", d}};
      const auto lm = sdds_check(*g, d);
      report.results = {{"sdds", lm.has_value()}};
      if (lm) {
        report.results["lambda"] = lm->first;
        report.results["mu"] = lm->second;
        const auto dev = development(*g, d);
        report.results["development"] = params_or_null(src_check(dev));
        text << "SDDS with lambda=" << lm->first << " mu=" << lm->second << "\n";
      } else {
        text << "not a strong deficient difference set\n";
        exit_code = 1;
      }
    } else if (*ss) {
      report.command = "sdds-search";
      report.inputs = {{"group", group_text}, {"k", k}, {"lambda", lambda}, {"mu", mu}, {"all_translates", all_translates}};
      const Group g = make_group(parse_group_spec(group_text));
      SddsSearchOptions opt;
      opt.normalization = all_translates ? Normalization::None : Normalization::ContainsIdentity;
      opt.limit = limit;
      const auto sets = sdds_search(g, k, lambda, mu, opt);
      json sj = json::array();
      for (const auto& d : sets) {
        json labels = json::array();
        for (auto e : d) labels.push_back(g.name(e));
        sj.push_back({{"indices", d}, {"labels", labels}});
        text << labels.dump() << "\n";
      }
      report.results = {{"count", sets.size()}, {"sets", sj}};
      text << sets.size() << " sets\n";
      if (developments) {
        std::vector<Configuration> devs;
        for (const auto& d : sets) devs.push_back(development(g, d));
        const auto classes = reduce_isomorphs(devs);
        json cj = json::array();
        for (const auto& c : classes) cj.push_back({{"count", c.count}, {"aut_order", c.aut_order}, {"self_dual", c.self_dual}});
        report.results["classes"] = cj;
        text << classes.size() << " isomorphism classes of developments\n";
      }
    } else if (*is) {
      report.command = "iso";
      report.inputs = {{"a", cfg_a}, {"b", cfg_b}};
      const bool same = isomorphic(load_configuration(cfg_a), load_configuration(cfg_b));
      report.results = {{"isomorphic", same}};
      text << (same ? "isomorphic\n" : "not isomorphic\n");
    } else if (*au) {
      report.command = "aut";
      report.inputs = {{"config", cfg_a}};
      const auto r = canonical_labelling(load_configuration(cfg_a));
      report.results = {{"aut_order", r.aut_order}, {"generators", r.generators.size()}, {"canonical_form", r.form.hex()}};
      text << r.aut_order << "\n";
    } else if (*du) {
      report.command = "dual";
      report.inputs = {{"config", cfg_a}};
      const auto d = dual(load_configuration(cfg_a));
      if (as_json && out_file.empty()) report.results = {{"configuration", json::parse(configuration_to_json(d))}};
      else emit_configuration(d, out_file, format);
    } else if (*sp) {
      report.command = "spectrum";
      report.inputs = {{"config", cfg_a}};
      const auto g = alpha_spectrum(load_configuration(cfg_a));
      report.results = geometry_json(g);
      text << g.str() << "\n";
    } else if (*sd) {
      report.command = "selfdual";
      report.inputs = {{"config", cfg_a}};
      const bool self = is_self_dual(load_configuration(cfg_a));
      report.results = {{"self_dual", self}};
      text << (self ? "self-dual\n" : "not self-dual\n");
    } else if (*rp) {
      report.command = "reproduce";
      report.inputs = {{"claim", claim_id}};
      if (claim_id == "list") {
        json list = json::array();
        for (const auto& c : claims()) {
          list.push_back({{"number", c.number}, {"id", c.id}, {"title", c.title}});
          text << c.number << "  " << c.id << "  " << c.title << "\n";
        }
        report.results = {{"claims", list}};
      } else {
        std::vector<std::string> ids;
        if (claim_id == "all")
          for (const auto& c : claims()) ids.push_back(c.id);
        else
          ids.push_back(claim_id);
        json results = json::array();
        bool all_match = true;
        for (const auto& id : ids) {
          const auto r = run_claim(id);
          results.push_back(claim_json(r));
          all_match = all_match && r.status != ClaimResult::Status::Mismatch;
          text << r.number << " " << r.id << ": " << to_string(r.status) << " (" << r.seconds << " s)";
          if (!r.note.empty()) text << "  " << r.note;
          text << "\n";
          if (r.status == ClaimResult::Status::Mismatch)
            text << "  expected " << r.expected.dump() << "\n  observed " << r.observed.dump() << "\n";
        }
        report.results = {{"claims", results}};
        if (ids.size() == 1) report.check = results[0]["check"];
        if (!all_match) exit_code = 1;
      }
    }
  } catch (const srcfg::Error& e) {
    report.results = {{"error", {{"kind", e.kind()}, {"message", e.what()}}}};
    std::cerr << e.what() << "\n";
    exit_code = 1;
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (as_json) std::cout << report.to_json().dump(2) << "\n";
  else std::cout << text.str();
  return exit_code;
}
