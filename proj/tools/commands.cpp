#include "commands.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "vrank/claims.hpp"
#include "vrank/constructive.hpp"
#include "vrank/io.hpp"
#include "vrank/oracle.hpp"
#include "vrank/ranking.hpp"

namespace vrank::cli {

namespace {

using io::Json;

struct FamilyOptions {
  std::string kind;
  int k = 0;
  int n = 0;
  std::string parts;

  void attach(CLI::App& cmd, bool required) {
    auto* opt = cmd.add_option("--family", kind, "path | cycle | multipartite | joined")
                    ->check(CLI::IsMember({"path", "cycle", "multipartite", "joined"}));
    if (required) opt->required();
    cmd.add_option("--k", k, "exponent for path (2^k-1 vertices) or cycle (2^k vertices)");
    cmd.add_option("--n", n, "clique size for joined cliques");
    cmd.add_option("--parts", parts, "comma-separated part sizes for multipartite");
  }

  bool given() const { return !kind.empty(); }

  FamilySpec spec() const {
    if (kind == "path") return normalize(PathFamily{k});
    if (kind == "cycle") return normalize(CycleFamily{k});
    if (kind == "joined") return normalize(JoinedCliquesFamily{n});
    MultipartiteFamily m;
    std::stringstream ss(parts);
    for (std::string item; std::getline(ss, item, ',');) {
      try {
        std::size_t used = 0;
        m.parts.push_back(std::stoi(item, &used));
        if (used != item.size()) throw std::invalid_argument(item);
      } catch (const std::exception&) {
        throw InputError("bad part size \"" + item + "\"");
      }
    }
    return normalize(m);
  }
};

struct Common {
  bool json = false;
  int cap = OracleOptions{}.cap;

  void attach(CLI::App& cmd) {
    cmd.add_flag("--json", json, "machine-readable output");
    cmd.add_option("--cap", cap, "largest graph order for exact search")->check(CLI::Range(1, kMaxOrder));
  }
  OracleOptions oracle() const { return {cap, true}; }
};

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

void print_stats(std::ostream& err, const SearchStats& st) {
  err << "stats: memo_entries=" << st.memo_entries << " nodes_expanded=" << st.nodes_expanded << " wall_ms="
      << std::fixed << std::setprecision(3) << std::chrono::duration<double, std::milli>(st.wall_time).count()
      << "\n";
}

std::string edge_text(const std::vector<Edge>& es, std::size_t limit = 40) {
  std::string s;
  for (std::size_t i = 0; i < es.size() && i < limit; ++i) s += (i ? " " : "") + to_string(es[i]);
  if (es.size() > limit) s += " ... (" + std::to_string(es.size()) + " in all)";
  return s.empty() ? "none" : s;
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  try {
    return io::graph_from_json(Json::parse(in));
  } catch (const Json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

Json literal_json(const LiteralReadingReport& r) {
  Json j;
  j["k"] = r.k;
  j["corrected_size"] = r.corrected_size;
  j["literal_size"] = r.literal_size;
  j["dropped"] = io::edges_to_json(r.dropped);
  j["dropped_by_block_rule"] = r.dropped_by_block_rule;
  j["dropped_by_ancestor_rule"] = r.dropped_by_ancestor_rule;
  if (r.oracle_checked) j["dropped_oracle_good"] = io::edges_to_json(r.dropped_good);
  if (r.union_checked) {
    j["union_corrected"] = r.union_corrected;
    j["union_literal"] = r.union_literal;
  }
  return j;
}

void print_literal(std::ostream& out, const LiteralReadingReport& r) {
  out << "literal reading:   " << r.literal_size << " edges\n";
  out << "corrected reading: " << r.corrected_size << " edges\n";
  out << "  dropped by the literal reading: " << edge_text(r.dropped) << "\n";
  out << "    block rule applied only for l > 0: " << r.dropped_by_block_rule << "\n";
  out << "    even m limited to powers of two:   " << r.dropped_by_ancestor_rule << "\n";
  if (r.oracle_checked)
    out << "  of those, good by exact search: " << r.dropped_good.size() << " (" << edge_text(r.dropped_good) << ")\n";
  if (!r.union_checked) return;
  out << "component union over j = 4..k:   " << r.union_literal << " edges\n";
  out << "component union over j = 4..k+1: " << r.union_corrected << " edges\n";
}

int cmd_generate(const FamilyOptions& fam, std::ostream& out) {
  const FamilySpec spec = fam.spec();
  Json j;
  j["family"] = io::to_json(spec);
  j["graph"] = io::to_json(build_family(spec));
  j["ranking"] = io::to_json(family_ranking(spec));
  print_json(out, j);
  return kExitOk;
}

int cmd_rank(const FamilyOptions& fam, const std::string& graph_path, const Common& c, std::ostream& out,
             std::ostream& err) {
  if (fam.given() == !graph_path.empty()) throw InputError("give exactly one of --family or --graph");
  const Graph g = fam.given() ? build_family(fam.spec()) : load_graph(graph_path);
  const RankResult r = rank_number(g, c.oracle());
  if (c.json) {
    Json j;
    j["n"] = g.order();
    j["rank"] = r.rank;
    print_json(out, j);
  } else {
    out << "rank number: " << r.rank << "\n";
  }
  print_stats(err, r.stats);
  return kExitOk;
}

int cmd_good_edges(const FamilyOptions& fam, const std::string& mode, bool strict, const Common& c, std::ostream& out,
                   std::ostream& err) {
  const FamilySpec spec = fam.spec();
  const Reading reading = strict ? Reading::Literal : Reading::Corrected;
  const auto* path = std::get_if<PathFamily>(&spec);
  if (strict && path == nullptr) err << "note: --strict-paper only changes the path construction\n";

  if (mode == "construct") {
    const EdgeSet es = family_good_edges(spec, reading);
    if (c.json) {
      Json j = io::to_json(es);
      if (strict && path) j["literal_reading"] = literal_json(literal_reading_report(path->k, c.oracle()));
      print_json(out, j);
      return kExitOk;
    }
    out << "family: " << describe(spec) << "\nedges: " << es.size() << "\n";
    for (std::size_t i = 0; i < es.size(); ++i) out << "  " << to_string(es.edges[i]) << "  " << clause_tag(es.clauses[i]) << "\n";
    if (strict && path) print_literal(out, literal_reading_report(path->k, c.oracle()));
    return kExitOk;
  }

  const Graph g = build_family(spec);
  if (mode == "oracle") {
    const GoodEdgeReport rep = good_edge_set(g, c.oracle());
    std::optional<MaxGoodSet> best;
    if (g.order() <= 16) best = maximum_good_set(g);
    if (c.json) {
      Json j;
      j["family"] = io::to_json(spec);
      j["base_rank"] = rep.base_rank;
      j["good"] = io::edges_to_json(rep.good);
      Json verdicts = Json::array();
      for (const EdgeVerdict& v : rep.verdicts) verdicts.push_back(io::to_json(v));
      j["verdicts"] = std::move(verdicts);
      if (best) {
        j["maximum"] = best->mu;
        j["maximum_edges"] = io::edges_to_json(best->edges);
      }
      print_json(out, j);
    } else {
      out << "family: " << describe(spec) << "\nrank number: " << rep.base_rank << "\n";
      out << "good on their own: " << rep.good.size() << " of " << rep.verdicts.size() << " non-edges\n";
      for (const EdgeVerdict& v : rep.verdicts)
        out << "  " << to_string(v.edge) << "  " << v.base_rank << " -> " << v.augmented_rank << "  "
            << to_string(v.verdict) << "\n";
      if (best) out << "maximum jointly addable set: " << best->mu << " edges: " << edge_text(best->edges) << "\n";
    }
    if (best) print_stats(err, best->stats);
    return kExitOk;
  }

  // compare
  const GoodEdgeComparison cmp = compare_good_edges(spec, reading, c.oracle());
  const bool same = cmp.identical();
  std::optional<LiteralReadingReport> lit;
  if (strict && path) lit = literal_reading_report(path->k, c.oracle());
  if (c.json) {
    Json j;
    j["family"] = io::to_json(spec);
    j["reading"] = strict ? "literal" : "corrected";
    j["constructive"] = cmp.constructive.size();
    j["oracle_good"] = cmp.per_edge.good.size();
    if (cmp.maximum) j["oracle_maximum"] = cmp.maximum->mu;
    j["missing"] = io::edges_to_json(cmp.missing);
    j["not_good"] = io::edges_to_json(cmp.not_good);
    j["constructive_joint"] = cmp.constructive_joint.holds;
    j["oracle_good_joint"] = cmp.per_edge_joint.holds;
    j["identical"] = same;
    if (lit) j["literal_reading"] = literal_json(*lit);
    print_json(out, j);
  } else {
    out << "family: " << describe(spec) << " (" << (strict ? "literal" : "corrected") << " reading)\n";
    out << "constructive: " << cmp.constructive.size() << " edges\n";
    out << "oracle, each edge on its own: " << cmp.per_edge.good.size() << " good\n";
    if (cmp.maximum) out << "oracle, maximum jointly addable: " << cmp.maximum->mu << " edges\n";
    out << "construction added at once keeps rank: " << (cmp.constructive_joint.holds ? "yes" : "no") << "\n";
    out << "oracle-good edges added at once keep rank: " << (cmp.per_edge_joint.holds ? "yes" : "no") << "\n";
    out << "missing from construction: " << edge_text(cmp.missing) << "\n";
    out << "constructed but forbidden: " << edge_text(cmp.not_good) << "\n";
    if (lit) print_literal(out, *lit);
    out << (same ? "identical" : "MISMATCH") << "\n";
  }
  return same ? kExitOk : kExitMismatch;
}

int cmd_mu(const FamilyOptions& fam, bool with_oracle, const Common& c, std::ostream& out, std::ostream& err) {
  const FamilySpec spec = fam.spec();
  std::vector<std::pair<std::string, std::int64_t>> rows;
  if (auto* p = std::get_if<PathFamily>(&spec)) {
    rows.emplace_back("mu_path (k-3)2^k+4", mu_path(p->k));
    rows.emplace_back("mu_path_recurrence", mu_path_recurrence(p->k));
  } else if (auto* cy = std::get_if<CycleFamily>(&spec)) {
    rows.emplace_back("mu_cycle (k-2)2^k+1", mu_cycle(cy->k));
  } else if (auto* m = std::get_if<MultipartiteFamily>(&spec)) {
    rows.emplace_back("mu_multipartite sum_{i>=2} C(m_i,2)", mu_multipartite(*m));
  } else {
    rows.emplace_back("mu_joined 2(n-1)", mu_joined(std::get<JoinedCliquesFamily>(spec).n));
  }
  if (with_oracle) {
    const Graph g = build_family(spec);
    const MaxGoodSet best = maximum_good_set(g, {std::min(c.cap, 16), true});
    rows.emplace_back("oracle maximum jointly addable", best.mu);
    const GoodEdgeReport rep = good_edge_set(g, c.oracle());
    rows.emplace_back("oracle good on their own", static_cast<std::int64_t>(rep.good.size()));
    print_stats(err, best.stats);
  }
  if (c.json) {
    Json j;
    j["family"] = io::to_json(spec);
    Json table = Json::object();
    for (const auto& [name, value] : rows) table[name] = value;
    j["values"] = std::move(table);
    print_json(out, j);
  } else {
    out << "family: " << describe(spec) << "\n";
    for (const auto& [name, value] : rows) out << std::left << std::setw(40) << name << value << "\n";
  }
  return kExitOk;
}

int cmd_verify(const std::string& suite, int max_k, const FamilyOptions& fam, const Common& c, std::ostream& out) {
  std::optional<FamilySpec> only;
  if (fam.given()) only = fam.spec();
  const std::vector<ClaimResult> claims = run_suite(suite, max_k, only, c.oracle());
  bool ok = true;
  for (const ClaimResult& r : claims) ok = ok && (!r.asserted || r.passed);
  if (c.json) {
    Json j;
    j["suite"] = suite;
    j["max_k"] = max_k;
    Json items = Json::array();
    for (const ClaimResult& r : claims) {
      Json item;
      item["id"] = r.id;
      item["statement"] = r.statement;
      item["asserted"] = r.asserted;
      item["passed"] = r.passed;
      item["detail"] = r.detail;
      items.push_back(std::move(item));
    }
    j["claims"] = std::move(items);
    j["passed"] = ok;
    print_json(out, j);
  } else {
    for (const ClaimResult& r : claims)
      out << (r.asserted ? (r.passed ? "PASS" : "FAIL") : "INFO") << "  " << r.id << "  " << r.statement << " | "
          << r.detail << "\n";
    out << (ok ? "all claims hold" : "SOME CLAIMS FAILED") << "\n";
  }
  return ok ? kExitOk : kExitMismatch;
}

int cmd_export(const FamilyOptions& fam, const std::string& what, const std::string& format, const std::string& path,
               std::ostream& out) {
  const FamilySpec spec = fam.spec();
  const Graph g = build_family(spec);
  const Ranking labels = family_ranking(spec);
  std::string text;
  if (format == "json") {
    if (what == "graph") text = io::to_json(g).dump(2);
    else if (what == "ranking") text = io::to_json(labels).dump(2);
    else text = io::to_json(family_good_edges(spec)).dump(2);
    text += "\n";
  } else {
    io::DotStyle style;
    style.labels = what == "graph" ? nullptr : &labels;
    EdgeSet added;
    if (what == "good-edges") {
      added = family_good_edges(spec);
      style.added = added.edges;
    }
    text = io::to_dot(g, style);
  }
  if (path == "-") {
    out << text;
    return kExitOk;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot write " + path);
  file << text;
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Vertex rankings and good-edge sets of paths, cycles, multipartite graphs and joined cliques"};
  app.require_subcommand(1);

  Common common;
  FamilyOptions family;

  auto* generate = app.add_subcommand("generate", "emit a family graph and its optimal ranking as JSON");
  family.attach(*generate, true);

  std::string graph_path;
  auto* rank = app.add_subcommand("rank", "exact rank number by exhaustive elimination search");
  family.attach(*rank, false);
  rank->add_option("--graph", graph_path, "graph JSON file {\"n\":..,\"edges\":[[u,v],..]}");
  common.attach(*rank);

  std::string mode = "construct";
  bool strict = false;
  auto* good = app.add_subcommand("good-edges", "constructive or oracle good-edge sets");
  family.attach(*good, true);
  good->add_option("--mode", mode, "construct | oracle | compare")
      ->check(CLI::IsMember({"construct", "oracle", "compare"}));
  good->add_flag("--strict-paper", strict, "read the path construction literally (l > 0, powers only above even m, union over 4..k)");
  common.attach(*good);

  bool with_oracle = false;
  auto* mu = app.add_subcommand("mu", "closed-form maximum number of good edges");
  family.attach(*mu, true);
  mu->add_flag("--oracle", with_oracle, "add brute-force counts");
  common.attach(*mu);

  std::string suite = "paper-all";
  int max_k = 4;
  auto* verify = app.add_subcommand("verify", "check the stated results against the oracle");
  verify->add_option("--suite", suite, "paper-all | path | cycle | multipartite | joined | uniqueness")
      ->check(CLI::IsMember({"paper-all", "path", "cycle", "multipartite", "joined", "uniqueness"}));
  verify->add_option("--max-k", max_k, "largest path/cycle exponent")->check(CLI::Range(1, 6));
  family.attach(*verify, false);
  common.attach(*verify);

  std::string what = "graph";
  std::string format = "json";
  std::string out_path;
  auto* exp = app.add_subcommand("export", "write a family graph, ranking or good-edge set");
  family.attach(*exp, true);
  exp->add_option("--what", what, "graph | ranking | good-edges")
      ->check(CLI::IsMember({"graph", "ranking", "good-edges"}));
  exp->add_option("--format", format, "json | dot")->check(CLI::IsMember({"json", "dot"}));
  exp->add_option("--out", out_path, "output file, or - for stdout")->required();

  std::vector<std::string> argv_store{"vrank"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (std::string& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (generate->parsed()) return cmd_generate(family, out);
    if (rank->parsed()) return cmd_rank(family, graph_path, common, out, err);
    if (good->parsed()) return cmd_good_edges(family, mode, strict, common, out, err);
    if (mu->parsed()) return cmd_mu(family, with_oracle, common, out, err);
    if (verify->parsed()) return cmd_verify(suite, max_k, family, common, out);
    return cmd_export(family, what, format, out_path, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CapExceeded& e) {
    err << "refused: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace vrank::cli
