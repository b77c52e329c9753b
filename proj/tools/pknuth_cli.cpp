#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "pknuth/insertion.hpp"
#include "pknuth/json_io.hpp"
#include "pknuth/knuth.hpp"
#include "pknuth/symfunc.hpp"
#include "pknuth/tableaux.hpp"
#include "pknuth/verify.hpp"
#include "pknuth/words.hpp"

using nlohmann::json;
using namespace pknuth;

namespace {

struct OrderSource {
  std::string inline_json;
  std::string file;
  std::string lambda;
  int n = 0;

  void add_flags(CLI::App* cmd) {
    cmd->add_option("--order", inline_json, "order as inline JSON {\"n\":..,\"lambda\":[..]}");
    cmd->add_option("--order-file", file, "path to a JSON file holding the order");
    cmd->add_option("--lambda", lambda, "partition as comma-separated parts (may be empty)");
    cmd->add_option("--n", n, "ground set size, used with --lambda");
  }

  UnitIntervalOrder resolve() const {
    int sources = (!inline_json.empty() ? 1 : 0) + (!file.empty() ? 1 : 0) + (n > 0 ? 1 : 0);
    if (sources != 1)
      throw CLI::ValidationError("order", "give exactly one of --order, --order-file, or --n/--lambda");
    if (!inline_json.empty()) return order_from_json(json::parse(inline_json));
    if (!file.empty()) {
      std::ifstream in(file);
      if (!in) throw CLI::ValidationError("order", "cannot open " + file);
      json j;
      in >> j;
      return order_from_json(j);
    }
    std::vector<int> parts;
    if (!lambda.empty())
      for (int v : parse_word(lambda)) parts.push_back(v);
    return UnitIntervalOrder::from_partition(Partition(parts), n);
  }
};

Chain parse_chain(const std::string& text) {
  if (text.empty()) return {};
  Chain c = parse_word(text);
  if (!std::is_sorted(c.begin(), c.end()))
    std::reverse(c.begin(), c.end());
  if (!std::is_sorted(c.begin(), c.end()))
    throw CLI::ValidationError("chain", "chain entries must be monotone");
  return c;
}

std::string render_tableau_text(const Tableau& t) { return t.to_string(); }

void print_trace_text(const std::vector<InsertStep>& trace) {
  int k = 0;
  for (const InsertStep& st : trace) {
    std::cout << "  step " << ++k << ": case " << InsertStep::case_name(st.kind)
              << " at p=" << st.p;
    if (st.kind == InsertStep::Case::c1a || st.kind == InsertStep::Case::c1b)
      std::cout << ", r=" << st.r;
    if (st.kind == InsertStep::Case::c2a || st.kind == InsertStep::Case::c2b) {
      std::cout << ", r=" << st.r << ", (h,q)=(" << st.h << "," << st.q << "), A={";
      for (size_t i = 0; i < st.candidates.size(); ++i) {
        if (i) std::cout << ",";
        std::cout << "(" << st.candidates[i].first << "," << st.candidates[i].second << ")";
      }
      std::cout << "}";
    }
    std::cout << ", chain=" << word_to_string(st.chain_after) << "\n";
  }
}

json trace_to_json(const std::vector<InsertStep>& trace) {
  json arr = json::array();
  for (const InsertStep& st : trace) {
    json jst{{"case", InsertStep::case_name(st.kind)}, {"p", st.p}};
    if (st.r >= 0) jst["r"] = st.r;
    if (st.h >= 0) {
      jst["h"] = st.h;
      jst["q"] = st.q;
      jst["A"] = st.candidates;
    }
    jst["chain"] = st.chain_after;
    arr.push_back(jst);
  }
  return arr;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"natural unit interval orders: moves, tableaux, and insertion"};
  app.require_subcommand(1);

  // orders
  auto* cmd_orders = app.add_subcommand("orders", "enumerate orders for a ground set size");
  int orders_n = 0;
  bool avoid_climbing = false;
  cmd_orders->add_option("--n", orders_n, "ground set size")->required();
  cmd_orders->add_flag("--avoid-climbing", avoid_climbing,
                       "keep only orders where no one climbs a ladder");

  // stats
  auto* cmd_stats = app.add_subcommand("stats", "word statistics for an order");
  OrderSource stats_src;
  stats_src.add_flags(cmd_stats);
  std::string stats_word;
  cmd_stats->add_option("--word", stats_word, "permutation, comma-separated")->required();

  // tableaux
  auto* cmd_tab = app.add_subcommand("tableaux", "list tableaux for an order");
  OrderSource tab_src;
  tab_src.add_flags(cmd_tab);
  std::string tab_shape;
  std::string tab_format = "text";
  cmd_tab->add_option("--shape", tab_shape, "shape as comma-separated parts");
  cmd_tab->add_option("--format", tab_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  // graph
  auto* cmd_graph = app.add_subcommand("graph", "move graph export");
  OrderSource graph_src;
  graph_src.add_flags(cmd_graph);
  std::string graph_component, graph_format = "dot";
  cmd_graph->add_option("--component-of", graph_component, "restrict to one class");
  cmd_graph->add_option("--format", graph_format, "dot or json")
      ->check(CLI::IsMember({"dot", "json"}));

  // gamma
  auto* cmd_gamma = app.add_subcommand("gamma", "generating function of a class");
  OrderSource gamma_src;
  gamma_src.add_flags(cmd_gamma);
  std::string gamma_component, gamma_format = "text";
  cmd_gamma->add_option("--component-of", gamma_component, "class seed word")->required();
  cmd_gamma->add_option("--format", gamma_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  // phi / psi
  auto* cmd_phi = app.add_subcommand("phi", "column insertion of a word into a chain");
  OrderSource phi_src;
  phi_src.add_flags(cmd_phi);
  std::string phi_word, phi_chain;
  bool phi_trace = false;
  std::string phi_format = "text";
  cmd_phi->add_option("--word", phi_word)->required();
  cmd_phi->add_option("--chain", phi_chain, "chain entries (either direction)");
  cmd_phi->add_flag("--trace", phi_trace, "print the per-step case record");
  cmd_phi->add_option("--format", phi_format)->check(CLI::IsMember({"text", "json"}));

  auto* cmd_psi = app.add_subcommand("psi", "insertion with dragged sentinel positions");
  OrderSource psi_src;
  psi_src.add_flags(cmd_psi);
  std::string psi_word, psi_chain, psi_x;
  bool psi_trace = false;
  std::string psi_format = "text";
  cmd_psi->add_option("--word", psi_word)->required();
  cmd_psi->add_option("--chain", psi_chain);
  cmd_psi->add_option("--x", psi_x, "dragged positions, comma-separated");
  cmd_psi->add_flag("--trace", psi_trace);
  cmd_psi->add_option("--format", psi_format)->check(CLI::IsMember({"text", "json"}));

  // prs
  auto* cmd_prs = app.add_subcommand("prs", "full correspondence word -> (PT, QT)");
  OrderSource prs_src;
  prs_src.add_flags(cmd_prs);
  std::string prs_word;
  bool prs_trace = false;
  std::string prs_format = "text";
  cmd_prs->add_option("--word", prs_word)->required();
  cmd_prs->add_flag("--trace", prs_trace);
  cmd_prs->add_option("--format", prs_format)->check(CLI::IsMember({"text", "json"}));

  // verify
  auto* cmd_verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  int verify_n = 6, jobs = 1;
  std::uint64_t seed = 12345;
  std::string verify_format = "text";
  cmd_verify->add_option("--suite", suite, "figures, theorem, conjecture, or oracles")
      ->required()
      ->check(CLI::IsMember({"figures", "theorem", "conjecture", "oracles"}));
  cmd_verify->add_option("--n", verify_n, "exhaustive bound");
  cmd_verify->add_option("--jobs", jobs, "worker threads");
  cmd_verify->add_option("--seed", seed, "seed for sampled scopes");
  cmd_verify->add_option("--format", verify_format)->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);

    if (*cmd_orders) {
      for (const auto& o : enumerate_orders(orders_n)) {
        if (avoid_climbing && o.is_ladder_climbing()) continue;
        std::cout << order_to_json(o).dump() << "\n";
      }
      return 0;
    }
    if (*cmd_stats) {
      UnitIntervalOrder o = stats_src.resolve();
      Perm w = parse_word(stats_word);
      json out{{"schema_version", kSchemaVersion},
               {"des", des_p(o, w)},
               {"ginv", ginv_p(o, w)},
               {"ght", ght_p(o, w)},
               {"finv", finv_p(o, w)},
               {"finv_count", finv_count(o, w)}};
      std::cout << out.dump() << "\n";
      return 0;
    }
    if (*cmd_tab) {
      UnitIntervalOrder o = tab_src.resolve();
      std::vector<Tableau> ts;
      if (!tab_shape.empty())
        ts = enumerate_p_tableaux(o, Partition(parse_word(tab_shape)));
      else
        ts = enumerate_p_tableaux(o, o.n());
      for (const Tableau& t : ts) {
        if (tab_format == "json")
          std::cout << tableau_to_json(t).dump() << "\n";
        else
          std::cout << render_tableau_text(t) << "\n\n";
      }
      return 0;
    }
    if (*cmd_graph) {
      UnitIntervalOrder o = graph_src.resolve();
      std::vector<Perm> verts;
      if (!graph_component.empty())
        verts = equivalence_class(o, parse_word(graph_component));
      else
        verts = all_permutations(o.n());
      KnuthGraph g = build_graph(o, std::move(verts));
      if (graph_format == "json")
        std::cout << graph_to_json(g).dump() << "\n";
      else
        std::cout << to_dot(o, g);
      return 0;
    }
    if (*cmd_gamma) {
      UnitIntervalOrder o = gamma_src.resolve();
      auto V = equivalence_class(o, parse_word(gamma_component));
      QSym g = gamma(o, V);
      SchurResult ex = expand_in_schur(g);
      if (gamma_format == "json") {
        json out = qsym_to_json(g);
        out["schur"] = ex.ok ? schur_to_json(ex.expansion) : json();
        out["schur_expressible"] = ex.ok;
        std::cout << out.dump() << "\n";
      } else {
        std::cout << "class size " << V.size() << "\n";
        if (ex.ok)
          std::cout << ex.expansion.to_string() << "\n";
        else
          std::cout << "not Schur-expressible; fundamental terms: " << g.to_string()
                    << "\n";
      }
      return 0;
    }
    auto run_insert = [&](OrderSource& src, const std::string& word_s,
                          const std::string& chain_s, const std::string& x_s,
                          bool want_trace, const std::string& format) {
      UnitIntervalOrder o = src.resolve();
      Word alpha = parse_word(word_s);
      Chain c = parse_chain(chain_s);
      std::set<int> X;
      if (!x_s.empty())
        for (int v : parse_word(x_s)) X.insert(v);
      std::vector<InsertStep> trace;
      InsertResult res = psi(o, X, alpha, c, want_trace ? &trace : nullptr);
      if (format == "json") {
        json out{{"schema_version", kSchemaVersion},
                 {"chain", res.chain},
                 {"word", word_to_json(res.word)}};
        if (want_trace) out["trace"] = trace_to_json(trace);
        std::cout << out.dump() << "\n";
      } else {
        std::cout << "chain: " << word_to_string(res.chain) << "\n";
        std::cout << "word:  " << word_to_string(res.word) << "\n";
        if (want_trace) print_trace_text(trace);
      }
    };
    if (*cmd_phi) {
      run_insert(phi_src, phi_word, phi_chain, "", phi_trace, phi_format);
      return 0;
    }
    if (*cmd_psi) {
      run_insert(psi_src, psi_word, psi_chain, psi_x, psi_trace, psi_format);
      return 0;
    }
    if (*cmd_prs) {
      UnitIntervalOrder o = prs_src.resolve();
      Word w = parse_word(prs_word);
      std::vector<std::vector<InsertStep>> traces;
      PrsResult r = prs(o, w, prs_trace ? &traces : nullptr);
      if (prs_format == "json") {
        json out = prs_to_json(r);
        if (prs_trace) {
          json arr = json::array();
          for (auto& t : traces) arr.push_back(trace_to_json(t));
          out["trace"] = arr;
        }
        std::cout << out.dump() << "\n";
      } else {
        std::cout << "PT (" << (r.pt_valid ? "valid" : "INVALID") << "):\n"
                  << render_tableau_text(r.pt()) << "\n";
        std::cout << "QT (" << (r.qt_valid ? "valid" : "INVALID") << "):\n"
                  << render_tableau_text(r.qt()) << "\n";
        if (prs_trace)
          for (size_t k = 0; k < traces.size(); ++k) {
            std::cout << "round " << k + 1 << ":\n";
            print_trace_text(traces[k]);
          }
      }
      return 0;
    }
    if (*cmd_verify) {
      SuiteResult res;
      if (suite == "figures") res = run_figures_suite();
      if (suite == "theorem") res = run_theorem_suite(verify_n, jobs, seed);
      if (suite == "conjecture") res = run_conjecture_suite(verify_n, jobs);
      if (suite == "oracles") res = run_oracles_suite(verify_n, seed);
      if (verify_format == "json")
        std::cout << res.to_json().dump() << "\n";
      else
        std::cout << res.summary();
      return res.all_passed() ? 0 : 1;
    }
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
