#include "commands.hpp"

#include <ostream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "comaxg/analysis.hpp"
#include "comaxg/corpus.hpp"
#include "comaxg/error.hpp"
#include "comaxg/graph_export.hpp"
#include "comaxg/group_spec.hpp"
#include "comaxg/report.hpp"
#include "search.hpp"

namespace comaxg::cli {

namespace {

using nlohmann::json;

json lattice_json(const GroupTable& g, const SubgroupLattice& lattice) {
  json subgroups = json::array();
  for (SubgroupId id = 0; id < lattice.size(); ++id) {
    const auto& h = lattice[id];
    subgroups.push_back({{"id", id},
                         {"order", h.order()},
                         {"normal", lattice.is_normal(id)},
                         {"maximal", lattice.is_maximal(id)},
                         {"elements", h.elements()}});
  }
  return {{"group_label", g.label()},
          {"order", g.order()},
          {"subgroup_count", lattice.size()},
          {"maximal", std::vector<SubgroupId>(lattice.maximal_ids().begin(),
                                              lattice.maximal_ids().end())},
          {"frattini", lattice.frattini_id()},
          {"subgroups", subgroups}};
}

json classification_json(const GroupTable& g, const GroupClassification& c) {
  json factors = json::array();
  for (const auto& pp : c.prime_factorization) factors.push_back({pp.prime, pp.exponent});
  json orders = json::object();
  for (const auto& [order, count] : c.element_order_counts) orders[std::to_string(order)] = count;
  return {{"group_label", g.label()},
          {"order", c.order},
          {"prime_factorization", factors},
          {"is_cyclic", c.is_cyclic},
          {"is_abelian", c.is_abelian},
          {"is_p_group", c.is_p_group},
          {"p", c.is_p_group ? json(c.p) : json(nullptr)},
          {"is_nilpotent", c.is_nilpotent},
          {"is_solvable", c.is_solvable},
          {"is_supersolvable", c.is_supersolvable},
          {"is_minimal_non_cyclic", c.is_minimal_non_cyclic},
          {"sylow_elementary_abelian", c.sylow_elementary_abelian},
          {"maximal_count", c.maximal_count},
          {"frattini_order", c.frattini_order},
          {"intersection_number",
           c.intersection_number ? json(*c.intersection_number) : json("undefined")},
          {"subgroup_count", c.subgroup_count},
          {"element_order_counts", orders}};
}

CorpusSpec load_corpus(const std::string& path, CorpusSpec fallback) {
  return path.empty() ? std::move(fallback) : read_corpus_file(path);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Co-maximal subgroup graphs of finite groups", "comaxg"};
  app.require_subcommand(1);

  std::string spec;
  std::string variant = "full";
  std::string format = "dot";
  auto* graph = app.add_subcommand("graph", "Emit the co-maximal subgroup graph");
  graph->add_option("spec", spec, "Group spec, e.g. \"dihedral 8\"")->required();
  graph->add_option("--variant", variant, "full or deleted")
      ->check(CLI::IsMember({"full", "deleted"}));
  graph->add_option("--format", format, "dot or json")->check(CLI::IsMember({"dot", "json"}));

  auto* lattice = app.add_subcommand("lattice", "Emit the subgroup lattice as JSON");
  lattice->add_option("spec", spec, "Group spec")->required();

  auto* classify_cmd = app.add_subcommand("classify", "Emit group invariants as JSON");
  classify_cmd->add_option("spec", spec, "Group spec")->required();

  std::string corpus_path;
  bool as_json = false;
  unsigned threads = 0;
  auto* verify_cmd = app.add_subcommand("verify", "Check every theorem over a corpus");
  verify_cmd->add_option("--corpus", corpus_path, "Corpus file (default: built-in corpus)");
  verify_cmd->add_flag("--json", as_json, "Emit the JSON mirror instead of report lines");
  verify_cmd->add_option("--threads", threads, "Worker threads (0: hardware concurrency)");

  std::size_t max_order = 0;
  auto* search = app.add_subcommand("search", "Open-question search harnesses");
  search->require_subcommand(1);
  auto* q1 = search->add_subcommand("q1", "Non-nilpotent supersolvable groups with isolated vertices");
  q1->add_option("--max-order", max_order, "Largest group order scanned")->required();
  auto* q2 = search->add_subcommand("q2", "Non-solvable groups with disconnected deleted graph");
  q2->add_option("--corpus", corpus_path, "Candidate file (default: built-in candidates)");
  auto* q3 = search->add_subcommand("q3", "Graph collisions between non-isomorphic groups");
  q3->add_option("--corpus", corpus_path, "Corpus file (default: built-in corpus)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    const Limits limits = Limits::from_environment();

    if (*graph) {
      const auto a = analyze(group_from_spec(spec, limits), limits);
      const auto& g = variant == "full" ? a.gamma : a.gamma_star;
      if (format == "dot") {
        out << to_dot(g);
      } else {
        out << to_json(g).dump(2) << '\n';
      }
      return kOk;
    }
    if (*lattice) {
      const GroupTable g = group_from_spec(spec, limits);
      out << lattice_json(g, all_subgroups(g, limits)).dump(2) << '\n';
      return kOk;
    }
    if (*classify_cmd) {
      const GroupTable g = group_from_spec(spec, limits);
      out << classification_json(g, classify(g, all_subgroups(g, limits))).dump(2) << '\n';
      return kOk;
    }
    if (*verify_cmd) {
      const auto corpus = load_corpus(corpus_path, default_corpus());
      const auto results = run_corpus(corpus, limits, threads);
      if (as_json) {
        out << to_json(results).dump(2) << '\n';
      } else {
        write_report_stream(out, results);
      }
      for (const auto& r : results) {
        if (r.error) err << corpus.source << ": " << *r.error << '\n';
      }
      const RunSummary s = summarize(results);
      err << "groups " << s.groups << " errors " << s.errors << " pass " << s.pass << " fail "
          << s.fail << " na " << s.not_applicable << '\n';
      if (s.errors > 0) return kInputError;
      return s.fail > 0 ? kFailVerdict : kOk;
    }
    if (*q1) {
      write_q1(out, search_q1(max_order, limits));
      return kOk;
    }
    if (*q2) {
      write_q2(out, search_q2(load_corpus(corpus_path, default_nonsolvable_candidates()), limits));
      return kOk;
    }
    if (*q3) {
      const auto r = search_q3(load_corpus(corpus_path, default_corpus()), limits);
      for (const auto& [ref, why] : r.skipped) err << "skipped " << ref.spec << ": " << why << '\n';
      write_q3(out, r);
      return kOk;
    }
  } catch (const Error& e) {
    err << "comaxg: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace comaxg::cli
