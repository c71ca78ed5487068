// strucgraph command-line front end.
//
// Exit codes: 0 success, 1 property false, 2 input error, 3 theorem
// violation or failed campaign.

#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <string>
#include <variant>

#include "strucgraph/coloring.hpp"
#include "strucgraph/decomposition.hpp"
#include "strucgraph/domination.hpp"
#include "strucgraph/errors.hpp"
#include "strucgraph/harness.hpp"
#include "strucgraph/patterns.hpp"

using namespace strucgraph;
using json = nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kFalse = 1, kInput = 2, kViolation = 3 };

json set_json(const VertexSet& s) { return json(s); }

json partition_json(const SplitPartition& p) { return {{"clique", p.clique}, {"stable", p.stable}}; }

json case_json(const StructureCase& c) {
  json j;
  j["case"] = std::string(case_name(c));
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, CliqueCutsetCase>) {
          j["cutset"] = v.cutset;
        } else if constexpr (std::is_same_v<T, BisimplicialCase>) {
          j["vertex"] = v.vertex;
          j["clique1"] = v.clique1;
          j["clique2"] = v.clique2;
        } else if constexpr (std::is_same_v<T, PetersenBlowupCase>) {
          j["bags"] = v.partition.bags;
        } else if constexpr (std::is_same_v<T, LowDegreeCase>) {
          j["vertex"] = v.vertex;
          j["degree"] = v.degree;
          j["bound"] = v.bound;
        }
      },
      c);
  return j;
}

json certificate_json(const ColoringCertificate& c) {
  json j;
  j["color_count"] = c.color_count;
  j["colors"] = c.colors;
  j["clique_witness"] = c.clique_witness;
  j["omega"] = c.clique_witness.size();
  j["bound"] = std::string(bound_kind_name(c.bound));
  if (c.bound != BoundKind::Exact) j["bound_value"] = declared_bound(c.bound, static_cast<int>(c.clique_witness.size()));
  j["trace"] = json::array();
  for (const auto& s : c.trace)
    j["trace"].push_back({{"step", std::string(trace_kind_name(s.kind))}, {"vertices", s.vertices}, {"note", s.note}});
  return j;
}

void print(const json& j) { std::cout << j.dump(2) << '\n'; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Structural algorithms for graphs without long induced paths and cycles"};
  app.require_subcommand(1);

  std::string input;
  std::string family;
  auto* classify = app.add_subcommand("classify", "Test freeness from a forbidden family");
  classify->add_option("--input", input, "graph file (graph6 or edge list; - for stdin)")->required();
  classify->add_option("--family", family, "L1, L2, C, D, F or H")->required();

  std::string kind;
  std::string method = "exact";
  auto* dominate = app.add_subcommand("dominate", "Find a dominating induced connected (complete) split subgraph");
  dominate->add_option("--input", input, "graph file")->required();
  dominate->add_option("--kind", kind, "split or complete-split")->required()->check(CLI::IsMember({"split", "complete-split"}));
  dominate->add_option("--method", method, "exact or proof-guided")->check(CLI::IsMember({"exact", "proof-guided"}));

  std::string mode;
  auto* decompose = app.add_subcommand("decompose", "Report the structure case of a connected graph");
  decompose->add_option("--input", input, "graph file")->required();
  decompose->add_option("--mode", mode, "gem or diamond")->required()->check(CLI::IsMember({"gem", "diamond"}));

  auto* color = app.add_subcommand("color", "Certified coloring");
  color->add_option("--input", input, "graph file")->required();
  color->add_option("--mode", mode, "gem, diamond or exact")->required()->check(CLI::IsMember({"gem", "diamond", "exact"}));

  std::string campaign;
  CampaignParams params;
  auto* verify = app.add_subcommand("verify", "Run a verification campaign and print its JSON report");
  verify->add_option("--campaign", campaign, "campaign name")->required();
  verify->add_option("--max-n", params.max_n, "largest exhaustive order (1..8)");
  verify->add_option("--seed", params.seed, "random corpus seed");
  verify->add_option("--samples", params.samples, "random corpus size");
  verify->add_option("--threads", params.threads, "worker threads (0 = all cores)");
  verify->add_flag("--timing", params.timing, "include duration_ms in the report");

  std::string pattern;
  std::vector<std::string> random_args;
  auto* generate = app.add_subcommand("generate", "Print a graph in graph6");
  auto* pattern_opt = generate->add_option("--pattern", pattern, "catalog name");
  auto* random_opt = generate->add_option("--random", random_args, "n p seed")->expected(3);
  pattern_opt->excludes(random_opt);
  random_opt->excludes(pattern_opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  try {
    if (*classify) {
      const Graph g = read_graph_file(input);
      const Family f = parse_family(family);
      const Membership m = family_membership(g, f);
      json j{{"family", std::string(family_name(f))}, {"free", m.is_free}};
      if (m.witness) j["witness"] = {{"pattern", m.witness->pattern}, {"embedding", m.witness->embedding}};
      print(j);
      return m.is_free ? kOk : kFalse;
    }
    if (*dominate) {
      const Graph g = read_graph_file(input);
      const DominatorKind k = parse_dominator_kind(kind);
      json j{{"kind", kind}, {"method", method}};
      std::optional<DominationCertificate> cert;
      if (method == "exact") {
        cert = find_dominating_split(g, k);
      } else {
        const ReductionOutcome out = proof_guided_reduce_detailed(g, k);
        cert = out.certificate;
        j["stalled"] = out.stalled;
        j["moves"] = out.moves;
        j["log"] = out.log;
      }
      j["found"] = cert.has_value();
      if (cert) {
        j["dominator"] = set_json(cert->dominator);
        j["partition"] = partition_json(cert->partition);
        j["connected"] = cert->connected;
      } else if (method == "exact") {
        j["proof"] = "exhaustive search over all vertex subsets found no connected dominating set inducing a " + kind +
                     " graph";
      }
      print(j);
      return cert ? kOk : kFalse;
    }
    if (*decompose) {
      const Graph g = read_graph_file(input);
      const StructureCase c = mode == "gem" ? structure_case_gem(g) : structure_case_diamond(g);
      print(case_json(c));
      return kOk;
    }
    if (*color) {
      const Graph g = read_graph_file(input);
      const ColoringCertificate c =
          mode == "gem" ? color_gem_free_certified(g) : mode == "diamond" ? color_diamond_free_certified(g) : color_exact(g);
      json j = certificate_json(c);
      j["verified"] = verify_coloring(g, c);
      print(j);
      return kOk;
    }
    if (*verify) {
      const CampaignReport r = run_campaign(campaign, params);
      print(report_to_json(r));
      return r.failed == 0 ? kOk : kViolation;
    }
    if (*generate) {
      if (!pattern.empty()) {
        std::cout << to_graph6(catalog_lookup(pattern)) << '\n';
        return kOk;
      }
      if (random_args.size() == 3) {
        int n = 0;
        double p = 0;
        std::uint64_t seed = 0;
        try {
          n = std::stoi(random_args[0]);
          p = std::stod(random_args[1]);
          seed = std::stoull(random_args[2]);
        } catch (const std::exception&) {
          throw InputError("--random expects: n p seed");
        }
        std::cout << to_graph6(random_graph(n, p, seed)) << '\n';
        return kOk;
      }
      throw InputError("generate needs --pattern NAME or --random n p seed");
    }
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInput;
  } catch (const PreconditionError& e) {
    json j{{"error", "precondition"}, {"message", e.what()}};
    if (!e.witness_pattern().empty()) j["witness_pattern"] = e.witness_pattern();
    print(j);
    return kFalse;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kInput;
  } catch (const TheoremViolation& e) {
    std::cerr << "theorem violation: " << e.what() << '\n';
    return kViolation;
  }
  return kOk;
}
