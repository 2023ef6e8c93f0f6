#include "nodebal/cli.h"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "nodebal/classify.h"
#include "nodebal/equate.h"
#include "nodebal/errors.h"
#include "nodebal/hyper.h"
#include "nodebal/instance.h"
#include "nodebal/json_io.h"
#include "nodebal/oracles.h"

namespace nodebal {

namespace {

const Graph& require_graph(const Instance& instance, const std::string& command) {
  if (instance.is_hypergraph()) {
    throw InvalidInput(command + " needs a graph instance; the file has 'h' lines (try hyper-equate)");
  }
  return instance.graph();
}

Json classify_json(const Graph& g) {
  const UniversalVerdict verdict = universal_equatable(g);
  Json out;
  out["n"] = g.num_vertices();
  out["universal_equatable"] = verdict.verdict;
  switch (verdict.failure) {
    case UniversalFailure::kNone: out["reason"] = nullptr; break;
    case UniversalFailure::kDisconnected: out["reason"] = "disconnected"; break;
    case UniversalFailure::kEvenOrder: out["reason"] = "even_order"; break;
    case UniversalFailure::kIsolatedCondition: out["reason"] = "isolated_condition"; break;
  }
  if (verdict.failure == UniversalFailure::kIsolatedCondition) {
    out["U"] = verdict.witness;
    out["isolated"] = isolated_vertices(g, verdict.witness);
  } else {
    out["U"] = nullptr;
    out["isolated"] = nullptr;
  }
  return out;
}

Json bipartite_json(const Graph& g, const WeightAssignment& w) {
  Json out;
  const auto part = bipartition(g);
  out["bipartite"] = part.has_value();
  if (!part) {
    for (const char* key : {"L", "R", "strict_hall", "hall_witness", "neighborhood", "balanced",
                            "witness_assignment"}) {
      out[key] = nullptr;
    }
    return out;
  }
  out["L"] = part->left;
  out["R"] = part->right;
  const HallVerdict hall = strict_hall(g, *part);
  out["strict_hall"] = hall.verdict;
  out["hall_witness"] = hall.witness ? Json(*hall.witness) : Json(nullptr);
  out["neighborhood"] = hall.witness ? Json(neighborhood(g, *hall.witness)) : Json(nullptr);
  out["balanced"] = is_balanced(w, *part);
  out["witness_assignment"] = nullptr;
  if (hall.witness) {
    try {
      const WeightAssignment counter = hall_witness_assignment(g, *part, *hall.witness);
      out["witness_assignment"] = std::vector<Count>(counter.values().begin(), counter.values().end());
    } catch (const InvalidInput&) {
      // One side is empty: no balanced counterexample exists.
    }
  }
  return out;
}

Json verify_json(const Instance& instance, const std::string& plan_path) {
  std::ifstream in(plan_path);
  if (!in) throw ParseError(0, "cannot read '" + plan_path + "'");
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(0, std::string("plan file is not valid JSON: ") + e.what());
  }
  WeightAssignment final_weights;
  Count steps = 0;
  if (instance.is_hypergraph()) {
    const auto& h = std::get<Hypergraph>(instance.structure);
    const IncrementPlan plan = plan_from_json(h, doc);
    final_weights = apply_plan(h, instance.weights, plan);
    steps = plan.total_steps();
  } else {
    const IncrementPlan plan = plan_from_json(instance.graph(), doc);
    final_weights = apply_plan(instance.graph(), instance.weights, plan);
    steps = plan.total_steps();
  }
  const auto uniform = is_uniform(final_weights);
  Json out;
  out["uniform"] = uniform.has_value();
  out["beta"] = uniform ? Json(*uniform) : Json(nullptr);
  out["steps"] = steps;
  out["final_weights"] = std::vector<Count>(final_weights.values().begin(), final_weights.values().end());
  if (doc.is_object() && doc.contains("beta") && doc.at("beta").is_number_integer()) {
    out["claimed_beta_matches"] = uniform.has_value() && *uniform == doc.at("beta").get<Count>();
  } else {
    out["claimed_beta_matches"] = nullptr;
  }
  return out;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Balance node weights by edge increments", "nodebal"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string seed;
  app.add_option("--seed", seed, "Reserved; every algorithm is deterministic");

  std::string file;
  std::string output_path;
  std::string plan_path;
  Count beta = 0;
  Count beta_cap = 0;
  ExpansionBudget budget;
  oracles::BacktrackLimits limits;
  std::function<Json()> action;

  auto* equate_cmd = app.add_subcommand("equate", "Minimum target and smallest increment plan for a graph");
  equate_cmd->add_option("file", file, "Instance file")->required();
  equate_cmd->add_option("--max-copies", budget.max_copies, "Vertex-split copy budget");
  equate_cmd->add_option("--max-expanded-edges", budget.max_edges, "Vertex-split edge budget");
  equate_cmd->callback([&] {
    action = [&] {
      const Instance instance = read_instance_file(file);
      const Graph& g = require_graph(instance, "equate");
      EquateOptions options;
      options.budget = budget;
      return equate_result_to_json(g, equate(g, instance.weights, options));
    };
  });

  auto* classify_cmd = app.add_subcommand("classify", "Is every weight assignment equatable on this graph?");
  classify_cmd->add_option("file", file, "Instance file")->required();
  classify_cmd->callback([&] {
    action = [&] {
      const Instance instance = read_instance_file(file);
      return classify_json(require_graph(instance, "classify"));
    };
  });

  auto* bipartite_cmd = app.add_subcommand("bipartite", "Strict Hall condition and balancedness");
  bipartite_cmd->add_option("file", file, "Instance file")->required();
  bipartite_cmd->callback([&] {
    action = [&] {
      const Instance instance = read_instance_file(file);
      return bipartite_json(require_graph(instance, "bipartite"), instance.weights);
    };
  });

  auto* hyper_cmd = app.add_subcommand("hyper-equate", "Exhaustive equating search on a hypergraph");
  hyper_cmd->add_option("file", file, "Instance file")->required();
  auto* cap_opt = hyper_cmd->add_option("--beta-cap", beta_cap, "Largest target to try");
  hyper_cmd->callback([&] {
    action = [&] {
      const Instance instance = read_instance_file(file);
      const Hypergraph h = instance.as_hypergraph();
      HyperSearchOptions options;
      if (cap_opt->count() > 0) options.beta_cap = beta_cap;
      return hyper_result_to_json(h, hyper_equate(h, instance.weights, options));
    };
  });

  auto* reduce_cmd = app.add_subcommand(
      "reduce", "Write the equating instance that encodes perfect matching (input weights are ignored)");
  reduce_cmd->add_option("file", file, "Instance file")->required();
  reduce_cmd->add_option("-o,--output", output_path, "Where to write the reduced instance")->required();
  reduce_cmd->callback([&] {
    action = [&] {
      const Instance instance = read_instance_file(file);
      ReductionOutput reduced = reduce_pm_to_equate(instance.as_hypergraph());
      Json result;
      result["vertices"] = reduced.hypergraph.num_vertices();
      result["edges"] = reduced.hypergraph.num_edges();
      result["gadget"] = reduced.gadget;
      result["output"] = output_path;
      const std::string text = serialize_instance(Instance{reduced.hypergraph, reduced.weights});
      std::ofstream sink(output_path, std::ios::binary);
      if (!sink || !(sink << text)) throw InvalidInput("cannot write '" + output_path + "'");
      return result;
    };
  });

  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force reference solvers");
  oracle_cmd->require_subcommand(1);
  auto* min_beta_cmd = oracle_cmd->add_subcommand("min-beta", "Scan targets with subset enumeration");
  min_beta_cmd->add_option("file", file, "Instance file")->required();
  min_beta_cmd->callback([&] {
    action = [&] {
      const Instance instance = read_instance_file(file);
      const auto found = oracles::min_beta_scan(require_graph(instance, "oracle min-beta"), instance.weights);
      Json result;
      result["beta"] = found ? Json(*found) : Json(nullptr);
      return result;
    };
  });
  auto* backtrack_cmd = oracle_cmd->add_subcommand("backtrack", "Exhaustive search at one target");
  backtrack_cmd->add_option("file", file, "Instance file")->required();
  backtrack_cmd->add_option("--beta", beta, "Target weight")->required();
  backtrack_cmd->add_option("--max-edges", limits.max_edges, "Edge limit");
  backtrack_cmd->add_option("--max-span", limits.max_span, "Limit on beta - min w");
  backtrack_cmd->callback([&] {
    action = [&] {
      const Instance instance = read_instance_file(file);
      const Graph& g = require_graph(instance, "oracle backtrack");
      const auto plan = oracles::equate_backtracking(g, instance.weights, beta, limits);
      Json result;
      result["beta"] = beta;
      result["feasible"] = plan.has_value();
      result["plan"] = plan ? plan_to_json(g, *plan) : Json(nullptr);
      return result;
    };
  });

  auto* verify_cmd = app.add_subcommand("verify", "Replay a plan and check that the weights end uniform");
  verify_cmd->add_option("file", file, "Instance file")->required();
  verify_cmd->add_option("--plan", plan_path, "JSON plan, e.g. the output of equate")->required();
  verify_cmd->callback([&] {
    action = [&] { return verify_json(read_instance_file(file), plan_path); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }
  if (!action) {
    err << "no command given\n";
    return kExitUsage;
  }

  try {
    const Json result = action();
    out << result.dump() << '\n';
    return kExitOk;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const BudgetExceeded& e) {
    err << "limit exceeded: " << e.what() << '\n';
    return kExitBudget;
  } catch (const WitnessUnavailable& e) {
    err << "witness unavailable: " << e.what() << '\n';
    return kExitBudget;
  } catch (const InvalidInput& e) {
    err << "invalid input: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace nodebal
