#include "nodebal/json_io.h"

#include <algorithm>
#include <map>
#include <string>

#include "nodebal/errors.h"

namespace nodebal {

namespace {

Json certificate_entry(const ParityCertificate& cert) {
  Json out = violating_set_to_json(cert.set);
  out["parity"] = std::string(to_string(cert.parity));
  out["beta"] = cert.beta;
  return out;
}

const nlohmann::json& plan_array(const nlohmann::json& doc) {
  static const nlohmann::json kEmpty = nlohmann::json::array();
  if (doc.is_array()) return doc;
  if (doc.is_object() && doc.contains("plan")) {
    const auto& plan = doc.at("plan");
    if (plan.is_null()) return kEmpty;
    if (plan.is_array()) return plan;
  }
  throw ParseError(0, "plan must be an array or an object with a \"plan\" array");
}

struct PlanEntry {
  std::vector<Vertex> edge;
  Count count;
};

std::vector<PlanEntry> read_entries(const nlohmann::json& doc) {
  std::vector<PlanEntry> out;
  for (const auto& item : plan_array(doc)) {
    if (!item.is_object() || !item.contains("edge") || !item.contains("count") ||
        !item.at("edge").is_array() || !item.at("count").is_number_integer()) {
      throw ParseError(0, "plan entries need an \"edge\" array and an integer \"count\"");
    }
    PlanEntry entry;
    for (const auto& v : item.at("edge")) {
      if (!v.is_number_integer()) throw ParseError(0, "edge members must be integers");
      entry.edge.push_back(v.get<Vertex>());
    }
    entry.count = item.at("count").get<Count>();
    if (entry.count < 0) throw ParseError(0, "negative plan count");
    std::sort(entry.edge.begin(), entry.edge.end());
    out.push_back(std::move(entry));
  }
  return out;
}

std::string describe(const std::vector<Vertex>& edge) {
  std::string s = "[";
  for (std::size_t i = 0; i < edge.size(); ++i) s += (i ? "," : "") + std::to_string(edge[i]);
  return s + "]";
}

}  // namespace

Json plan_to_json(const Graph& g, const IncrementPlan& plan) {
  Json out = Json::array();
  for (const auto& [id, count] : plan.entries()) {
    const Edge& e = g.edge(id);
    out.push_back(Json{{"edge", {e.u, e.v}}, {"count", count}});
  }
  return out;
}

Json plan_to_json(const Hypergraph& h, const IncrementPlan& plan) {
  std::vector<std::pair<int, Count>> entries(plan.entries().begin(), plan.entries().end());
  std::stable_sort(entries.begin(), entries.end(), [&](const auto& a, const auto& b) {
    return h.edge(a.first) < h.edge(b.first);
  });
  Json out = Json::array();
  for (const auto& [id, count] : entries) out.push_back(Json{{"edge", h.edge(id)}, {"count", count}});
  return out;
}

Json violating_set_to_json(const ViolatingSet& set) {
  return Json{{"type", "tutte"},
              {"U", set.u},
              {"isolated", set.isolated},
              {"s_count", set.s_count},
              {"deficiency", set.deficiency}};
}

Json equate_result_to_json(const Graph& g, const EquateResult& result) {
  Json out;
  out["equatable"] = result.feasible();
  out["beta"] = result.beta ? Json(*result.beta) : Json(nullptr);
  out["plan"] = result.feasible() ? plan_to_json(g, result.plan) : Json(nullptr);
  if (result.feasible()) {
    out["certificate"] = nullptr;
  } else if (result.reason == InfeasibleReason::kParity || result.certificates.empty()) {
    out["certificate"] = Json{{"type", "parity"}};
  } else if (result.certificates.size() == 1) {
    out["certificate"] = certificate_entry(result.certificates.front());
  } else {
    Json per_parity{{"type", "tutte_per_parity"}};
    for (const auto& cert : result.certificates) {
      per_parity[std::string(to_string(cert.parity))] = certificate_entry(cert);
    }
    out["certificate"] = std::move(per_parity);
  }
  return out;
}

Json hyper_result_to_json(const Hypergraph& h, const HyperEquateResult& result) {
  Json out;
  out["equatable"] = result.feasible();
  switch (result.status) {
    case HyperStatus::kFeasible: out["status"] = "feasible"; break;
    case HyperStatus::kInfeasible: out["status"] = "infeasible"; break;
    case HyperStatus::kInfeasibleWithinCap: out["status"] = "infeasible_within_cap"; break;
  }
  out["beta"] = result.beta ? Json(*result.beta) : Json(nullptr);
  out["plan"] = result.feasible() ? plan_to_json(h, result.plan) : Json(nullptr);
  out["beta_cap"] = result.beta_cap;
  switch (result.proof) {
    case HyperProof::kNone: out["proof"] = nullptr; break;
    case HyperProof::kFrozenVertex: out["proof"] = "frozen_vertex"; break;
    case HyperProof::kDivisibility: out["proof"] = "divisibility"; break;
  }
  return out;
}

IncrementPlan plan_from_json(const Graph& g, const nlohmann::json& doc) {
  IncrementPlan plan;
  for (const auto& entry : read_entries(doc)) {
    std::optional<int> id;
    if (entry.edge.size() == 2) id = g.find_edge(entry.edge[0], entry.edge[1]);
    if (!id) throw ParseError(0, "plan edge " + describe(entry.edge) + " is not in the graph");
    plan.add(*id, entry.count);
  }
  return plan;
}

IncrementPlan plan_from_json(const Hypergraph& h, const nlohmann::json& doc) {
  std::map<std::vector<Vertex>, int> first_id;
  for (int id = h.num_edges() - 1; id >= 0; --id) first_id[h.edge(id)] = id;
  IncrementPlan plan;
  for (const auto& entry : read_entries(doc)) {
    auto it = first_id.find(entry.edge);
    if (it == first_id.end()) {
      throw ParseError(0, "plan edge " + describe(entry.edge) + " is not in the hypergraph");
    }
    plan.add(it->second, entry.count);
  }
  return plan;
}

}  // namespace nodebal
