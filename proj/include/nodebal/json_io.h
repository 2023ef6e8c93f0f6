#pragma once

#include <json.hpp>

#include "nodebal/classify.h"
#include "nodebal/equate.h"
#include "nodebal/hyper.h"
#include "nodebal/plan.h"
#include "nodebal/tutte.h"

namespace nodebal {

// Key order is part of the output format.
using Json = nlohmann::ordered_json;

// [{"edge": [ids...], "count": k}, ...] sorted lexicographically by edge.
Json plan_to_json(const Graph& g, const IncrementPlan& plan);
Json plan_to_json(const Hypergraph& h, const IncrementPlan& plan);

// {"type": "tutte", "U": [...], "isolated": [...], "s_count": k, "deficiency": d}
Json violating_set_to_json(const ViolatingSet& set);

// {"equatable": bool, "beta": int|null, "plan": [...]|null, "certificate": {...}|null}
Json equate_result_to_json(const Graph& g, const EquateResult& result);

Json hyper_result_to_json(const Hypergraph& h, const HyperEquateResult& result);

// Reads a plan from a bare JSON array or from an object with a "plan" key
// (a null plan reads as empty). Edges are resolved against the host; an
// edge the host lacks raises ParseError.
IncrementPlan plan_from_json(const Graph& g, const nlohmann::json& doc);
IncrementPlan plan_from_json(const Hypergraph& h, const nlohmann::json& doc);

}  // namespace nodebal
