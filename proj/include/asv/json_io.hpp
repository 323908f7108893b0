#pragma once

#include <json.hpp>

#include "asv/evaluate.hpp"
#include "asv/extended.hpp"
#include "asv/geometry.hpp"
#include "asv/lasso.hpp"
#include "asv/robust.hpp"
#include "asv/solver.hpp"
#include "asv/strategy.hpp"
#include "asv/witness.hpp"
#include "asv/zerosum.hpp"

namespace asv {

using Json = nlohmann::ordered_json;

// Rationals are written as strings ("3/4", "-2") so no precision is lost;
// +inf/-inf appear as "+inf"/"-inf".
Json to_json(const Rational& r);
Json to_json(const ExtRational& r);

Json arena_to_json(const Arena& arena);
// {"vars": [...], "cells": [[{"coef": {"x": "1", ...}, "rel": "<", "rhs": "0"}, ...], ...]}
Json region_to_json(const Region& region);
Json edges_to_json(const Arena& arena, const std::vector<int>& edges);
Json lasso_to_json(const Arena& arena, const Lasso& lasso);

// {"player": 0, "states": [...], "initial": "s",
//  "transitions": [{"state": "s", "vertex": "v", "next": "t"}],
//  "choices": [{"state": "s", "vertex": "v", "edge": 3} | {..., "to": "w"}]}
Json strategy_to_json(const Arena& arena, const MealyStrategy& s);
// Throws DomainError on unknown names, non-edges or ambiguous "to" targets.
MealyStrategy strategy_from_json(const Arena& arena, const Json& j);

Json certificate_to_json(const Arena& arena, const WitnessCertificate& cert);
Json asv_result_to_json(const AsvResult& r, bool with_trace);
Json extended_to_json(const Arena& base, const ExtendedArena& ext);
Json robustness_to_json(const RobustnessReport& r);
Json zs_robustness_to_json(const ZsRobustnessReport& r);

}  // namespace asv
