#pragma once

#include <string>

#include <json.hpp>

#include "eqa/lottery.hpp"
#include "eqa/problem.hpp"

namespace eqa {

// Problem documents: agents, objects, bundleUniverse (count vectors),
// preferences (per agent, bundle indices best first), partition (groups of
// agent labels) or "byPreference": true, and a feasible block of type
// explicit | linearCaps | unitDemandSimpleCapacity. All numerics that can be
// fractional are "p/q" strings.
Problem problem_from_json(const nlohmann::json& doc);
nlohmann::json problem_to_json(const Problem& p);

Problem load_problem(const std::string& path);

Lottery lottery_from_json(const nlohmann::json& doc, const Problem& p);
nlohmann::json lottery_to_json(const Lottery& sigma);

Lottery load_lottery(const std::string& path, const Problem& p);

} // namespace eqa
