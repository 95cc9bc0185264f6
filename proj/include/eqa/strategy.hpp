#pragma once

#include <functional>
#include <map>
#include <optional>

#include "eqa/lottery.hpp"
#include "eqa/mechanisms.hpp"

namespace eqa {

// Declared preference orders, one per agent.
struct ReportProfile {
    std::vector<PreferenceOrder> orders;

    auto operator<=>(const ReportProfile&) const = default;
};

// Equals are agents with identical reported orders. Groups are numbered by
// first appearance in agent index order.
EqualsPartition partition_by_reports(const ReportProfile& reports, int num_agents);

// Maps a reported profile to a consecutive-equals priority list.
using ListRule = std::function<PriorityList(const ReportProfile&, const EqualsPartition&)>;

// Built-in rule: groups in index order, agents in index order within each.
PriorityList group_index_rule(const ReportProfile& reports, const EqualsPartition& partition);

// Lookup table keyed by the full reported profile, falling back to
// group_index_rule for unlisted profiles.
ListRule table_rule(std::map<ReportProfile, PriorityList> table);

// Reassignment mechanism driven entirely by the reports: the equals partition
// is recomputed from them, the rule picks the list, then serial dictatorship
// plus the equals reassignment runs.
Lottery mechanism_f(const ReportProfile& reports, const Problem& p, const FeasibleSet& F,
                    const ListRule& rule, DerivedMode mode = DerivedMode::Cyclic);

struct ManipulationFinding {
    int manipulator = -1;
    PreferenceOrder misreport;
    Marginal truthful;
    Marginal manipulated;
    Fosd verdict = Fosd::Incomparable; // always DominatedStrict when returned
};

// Scans agents in index order and misreports in a fixed order; returns the
// first misreport whose outcome marginal strictly dominates the truthful one
// under the manipulator's true order. Empty scope means all strict orders
// over the bundle universe. `truth` must match p's preferences.
std::optional<ManipulationFinding> find_manipulation(
    const ReportProfile& truth, const Problem& p, const FeasibleSet& F, const ListRule& rule,
    const std::vector<PreferenceOrder>& scope = {}, DerivedMode mode = DerivedMode::Cyclic);

} // namespace eqa
