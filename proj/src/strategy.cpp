#include "eqa/strategy.hpp"

#include <algorithm>
#include <numeric>

namespace eqa {

EqualsPartition partition_by_reports(const ReportProfile& reports, int num_agents) {
    if (static_cast<int>(reports.orders.size()) != num_agents)
        throw std::invalid_argument("report profile arity mismatch");
    std::vector<std::vector<int>> groups;
    std::vector<PreferenceOrder> reps;
    for (int a = 0; a < num_agents; ++a) {
        auto it = std::find(reps.begin(), reps.end(), reports.orders[a]);
        if (it == reps.end()) {
            reps.push_back(reports.orders[a]);
            groups.push_back({a});
        } else {
            groups[it - reps.begin()].push_back(a);
        }
    }
    return EqualsPartition::from_groups(std::move(groups), num_agents);
}

PriorityList group_index_rule(const ReportProfile&, const EqualsPartition& partition) {
    return make_consecutive_equals(partition);
}

ListRule table_rule(std::map<ReportProfile, PriorityList> table) {
    return [table = std::move(table)](const ReportProfile& reports,
                                      const EqualsPartition& partition) {
        auto it = table.find(reports);
        return it != table.end() ? it->second : group_index_rule(reports, partition);
    };
}

Lottery mechanism_f(const ReportProfile& reports, const Problem& p, const FeasibleSet& F,
                    const ListRule& rule, DerivedMode mode) {
    Problem rp = p;
    rp.preferences = reports.orders;
    rp.partition = partition_by_reports(reports, p.num_agents());
    rp.finalize();
    return run_pipeline(rp, F, rule(reports, rp.partition), mode);
}

namespace {

std::vector<PreferenceOrder> all_strict_orders(int universe_size) {
    std::uint64_t count = 1;
    for (int k = 2; k <= universe_size; ++k) {
        count *= k;
        if (count > EnumerationBudget{}.max_tested)
            throw EnumerationBudgetExceeded(EnumerationBudget{}.max_tested);
    }
    std::vector<int> perm(universe_size);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<PreferenceOrder> out;
    do {
        out.push_back({perm});
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

} // namespace

std::optional<ManipulationFinding> find_manipulation(const ReportProfile& truth, const Problem& p,
                                                     const FeasibleSet& F, const ListRule& rule,
                                                     const std::vector<PreferenceOrder>& scope,
                                                     DerivedMode mode) {
    if (truth.orders != p.preferences)
        throw std::invalid_argument("truthful profile must match the problem's preferences");

    const auto candidates = scope.empty() ? all_strict_orders(p.universe_size()) : scope;
    const Lottery truthful = mechanism_f(truth, p, F, rule, mode);

    for (int a = 0; a < p.num_agents(); ++a) {
        const Marginal base = marginal(truthful, p, a);
        for (const auto& lie : candidates) {
            if (lie == truth.orders[a]) continue;
            ReportProfile deviated = truth;
            deviated.orders[a] = lie;
            const Lottery outcome = mechanism_f(deviated, p, F, rule, mode);
            const Marginal got = marginal(outcome, p, a);
            if (fosd(p, a, base, got) == Fosd::DominatedStrict)
                return ManipulationFinding{a, lie, base, got, Fosd::DominatedStrict};
        }
    }
    return std::nullopt;
}

} // namespace eqa
