#include "eqa/mechanisms.hpp"

#include <numeric>
#include <set>

namespace eqa {

bool check_consecutive_equals(const PriorityList& alpha, const EqualsPartition& partition) {
    std::set<int> seen;
    int current = -1;
    for (int a : alpha.order) {
        int g = partition.group_of[a];
        if (g == current) continue;
        if (seen.count(g)) return false; // group re-entered after a break
        seen.insert(g);
        current = g;
    }
    return true;
}

PriorityList make_consecutive_equals(const EqualsPartition& partition,
                                     const std::vector<int>& group_order,
                                     const std::vector<std::vector<int>>& within_order) {
    const int num_groups = static_cast<int>(partition.groups.size());
    if (static_cast<int>(group_order.size()) != num_groups ||
        static_cast<int>(within_order.size()) != num_groups)
        throw std::invalid_argument("priority list: order arity mismatch");
    PriorityList alpha;
    for (int g : group_order) {
        const auto& members = partition.groups.at(g);
        const auto& w = within_order.at(g);
        if (w.size() != members.size())
            throw std::invalid_argument("priority list: within-group order arity mismatch");
        for (int k : w) alpha.order.push_back(members.at(k));
    }
    return alpha;
}

PriorityList make_consecutive_equals(const EqualsPartition& partition,
                                     const std::vector<int>& group_order) {
    std::vector<std::vector<int>> within(partition.groups.size());
    for (size_t g = 0; g < partition.groups.size(); ++g) {
        within[g].resize(partition.groups[g].size());
        std::iota(within[g].begin(), within[g].end(), 0);
    }
    return make_consecutive_equals(partition, group_order, within);
}

PriorityList make_consecutive_equals(const EqualsPartition& partition) {
    std::vector<int> groups(partition.groups.size());
    std::iota(groups.begin(), groups.end(), 0);
    return make_consecutive_equals(partition, groups);
}

PureAssignment serial_dictatorship(const Problem& p, const FeasibleSet& F,
                                   const PriorityList& alpha) {
    const int nA = p.num_agents();
    {
        std::set<int> seen(alpha.order.begin(), alpha.order.end());
        if (static_cast<int>(alpha.order.size()) != nA || static_cast<int>(seen.size()) != nA)
            throw std::invalid_argument("priority list must be a permutation of the agents");
    }
    if (!check_general_upper_bounds(F, p).closed) throw NotDownwardClosed();

    PureAssignment y(nA, p.num_objects());
    if (!is_feasible(F, p, y)) throw InfeasibleStart();

    for (int a : alpha.order) {
        bool placed = false;
        for (int idx : p.preferences[a].best_first) {
            y.set_row(a, p.bundle_universe[idx]);
            if (is_feasible(F, p, y)) {
                placed = true;
                break;
            }
        }
        if (!placed)
            throw std::logic_error("no feasible bundle at a dictatorship step");
    }
    return y;
}

Lottery run_pipeline(const Problem& p, const FeasibleSet& F, const PriorityList& alpha,
                     DerivedMode mode) {
    if (!check_consecutive_equals(alpha, p.partition))
        throw std::invalid_argument("priority list splits an equals group");
    if (auto a1 = audit_assumption1(p); !a1.pass)
        throw std::invalid_argument("equals audit failed: " + a1.detail);
    if (auto a2 = audit_assumption2(p); !a2.pass)
        throw std::invalid_argument("swap-closure audit failed: " + a2.detail);
    auto y = serial_dictatorship(p, F, alpha);
    return ete_reassign(Lottery::point_mass(y), p.partition, mode);
}

} // namespace eqa
