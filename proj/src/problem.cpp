#include "eqa/problem.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "eqa/feasibility.hpp"

namespace eqa {

std::optional<int> Bundle::single_object() const {
    int found = -1;
    for (int o = 0; o < static_cast<int>(counts.size()); ++o) {
        if (counts[o] == 0) continue;
        if (counts[o] != 1 || found >= 0) return std::nullopt;
        found = o;
    }
    if (found < 0) return std::nullopt;
    return found;
}

EqualsPartition EqualsPartition::from_groups(std::vector<std::vector<int>> gs, int num_agents) {
    EqualsPartition p;
    p.groups = std::move(gs);
    p.group_of.assign(num_agents, -1);
    for (int n = 0; n < static_cast<int>(p.groups.size()); ++n) {
        if (p.groups[n].empty()) throw std::invalid_argument("empty equals group");
        for (int a : p.groups[n]) {
            if (a < 0 || a >= num_agents) throw std::invalid_argument("agent index out of range");
            if (p.group_of[a] != -1) throw std::invalid_argument("agent in two equals groups");
            p.group_of[a] = n;
        }
    }
    for (int a = 0; a < num_agents; ++a)
        if (p.group_of[a] == -1) throw std::invalid_argument("agent missing from partition");
    return p;
}

int Problem::bundle_index(const Bundle& x) const {
    auto i = try_bundle_index(x);
    if (!i) throw std::invalid_argument("bundle not in universe");
    return *i;
}

std::optional<int> Problem::try_bundle_index(const Bundle& x) const {
    for (int i = 0; i < universe_size(); ++i)
        if (bundle_universe[i] == x) return i;
    return std::nullopt;
}

int Problem::agent_index(const std::string& label) const {
    for (int a = 0; a < num_agents(); ++a)
        if (agent_labels[a] == label) return a;
    throw std::invalid_argument("unknown agent label: " + label);
}

void Problem::finalize() {
    const int na = num_agents();
    const int nu = universe_size();
    if (na == 0) throw std::invalid_argument("no agents");
    if (nu == 0) throw std::invalid_argument("empty bundle universe");

    std::set<std::string> labels(agent_labels.begin(), agent_labels.end());
    if (static_cast<int>(labels.size()) != na)
        throw std::invalid_argument("duplicate agent labels");
    std::set<std::string> olabels(object_labels.begin(), object_labels.end());
    if (olabels.size() != object_labels.size())
        throw std::invalid_argument("duplicate object labels");

    std::set<Bundle> seen;
    for (const auto& b : bundle_universe) {
        if (static_cast<int>(b.counts.size()) != num_objects())
            throw std::invalid_argument("bundle arity mismatch");
        for (int c : b.counts)
            if (c < 0) throw std::invalid_argument("negative bundle entry");
        if (!seen.insert(b).second) throw std::invalid_argument("duplicate bundle in universe");
    }

    if (static_cast<int>(preferences.size()) != na)
        throw std::invalid_argument("preferences count mismatch");
    rank_of_.assign(na, std::vector<int>(nu, 0));
    for (int a = 0; a < na; ++a) {
        const auto& order = preferences[a].best_first;
        if (static_cast<int>(order.size()) != nu)
            throw std::invalid_argument("preference order must cover exactly the universe");
        std::vector<bool> hit(nu, false);
        for (int r = 0; r < nu; ++r) {
            int i = order[r];
            if (i < 0 || i >= nu || hit[i])
                throw std::invalid_argument("preference order is not a permutation of the universe");
            hit[i] = true;
            rank_of_[a][i] = r + 1;
        }
    }

    if (partition.group_of.size() != static_cast<size_t>(na))
        throw std::invalid_argument("partition does not cover the agents");

    if (feasible && feasible->is_explicit()) {
        for (const auto& y : feasible->as_explicit().members) {
            if (y.num_agents != na || y.num_objects != num_objects())
                throw std::invalid_argument("feasible member has wrong dimensions");
            for (int a = 0; a < na; ++a)
                if (!try_bundle_index(y.row(a)))
                    throw std::invalid_argument("feasible member row missing from bundle universe");
        }
    }
}

AuditReport audit_assumption1(const Problem& p) {
    for (const auto& group : p.partition.groups) {
        for (size_t i = 1; i < group.size(); ++i) {
            int a = group[0], b = group[i];
            if (p.preferences[a] != p.preferences[b]) {
                return {false, "equals '" + p.agent_labels[a] + "' and '" + p.agent_labels[b] +
                                   "' have different preference orders"};
            }
        }
    }
    return {true, ""};
}

AuditReport audit_assumption2(const Problem& p) {
    if (!p.feasible) return {true, "no feasible set attached"};
    if (p.feasible->is_explicit()) {
        const auto& members = p.feasible->as_explicit().members;
        std::set<PureAssignment> ys(members.begin(), members.end());
        for (const auto& y : members) {
            for (const auto& group : p.partition.groups) {
                for (size_t i = 0; i < group.size(); ++i) {
                    for (size_t j = i + 1; j < group.size(); ++j) {
                        PureAssignment swapped = y.with_rows_swapped(group[i], group[j]);
                        if (!ys.count(swapped)) {
                            return {false, "swapping rows of equals '" +
                                               p.agent_labels[group[i]] + "' and '" +
                                               p.agent_labels[group[j]] +
                                               "' leaves the feasible set"};
                        }
                    }
                }
            }
        }
        return {true, ""};
    }
    if (const auto* lc = std::get_if<LinearCaps>(&p.feasible->rep)) {
        for (const auto& cap : lc->caps) {
            for (const auto& group : p.partition.groups) {
                for (size_t i = 1; i < group.size(); ++i) {
                    int a = group[0], b = group[i];
                    for (int o = 0; o < p.num_objects(); ++o) {
                        auto wa = cap.weights.find({a, o});
                        auto wb = cap.weights.find({b, o});
                        Rat va = wa == cap.weights.end() ? Rat(0) : wa->second;
                        Rat vb = wb == cap.weights.end() ? Rat(0) : wb->second;
                        bool ia = cap.ineligible.count({a, o}) > 0;
                        bool ib = cap.ineligible.count({b, o}) > 0;
                        if (va != vb || ia != ib) {
                            return {false, "cap treats equals '" + p.agent_labels[a] + "' and '" +
                                               p.agent_labels[b] + "' differently on object '" +
                                               p.object_labels[o] + "'"};
                        }
                    }
                }
            }
        }
        return {true, "structural pass"};
    }
    // simple capacity constraints are agent-symmetric
    return {true, "structural pass"};
}

std::vector<Bundle> ranked_universe(const Problem& p, int agent) {
    std::vector<Bundle> out;
    out.reserve(p.universe_size());
    for (int idx : p.preferences[agent].best_first) out.push_back(p.bundle_universe[idx]);
    return out;
}

} // namespace eqa
