#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "eqa/efficiency.hpp"
#include "eqa/ete.hpp"
#include "eqa/feasibility.hpp"
#include "eqa/lottery.hpp"
#include "eqa/problem.hpp"

namespace support {

using namespace eqa;

inline Bundle B(std::vector<int> counts) { return Bundle{std::move(counts)}; }

inline PureAssignment mat(const std::vector<std::vector<int>>& rows) {
    PureAssignment y(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (size_t a = 0; a < rows.size(); ++a)
        for (size_t o = 0; o < rows[a].size(); ++o) y.at(static_cast<int>(a), static_cast<int>(o)) = rows[a][o];
    return y;
}

inline std::vector<std::string> labels(const std::string& prefix, int n) {
    std::vector<std::string> out;
    for (int i = 1; i <= n; ++i) out.push_back(prefix + std::to_string(i));
    return out;
}

inline Problem make_problem(int num_agents, int num_objects, std::vector<Bundle> universe,
                            std::vector<std::vector<int>> prefs,
                            std::vector<std::vector<int>> groups, FeasibleSet feasible) {
    Problem p;
    p.agent_labels = labels("a", num_agents);
    p.object_labels = labels("o", num_objects);
    p.bundle_universe = std::move(universe);
    for (auto& pref : prefs) p.preferences.push_back({std::move(pref)});
    p.partition = EqualsPartition::from_groups(std::move(groups), num_agents);
    p.feasible = std::make_shared<const FeasibleSet>(std::move(feasible));
    p.finalize();
    return p;
}

struct Rng {
    std::mt19937 gen;
    explicit Rng(std::uint32_t seed) : gen(seed) {}
    int below(int n) { return static_cast<int>(gen() % static_cast<std::uint32_t>(n)); }
    bool coin() { return below(2) == 0; }
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (int i = static_cast<int>(v.size()) - 1; i > 0; --i)
            std::swap(v[i], v[below(i + 1)]);
    }
};

struct Instance {
    Problem p;
    std::vector<PureAssignment> Y;
};

inline std::vector<std::vector<int>> random_partition(Rng& rng, int num_agents, int max_group) {
    std::vector<int> agents(num_agents);
    std::iota(agents.begin(), agents.end(), 0);
    rng.shuffle(agents);
    std::vector<std::vector<int>> groups;
    size_t at = 0;
    while (at < agents.size()) {
        int take = 1 + rng.below(std::min<int>(max_group, static_cast<int>(agents.size() - at)));
        groups.emplace_back(agents.begin() + at, agents.begin() + at + take);
        at += take;
    }
    for (auto& g : groups) std::sort(g.begin(), g.end());
    return groups;
}

inline std::vector<std::vector<int>> group_shared_prefs(Rng& rng, int num_agents,
                                                        const std::vector<std::vector<int>>& groups,
                                                        int universe_size) {
    std::vector<std::vector<int>> prefs(num_agents);
    for (const auto& g : groups) {
        std::vector<int> order(universe_size);
        std::iota(order.begin(), order.end(), 0);
        rng.shuffle(order);
        for (int a : g) prefs[a] = order;
    }
    return prefs;
}

inline std::vector<Bundle> random_universe(Rng& rng, int num_objects, bool force_zero) {
    std::set<Bundle> set;
    if (force_zero || rng.coin()) set.insert(B(std::vector<int>(num_objects, 0)));
    for (int o = 0; o < num_objects; ++o) {
        std::vector<int> v(num_objects, 0);
        v[o] = 1;
        set.insert(B(v));
    }
    if (rng.coin()) {
        std::vector<int> v(num_objects, 0);
        v[rng.below(num_objects)] += 1;
        v[rng.below(num_objects)] += 1;
        set.insert(B(v));
    }
    return {set.begin(), set.end()};
}

// Explicit feasible set closed under within-group row swaps, built by closing
// a few random seed matrices.
inline Instance random_swap_closed(Rng& rng) {
    for (;;) {
        const int num_objects = 1 + rng.below(4);
        const int num_agents = 2 + rng.below(5);
        auto universe = random_universe(rng, num_objects, false);
        auto groups = random_partition(rng, num_agents, 3);
        auto prefs = group_shared_prefs(rng, num_agents, groups, static_cast<int>(universe.size()));
        auto partition = EqualsPartition::from_groups(groups, num_agents);

        std::set<PureAssignment> members;
        const int seeds = 1 + rng.below(3);
        for (int s = 0; s < seeds; ++s) {
            PureAssignment y(num_agents, num_objects);
            for (int a = 0; a < num_agents; ++a)
                y.set_row(a, universe[rng.below(static_cast<int>(universe.size()))]);
            auto ds = derived_set(y, partition, DerivedMode::Full);
            for (const auto& [m, mult] : ds.members) members.insert(m);
        }
        if (members.size() > 120) continue;

        Instance inst;
        inst.p = make_problem(num_agents, num_objects, universe, prefs, groups,
                              make_explicit({members.begin(), members.end()}));
        inst.Y = inst.p.feasible->as_explicit().members;
        return inst;
    }
}

// Unit demand with simple per-object capacities.
inline Instance random_unit_demand(Rng& rng) {
    const int num_agents = 2 + rng.below(3);
    const int num_objects = 1 + rng.below(3);
    const bool zero_ok = rng.coin();
    std::vector<int> capacity(num_objects);
    int total = 0;
    for (int o = 0; o < num_objects; ++o) {
        capacity[o] = 1 + rng.below(2);
        total += capacity[o];
    }
    // without an empty-handed option every agent needs a copy
    while (!zero_ok && total < num_agents) {
        ++capacity[rng.below(num_objects)];
        ++total;
    }

    std::vector<Bundle> universe;
    if (zero_ok) universe.push_back(B(std::vector<int>(num_objects, 0)));
    for (int o = 0; o < num_objects; ++o) {
        std::vector<int> v(num_objects, 0);
        v[o] = 1;
        universe.push_back(B(v));
    }
    auto groups = random_partition(rng, num_agents, 3);
    auto prefs = group_shared_prefs(rng, num_agents, groups, static_cast<int>(universe.size()));

    Instance inst;
    inst.p = make_problem(num_agents, num_objects, universe, prefs, groups,
                          FeasibleSet{UnitDemandSimpleCapacity{capacity}});
    inst.Y = enumerate_feasible(*inst.p.feasible, inst.p);
    return inst;
}

// Group-symmetric linear caps (downward closed by construction), always with
// the zero bundle available.
inline Instance random_caps(Rng& rng) {
    for (;;) {
        const int num_agents = 2 + rng.below(4);
        const int num_objects = 1 + rng.below(3);
        auto universe = random_universe(rng, num_objects, true);
        auto groups = random_partition(rng, num_agents, 3);
        auto prefs = group_shared_prefs(rng, num_agents, groups, static_cast<int>(universe.size()));
        auto partition = EqualsPartition::from_groups(groups, num_agents);

        LinearCaps lc;
        for (int o = 0; o < num_objects; ++o) { // per-object capacity
            Cap cap;
            cap.bound = Rat(1 + rng.below(2));
            for (int a = 0; a < num_agents; ++a) cap.weights[{a, o}] = 1;
            lc.caps.push_back(std::move(cap));
        }
        const int extra = rng.below(2);
        for (int k = 0; k < extra; ++k) { // one group-symmetric mixed cap
            Cap cap;
            cap.bound = Rat(1 + rng.below(4), 1 + rng.below(2));
            std::vector<std::vector<Rat>> gw(partition.groups.size(), std::vector<Rat>(num_objects));
            for (auto& row : gw)
                for (auto& w : row) w = Rat(rng.below(3), 1 + rng.below(2));
            for (int a = 0; a < num_agents; ++a)
                for (int o = 0; o < num_objects; ++o) {
                    Rat w = gw[partition.group_of[a]][o];
                    if (w != 0) cap.weights[{a, o}] = w;
                }
            lc.caps.push_back(std::move(cap));
        }

        Instance inst;
        inst.p = make_problem(num_agents, num_objects, universe, prefs, groups,
                              FeasibleSet{std::move(lc)});
        inst.Y = enumerate_feasible(*inst.p.feasible, inst.p);
        if (inst.Y.size() > 150) continue;
        return inst;
    }
}

// obj_of_agent[a] = object index, or -1 for the empty row
inline PureAssignment one_each(int num_objects, const std::vector<int>& obj_of_agent) {
    PureAssignment y(static_cast<int>(obj_of_agent.size()), num_objects);
    for (size_t a = 0; a < obj_of_agent.size(); ++a)
        if (obj_of_agent[a] >= 0) y.at(static_cast<int>(a), obj_of_agent[a]) = 1;
    return y;
}

// Five agents and objects, two two-agent equals groups, feasible set = the
// within-group permutations of the two reference assignments.
inline PureAssignment five_agent_y() { return one_each(5, {1, 0, 2, 3, 4}); }
inline PureAssignment five_agent_y_prime() { return one_each(5, {2, 3, 1, 0, 4}); }

inline Problem five_agent_problem() {
    std::vector<Bundle> universe;
    for (int o = 0; o < 5; ++o) {
        std::vector<int> v(5, 0);
        v[o] = 1;
        universe.push_back(B(v));
    }
    std::vector<std::vector<int>> groups = {{0, 1}, {2, 3}, {4}};
    auto partition = EqualsPartition::from_groups(groups, 5);
    std::set<PureAssignment> members;
    for (const auto& base : {five_agent_y(), five_agent_y_prime()})
        for (const auto& [m, mult] : derived_set(base, partition, DerivedMode::Full).members)
            members.insert(m);
    std::vector<std::vector<int>> prefs(5, std::vector<int>{0, 1, 2, 3, 4});
    return make_problem(5, 5, universe, prefs, groups,
                        make_explicit({members.begin(), members.end()}));
}

// Four agents, one equals group, shared order o1 > o2 > o3 > o4. Feasible set:
// all permutation matrices, the six "two on o1 and two on o4" splits, and the
// everyone-on-o2 assignment.
inline PureAssignment four_agent_y() { return one_each(4, {1, 0, 2, 3}); }

inline Problem four_agent_problem() {
    std::vector<Bundle> universe;
    for (int o = 0; o < 4; ++o) {
        std::vector<int> v(4, 0);
        v[o] = 1;
        universe.push_back(B(v));
    }
    std::set<PureAssignment> members;
    std::vector<int> perm = {0, 1, 2, 3};
    do {
        members.insert(one_each(4, perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            std::vector<int> objs(4, 3);
            objs[i] = 0;
            objs[j] = 0;
            members.insert(one_each(4, objs));
        }
    members.insert(one_each(4, {1, 1, 1, 1}));
    std::vector<std::vector<int>> prefs(4, std::vector<int>{0, 1, 2, 3});
    return make_problem(4, 4, universe, prefs, {{0, 1, 2, 3}},
                        make_explicit({members.begin(), members.end()}));
}

// Six agents, one object: up to two copies go out freely, or one entire
// three-agent group takes a copy each.
inline Problem six_agent_problem() {
    std::vector<Bundle> universe = {B({0}), B({1})};
    std::vector<PureAssignment> members;
    for (int mask = 0; mask < 64; ++mask) {
        int holders = 0;
        for (int a = 0; a < 6; ++a) holders += (mask >> a) & 1;
        const bool one_group = mask == 0b000111 || mask == 0b111000;
        if (holders > 2 && !one_group) continue;
        PureAssignment y(6, 1);
        for (int a = 0; a < 6; ++a) y.at(a, 0) = (mask >> a) & 1;
        members.push_back(y);
    }
    std::vector<std::vector<int>> prefs(6, std::vector<int>{1, 0});
    return make_problem(6, 1, universe, prefs, {{0, 1, 2}, {3, 4, 5}},
                        make_explicit(std::move(members)));
}

inline Lottery random_mixture(Rng& rng, const std::vector<PureAssignment>& members,
                              int max_parts) {
    const int parts = 1 + rng.below(max_parts);
    std::vector<int> weights(parts);
    std::vector<const PureAssignment*> picks(parts);
    int total = 0;
    for (int i = 0; i < parts; ++i) {
        weights[i] = 1 + rng.below(4);
        total += weights[i];
        picks[i] = &members[rng.below(static_cast<int>(members.size()))];
    }
    Lottery sigma;
    for (int i = 0; i < parts; ++i) sigma.add(*picks[i], Rat(weights[i], total));
    sigma.validate();
    return sigma;
}

} // namespace support
