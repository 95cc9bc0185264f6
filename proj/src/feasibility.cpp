#include "eqa/feasibility.hpp"

#include <algorithm>

namespace eqa {

FeasibleSet make_explicit(std::vector<PureAssignment> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    if (members.empty()) throw std::invalid_argument("explicit feasible set must be non-empty");
    return FeasibleSet{ExplicitSet{std::move(members)}};
}

namespace {

bool cap_satisfied(const Cap& cap, const PureAssignment& y) {
    for (const auto& cell : cap.ineligible)
        if (y.at(cell.first, cell.second) > 0) return false;
    Rat total = 0;
    for (const auto& [cell, w] : cap.weights) total += w * y.at(cell.first, cell.second);
    return total <= cap.bound;
}

} // namespace

bool is_feasible(const FeasibleSet& f, const Problem& p, const PureAssignment& y) {
    if (y.num_agents != p.num_agents() || y.num_objects != p.num_objects())
        throw std::invalid_argument("assignment dimensions do not match problem");
    if (const auto* ex = std::get_if<ExplicitSet>(&f.rep)) {
        return std::binary_search(ex->members.begin(), ex->members.end(), y);
    }
    if (const auto* lc = std::get_if<LinearCaps>(&f.rep)) {
        for (const auto& cap : lc->caps)
            if (!cap_satisfied(cap, y)) return false;
        return true;
    }
    const auto& ud = std::get<UnitDemandSimpleCapacity>(f.rep);
    const bool zero_ok = p.try_bundle_index(Bundle{std::vector<int>(p.num_objects(), 0)}).has_value();
    for (int a = 0; a < y.num_agents; ++a) {
        int sum = 0;
        for (int o = 0; o < y.num_objects; ++o) {
            if (y.at(a, o) < 0) return false;
            sum += y.at(a, o);
        }
        if (sum > 1) return false;
        if (sum == 0 && !zero_ok) return false;
    }
    for (int o = 0; o < y.num_objects; ++o) {
        int sum = 0;
        for (int a = 0; a < y.num_agents; ++a) sum += y.at(a, o);
        if (sum > ud.capacity[o]) return false;
    }
    return true;
}

std::vector<PureAssignment> enumerate_feasible(const FeasibleSet& f, const Problem& p,
                                               EnumerationBudget budget) {
    if (const auto* ex = std::get_if<ExplicitSet>(&f.rep)) return ex->members;

    // Rows range over the bundle universe in lexicographic bundle order; the
    // resulting member order is therefore deterministic.
    std::vector<Bundle> universe = p.bundle_universe;
    std::sort(universe.begin(), universe.end());
    const int na = p.num_agents();
    const int nu = static_cast<int>(universe.size());

    std::vector<PureAssignment> out;
    std::vector<int> choice(na, 0);
    std::uint64_t tested = 0;
    PureAssignment y(na, p.num_objects());
    while (true) {
        if (++tested > budget.max_tested) throw EnumerationBudgetExceeded(budget.max_tested);
        for (int a = 0; a < na; ++a) y.set_row(a, universe[choice[a]]);
        if (is_feasible(f, p, y)) {
            if (out.size() >= budget.max_retained)
                throw EnumerationBudgetExceeded(budget.max_retained);
            out.push_back(y);
        }
        int a = na - 1;
        while (a >= 0 && choice[a] == nu - 1) choice[a--] = 0;
        if (a < 0) break;
        ++choice[a];
    }
    std::sort(out.begin(), out.end());
    return out;
}

ClosureReport check_general_upper_bounds(const FeasibleSet& f, const Problem& p,
                                         EnumerationBudget budget) {
    if (std::holds_alternative<LinearCaps>(f.rep)) return {};       // non-negative weights
    if (std::holds_alternative<UnitDemandSimpleCapacity>(f.rep)) {
        // downward closed exactly when agents may hold nothing
        bool zero_ok =
            p.try_bundle_index(Bundle{std::vector<int>(p.num_objects(), 0)}).has_value();
        if (zero_ok) return {};
        ClosureReport r;
        r.closed = false;
        return r;
    }
    auto members = enumerate_feasible(f, p, budget);
    std::set<PureAssignment> ys(members.begin(), members.end());
    for (const auto& y : members) {
        for (int a = 0; a < y.num_agents; ++a) {
            for (int o = 0; o < y.num_objects; ++o) {
                if (y.at(a, o) == 0) continue;
                PureAssignment down = y;
                --down.at(a, o);
                if (!ys.count(down)) return {false, y, down};
            }
        }
    }
    return {};
}

PerObjectReport check_per_object_upper_bounds(const FeasibleSet& f, const Problem& p,
                                              EnumerationBudget budget) {
    auto members = enumerate_feasible(f, p, budget);
    std::set<PureAssignment> ys(members.begin(), members.end());
    const int na = p.num_agents();
    const int no = p.num_objects();

    PerObjectReport rep;
    std::vector<std::set<std::vector<int>>> columns(no);
    for (const auto& y : members)
        for (int o = 0; o < no; ++o) columns[o].insert(y.column(o));

    for (int o = 0; o < no && rep.per_object_closed; ++o) {
        for (const auto& z : columns[o]) {
            for (int a = 0; a < na; ++a) {
                if (z[a] == 0) continue;
                std::vector<int> down = z;
                --down[a];
                if (!columns[o].count(down)) {
                    rep.per_object_closed = false;
                    break;
                }
            }
            if (!rep.per_object_closed) break;
        }
    }

    // Combined reading: every cross-product of per-object feasible columns is
    // itself a feasible matrix. Checked exhaustively under the same budget.
    std::uint64_t combos = 1;
    for (int o = 0; o < no; ++o) {
        combos *= columns[o].size();
        if (combos > budget.max_tested) throw EnumerationBudgetExceeded(budget.max_tested);
    }
    std::vector<std::vector<std::vector<int>>> cols(no);
    for (int o = 0; o < no; ++o) cols[o].assign(columns[o].begin(), columns[o].end());
    std::vector<int> pick(no, 0);
    while (true) {
        PureAssignment y(na, no);
        for (int o = 0; o < no; ++o)
            for (int a = 0; a < na; ++a) y.at(a, o) = cols[o][pick[o]][a];
        bool in_universe = true;
        for (int a = 0; a < na && in_universe; ++a)
            in_universe = p.try_bundle_index(y.row(a)).has_value();
        if (in_universe && !ys.count(y)) {
            rep.columns_combine_freely = false;
            break;
        }
        int o = no - 1;
        while (o >= 0 && pick[o] == static_cast<int>(cols[o].size()) - 1) pick[o--] = 0;
        if (o < 0) break;
        ++pick[o];
    }
    return rep;
}

LinearCaps transform_min_quota(const LinearCaps& f, const Problem& p, const std::set<int>& region,
                               int n, int null_object) {
    if (null_object < 0 || null_object >= p.num_objects())
        throw std::invalid_argument("null object out of range");
    if (region.count(null_object)) throw std::invalid_argument("null object inside quota region");
    for (const auto& b : p.bundle_universe)
        if (!b.single_object())
            throw std::invalid_argument("minimum-quota reformulation requires unit demand");
    if (n < 0 || n > p.num_agents()) throw std::invalid_argument("quota out of range");

    Cap cap;
    cap.bound = Rat(p.num_agents() - n);
    for (int a = 0; a < p.num_agents(); ++a)
        for (int o = 0; o < p.num_objects(); ++o)
            if (!region.count(o)) cap.weights[{a, o}] = Rat(1);
    LinearCaps out = f;
    out.caps.push_back(std::move(cap));
    return out;
}

} // namespace eqa
