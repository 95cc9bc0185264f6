#include "eqa/efficiency.hpp"

#include <stdexcept>

#include "eqa/hungarian.hpp"
#include "eqa/simplex.hpp"

namespace eqa {

namespace {

std::vector<int> row_indices(const PureAssignment& y, const Problem& p) {
    std::vector<int> idx(y.num_agents);
    for (int a = 0; a < y.num_agents; ++a) idx[a] = p.bundle_index(y.row(a));
    return idx;
}

} // namespace

ParetoResult pareto_efficient(const PureAssignment& y, const std::vector<PureAssignment>& Y,
                              const Problem& p) {
    const auto base = row_indices(y, p);
    for (const auto& y2 : Y) {
        if (y2 == y) continue;
        const auto cand = row_indices(y2, p);
        bool all_weak = true, some_strict = false;
        for (int a = 0; a < p.num_agents() && all_weak; ++a) {
            if (!p.weakly_prefers(a, cand[a], base[a]))
                all_weak = false;
            else if (cand[a] != base[a])
                some_strict = true;
        }
        if (all_weak && some_strict) return {false, y2};
    }
    return {true, std::nullopt};
}

EeResult is_ee(const Lottery& sigma, const std::vector<PureAssignment>& Y, const Problem& p) {
    for (const auto& [y, prob] : sigma.support) {
        auto r = pareto_efficient(y, Y, p);
        if (!r.efficient) return {false, y, r.dominator};
    }
    return {};
}

OeResult is_oe(const Lottery& sigma, const std::vector<PureAssignment>& Y, const Problem& p) {
    const int K = static_cast<int>(Y.size());
    const int U = p.universe_size();
    const int nA = p.num_agents();

    // indicator[k][a*U + i]: agent a weakly prefers row a of Y[k] to bundle i
    std::vector<std::vector<bool>> hits(K, std::vector<bool>(nA * U, false));
    for (int k = 0; k < K; ++k) {
        const auto rows = row_indices(Y[k], p);
        for (int a = 0; a < nA; ++a)
            for (int i = 0; i < U; ++i)
                hits[k][a * U + i] = p.weakly_prefers(a, rows[a], i);
    }

    std::vector<Marginal> sig_marg;
    sig_marg.reserve(nA);
    for (int a = 0; a < nA; ++a) sig_marg.push_back(marginal(sigma, p, a));

    std::vector<lp::Constraint> cons;
    Rat baseline = 0;
    std::vector<Rat> objective(K, Rat(0));
    for (int a = 0; a < nA; ++a) {
        for (int i = 0; i < U; ++i) {
            lp::Constraint c;
            c.coeffs.assign(K, Rat(0));
            for (int k = 0; k < K; ++k)
                if (hits[k][a * U + i]) c.coeffs[k] = 1;
            c.sense = lp::Sense::Ge;
            c.rhs = upper_cdf(sig_marg[a], p, i);
            baseline += c.rhs;
            for (int k = 0; k < K; ++k)
                if (hits[k][a * U + i]) objective[k] += 1;
            cons.push_back(std::move(c));
        }
    }
    {
        lp::Constraint one;
        one.coeffs.assign(K, Rat(1));
        one.sense = lp::Sense::Eq;
        one.rhs = 1;
        cons.push_back(std::move(one));
    }

    auto sol = lp::maximize(objective, cons);
    if (sol.status != lp::Status::Optimal)
        throw std::logic_error("dominance program must be feasible and bounded");
    if (sol.objective == baseline) return {};

    Lottery witness;
    for (int k = 0; k < K; ++k)
        if (sol.x[k] != 0) witness.add(Y[k], sol.x[k]);
    witness.validate();

    // witness self-check before returning it
    bool strict = false;
    for (int a = 0; a < nA; ++a) {
        auto f = fosd(p, a, sig_marg[a], marginal(witness, p, a));
        if (!weakly_dominated(f))
            throw std::logic_error("dominance witness failed verification");
        if (f == Fosd::DominatedStrict) strict = true;
    }
    if (!strict) throw std::logic_error("dominance witness is not strict");
    return {false, witness};
}

Rat rank_value(const Lottery& sigma, const Problem& p) {
    Rat total = 0;
    for (const auto& [y, prob] : sigma.support) {
        int sum = 0;
        for (int a = 0; a < p.num_agents(); ++a) sum += p.rank(a, p.bundle_index(y.row(a)));
        total += prob * Rat(sum);
    }
    return total;
}

ReSolution solve_re(const std::vector<PureAssignment>& Y, const Problem& p) {
    if (Y.empty()) throw std::invalid_argument("empty feasible set");
    ReSolution out;
    bool first = true;
    for (const auto& y : Y) {
        Rat r = rank_value(Lottery::point_mass(y), p);
        if (first || r < out.optimal_value) {
            out.optimal_value = r;
            out.minimizers.clear();
            first = false;
        }
        if (r == out.optimal_value) out.minimizers.push_back(y);
    }
    return out;
}

ReSolution solve_re_matching(const UnitDemandSimpleCapacity& ud, const Problem& p) {
    const int nA = p.num_agents();
    const int nO = p.num_objects();
    if (static_cast<int>(ud.capacity.size()) != nO)
        throw std::invalid_argument("capacity arity mismatch");

    Bundle zero;
    zero.counts.assign(nO, 0);
    const auto zero_idx = p.try_bundle_index(zero);

    struct Slot {
        int object;      // -1 means the zero bundle
        int bundle_idx;
    };
    std::vector<Slot> slots;
    for (int o = 0; o < nO; ++o) {
        Bundle unit;
        unit.counts.assign(nO, 0);
        unit.counts[o] = 1;
        auto idx = p.try_bundle_index(unit);
        if (!idx) continue; // object unusable: its unit bundle is not rankable
        for (int c = 0; c < ud.capacity[o]; ++c) slots.push_back({o, *idx});
    }
    if (zero_idx)
        for (int a = 0; a < nA; ++a) slots.push_back({-1, *zero_idx});

    const int nS = static_cast<int>(slots.size());
    if (nS < nA) throw std::invalid_argument("not enough capacity for unit demand");

    const int N = std::max(nA, nS);
    std::vector<std::vector<std::int64_t>> cost(N, std::vector<std::int64_t>(N, 0));
    for (int a = 0; a < nA; ++a)
        for (int s = 0; s < nS; ++s) cost[a][s] = p.rank(a, slots[s].bundle_idx);

    std::int64_t total = 0;
    auto match = solve_assignment(cost, total);

    PureAssignment y(nA, nO);
    for (int a = 0; a < nA; ++a) {
        const auto& slot = slots[match[a]];
        if (slot.object >= 0) y.at(a, slot.object) = 1;
    }
    return {Rat(total), {y}};
}

bool is_re(const Lottery& sigma, const std::vector<PureAssignment>& Y, const Problem& p) {
    return rank_value(sigma, p) == solve_re(Y, p).optimal_value;
}

EfficiencyReport efficiency_report(const Lottery& sigma, const std::vector<PureAssignment>& Y,
                                   const Problem& p) {
    EfficiencyReport rep;
    auto ee = is_ee(sigma, Y, p);
    auto oe = is_oe(sigma, Y, p);
    rep.ee = ee.ee;
    rep.oe = oe.oe;
    rep.rank = rank_value(sigma, p);
    rep.re = rep.rank == solve_re(Y, p).optimal_value;
    rep.ee_witness = ee.dominator;
    rep.oe_witness = oe.dominator;
    if ((rep.re && !rep.oe) || (rep.oe && !rep.ee))
        throw std::logic_error("efficiency implication chain violated");
    return rep;
}

} // namespace eqa
