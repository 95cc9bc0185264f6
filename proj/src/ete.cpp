#include "eqa/ete.hpp"

#include <algorithm>
#include <numeric>

namespace eqa {

namespace {

// Applies one within-group relabeling: for each group, member at position i
// hands its row to the member at position perm[i].
PureAssignment apply_group_permutation(const PureAssignment& y,
                                       const std::vector<std::vector<int>>& groups,
                                       const std::vector<std::vector<int>>& perms) {
    PureAssignment out = y;
    for (size_t n = 0; n < groups.size(); ++n) {
        const auto& g = groups[n];
        const auto& perm = perms[n];
        for (size_t i = 0; i < g.size(); ++i) out.set_row(g[perm[i]], y.row(g[i]));
    }
    return out;
}

} // namespace

DerivedSet derived_set(const PureAssignment& y, const EqualsPartition& partition,
                       DerivedMode mode) {
    DerivedSet ds;
    ds.base = y;
    const auto& groups = partition.groups;
    const size_t ng = groups.size();

    // per-group list of permutations to combine
    std::vector<std::vector<std::vector<int>>> group_perms(ng);
    for (size_t n = 0; n < ng; ++n) {
        const int k = static_cast<int>(groups[n].size());
        if (mode == DerivedMode::Cyclic) {
            for (int s = 0; s < k; ++s) {
                std::vector<int> perm(k);
                for (int i = 0; i < k; ++i) perm[i] = (i + s) % k;
                group_perms[n].push_back(std::move(perm));
            }
        } else {
            std::vector<int> perm(k);
            std::iota(perm.begin(), perm.end(), 0);
            do {
                group_perms[n].push_back(perm);
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
    }

    std::vector<size_t> pick(ng, 0);
    while (true) {
        std::vector<std::vector<int>> chosen(ng);
        for (size_t n = 0; n < ng; ++n) chosen[n] = group_perms[n][pick[n]];
        ++ds.members[apply_group_permutation(y, groups, chosen)];
        ++ds.total;
        size_t n = ng;
        while (n > 0 && pick[n - 1] == group_perms[n - 1].size() - 1) pick[--n] = 0;
        if (n == 0) break;
        ++pick[n - 1];
    }
    return ds;
}

Lottery ete_reassign(const Lottery& sigma, const EqualsPartition& partition, DerivedMode mode) {
    Lottery out;
    for (const auto& [y, prob] : sigma.support) {
        DerivedSet ds = derived_set(y, partition, mode);
        for (const auto& [member, mult] : ds.members)
            out.add(member, prob * Rat(mult, ds.total));
    }
    return out;
}

EteReport check_ete(const Lottery& sigma, const Problem& p, const EqualsPartition& partition) {
    for (const auto& group : partition.groups) {
        if (group.size() < 2) continue;
        Marginal first = marginal(sigma, p, group[0]);
        for (size_t i = 1; i < group.size(); ++i) {
            Marginal other = marginal(sigma, p, group[i]);
            if (first.dist == other.dist) continue;
            for (int idx = 0; idx < p.universe_size(); ++idx) {
                if (first.prob(idx) != other.prob(idx))
                    return {false, group[0], group[i], idx};
            }
        }
    }
    return {};
}

Rat lemma1_marginal(const Lottery& sigma, const Problem& p, const EqualsPartition& partition,
                    int agent, int bundle_idx) {
    const auto& group = partition.groups[partition.group_of[agent]];
    Rat total = 0;
    for (int b : group) total += marginal(sigma, p, b).prob(bundle_idx);
    return total / Rat(static_cast<int>(group.size()));
}

PreferentialTreatment check_preferential_treatment(const Lottery& sigma, const Problem& p,
                                                   const EqualsPartition& partition,
                                                   int advantaged_group, int baseline_group) {
    const auto& adv = partition.groups[advantaged_group];
    const auto& base = partition.groups[baseline_group];

    std::vector<Marginal> madv, mbase;
    for (int a : adv) madv.push_back(marginal(sigma, p, a));
    for (int b : base) mbase.push_back(marginal(sigma, p, b));

    bool all_weak = true, any_strict = false, all_strict = true;
    for (size_t i = 0; i < adv.size(); ++i) {
        for (size_t j = 0; j < base.size(); ++j) {
            Fosd v = fosd(p, adv[i], mbase[j], madv[i]);
            if (!weakly_dominated(v)) all_weak = false;
            if (v == Fosd::DominatedStrict)
                any_strict = true;
            else
                all_strict = false;
        }
    }
    PreferentialTreatment out;
    out.hypothesis = all_weak && any_strict;
    out.conclusion = all_strict;
    return out;
}

} // namespace eqa
