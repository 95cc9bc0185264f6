#pragma once

#include <optional>

#include "eqa/lottery.hpp"
#include "eqa/problem.hpp"

namespace eqa {

enum class DerivedMode {
    Cyclic, // independent cyclic rotations per group: prod |A_n| bijections
    Full,   // all within-group permutations: prod |A_n|! bijections
};

// Y_D(y): the within-group row permutations of y. Duplicate matrices are
// merged; `weight` counts how many bijections produce each member, so the
// reassignment mass of a member is weight / total.
struct DerivedSet {
    PureAssignment base;
    std::map<PureAssignment, long long> members; // matrix -> multiplicity
    long long total = 0;                         // number of bijections (L)
};

DerivedSet derived_set(const PureAssignment& y, const EqualsPartition& partition, DerivedMode mode);

// sigma'(ybar) = sum_y sigma(y) * sigma_y(ybar) with sigma_y uniform on Y_D(y).
Lottery ete_reassign(const Lottery& sigma, const EqualsPartition& partition,
                     DerivedMode mode = DerivedMode::Cyclic);

struct EteReport {
    bool ete = true;
    // witness on failure: equals (a, b) and a universe bundle index where
    // their marginal probabilities differ
    int agent_a = -1, agent_b = -1, bundle_idx = -1;
};

EteReport check_ete(const Lottery& sigma, const Problem& p, const EqualsPartition& partition);

// Group-averaged marginal of Lemma-style form, computed without materializing
// the reassignment: (1/|A_n|) * sum_{b in A_n} Pr(x; x(sigma)_b).
Rat lemma1_marginal(const Lottery& sigma, const Problem& p, const EqualsPartition& partition,
                    int agent, int bundle_idx);

struct PreferentialTreatment {
    // every baseline marginal weakly dominated by every advantaged marginal
    // (under the advantaged group's order), with at least one strict pair
    bool hypothesis = false;
    // all pairs strictly dominated
    bool conclusion = false;
};

PreferentialTreatment check_preferential_treatment(const Lottery& sigma, const Problem& p,
                                                   const EqualsPartition& partition,
                                                   int advantaged_group, int baseline_group);

} // namespace eqa
