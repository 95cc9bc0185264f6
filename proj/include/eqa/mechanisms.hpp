#pragma once

#include <stdexcept>

#include "eqa/ete.hpp"
#include "eqa/feasibility.hpp"
#include "eqa/problem.hpp"

namespace eqa {

struct PriorityList {
    std::vector<int> order; // permutation of agent indices, highest priority first

    auto operator<=>(const PriorityList&) const = default;
};

struct InfeasibleStart : std::runtime_error {
    InfeasibleStart() : std::runtime_error("the all-zero assignment is infeasible") {}
};

struct NotDownwardClosed : std::runtime_error {
    NotDownwardClosed()
        : std::runtime_error("feasible set is not closed under componentwise decrease") {}
};

// True iff every equals group occupies a contiguous block of the list.
bool check_consecutive_equals(const PriorityList& alpha, const EqualsPartition& partition);

// Concatenates the groups in group_order; within_order[g] permutes the
// positions inside group g. The result always passes check_consecutive_equals.
PriorityList make_consecutive_equals(const EqualsPartition& partition,
                                     const std::vector<int>& group_order,
                                     const std::vector<std::vector<int>>& within_order);
PriorityList make_consecutive_equals(const EqualsPartition& partition,
                                     const std::vector<int>& group_order);
PriorityList make_consecutive_equals(const EqualsPartition& partition);

// Each agent, in list order, takes the best bundle in its order such that the
// partial matrix (all later agents at zero) stays feasible. Requires a
// downward-closed feasible set and a feasible zero matrix.
PureAssignment serial_dictatorship(const Problem& p, const FeasibleSet& F,
                                   const PriorityList& alpha);

// Serial dictatorship followed by the equals reassignment. Rejects lists that
// split an equals group and problems failing the equals audits; the output is
// ordinally efficient by construction.
Lottery run_pipeline(const Problem& p, const FeasibleSet& F, const PriorityList& alpha,
                     DerivedMode mode = DerivedMode::Cyclic);

} // namespace eqa
