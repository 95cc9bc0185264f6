#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <variant>
#include <vector>

#include "eqa/problem.hpp"
#include "eqa/rational.hpp"

namespace eqa {

struct EnumerationBudgetExceeded : std::runtime_error {
    explicit EnumerationBudgetExceeded(std::uint64_t limit)
        : std::runtime_error("enumeration budget exceeded (" + std::to_string(limit) + ")") {}
};

// One linear cap: sum of weight(a,o) * y_{ao} <= bound. Cells marked
// ineligible must be zero (hard bound, stands in for infinite weights).
struct Cap {
    // sparse: cells not listed have weight 0
    std::map<std::pair<int, int>, Rat> weights;
    std::set<std::pair<int, int>> ineligible;
    Rat bound;
};

struct ExplicitSet {
    std::vector<PureAssignment> members; // sorted, unique
};

struct LinearCaps {
    std::vector<Cap> caps;
};

struct UnitDemandSimpleCapacity {
    std::vector<int> capacity; // q_o >= 1 per object
};

struct FeasibleSet {
    std::variant<ExplicitSet, LinearCaps, UnitDemandSimpleCapacity> rep;

    bool is_explicit() const { return std::holds_alternative<ExplicitSet>(rep); }
    const ExplicitSet& as_explicit() const { return std::get<ExplicitSet>(rep); }
};

FeasibleSet make_explicit(std::vector<PureAssignment> members);

struct EnumerationBudget {
    std::uint64_t max_tested = 1'000'000;
    std::uint64_t max_retained = 100'000;
};

// Membership / constraint satisfaction. For UnitDemandSimpleCapacity a row
// must be a unit vector; the zero row is allowed only when the zero bundle is
// in the problem's bundle universe.
bool is_feasible(const FeasibleSet& f, const Problem& p, const PureAssignment& y);

// Exhaustive Y, rows restricted to the bundle universe, sorted. Explicit sets
// are returned verbatim.
std::vector<PureAssignment> enumerate_feasible(const FeasibleSet& f, const Problem& p,
                                               EnumerationBudget budget = {});

struct ClosureReport {
    bool closed = true;
    // witness on failure: y in Y whose decrement y2 is not in Y
    std::optional<PureAssignment> witness_member;
    std::optional<PureAssignment> witness_missing;
};

// Downward closure of Y under componentwise decrease. LinearCaps are
// structurally closed and return true without enumeration.
ClosureReport check_general_upper_bounds(const FeasibleSet& f, const Problem& p,
                                         EnumerationBudget budget = {});

struct PerObjectReport {
    // literal condition: every per-object column set Z_o is downward closed
    bool per_object_closed = true;
    // stronger combined reading: any combination of feasible columns is in Y
    bool columns_combine_freely = true;
};

PerObjectReport check_per_object_upper_bounds(const FeasibleSet& f, const Problem& p,
                                              EnumerationBudget budget = {});

// Minimum-quota reformulation: adds one cap bounding total assignment outside
// `region` by |A| - n. Requires a unit-demand universe (all bundles unit
// vectors) and a declared null object outside the region.
LinearCaps transform_min_quota(const LinearCaps& f, const Problem& p,
                               const std::set<int>& region, int n, int null_object);

} // namespace eqa
