#pragma once

#include <optional>

#include "eqa/feasibility.hpp"
#include "eqa/lottery.hpp"
#include "eqa/problem.hpp"

namespace eqa {

struct ParetoResult {
    bool efficient = true;
    std::optional<PureAssignment> dominator;
};

// No y2 in Y with y2 weakly preferred by everyone and strictly by someone.
ParetoResult pareto_efficient(const PureAssignment& y, const std::vector<PureAssignment>& Y,
                              const Problem& p);

struct EeResult {
    bool ee = true;
    std::optional<PureAssignment> inefficient_member;
    std::optional<PureAssignment> dominator;
};

EeResult is_ee(const Lottery& sigma, const std::vector<PureAssignment>& Y, const Problem& p);

struct OeResult {
    bool oe = true;
    std::optional<Lottery> dominator; // validated FOSD witness when not OE
};

// Exact test: maximizes the total upper-cdf surplus of a lottery over Y that
// weakly dominates sigma at every cut; sigma is OE iff the optimum is zero.
// Any returned witness is re-verified against fosd before being returned.
OeResult is_oe(const Lottery& sigma, const std::vector<PureAssignment>& Y, const Problem& p);

// R(sigma): expected total rank position.
Rat rank_value(const Lottery& sigma, const Problem& p);

struct ReSolution {
    Rat optimal_value;                    // R*
    std::vector<PureAssignment> minimizers; // all argmin members, sorted
};

// Exhaustive argmin of the total rank over explicit Y.
ReSolution solve_re(const std::vector<PureAssignment>& Y, const Problem& p);

// Matching fast path for unit demand + simple capacity: object copies
// expanded q_o times, cost r(o;a). Returns a single minimizer.
ReSolution solve_re_matching(const UnitDemandSimpleCapacity& ud, const Problem& p);

bool is_re(const Lottery& sigma, const std::vector<PureAssignment>& Y, const Problem& p);

struct EfficiencyReport {
    bool ee = false;
    bool oe = false;
    bool re = false;
    Rat rank;
    std::optional<PureAssignment> ee_witness;
    std::optional<Lottery> oe_witness;
};

// Runs all three checks; enforces the implication chain RE => OE => EE.
EfficiencyReport efficiency_report(const Lottery& sigma, const std::vector<PureAssignment>& Y,
                                   const Problem& p);

} // namespace eqa
