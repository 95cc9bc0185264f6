#pragma once

#include <map>

#include "eqa/problem.hpp"
#include "eqa/rational.hpp"

namespace eqa {

// Finitely supported exact distribution over pure assignments.
struct Lottery {
    std::map<PureAssignment, Rat> support; // probabilities > 0, sum exactly 1

    static Lottery point_mass(const PureAssignment& y) { return Lottery{{{y, Rat(1)}}}; }
    void add(const PureAssignment& y, const Rat& prob);
    void validate() const; // throws on zero/negative mass or sum != 1
};

// Per-agent distribution over bundles, keyed by universe index.
struct Marginal {
    int agent = -1;
    std::map<int, Rat> dist; // universe index -> probability

    Rat prob(int bundle_idx) const {
        auto it = dist.find(bundle_idx);
        return it == dist.end() ? Rat(0) : it->second;
    }
    bool operator==(const Marginal& other) const { return dist == other.dist; }
};

Marginal marginal(const Lottery& sigma, const Problem& p, int agent);

// Probability that the assignment is weakly preferred to the universe bundle
// x under the marginal's own agent order: the upper cdf F-bar.
Rat upper_cdf(const Marginal& m, const Problem& p, int bundle_idx);

enum class Fosd {
    Equal,
    DominatedWeak,   // weakly dominated at every cut (reported as strict when
                     // distributions differ, so this tag is informational)
    DominatedStrict, // m dominated by m2 at every cut, distributions differ
    Incomparable,
};

// Compares m against m2 under `agent`'s order: is m dominated by m2?
Fosd fosd(const Problem& p, int agent, const Marginal& m, const Marginal& m2);

inline bool weakly_dominated(Fosd f) { return f == Fosd::Equal || f == Fosd::DominatedStrict; }

} // namespace eqa
