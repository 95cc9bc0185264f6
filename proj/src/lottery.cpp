#include "eqa/lottery.hpp"

#include <stdexcept>

namespace eqa {

void Lottery::add(const PureAssignment& y, const Rat& prob) {
    if (prob <= 0) return;
    auto [it, inserted] = support.try_emplace(y, prob);
    if (!inserted) it->second += prob;
}

void Lottery::validate() const {
    Rat total = 0;
    for (const auto& [y, prob] : support) {
        if (prob <= 0) throw std::invalid_argument("lottery has non-positive mass");
        total += prob;
    }
    if (total != 1) throw std::invalid_argument("lottery probabilities sum to " + format_rat(total));
}

Marginal marginal(const Lottery& sigma, const Problem& p, int agent) {
    Marginal m;
    m.agent = agent;
    for (const auto& [y, prob] : sigma.support) m.dist[p.bundle_index(y.row(agent))] += prob;
    return m;
}

Rat upper_cdf(const Marginal& m, const Problem& p, int bundle_idx) {
    Rat total = 0;
    for (const auto& [idx, prob] : m.dist)
        if (p.weakly_prefers(m.agent, idx, bundle_idx)) total += prob;
    return total;
}

Fosd fosd(const Problem& p, int agent, const Marginal& m, const Marginal& m2) {
    bool equal = m.dist == m2.dist;
    if (equal) return Fosd::Equal;
    // walk the agent's order best-first, accumulating both upper cdfs
    Rat f = 0, f2 = 0;
    bool dominated = true;
    for (int idx : p.preferences[agent].best_first) {
        f += m.prob(idx);
        f2 += m2.prob(idx);
        if (f2 < f) {
            dominated = false;
            break;
        }
    }
    return dominated ? Fosd::DominatedStrict : Fosd::Incomparable;
}

} // namespace eqa
