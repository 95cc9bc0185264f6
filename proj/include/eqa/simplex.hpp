#pragma once

#include <vector>

#include "eqa/rational.hpp"

namespace eqa {

// Exact-rational LP:  maximize c.x  s.t.  A x (<=|=|>=) b,  x >= 0.
// Dense two-phase tableau simplex with Bland's rule; deterministic.
namespace lp {

enum class Sense { Le, Eq, Ge };

struct Constraint {
    std::vector<Rat> coeffs;
    Sense sense = Sense::Le;
    Rat rhs;
};

enum class Status { Optimal, Infeasible, Unbounded };

struct Solution {
    Status status = Status::Infeasible;
    Rat objective;
    std::vector<Rat> x;
};

Solution maximize(const std::vector<Rat>& objective, const std::vector<Constraint>& constraints);

} // namespace lp
} // namespace eqa
