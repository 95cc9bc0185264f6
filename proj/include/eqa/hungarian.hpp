#pragma once

#include <cstdint>
#include <vector>

namespace eqa {

// Min-cost perfect assignment on a square integer cost matrix (Kuhn-Munkres
// with potentials). Returns the column matched to each row; total cost via
// out parameter. Deterministic for fixed input.
std::vector<int> solve_assignment(const std::vector<std::vector<std::int64_t>>& cost,
                                  std::int64_t& total_cost);

} // namespace eqa
