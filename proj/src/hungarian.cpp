#include "eqa/hungarian.hpp"

#include <limits>
#include <stdexcept>

namespace eqa {

std::vector<int> solve_assignment(const std::vector<std::vector<std::int64_t>>& cost,
                                  std::int64_t& total_cost) {
    const int n = static_cast<int>(cost.size());
    for (const auto& row : cost)
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("cost matrix must be square");

    const std::int64_t inf = std::numeric_limits<std::int64_t>::max() / 4;
    std::vector<std::int64_t> u(n + 1, 0), v(n + 1, 0);
    std::vector<int> p(n + 1, 0), way(n + 1, 0);

    for (int i = 1; i <= n; ++i) {
        p[0] = i;
        int j0 = 0;
        std::vector<std::int64_t> minv(n + 1, inf);
        std::vector<bool> used(n + 1, false);
        do {
            used[j0] = true;
            int i0 = p[j0], j1 = 0;
            std::int64_t delta = inf;
            for (int j = 1; j <= n; ++j) {
                if (used[j]) continue;
                std::int64_t cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (int j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            int j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0);
    }

    std::vector<int> row_to_col(n, -1);
    total_cost = 0;
    for (int j = 1; j <= n; ++j) {
        if (p[j] > 0) {
            row_to_col[p[j] - 1] = j - 1;
            total_cost += cost[p[j] - 1][j - 1];
        }
    }
    return row_to_col;
}

} // namespace eqa
