#include "eqa/simplex.hpp"

#include <cassert>
#include <stdexcept>

namespace eqa::lp {

namespace {

struct Tableau {
    // rows: m constraints, columns: variables + rhs (last)
    std::vector<std::vector<Rat>> rows;
    std::vector<int> basis;    // basic variable per row
    std::vector<Rat> obj;      // reduced objective row (maximization), size cols+1
    int cols = 0;

    Rat& rhs(int r) { return rows[r][cols]; }

    void pivot(int r, int c) {
        Rat piv = rows[r][c];
        assert(piv != 0);
        for (auto& v : rows[r]) v /= piv;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (static_cast<int>(i) == r || rows[i][c] == 0) continue;
            Rat factor = rows[i][c];
            for (int j = 0; j <= cols; ++j) rows[i][j] -= factor * rows[r][j];
        }
        if (obj[c] != 0) {
            Rat factor = obj[c];
            for (int j = 0; j <= cols; ++j) obj[j] -= factor * rows[r][j];
        }
        basis[r] = c;
    }

    // Bland's rule: smallest-index improving column; smallest basic index on
    // ratio ties. Returns false when optimal, throws on unboundedness.
    bool step(const std::vector<bool>& allowed) {
        int enter = -1;
        for (int j = 0; j < cols; ++j) {
            if (allowed[j] && obj[j] > 0) {
                enter = j;
                break;
            }
        }
        if (enter < 0) return false;
        int leave = -1;
        Rat best;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (rows[i][enter] <= 0) continue;
            Rat ratio = rhs(static_cast<int>(i)) / rows[i][enter];
            if (leave < 0 || ratio < best ||
                (ratio == best && basis[i] < basis[leave])) {
                best = ratio;
                leave = static_cast<int>(i);
            }
        }
        if (leave < 0) throw std::runtime_error("lp: unbounded");
        pivot(leave, enter);
        return true;
    }
};

} // namespace

Solution maximize(const std::vector<Rat>& objective, const std::vector<Constraint>& constraints) {
    const int n = static_cast<int>(objective.size());
    const int m = static_cast<int>(constraints.size());

    // layout: [structural n][slack/surplus per inequality][artificial per row]
    int num_slack = 0;
    for (const auto& c : constraints)
        if (c.sense != Sense::Eq) ++num_slack;

    Tableau t;
    t.cols = n + num_slack + m;
    t.rows.assign(m, std::vector<Rat>(t.cols + 1, Rat(0)));
    t.basis.assign(m, -1);

    int slack_at = n;
    for (int i = 0; i < m; ++i) {
        const auto& c = constraints[i];
        if (static_cast<int>(c.coeffs.size()) != n)
            throw std::invalid_argument("lp: coefficient arity mismatch");
        Rat sign = 1;
        // normalize to non-negative rhs so artificials start feasible
        Rat rhs = c.rhs;
        if (rhs < 0) sign = -1, rhs = -rhs;
        for (int j = 0; j < n; ++j) t.rows[i][j] = sign * c.coeffs[j];
        if (c.sense != Sense::Eq) {
            Rat s = (c.sense == Sense::Le) ? Rat(1) : Rat(-1);
            t.rows[i][slack_at++] = sign * s;
        }
        t.rows[i][n + num_slack + i] = 1; // artificial
        t.rows[i][t.cols] = rhs;
        t.basis[i] = n + num_slack + i;
    }

    std::vector<bool> allowed(t.cols, true);

    // phase 1: maximize -sum(artificials)
    t.obj.assign(t.cols + 1, Rat(0));
    for (int i = 0; i < m; ++i) t.obj[n + num_slack + i] = -1;
    for (int i = 0; i < m; ++i) { // price out the initial basis
        for (int j = 0; j <= t.cols; ++j) t.obj[j] += t.rows[i][j];
    }
    while (t.step(allowed)) {}
    if (t.obj[t.cols] != 0) return {Status::Infeasible, Rat(0), {}};

    // drive remaining artificials out of the basis
    for (int i = 0; i < m; ++i) {
        if (t.basis[i] < n + num_slack) continue;
        int piv = -1;
        for (int j = 0; j < n + num_slack; ++j) {
            if (t.rows[i][j] != 0) {
                piv = j;
                break;
            }
        }
        if (piv >= 0) t.pivot(i, piv);
        // degenerate all-zero row: the artificial stays basic at level zero
    }
    for (int j = n + num_slack; j < t.cols; ++j) allowed[j] = false;

    // phase 2
    t.obj.assign(t.cols + 1, Rat(0));
    for (int j = 0; j < n; ++j) t.obj[j] = objective[j];
    for (int i = 0; i < m; ++i) {
        if (t.basis[i] < t.cols && t.obj[t.basis[i]] != 0) {
            Rat factor = t.obj[t.basis[i]];
            for (int j = 0; j <= t.cols; ++j) t.obj[j] -= factor * t.rows[i][j];
        }
    }
    Solution sol;
    try {
        while (t.step(allowed)) {}
    } catch (const std::runtime_error&) {
        sol.status = Status::Unbounded;
        return sol;
    }

    sol.status = Status::Optimal;
    sol.x.assign(n, Rat(0));
    for (int i = 0; i < m; ++i)
        if (t.basis[i] < n) sol.x[t.basis[i]] = t.rhs(i);
    sol.objective = 0;
    for (int j = 0; j < n; ++j) sol.objective += objective[j] * sol.x[j];
    return sol;
}

} // namespace eqa::lp
