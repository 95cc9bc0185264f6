#pragma once

#include <compare>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace eqa {

// One agent's row of a pure assignment: copies held of each object type.
struct Bundle {
    std::vector<int> counts;

    auto operator<=>(const Bundle&) const = default;
    bool is_zero() const {
        for (int c : counts)
            if (c != 0) return false;
        return true;
    }
    // Unit vector on object o, or nullopt if this is not a single-object bundle.
    std::optional<int> single_object() const;
};

// |A| x |O| matrix of non-negative integers.
struct PureAssignment {
    int num_agents = 0;
    int num_objects = 0;
    std::vector<int> cells; // row-major

    PureAssignment() = default;
    PureAssignment(int na, int no) : num_agents(na), num_objects(no), cells(na * no, 0) {}

    int& at(int a, int o) { return cells[a * num_objects + o]; }
    int at(int a, int o) const { return cells[a * num_objects + o]; }

    Bundle row(int a) const {
        Bundle b;
        b.counts.assign(cells.begin() + a * num_objects, cells.begin() + (a + 1) * num_objects);
        return b;
    }
    void set_row(int a, const Bundle& b) {
        for (int o = 0; o < num_objects; ++o) cells[a * num_objects + o] = b.counts[o];
    }
    std::vector<int> column(int o) const {
        std::vector<int> z(num_agents);
        for (int a = 0; a < num_agents; ++a) z[a] = at(a, o);
        return z;
    }
    PureAssignment with_rows_swapped(int a, int b) const {
        PureAssignment y = *this;
        for (int o = 0; o < num_objects; ++o) std::swap(y.at(a, o), y.at(b, o));
        return y;
    }

    auto operator<=>(const PureAssignment&) const = default;
};

// Strict total order over the bundle universe, stored best-first as indices
// into Problem::bundle_universe.
struct PreferenceOrder {
    std::vector<int> best_first;

    auto operator<=>(const PreferenceOrder&) const = default;
};

// Partition of agents into equals groups A_1..A_N.
struct EqualsPartition {
    std::vector<std::vector<int>> groups;
    std::vector<int> group_of; // agent -> group index

    static EqualsPartition from_groups(std::vector<std::vector<int>> gs, int num_agents);
    int size_of_group(int n) const { return static_cast<int>(groups[n].size()); }
    bool equals(int a, int b) const { return group_of[a] == group_of[b]; }
};

struct FeasibleSet; // feasibility.hpp

struct Problem {
    std::vector<std::string> agent_labels;
    std::vector<std::string> object_labels;
    std::vector<Bundle> bundle_universe;
    std::vector<PreferenceOrder> preferences; // per agent
    EqualsPartition partition;
    std::shared_ptr<const FeasibleSet> feasible;

    int num_agents() const { return static_cast<int>(agent_labels.size()); }
    int num_objects() const { return static_cast<int>(object_labels.size()); }
    int universe_size() const { return static_cast<int>(bundle_universe.size()); }

    // Index of a bundle in the universe; throws if absent.
    int bundle_index(const Bundle& x) const;
    std::optional<int> try_bundle_index(const Bundle& x) const;
    int agent_index(const std::string& label) const;

    // Rank r(x;a): 1 + number of bundles agent a strictly prefers to x.
    int rank(int agent, int bundle_idx) const { return rank_of_[agent][bundle_idx]; }
    // True iff a weakly prefers universe bundle i to universe bundle j.
    bool weakly_prefers(int agent, int i, int j) const {
        return rank_of_[agent][i] <= rank_of_[agent][j];
    }

    // Validates everything and builds rank indices. Throws std::invalid_argument.
    void finalize();

private:
    std::vector<std::vector<int>> rank_of_; // [agent][bundle] -> rank (1-based)
};

struct AuditReport {
    bool pass = true;
    std::string detail; // human-readable witness description on failure
};

// Assumption check: within every equals group all preference orders coincide.
AuditReport audit_assumption1(const Problem& p);

// Assumption check: Y closed under within-group row swaps. Explicit sets are
// checked exhaustively; constraint families by coefficient symmetry
// ("structural pass").
AuditReport audit_assumption2(const Problem& p);

// Agent's view of the universe, best first. Entry i is the bundle at rank i+1.
std::vector<Bundle> ranked_universe(const Problem& p, int agent);

} // namespace eqa
