#include <doctest.h>

#include "eqa/mechanisms.hpp"
#include "support.hpp"

using namespace eqa;
using namespace support;

namespace {

const std::vector<int> theta = {0, 1, 2, 3};        // o1 > o2 > o3 > nothing
const std::vector<int> theta_p = {1, 0, 2, 3};      // o2 > o1 > o3 > nothing
const std::vector<int> theta_pp = {1, 2, 0, 3};     // o2 > o3 > o1 > nothing

Problem three_agent_problem(std::vector<std::vector<int>> prefs,
                            std::vector<std::vector<int>> groups) {
    std::vector<Bundle> universe = {B({1, 0, 0}), B({0, 1, 0}), B({0, 0, 1}), B({0, 0, 0})};
    return make_problem(3, 3, universe, std::move(prefs), std::move(groups),
                        FeasibleSet{UnitDemandSimpleCapacity{{1, 1, 1}}});
}

PriorityList random_consecutive(Rng& rng, const EqualsPartition& partition) {
    std::vector<int> group_order(partition.groups.size());
    std::iota(group_order.begin(), group_order.end(), 0);
    rng.shuffle(group_order);
    std::vector<std::vector<int>> within;
    for (const auto& g : partition.groups) {
        std::vector<int> w(g.size());
        std::iota(w.begin(), w.end(), 0);
        rng.shuffle(w);
        within.push_back(w);
    }
    return make_consecutive_equals(partition, group_order, within);
}

PriorityList random_list(Rng& rng, int num_agents) {
    std::vector<int> order(num_agents);
    std::iota(order.begin(), order.end(), 0);
    rng.shuffle(order);
    return PriorityList{order};
}

} // namespace

TEST_CASE("contiguous-group check on priority lists") {
    auto partition = EqualsPartition::from_groups({{0, 1, 2}, {3, 4, 5}}, 6);
    CHECK(check_consecutive_equals(PriorityList{{0, 1, 2, 3, 4, 5}}, partition));
    CHECK(check_consecutive_equals(PriorityList{{4, 3, 5, 2, 0, 1}}, partition));
    CHECK_FALSE(check_consecutive_equals(PriorityList{{0, 3, 1, 2, 4, 5}}, partition));
    auto singles = EqualsPartition::from_groups({{0}, {1}, {2}}, 3);
    CHECK(check_consecutive_equals(PriorityList{{2, 0, 1}}, singles));
}

TEST_CASE("building contiguous lists") {
    auto partition = EqualsPartition::from_groups({{0, 1}, {2}}, 3);
    CHECK(make_consecutive_equals(partition).order == std::vector<int>{0, 1, 2});
    CHECK(make_consecutive_equals(partition, {1, 0}).order == std::vector<int>{2, 0, 1});
    CHECK(make_consecutive_equals(partition, {0, 1}, {{1, 0}, {0}}).order ==
          std::vector<int>{1, 0, 2});

    auto rng = Rng(17);
    for (int trial = 0; trial < 10; ++trial) {
        auto inst = random_swap_closed(rng);
        auto alpha = random_consecutive(rng, inst.p.partition);
        CHECK(check_consecutive_equals(alpha, inst.p.partition));
    }
}

TEST_CASE("serial dictatorship under unit demand") {
    SUBCASE("identical reports take objects in list order") {
        auto p = three_agent_problem({theta, theta, theta}, {{0, 1, 2}});
        auto y = serial_dictatorship(p, *p.feasible, PriorityList{{0, 1, 2}});
        CHECK(y == one_each(3, {0, 1, 2}));
    }
    SUBCASE("list order decides who wins the contested object") {
        auto p = three_agent_problem({theta, theta, theta_p}, {{0, 1}, {2}});
        auto y = serial_dictatorship(p, *p.feasible, PriorityList{{2, 0, 1}});
        CHECK(y == one_each(3, {0, 2, 1}));
    }
    SUBCASE("single agent gets its top bundle") {
        std::vector<Bundle> universe = {B({0}), B({1})};
        auto p = make_problem(1, 1, universe, {{1, 0}}, {{0}},
                              FeasibleSet{UnitDemandSimpleCapacity{{1}}});
        CHECK(serial_dictatorship(p, *p.feasible, PriorityList{{0}}) == mat({{1}}));
    }
    SUBCASE("non-closed feasible sets are refused") {
        std::vector<Bundle> universe = {B({0}), B({1})};
        auto p = make_problem(1, 1, universe, {{1, 0}}, {{0}}, make_explicit({mat({{1}})}));
        CHECK_THROWS_AS(serial_dictatorship(p, *p.feasible, PriorityList{{0}}),
                        NotDownwardClosed);
    }
    SUBCASE("invalid lists are rejected") {
        auto p = three_agent_problem({theta, theta, theta}, {{0, 1, 2}});
        CHECK_THROWS_AS(serial_dictatorship(p, *p.feasible, PriorityList{{0, 0, 1}}),
                        std::invalid_argument);
    }
}

TEST_CASE("dictatorship plus reassignment pipeline") {
    SUBCASE("identical reports give the uniform third marginals") {
        auto p = three_agent_problem({theta, theta, theta}, {{0, 1, 2}});
        auto out = run_pipeline(p, *p.feasible, PriorityList{{0, 1, 2}});
        for (int a = 0; a < 3; ++a)
            for (int o = 0; o < 3; ++o) CHECK(marginal(out, p, a).prob(o) == Rat(1, 3));
    }
    SUBCASE("two equals ahead of the deviant") {
        auto p = three_agent_problem({theta, theta, theta_p}, {{0, 1}, {2}});
        auto out = run_pipeline(p, *p.feasible, PriorityList{{0, 1, 2}});
        for (int a : {0, 1}) {
            CHECK(marginal(out, p, a).prob(0) == Rat(1, 2));
            CHECK(marginal(out, p, a).prob(1) == Rat(1, 2));
        }
        CHECK(marginal(out, p, 2).prob(2) == Rat(1));
    }
    SUBCASE("deviant first flips the picture") {
        auto p = three_agent_problem({theta, theta, theta_p}, {{0, 1}, {2}});
        auto out = run_pipeline(p, *p.feasible, PriorityList{{2, 0, 1}});
        for (int a : {0, 1}) {
            CHECK(marginal(out, p, a).prob(0) == Rat(1, 2));
            CHECK(marginal(out, p, a).prob(2) == Rat(1, 2));
        }
        CHECK(marginal(out, p, 2).prob(1) == Rat(1));
    }
    SUBCASE("lists splitting a group are rejected") {
        auto p = six_agent_problem();
        CHECK_THROWS_AS(run_pipeline(p, *p.feasible, PriorityList{{0, 3, 1, 2, 4, 5}}),
                        std::invalid_argument);
    }
}

TEST_CASE("interleaved priorities break ordinal efficiency on the grouped-copies set") {
    auto p = six_agent_problem();
    const auto& Y = p.feasible->as_explicit().members;

    SUBCASE("alternating list: a third each, dominated by the half-half mixture") {
        auto y = serial_dictatorship(p, *p.feasible, PriorityList{{0, 3, 1, 2, 4, 5}});
        CHECK(y.at(0, 0) == 1);
        CHECK(y.at(3, 0) == 1);
        auto out = ete_reassign(Lottery::point_mass(y), p.partition);
        for (int a = 0; a < 6; ++a) CHECK(marginal(out, p, a).prob(1) == Rat(1, 3));
        auto res = is_oe(out, Y, p);
        CHECK_FALSE(res.oe);
        REQUIRE(res.dominator.has_value());

        // the half-half mixture of the two whole-group assignments dominates
        PureAssignment g1(6, 1), g2(6, 1);
        for (int a : {0, 1, 2}) g1.at(a, 0) = 1;
        for (int a : {3, 4, 5}) g2.at(a, 0) = 1;
        Lottery mix;
        mix.add(g1, Rat(1, 2));
        mix.add(g2, Rat(1, 2));
        mix.validate();
        for (int a = 0; a < 6; ++a)
            CHECK(fosd(p, a, marginal(out, p, a), marginal(mix, p, a)) == Fosd::DominatedStrict);
    }
    SUBCASE("whole group first stays ordinally efficient") {
        auto out = run_pipeline(p, *p.feasible, PriorityList{{0, 1, 2, 3, 4, 5}});
        CHECK(is_oe(out, Y, p).oe);
    }
}

TEST_CASE("dictatorship outcomes are ordinally efficient for any list") {
    auto rng = Rng(211);
    for (int trial = 0; trial < 12; ++trial) {
        auto inst = random_caps(rng);
        auto alpha = random_list(rng, inst.p.num_agents());
        auto y = serial_dictatorship(inst.p, *inst.p.feasible, alpha);
        CHECK(is_feasible(*inst.p.feasible, inst.p, y));
        CHECK(is_oe(Lottery::point_mass(y), inst.Y, inst.p).oe);
    }
}

TEST_CASE("pipeline outputs are ordinally efficient for contiguous lists") {
    auto rng = Rng(223);
    for (int trial = 0; trial < 12; ++trial) {
        auto inst = random_caps(rng);
        auto alpha = random_consecutive(rng, inst.p.partition);
        auto out = run_pipeline(inst.p, *inst.p.feasible, alpha);
        CHECK(check_ete(out, inst.p, inst.p.partition).ete);
        CHECK(is_oe(out, inst.Y, inst.p).oe);
    }
}

TEST_CASE("earlier agents in a group never fare worse") {
    auto rng = Rng(227);
    for (int trial = 0; trial < 10; ++trial) {
        auto inst = random_caps(rng);
        auto alpha = random_consecutive(rng, inst.p.partition);
        auto y = serial_dictatorship(inst.p, *inst.p.feasible, alpha);
        std::vector<int> pos(inst.p.num_agents());
        for (int i = 0; i < inst.p.num_agents(); ++i) pos[alpha.order[i]] = i;
        for (const auto& group : inst.p.partition.groups) {
            auto sorted = group;
            std::sort(sorted.begin(), sorted.end(),
                      [&](int a, int b) { return pos[a] < pos[b]; });
            for (size_t i = 1; i < sorted.size(); ++i) {
                int earlier = sorted[i - 1], later = sorted[i];
                CHECK(inst.p.rank(earlier, inst.p.bundle_index(y.row(earlier))) <=
                      inst.p.rank(earlier, inst.p.bundle_index(y.row(later))));
            }
        }
    }
}
