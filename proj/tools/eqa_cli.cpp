#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "eqa/efficiency.hpp"
#include "eqa/ete.hpp"
#include "eqa/feasibility.hpp"
#include "eqa/io.hpp"
#include "eqa/mechanisms.hpp"
#include "eqa/strategy.hpp"

using nlohmann::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitVerdictNegative = 1;
constexpr int kExitInputError = 2;
constexpr int kExitBudgetExceeded = 3;

struct GlobalOpts {
    std::uint64_t budget = eqa::EnumerationBudget{}.max_tested;
    std::string mode = "cyclic";
    std::string format = "json";

    eqa::DerivedMode derived_mode() const {
        return mode == "full" ? eqa::DerivedMode::Full : eqa::DerivedMode::Cyclic;
    }
    eqa::EnumerationBudget enumeration_budget() const {
        return {budget, eqa::EnumerationBudget{}.max_retained};
    }
};

std::string bundle_name(const eqa::Problem& p, int idx) {
    const auto& b = p.bundle_universe[idx];
    if (auto o = b.single_object()) return p.object_labels[*o];
    std::ostringstream out;
    out << "[";
    for (size_t i = 0; i < b.counts.size(); ++i) out << (i ? "," : "") << b.counts[i];
    out << "]";
    return out.str();
}

json marginals_json(const eqa::Lottery& sigma, const eqa::Problem& p) {
    json out = json::object();
    for (int a = 0; a < p.num_agents(); ++a) {
        auto m = eqa::marginal(sigma, p, a);
        json row = json::object();
        for (const auto& [idx, prob] : m.dist) row[bundle_name(p, idx)] = eqa::format_rat(prob);
        out[p.agent_labels[a]] = std::move(row);
    }
    return out;
}

void print_marginals_table(std::ostream& out, const eqa::Lottery& sigma, const eqa::Problem& p) {
    for (int a = 0; a < p.num_agents(); ++a) {
        auto m = eqa::marginal(sigma, p, a);
        out << p.agent_labels[a] << ":";
        for (const auto& [idx, prob] : m.dist)
            out << "  " << bundle_name(p, idx) << "=" << eqa::format_rat(prob);
        out << "\n";
    }
}

void emit(const GlobalOpts& g, const json& doc) {
    if (g.format == "json") {
        std::cout << doc.dump(2) << "\n";
        return;
    }
    // table: flat key/value rendering
    for (const auto& [key, value] : doc.items())
        std::cout << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
                  << "\n";
}

json efficiency_json(const eqa::EfficiencyReport& rep) {
    json out;
    out["ee"] = rep.ee;
    out["oe"] = rep.oe;
    out["re"] = rep.re;
    out["rank"] = eqa::format_rat(rep.rank);
    if (rep.oe_witness) out["oeDominator"] = eqa::lottery_to_json(*rep.oe_witness);
    return out;
}

eqa::PriorityList parse_alpha(const eqa::Problem& p, const std::string& csv) {
    eqa::PriorityList alpha;
    std::istringstream in(csv);
    std::string label;
    while (std::getline(in, label, ',')) alpha.order.push_back(p.agent_index(label));
    return alpha;
}

int cmd_audit(const GlobalOpts& g, const std::string& file) {
    auto p = eqa::load_problem(file);
    auto a1 = eqa::audit_assumption1(p);
    auto a2 = eqa::audit_assumption2(p);
    auto closure = eqa::check_general_upper_bounds(*p.feasible, p, g.enumeration_budget());
    auto per_object = eqa::check_per_object_upper_bounds(*p.feasible, p, g.enumeration_budget());
    json doc;
    doc["equalPreferences"] = a1.pass;
    if (!a1.pass) doc["equalPreferencesWitness"] = a1.detail;
    doc["swapClosure"] = a2.pass;
    if (!a2.pass) doc["swapClosureWitness"] = a2.detail;
    doc["generalUpperBounds"] = closure.closed;
    doc["perObjectUpperBounds"] = per_object.per_object_closed;
    doc["columnsCombineFreely"] = per_object.columns_combine_freely;
    emit(g, doc);
    return (a1.pass && a2.pass) ? kExitPass : kExitVerdictNegative;
}

int cmd_run(const GlobalOpts& g, const std::string& file, const std::string& mechanism,
            const std::string& alpha_csv) {
    auto p = eqa::load_problem(file);
    auto alpha = alpha_csv.empty() ? eqa::make_consecutive_equals(p.partition)
                                   : parse_alpha(p, alpha_csv);
    eqa::Lottery sigma;
    if (mechanism == "sd") {
        sigma = eqa::Lottery::point_mass(eqa::serial_dictatorship(p, *p.feasible, alpha));
    } else {
        sigma = eqa::run_pipeline(p, *p.feasible, alpha, g.derived_mode());
    }
    auto Y = eqa::enumerate_feasible(*p.feasible, p, g.enumeration_budget());
    auto rep = eqa::efficiency_report(sigma, Y, p);
    auto ete = eqa::check_ete(sigma, p, p.partition);
    json doc;
    doc["lottery"] = eqa::lottery_to_json(sigma);
    doc["marginals"] = marginals_json(sigma, p);
    doc["efficiency"] = efficiency_json(rep);
    doc["ete"] = ete.ete;
    if (g.format == "table") {
        print_marginals_table(std::cout, sigma, p);
        std::cout << "ee=" << rep.ee << " oe=" << rep.oe << " re=" << rep.re
                  << " rank=" << eqa::format_rat(rep.rank) << " ete=" << ete.ete << "\n";
    } else {
        emit(g, doc);
    }
    return kExitPass;
}

int cmd_check(const GlobalOpts& g, const std::string& file, const std::string& lottery_file,
              bool ete, bool ee, bool oe, bool re) {
    auto p = eqa::load_problem(file);
    auto sigma = eqa::load_lottery(lottery_file, p);
    for (const auto& [y, prob] : sigma.support)
        if (!eqa::is_feasible(*p.feasible, p, y))
            throw std::invalid_argument("lottery support contains an infeasible assignment");
    if (!ete && !ee && !oe && !re) ete = ee = oe = re = true;
    json doc;
    bool all_pass = true;
    if (ete) {
        auto r = eqa::check_ete(sigma, p, p.partition);
        doc["ete"] = r.ete;
        all_pass = all_pass && r.ete;
    }
    std::vector<eqa::PureAssignment> Y;
    if (ee || oe || re) Y = eqa::enumerate_feasible(*p.feasible, p, g.enumeration_budget());
    if (ee) {
        auto r = eqa::is_ee(sigma, Y, p);
        doc["ee"] = r.ee;
        all_pass = all_pass && r.ee;
    }
    if (oe) {
        auto r = eqa::is_oe(sigma, Y, p);
        doc["oe"] = r.oe;
        if (r.dominator) doc["oeDominator"] = eqa::lottery_to_json(*r.dominator);
        all_pass = all_pass && r.oe;
    }
    if (re) {
        bool v = eqa::is_re(sigma, Y, p);
        doc["re"] = v;
        doc["rank"] = eqa::format_rat(eqa::rank_value(sigma, p));
        all_pass = all_pass && v;
    }
    emit(g, doc);
    return all_pass ? kExitPass : kExitVerdictNegative;
}

int cmd_ete(const GlobalOpts& g, const std::string& file, const std::string& lottery_file) {
    auto p = eqa::load_problem(file);
    auto sigma = eqa::load_lottery(lottery_file, p);
    auto out = eqa::ete_reassign(sigma, p.partition, g.derived_mode());
    if (g.format == "table") {
        print_marginals_table(std::cout, out, p);
    } else {
        json doc;
        doc["lottery"] = eqa::lottery_to_json(out);
        doc["marginals"] = marginals_json(out, p);
        emit(g, doc);
    }
    return kExitPass;
}

int cmd_re(const GlobalOpts& g, const std::string& file) {
    auto p = eqa::load_problem(file);
    json doc;
    if (const auto* ud = std::get_if<eqa::UnitDemandSimpleCapacity>(&p.feasible->rep)) {
        auto sol = eqa::solve_re_matching(*ud, p);
        doc["optimal"] = eqa::format_rat(sol.optimal_value);
        doc["minimizer"] = eqa::lottery_to_json(eqa::Lottery::point_mass(sol.minimizers[0]));
    } else {
        auto Y = eqa::enumerate_feasible(*p.feasible, p, g.enumeration_budget());
        auto sol = eqa::solve_re(Y, p);
        doc["optimal"] = eqa::format_rat(sol.optimal_value);
        doc["minimizerCount"] = sol.minimizers.size();
        doc["minimizers"] = json::array();
        for (const auto& y : sol.minimizers)
            doc["minimizers"].push_back(
                eqa::lottery_to_json(eqa::Lottery::point_mass(y))["support"][0]["assignment"]);
    }
    emit(g, doc);
    return kExitPass;
}

int cmd_manipulate(const GlobalOpts& g, const std::string& file, const std::string& scope) {
    auto p = eqa::load_problem(file);
    eqa::ReportProfile truth{p.preferences};
    std::vector<eqa::PreferenceOrder> candidates;
    if (scope == "declared") {
        for (const auto& o : p.preferences)
            if (std::find(candidates.begin(), candidates.end(), o) == candidates.end())
                candidates.push_back(o);
    }
    auto finding = eqa::find_manipulation(truth, p, *p.feasible, eqa::group_index_rule,
                                          candidates, g.derived_mode());
    json doc;
    doc["found"] = finding.has_value();
    if (finding) {
        doc["manipulator"] = p.agent_labels[finding->manipulator];
        doc["misreport"] = finding->misreport.best_first;
        json truthful = json::object(), manipulated = json::object();
        for (const auto& [idx, prob] : finding->truthful.dist)
            truthful[bundle_name(p, idx)] = eqa::format_rat(prob);
        for (const auto& [idx, prob] : finding->manipulated.dist)
            manipulated[bundle_name(p, idx)] = eqa::format_rat(prob);
        doc["truthfulMarginal"] = std::move(truthful);
        doc["manipulatedMarginal"] = std::move(manipulated);
        doc["verdict"] = "DOMINATED_STRICT";
    }
    emit(g, doc);
    return finding ? kExitPass : kExitVerdictNegative;
}

// --- reproduction of the worked examples against embedded golden values ---

struct Diff {
    std::vector<std::string> lines;

    void expect(bool ok, const std::string& what) {
        if (!ok) lines.push_back(what);
    }
    template <typename T>
    void expect_eq(const T& got, const T& want, const std::string& field) {
        if (!(got == want)) lines.push_back(field + ": mismatch");
    }
    void expect_prob(const eqa::Marginal& m, int idx, const eqa::Rat& want,
                     const std::string& field) {
        if (m.prob(idx) != want)
            lines.push_back(field + ": got " + eqa::format_rat(m.prob(idx)) + ", want " +
                            eqa::format_rat(want));
    }
};

eqa::Rat rat(const char* s) { return eqa::parse_rat(s); }

void repro_example1(const std::string& fx, Diff& d) {
    auto sub = eqa::load_problem(fx + "/ex1_substitutes.json");
    auto sigma = eqa::load_lottery(fx + "/ex1_sigma.json", sub);
    auto sigma2 = eqa::load_lottery(fx + "/ex1_sigma_prime.json", sub);
    auto m = eqa::marginal(sigma, sub, 0), m2 = eqa::marginal(sigma2, sub, 0);
    d.expect(eqa::fosd(sub, 0, m, m2) == eqa::Fosd::DominatedStrict,
             "substitutes: first lottery must be strictly dominated by the second");
    auto comp = eqa::load_problem(fx + "/ex1_complements.json");
    auto cm = eqa::marginal(sigma, comp, 0), cm2 = eqa::marginal(sigma2, comp, 0);
    d.expect(eqa::fosd(comp, 0, cm2, cm) == eqa::Fosd::DominatedStrict,
             "complements: second lottery must be strictly dominated by the first");
}

void repro_example2(const std::string& fx, Diff& d, eqa::DerivedMode mode) {
    auto p = eqa::load_problem(fx + "/ex2.json");
    auto sigma = eqa::load_lottery(fx + "/ex2_sigma.json", p);
    auto out = eqa::ete_reassign(sigma, p.partition, mode);
    d.expect_eq(out.support.size(), size_t{8}, "reassignment support size");
    // members derived from the 1/3 base get 1/12, members derived from the
    // 2/3 base get 1/6
    eqa::PureAssignment base;
    for (const auto& [y, prob] : sigma.support)
        if (prob == rat("1/3")) base = y;
    auto derived_y = eqa::derived_set(base, p.partition, mode);
    int smalls = 0, bigs = 0;
    for (const auto& [y, prob] : out.support) {
        if (derived_y.members.count(y)) {
            d.expect(prob == rat("1/12"), "support probability on first orbit");
            ++smalls;
        } else {
            d.expect(prob == rat("1/6"), "support probability on second orbit");
            ++bigs;
        }
    }
    d.expect(smalls == 4 && bigs == 4, "orbit sizes");
    const char* front[] = {"1/6", "1/6", "1/3", "1/3"};
    const char* back[] = {"1/3", "1/3", "1/6", "1/6"};
    for (int a = 0; a < 4; ++a) {
        auto m = eqa::marginal(out, p, a);
        const char** want = a < 2 ? front : back;
        for (int o = 0; o < 4; ++o)
            d.expect_prob(m, o, rat(want[o]),
                          p.agent_labels[a] + " marginal on " + p.object_labels[o]);
    }
    d.expect_prob(eqa::marginal(out, p, 4), 4, rat("1"), "a5 keeps o5");
    d.expect(eqa::check_ete(out, p, p.partition).ete, "reassignment satisfies ETE");
}

void repro_example3(const std::string& fx, Diff& d, eqa::DerivedMode mode,
                    eqa::EnumerationBudget budget) {
    auto p = eqa::load_problem(fx + "/ex3.json");
    auto sigma = eqa::load_lottery(fx + "/ex3_sigma.json", p);
    auto Y = eqa::enumerate_feasible(*p.feasible, p, budget);
    d.expect(eqa::is_oe(sigma, Y, p).oe, "pure assignment is ordinally efficient");
    d.expect_eq(eqa::rank_value(sigma, p), rat("10"), "rank value");
    auto out = eqa::ete_reassign(sigma, p.partition, mode);
    for (int a = 0; a < 4; ++a) {
        auto m = eqa::marginal(out, p, a);
        for (int o = 0; o < 4; ++o)
            d.expect_prob(m, o, rat("1/4"), "uniform reassignment marginal");
    }
    auto oe = eqa::is_oe(out, Y, p);
    d.expect(!oe.oe, "reassignment must not be ordinally efficient");
    d.expect(oe.dominator.has_value(), "dominating lottery witness returned");
    d.expect(!eqa::check_general_upper_bounds(*p.feasible, p, budget).closed,
             "explicit set must fail the downward-closure audit");
}

void repro_example4(const std::string& fx, Diff& d, eqa::EnumerationBudget budget) {
    auto p = eqa::load_problem(fx + "/ex4.json");
    eqa::PureAssignment y(2, 2), y2(2, 2), y3(2, 2);
    y.at(0, 0) = 1;
    y2.at(1, 1) = 1;
    y3.at(0, 0) = 1;
    y3.at(1, 1) = 1;
    d.expect(eqa::is_feasible(*p.feasible, p, y), "first matrix feasible");
    d.expect(eqa::is_feasible(*p.feasible, p, y2), "second matrix feasible");
    d.expect(!eqa::is_feasible(*p.feasible, p, y3), "combined matrix infeasible");
    auto rep = eqa::check_per_object_upper_bounds(*p.feasible, p, budget);
    d.expect(rep.per_object_closed, "per-object column sets downward closed");
    d.expect(!rep.columns_combine_freely, "columns must not combine freely");
}

void repro_example5(const std::string& fx, Diff& d, eqa::DerivedMode mode,
                    eqa::EnumerationBudget budget) {
    auto p = eqa::load_problem(fx + "/ex5.json");
    auto Y = eqa::enumerate_feasible(*p.feasible, p, budget);
    eqa::PureAssignment y(6, 1);
    y.at(0, 0) = 1;
    y.at(3, 0) = 1;
    d.expect(eqa::is_oe(eqa::Lottery::point_mass(y), Y, p).oe, "base assignment is OE");
    auto out = eqa::ete_reassign(eqa::Lottery::point_mass(y), p.partition, mode);
    const int has_o1 = p.bundle_index(eqa::Bundle{{1}});
    for (int a = 0; a < 6; ++a)
        d.expect_prob(eqa::marginal(out, p, a), has_o1, rat("1/3"), "reassignment marginal");
    auto oe = eqa::is_oe(out, Y, p);
    d.expect(!oe.oe, "reassignment must not be OE");
    // the half-half mixture of the two full-group assignments dominates
    eqa::PureAssignment g1(6, 1), g2(6, 1);
    for (int a = 0; a < 3; ++a) g1.at(a, 0) = 1;
    for (int a = 3; a < 6; ++a) g2.at(a, 0) = 1;
    eqa::Lottery mix;
    mix.add(g1, rat("1/2"));
    mix.add(g2, rat("1/2"));
    for (int a = 0; a < 6; ++a) {
        d.expect_prob(eqa::marginal(mix, p, a), has_o1, rat("1/2"), "mixture marginal");
        d.expect(eqa::weakly_dominated(
                     eqa::fosd(p, a, eqa::marginal(out, p, a), eqa::marginal(mix, p, a))),
                 "mixture dominates the reassignment");
    }
    // a within-group list keeps the pipeline ordinally efficient
    auto pipeline = eqa::run_pipeline(p, *p.feasible, eqa::make_consecutive_equals(p.partition),
                                      mode);
    d.expect(eqa::is_oe(pipeline, Y, p).oe, "within-group pipeline output is OE");
}

void repro_example6(const std::string& fx, Diff& d, eqa::DerivedMode mode) {
    auto p = eqa::load_problem(fx + "/ex6.json");
    const eqa::PreferenceOrder th{{0, 1, 2, 3}}, th1{{1, 0, 2, 3}}, th2{{1, 2, 0, 3}};
    const eqa::PriorityList a2list{{0, 2, 1}}, a5list{{2, 0, 1}};

    auto check_marginals = [&](const eqa::Lottery& out, const char* rows[3][3],
                               const std::string& label) {
        for (int a = 0; a < 3; ++a) {
            auto m = eqa::marginal(out, p, a);
            for (int o = 0; o < 3; ++o)
                d.expect_prob(m, o, rat(rows[a][o]),
                              label + " " + p.agent_labels[a] + "/" + p.object_labels[o]);
        }
    };

    const char* uniform[3][3] = {{"1/3", "1/3", "1/3"}, {"1/3", "1/3", "1/3"},
                                 {"1/3", "1/3", "1/3"}};
    check_marginals(eqa::mechanism_f({{th, th, th}}, p, *p.feasible, eqa::group_index_rule, mode),
                    uniform, "all-equal profile");

    const char* yprime[3][3] = {{"1/2", "1/2", "0"}, {"1/2", "1/2", "0"}, {"0", "0", "1"}};
    check_marginals(
        eqa::mechanism_f({{th, th, th1}}, p, *p.feasible, eqa::group_index_rule, mode), yprime,
        "two-equals profile under the front list");

    auto back_rule = eqa::table_rule({{eqa::ReportProfile{{th, th, th1}}, a5list}});
    const char* ydouble[3][3] = {{"1/2", "0", "1/2"}, {"1/2", "0", "1/2"}, {"0", "1", "0"}};
    check_marginals(eqa::mechanism_f({{th, th, th1}}, p, *p.feasible, back_rule, mode), ydouble,
                    "two-equals profile under the back list");

    auto perm_rule = eqa::table_rule({{eqa::ReportProfile{{th, th2, th1}}, a2list}});
    const char* perm[3][3] = {{"1", "0", "0"}, {"0", "0", "1"}, {"0", "1", "0"}};
    check_marginals(eqa::mechanism_f({{th, th2, th1}}, p, *p.feasible, perm_rule, mode), perm,
                    "all-distinct profile");

    const std::vector<eqa::PreferenceOrder> natural{th, th1, th2};

    // first finding: the third agent misreports the common order
    {
        eqa::Problem tp = p;
        tp.preferences = {th, th, th1};
        tp.partition = eqa::partition_by_reports({tp.preferences}, 3);
        tp.finalize();
        auto finding = eqa::find_manipulation({tp.preferences}, tp, *tp.feasible,
                                              eqa::group_index_rule, natural, mode);
        d.expect(finding.has_value(), "first manipulation found");
        if (finding) {
            d.expect(finding->manipulator == 2, "first manipulator is the third agent");
            d.expect(finding->misreport == th, "first misreport is the common order");
        }
    }

    // second finding: the second agent misreports the common order under a
    // profile-dependent list table
    {
        auto rule = eqa::table_rule({{eqa::ReportProfile{{th, th, th2}}, a5list},
                                     {eqa::ReportProfile{{th, th1, th2}}, a2list}});
        auto finding =
            eqa::find_manipulation({p.preferences}, p, *p.feasible, rule, natural, mode);
        d.expect(finding.has_value(), "second manipulation found");
        if (finding) {
            d.expect(finding->manipulator == 1, "second manipulator is the second agent");
            d.expect(finding->misreport == th, "second misreport is the common order");
            d.expect(finding->manipulated.prob(0) == rat("1/2") &&
                         finding->manipulated.prob(2) == rat("1/2"),
                     "second manipulated marginal");
        }
    }
}

int cmd_repro(const GlobalOpts& g, int example, const std::string& fixtures) {
    Diff d;
    switch (example) {
        case 1: repro_example1(fixtures, d); break;
        case 2: repro_example2(fixtures, d, g.derived_mode()); break;
        case 3: repro_example3(fixtures, d, g.derived_mode(), g.enumeration_budget()); break;
        case 4: repro_example4(fixtures, d, g.enumeration_budget()); break;
        case 5: repro_example5(fixtures, d, g.derived_mode(), g.enumeration_budget()); break;
        case 6: repro_example6(fixtures, d, g.derived_mode()); break;
        default: throw std::invalid_argument("example id must be 1..6");
    }
    if (d.lines.empty()) {
        std::cout << "example " << example << ": pass\n";
        return kExitPass;
    }
    std::cout << "example " << example << ": fail\n";
    for (const auto& line : d.lines) std::cout << "  " << line << "\n";
    return kExitVerdictNegative;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact auditing and mechanics for constrained random assignment"};
    app.require_subcommand(1);
    GlobalOpts g;
    app.add_option("--budget", g.budget, "enumeration budget (matrices tested)");
    app.add_option("--mode", g.mode, "reassignment mode")
        ->check(CLI::IsMember({"cyclic", "full"}));
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"json", "table"}));

    std::string file, lottery_file, mechanism = "pipeline", alpha, scope = "declared";
    int example = 0;
    std::string fixtures = "fixtures";
    bool f_ete = false, f_ee = false, f_oe = false, f_re = false;

    auto* audit = app.add_subcommand("audit", "run the equals and constraint audits");
    audit->add_option("problem", file)->required();

    auto* run = app.add_subcommand("run", "run a mechanism and report on its output");
    run->add_option("problem", file)->required();
    run->add_option("--mechanism", mechanism)->check(CLI::IsMember({"sd", "pipeline"}));
    run->add_option("--alpha", alpha, "priority list as comma-separated agent labels");

    auto* check = app.add_subcommand("check", "verify properties of a lottery");
    check->add_option("problem", file)->required();
    check->add_option("lottery", lottery_file)->required();
    check->add_flag("--ete", f_ete);
    check->add_flag("--ee", f_ee);
    check->add_flag("--oe", f_oe);
    check->add_flag("--re", f_re);

    auto* ete = app.add_subcommand("ete", "compute the equals reassignment of a lottery");
    ete->add_option("problem", file)->required();
    ete->add_option("lottery", lottery_file)->required();

    auto* re = app.add_subcommand("re", "minimize the expected total rank");
    re->add_option("problem", file)->required();

    auto* manipulate = app.add_subcommand("manipulate", "search for profitable misreports");
    manipulate->add_option("problem", file)->required();
    manipulate->add_option("--scope", scope)->check(CLI::IsMember({"declared", "all"}));

    auto* repro = app.add_subcommand("repro", "replay a worked example against golden values");
    repro->add_option("example", example)->required()->check(CLI::Range(1, 6));
    repro->add_option("--fixtures", fixtures, "fixture directory");

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitInputError;
    }

    try {
        if (audit->parsed()) return cmd_audit(g, file);
        if (run->parsed()) return cmd_run(g, file, mechanism, alpha);
        if (check->parsed()) return cmd_check(g, file, lottery_file, f_ete, f_ee, f_oe, f_re);
        if (ete->parsed()) return cmd_ete(g, file, lottery_file);
        if (re->parsed()) return cmd_re(g, file);
        if (manipulate->parsed()) return cmd_manipulate(g, file, scope);
        if (repro->parsed()) return cmd_repro(g, example, fixtures);
    } catch (const eqa::EnumerationBudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudgetExceeded;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
