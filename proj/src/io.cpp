#include "eqa/io.hpp"

#include <fstream>

#include "eqa/feasibility.hpp"
#include "eqa/strategy.hpp"

namespace eqa {

namespace {

using nlohmann::json;

PureAssignment matrix_from_json(const json& j, int num_agents, int num_objects) {
    if (!j.is_array() || static_cast<int>(j.size()) != num_agents)
        throw std::invalid_argument("assignment matrix must have one row per agent");
    PureAssignment y(num_agents, num_objects);
    for (int a = 0; a < num_agents; ++a) {
        const auto& row = j.at(a);
        if (!row.is_array() || static_cast<int>(row.size()) != num_objects)
            throw std::invalid_argument("assignment row must have one entry per object");
        for (int o = 0; o < num_objects; ++o) y.at(a, o) = row.at(o).get<int>();
    }
    return y;
}

json matrix_to_json(const PureAssignment& y) {
    json rows = json::array();
    for (int a = 0; a < y.num_agents; ++a) {
        json row = json::array();
        for (int o = 0; o < y.num_objects; ++o) row.push_back(y.at(a, o));
        rows.push_back(row);
    }
    return rows;
}

FeasibleSet feasible_from_json(const json& j, const Problem& p) {
    const std::string type = j.at("type").get<std::string>();
    if (type == "explicit") {
        std::vector<PureAssignment> members;
        for (const auto& m : j.at("members"))
            members.push_back(matrix_from_json(m, p.num_agents(), p.num_objects()));
        return make_explicit(std::move(members));
    }
    if (type == "linearCaps") {
        LinearCaps lc;
        for (const auto& cj : j.at("caps")) {
            Cap cap;
            cap.bound = parse_rat(cj.at("bound").get<std::string>());
            for (const auto& wj : cj.at("weights")) {
                int a = p.agent_index(wj.at("agent").get<std::string>());
                const std::string obj = wj.at("object").get<std::string>();
                int o = -1;
                for (int k = 0; k < p.num_objects(); ++k)
                    if (p.object_labels[k] == obj) o = k;
                if (o < 0) throw std::invalid_argument("unknown object label: " + obj);
                const std::string w = wj.at("weight").get<std::string>();
                if (w == "INELIGIBLE")
                    cap.ineligible.insert({a, o});
                else
                    cap.weights[{a, o}] = parse_rat(w);
            }
            lc.caps.push_back(std::move(cap));
        }
        return FeasibleSet{std::move(lc)};
    }
    if (type == "unitDemandSimpleCapacity") {
        UnitDemandSimpleCapacity ud;
        ud.capacity = j.at("capacity").get<std::vector<int>>();
        if (static_cast<int>(ud.capacity.size()) != p.num_objects())
            throw std::invalid_argument("capacity arity mismatch");
        return FeasibleSet{std::move(ud)};
    }
    throw std::invalid_argument("unknown feasible type: " + type);
}

json feasible_to_json(const FeasibleSet& f, const Problem& p) {
    json out;
    if (const auto* ex = std::get_if<ExplicitSet>(&f.rep)) {
        out["type"] = "explicit";
        out["members"] = json::array();
        for (const auto& m : ex->members) out["members"].push_back(matrix_to_json(m));
    } else if (const auto* lc = std::get_if<LinearCaps>(&f.rep)) {
        out["type"] = "linearCaps";
        out["caps"] = json::array();
        for (const auto& cap : lc->caps) {
            json cj;
            cj["bound"] = format_rat(cap.bound);
            cj["weights"] = json::array();
            for (const auto& [cell, w] : cap.weights)
                cj["weights"].push_back({{"agent", p.agent_labels[cell.first]},
                                         {"object", p.object_labels[cell.second]},
                                         {"weight", format_rat(w)}});
            for (const auto& cell : cap.ineligible)
                cj["weights"].push_back({{"agent", p.agent_labels[cell.first]},
                                         {"object", p.object_labels[cell.second]},
                                         {"weight", "INELIGIBLE"}});
            out["caps"].push_back(std::move(cj));
        }
    } else {
        out["type"] = "unitDemandSimpleCapacity";
        out["capacity"] = std::get<UnitDemandSimpleCapacity>(f.rep).capacity;
    }
    return out;
}

} // namespace

Problem problem_from_json(const json& doc) {
    Problem p;
    p.agent_labels = doc.at("agents").get<std::vector<std::string>>();
    p.object_labels = doc.at("objects").get<std::vector<std::string>>();
    for (const auto& bj : doc.at("bundleUniverse")) {
        Bundle b;
        b.counts = bj.get<std::vector<int>>();
        if (static_cast<int>(b.counts.size()) != p.num_objects())
            throw std::invalid_argument("bundle arity mismatch");
        p.bundle_universe.push_back(std::move(b));
    }
    for (const auto& pj : doc.at("preferences"))
        p.preferences.push_back({pj.get<std::vector<int>>()});
    if (static_cast<int>(p.preferences.size()) != p.num_agents())
        throw std::invalid_argument("preferences arity mismatch");

    if (doc.value("byPreference", false)) {
        p.partition = partition_by_reports({p.preferences}, p.num_agents());
    } else {
        std::vector<std::vector<int>> groups;
        for (const auto& gj : doc.at("partition")) {
            std::vector<int> g;
            for (const auto& label : gj) g.push_back(p.agent_index(label.get<std::string>()));
            groups.push_back(std::move(g));
        }
        p.partition = EqualsPartition::from_groups(std::move(groups), p.num_agents());
    }

    p.feasible = std::make_shared<const FeasibleSet>(feasible_from_json(doc.at("feasible"), p));
    p.finalize();
    return p;
}

json problem_to_json(const Problem& p) {
    json doc;
    doc["agents"] = p.agent_labels;
    doc["objects"] = p.object_labels;
    doc["bundleUniverse"] = json::array();
    for (const auto& b : p.bundle_universe) doc["bundleUniverse"].push_back(b.counts);
    doc["preferences"] = json::array();
    for (const auto& pref : p.preferences) doc["preferences"].push_back(pref.best_first);
    doc["partition"] = json::array();
    for (const auto& g : p.partition.groups) {
        json gj = json::array();
        for (int a : g) gj.push_back(p.agent_labels[a]);
        doc["partition"].push_back(gj);
    }
    doc["feasible"] = feasible_to_json(*p.feasible, p);
    return doc;
}

Problem load_problem(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    return problem_from_json(json::parse(in));
}

Lottery lottery_from_json(const json& doc, const Problem& p) {
    Lottery sigma;
    for (const auto& entry : doc.at("support")) {
        auto y = matrix_from_json(entry.at("assignment"), p.num_agents(), p.num_objects());
        sigma.add(y, parse_rat(entry.at("prob").get<std::string>()));
    }
    sigma.validate();
    return sigma;
}

json lottery_to_json(const Lottery& sigma) {
    json doc;
    doc["support"] = json::array();
    for (const auto& [y, prob] : sigma.support)
        doc["support"].push_back({{"assignment", matrix_to_json(y)}, {"prob", format_rat(prob)}});
    return doc;
}

Lottery load_lottery(const std::string& path, const Problem& p) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    return lottery_from_json(json::parse(in), p);
}

} // namespace eqa
