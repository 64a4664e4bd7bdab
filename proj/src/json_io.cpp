#include "hatcycle/json_io.hpp"

#include <algorithm>
#include <map>

namespace hatcycle {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

Colour colour_from_json(const json& j) {
    if (!j.is_number_integer()) throw DomainError("colour must be an integer");
    int v = j.get<int>();
    if (v < 0 || v >= kColours) throw DomainError("colour out of range 0..2");
    return static_cast<Colour>(v);
}

}  // namespace

ordered_json strategy_to_json(const CycleStrategy& f) {
    ordered_json rules = ordered_json::array();
    for (const LocalRule& r : f.rules) {
        ordered_json t = ordered_json::array();
        for (int l = 0; l < 3; ++l) {
            ordered_json row = ordered_json::array();
            for (int c = 0; c < 3; ++c) row.push_back(static_cast<int>(r.table[l][c]));
            t.push_back(std::move(row));
        }
        rules.push_back(std::move(t));
    }
    return ordered_json{{"n", f.n}, {"rules", std::move(rules)}};
}

CycleStrategy strategy_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("rules"))
        throw DomainError("strategy JSON needs \"n\" and \"rules\"");
    int n = j.at("n").get<int>();
    const json& rules = j.at("rules");
    if (!rules.is_array())
        throw DomainError("\"rules\" must be an array");
    std::vector<LocalRule> out;
    out.reserve(rules.size());
    for (const json& t : rules) {
        if (!t.is_array() || t.size() != 3) throw DomainError("rule must be a 3x3 table");
        LocalRule r;
        for (int l = 0; l < 3; ++l) {
            const json& row = t.at(l);
            if (!row.is_array() || row.size() != 3)
                throw DomainError("rule must be a 3x3 table");
            for (int c = 0; c < 3; ++c) r.table[l][c] = colour_from_json(row.at(c));
        }
        out.push_back(r);
    }
    return make_strategy(n, std::move(out));
}

ordered_json assignment_to_json(const Assignment& a) {
    ordered_json colours = ordered_json::array();
    for (Colour c : a) colours.push_back(static_cast<int>(c));
    return ordered_json{{"colours", std::move(colours)}};
}

Assignment assignment_from_json(const json& j) {
    if (!j.is_object() || !j.contains("colours"))
        throw DomainError("assignment JSON needs \"colours\"");
    Assignment a;
    for (const json& c : j.at("colours")) a.push_back(colour_from_json(c));
    return a;
}

ordered_json game_to_json(const VisibilityGame& g) {
    ordered_json edges = ordered_json::array();
    for (const auto& [v, u] : g.edges)
        edges.push_back(ordered_json::array({g.vertices[v], g.vertices[u]}));
    ordered_json heights = ordered_json::object();
    std::vector<std::string> sorted = g.vertices;
    std::sort(sorted.begin(), sorted.end());
    std::map<std::string, int> idx;
    for (int v = 0; v < g.size(); ++v) idx[g.vertices[v]] = v;
    for (const std::string& name : sorted) heights[name] = g.heights[idx[name]];
    ordered_json vertices = ordered_json::array();
    for (const std::string& name : g.vertices) vertices.push_back(name);
    return ordered_json{
        {"edges", std::move(edges)}, {"heights", std::move(heights)},
        {"vertices", std::move(vertices)}};
}

VisibilityGame game_from_json(const json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges") ||
        !j.contains("heights"))
        throw DomainError("game JSON needs \"vertices\", \"edges\" and \"heights\"");
    std::vector<std::string> vertices;
    for (const json& v : j.at("vertices")) vertices.push_back(v.get<std::string>());
    std::map<std::string, int> idx;
    for (int v = 0; v < static_cast<int>(vertices.size()); ++v) {
        if (idx.count(vertices[v])) throw DomainError("duplicate vertex name");
        idx[vertices[v]] = v;
    }
    auto lookup = [&](const std::string& name) {
        auto it = idx.find(name);
        if (it == idx.end()) throw DomainError("unknown vertex " + name);
        return it->second;
    };
    std::vector<std::pair<int, int>> edges;
    for (const json& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw DomainError("edge must be a pair");
        edges.emplace_back(lookup(e.at(0).get<std::string>()),
                           lookup(e.at(1).get<std::string>()));
    }
    std::vector<int> heights(vertices.size(), 0);
    for (const auto& [name, h] : j.at("heights").items())
        heights[lookup(name)] = h.get<int>();
    return make_game(std::move(vertices), std::move(edges), std::move(heights));
}

GeneralStrategy general_strategy_from_json(const VisibilityGame& game, const json& j) {
    if (!j.is_object() || !j.contains("rules"))
        throw DomainError("general strategy JSON needs \"rules\"");
    std::map<std::string, int> idx;
    for (int v = 0; v < game.size(); ++v) idx[game.vertices[v]] = v;
    GeneralStrategy f;
    f.rules.resize(game.size());
    for (const auto& [name, rule] : j.at("rules").items()) {
        auto it = idx.find(name);
        if (it == idx.end()) throw DomainError("unknown vertex " + name);
        std::vector<Colour> entries;
        for (const json& g : rule) {
            int v = g.get<int>();
            if (v < 0 || v >= game.heights[it->second])
                throw DomainError("guess above the vertex height");
            entries.push_back(static_cast<Colour>(v));
        }
        f.rules[it->second] = std::move(entries);
    }
    return f;
}

ordered_json certificate_to_json(const Certificate& c) {
    ordered_json stages = ordered_json::array();
    for (const StageLog& s : c.log)
        stages.push_back(ordered_json{{"candidates", s.candidates},
                                      {"note", s.note},
                                      {"refuted", s.refuted},
                                      {"stage", s.stage},
                                      {"structures", s.structures},
                                      {"verifier_calls", s.verifier_calls}});
    ordered_json witnesses = ordered_json::array();
    for (const auto& [stage, a] : c.sample_witnesses) {
        ordered_json w = assignment_to_json(a);
        witnesses.push_back(ordered_json{{"stage", stage},
                                         {"witness", std::move(w)}});
    }
    ordered_json out{{"budget_exceeded", c.budget_exceeded},
                     {"checks_used", c.checks_used},
                     {"conclusion", to_string(c.conclusion)},
                     {"lemma_dependencies", c.lemma_dependencies},
                     {"n", c.n},
                     {"sample_witnesses", std::move(witnesses)},
                     {"stages", std::move(stages)}};
    if (c.winning) out["winning"] = strategy_to_json(*c.winning);
    return out;
}

}  // namespace hatcycle
