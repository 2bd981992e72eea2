#pragma once

// JSON instance files for `setcirc gen`:
//   exact-cover: {"universe": ["a","b","c"], "sets": [["a","b"], ["c"]]}
//   gap:         {"nodes": 4, "edges": [[0,1],[1,3]], "s": 0, "t": 3}
//   cvp:         {"assignment": [true,false],
//                 "gates": [{"op":"input","index":0}, {"op":"and","args":[0,1]}, {"op":"not","args":[2]}],
//                 "output": 3}
//   majority:    {"root": 0, "nodes": [{"kind":"branch","succ":[1,2]}, {"kind":"accept"}, {"kind":"reject"}]}

#include <string>

#include "json.hpp"
#include "setcirc/error.hpp"
#include "setcirc/reductions.hpp"

namespace setcirc::io {

using nlohmann::json;

class InstanceError : public DomainError {
public:
    using DomainError::DomainError;
};

inline json parse_json(const std::string& text)
{
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw InstanceError(std::string("malformed instance JSON: ") + e.what());
    }
}

template <class F>
auto guarded(F&& f)
{
    try {
        return f();
    } catch (const json::exception& e) {
        throw InstanceError(std::string("bad instance field: ") + e.what());
    }
}

inline ExactCoverInstance exact_cover_from_json(const json& j)
{
    return guarded([&] {
        ExactCoverInstance inst;
        inst.universe = j.at("universe").get<std::vector<std::string>>();
        inst.sets = j.at("sets").get<std::vector<std::vector<std::string>>>();
        inst.validate();
        return inst;
    });
}

inline json to_json(const ExactCoverInstance& inst) { return {{"universe", inst.universe}, {"sets", inst.sets}}; }

struct GapInstance {
    Digraph graph;
    std::size_t s = 0;
    std::size_t t = 0;
};

inline GapInstance gap_from_json(const json& j)
{
    return guarded([&] {
        GapInstance g;
        g.graph.nodes = j.at("nodes").get<std::size_t>();
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2)
                throw InstanceError("gap edges must be [u, v] pairs");
            g.graph.edges.emplace_back(e[0].get<std::size_t>(), e[1].get<std::size_t>());
        }
        g.s = j.at("s").get<std::size_t>();
        g.t = j.at("t").get<std::size_t>();
        g.graph.validate();
        return g;
    });
}

inline json to_json(const GapInstance& g)
{
    json edges = json::array();
    for (auto [u, v] : g.graph.edges)
        edges.push_back({u, v});
    return {{"nodes", g.graph.nodes}, {"edges", edges}, {"s", g.s}, {"t", g.t}};
}

inline BoolCircuitInstance cvp_from_json(const json& j)
{
    return guarded([&] {
        BoolCircuitInstance inst;
        inst.assignment = j.at("assignment").get<std::vector<bool>>();
        for (const auto& g : j.at("gates")) {
            BoolGate b;
            auto op = g.at("op").get<std::string>();
            if (op == "input") {
                b.kind = BoolGate::Kind::input;
                b.input = g.at("index").get<std::size_t>();
            } else if (op == "and" || op == "not") {
                b.kind = op == "and" ? BoolGate::Kind::and_ : BoolGate::Kind::not_;
                b.args = g.at("args").get<std::vector<std::size_t>>();
            } else {
                throw InstanceError("unknown boolean gate op '" + op + "'");
            }
            inst.gates.push_back(std::move(b));
        }
        inst.output = j.at("output").get<std::size_t>();
        inst.validate();
        return inst;
    });
}

inline json to_json(const BoolCircuitInstance& inst)
{
    json gates = json::array();
    for (const auto& g : inst.gates) {
        if (g.kind == BoolGate::Kind::input)
            gates.push_back({{"op", "input"}, {"index", g.input}});
        else
            gates.push_back({{"op", g.kind == BoolGate::Kind::and_ ? "and" : "not"}, {"args", g.args}});
    }
    return {{"assignment", inst.assignment}, {"gates", gates}, {"output", inst.output}};
}

inline MajorityDag majority_from_json(const json& j)
{
    return guarded([&] {
        MajorityDag d;
        d.root = j.at("root").get<std::size_t>();
        for (const auto& n : j.at("nodes")) {
            MajorityNode m;
            auto kind = n.at("kind").get<std::string>();
            if (kind == "accept")
                m.kind = MajorityNode::Kind::accept;
            else if (kind == "reject")
                m.kind = MajorityNode::Kind::reject;
            else if (kind == "step")
                m.kind = MajorityNode::Kind::step;
            else if (kind == "branch")
                m.kind = MajorityNode::Kind::branch;
            else
                throw InstanceError("unknown majority node kind '" + kind + "'");
            if (n.contains("succ"))
                m.succ = n.at("succ").get<std::vector<std::size_t>>();
            d.nodes.push_back(std::move(m));
        }
        for (const auto& n : d.nodes)
            for (std::size_t s : n.succ)
                if (s >= d.nodes.size())
                    throw InstanceError("majority successor out of range");
        d.validate();
        return d;
    });
}

inline json to_json(const MajorityDag& d)
{
    static const char* names[] = {"accept", "reject", "step", "branch"};
    json nodes = json::array();
    for (const auto& n : d.nodes) {
        json o = {{"kind", names[static_cast<int>(n.kind)]}};
        if (!n.succ.empty())
            o["succ"] = n.succ;
        nodes.push_back(o);
    }
    return {{"root", d.root}, {"nodes", nodes}};
}

} // namespace setcirc::io
