#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "setcirc/circuit.hpp"
#include "setcirc/reductions.hpp"

namespace setcirc {

/// Deterministic small-range draws (std distributions differ between standard libraries).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}
    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : gen_() % n; }
    std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }
    bool coin(unsigned percent = 50) { return below(100) < percent; }
    std::mt19937_64& engine() { return gen_; }

private:
    std::mt19937_64 gen_;
};

struct RandomCircuitSpec {
    Fragment ops;                 // operations to draw from
    std::size_t max_gates = 8;    // total gates, inputs included
    std::uint64_t max_label = 8;
    std::size_t dim = 0;          // 0: scalar
    unsigned inf_percent = 15;    // vector inputs only
};

/// Random circuit with 1..max_gates gates; the last gate is the output. Inputs make up roughly a third.
inline Circuit random_circuit(Rng& rng, const RandomCircuitSpec& spec)
{
    std::vector<Op> ops;
    for (Op op : operation_kinds)
        if (spec.ops.contains(op))
            ops.push_back(op);
    CircuitBuilder b(spec.dim);
    auto input = [&] {
        if (spec.dim == 0)
            return b.input(Natural(rng.between(0, spec.max_label)));
        if (rng.coin(spec.inf_percent))
            return b.input(ExtVector::inf());
        std::vector<Natural> c;
        for (std::size_t i = 0; i < spec.dim; ++i)
            c.emplace_back(rng.between(0, spec.max_label));
        return b.input(ExtVector::of(std::move(c)));
    };
    const std::size_t total = rng.between(1, std::max<std::size_t>(spec.max_gates, 1));
    std::vector<GateId> ids{input()};
    while (ids.size() < total) {
        if (ops.empty() || rng.coin(30)) {
            ids.push_back(input());
            continue;
        }
        Op op = ops[rng.below(ops.size())];
        // bias towards recent gates so the output depends on most of the circuit
        auto pick = [&] {
            std::size_t n = ids.size();
            return rng.coin(60) ? ids[n - 1 - rng.below(std::min<std::size_t>(n, 3))] : ids[rng.below(n)];
        };
        if (op_arity(op) == 1)
            ids.push_back(b.gate(op, {pick()}));
        else
            ids.push_back(b.gate(op, {pick(), pick()}));
    }
    return b.build(ids.back());
}

inline ExactCoverInstance random_exact_cover(Rng& rng, std::size_t max_universe = 6, std::size_t max_sets = 7)
{
    ExactCoverInstance inst;
    std::size_t n = rng.between(1, max_universe);
    for (std::size_t i = 0; i < n; ++i)
        inst.universe.push_back("x" + std::to_string(i));
    std::size_t k = rng.between(1, max_sets);
    for (std::size_t j = 0; j < k; ++j) {
        std::vector<std::string> s;
        for (std::size_t i = 0; i < n; ++i)
            if (rng.coin(35))
                s.push_back(inst.universe[i]);
        if (s.empty())
            s.push_back(inst.universe[rng.below(n)]);
        inst.sets.push_back(std::move(s));
    }
    return inst;
}

/// Random DAG on `nodes` vertices: edges only go from lower to higher index.
inline Digraph random_dag(Rng& rng, std::size_t nodes = 8, unsigned edge_percent = 25)
{
    Digraph g{nodes, {}};
    for (std::size_t u = 0; u < nodes; ++u)
        for (std::size_t v = u + 1; v < nodes; ++v)
            if (rng.coin(edge_percent))
                g.edges.emplace_back(u, v);
    return g;
}

inline BoolCircuitInstance random_bool_circuit(Rng& rng, std::size_t gates = 10, std::size_t inputs = 4)
{
    BoolCircuitInstance inst;
    for (std::size_t i = 0; i < inputs; ++i)
        inst.assignment.push_back(rng.coin());
    for (std::size_t i = 0; i < gates; ++i) {
        BoolGate g;
        if (i < 2 || rng.coin(20)) {
            g.kind = BoolGate::Kind::input;
            g.input = rng.below(inputs);
        } else if (rng.coin(35)) {
            g.kind = BoolGate::Kind::not_;
            g.args = {static_cast<std::size_t>(rng.below(i))};
        } else {
            g.kind = BoolGate::Kind::and_;
            g.args = {static_cast<std::size_t>(rng.below(i)), static_cast<std::size_t>(rng.below(i))};
        }
        inst.gates.push_back(std::move(g));
    }
    inst.output = gates - 1;
    return inst;
}

/// Random majority DAG of depth <= max_depth; nodes may share successors.
inline MajorityDag random_majority_dag(Rng& rng, std::size_t max_depth = 6)
{
    MajorityDag d;
    std::size_t depth = rng.between(1, max_depth);
    // layer[k] holds node indices at depth k; the last layer is all leaves
    std::vector<std::vector<std::size_t>> layer(depth + 1);
    auto leaf = [&] {
        MajorityNode n;
        n.kind = rng.coin() ? MajorityNode::Kind::accept : MajorityNode::Kind::reject;
        d.nodes.push_back(n);
        return d.nodes.size() - 1;
    };
    std::size_t width = rng.between(1, 4);
    for (std::size_t i = 0; i < width; ++i)
        layer[depth].push_back(leaf());
    for (std::size_t k = depth; k-- > 0;) {
        std::size_t w = k == 0 ? 1 : rng.between(1, 4);
        for (std::size_t i = 0; i < w; ++i) {
            MajorityNode n;
            const auto& below = layer[k + 1];
            unsigned r = static_cast<unsigned>(rng.below(10));
            if (k > 0 && r == 0) {
                n.kind = rng.coin() ? MajorityNode::Kind::accept : MajorityNode::Kind::reject;
            } else if (r < 3) {
                n.kind = MajorityNode::Kind::step;
                n.succ = {below[rng.below(below.size())]};
            } else {
                n.kind = MajorityNode::Kind::branch;
                n.succ = {below[rng.below(below.size())], below[rng.below(below.size())]};
            }
            d.nodes.push_back(std::move(n));
            layer[k].push_back(d.nodes.size() - 1);
        }
    }
    d.root = layer[0][0];
    return d;
}

} // namespace setcirc
