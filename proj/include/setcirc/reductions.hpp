#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "setcirc/circuit.hpp"
#include "setcirc/error.hpp"
#include "setcirc/natural.hpp"
#include "setcirc/numtheory.hpp"

namespace setcirc {

/// A generated circuit and how to read its verdict: the source instance is a yes-instance
/// iff (query ∈ I(circuit)) != negated.
struct Reduction {
    Circuit circuit;
    Natural query = 1;
    bool negated = false;
};

// ---------------------------------------------------------------- exact cover

struct ExactCoverInstance {
    std::vector<std::string> universe;
    std::vector<std::vector<std::string>> sets;

    void validate() const
    {
        std::set<std::string> seen(universe.begin(), universe.end());
        if (seen.size() != universe.size())
            throw DomainError("exact cover universe has repeated elements");
        for (const auto& s : sets) {
            if (s.empty())
                throw DomainError("exact cover family contains the empty set");
            std::set<std::string> inner(s.begin(), s.end());
            if (inner.size() != s.size())
                throw DomainError("exact cover set lists an element twice");
            for (const auto& x : s)
                if (!seen.count(x))
                    throw DomainError("exact cover set element '" + x + "' is not in the universe");
        }
    }
};

/// Element i ↦ i-th prime; g0 = f(X), g_{i+1} = g_i ∪ (g_i / f(A_{i+1})). Exact cover exists iff 1 ∈ I(C).
inline Reduction from_exact_cover(const ExactCoverInstance& inst)
{
    inst.validate();
    auto primes = first_primes(inst.universe.size());
    std::map<std::string, Natural> prime_of;
    for (std::size_t i = 0; i < inst.universe.size(); ++i)
        prime_of[inst.universe[i]] = primes[i];
    auto f = [&](const std::vector<std::string>& a) {
        Natural p = 1;
        for (const auto& x : a)
            p *= prime_of.at(x);
        return p;
    };
    CircuitBuilder b;
    GateId g = b.input(f(inst.universe));
    for (const auto& a : inst.sets) {
        GateId fa = b.input(f(a));
        GateId h = b.div(g, fa);
        g = b.unite(g, h);
    }
    return {b.build(g), 1, false};
}

/// Brute force over all subfamilies.
inline bool solve_exact_cover(const ExactCoverInstance& inst)
{
    inst.validate();
    if (inst.sets.size() > 24)
        throw BudgetExceeded("exact cover brute force limited to 24 sets");
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < inst.universe.size(); ++i)
        index[inst.universe[i]] = i;
    std::vector<std::uint64_t> masks;
    for (const auto& s : inst.sets) {
        std::uint64_t m = 0;
        for (const auto& x : s)
            m |= std::uint64_t{1} << index.at(x);
        masks.push_back(m);
    }
    if (inst.universe.size() > 63)
        throw BudgetExceeded("exact cover brute force limited to 63 elements");
    const std::uint64_t full = (std::uint64_t{1} << inst.universe.size()) - 1;
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << masks.size()); ++pick) {
        std::uint64_t covered = 0;
        bool disjoint = true;
        for (std::size_t i = 0; i < masks.size() && disjoint; ++i)
            if (pick >> i & 1) {
                disjoint = (covered & masks[i]) == 0;
                covered |= masks[i];
            }
        if (disjoint && covered == full)
            return true;
    }
    return false;
}

// ---------------------------------------------------------------- reachability

struct Digraph {
    std::size_t nodes = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges;

    void validate() const
    {
        for (auto [u, v] : edges)
            if (u >= nodes || v >= nodes)
                throw DomainError("edge endpoint out of range");
    }

    /// Kahn order, or DomainError on a cycle.
    std::vector<std::size_t> topological_order() const
    {
        validate();
        std::vector<std::size_t> indeg(nodes, 0);
        std::vector<std::vector<std::size_t>> out(nodes);
        for (auto [u, v] : edges) {
            out[u].push_back(v);
            ++indeg[v];
        }
        std::deque<std::size_t> ready;
        for (std::size_t v = 0; v < nodes; ++v)
            if (indeg[v] == 0)
                ready.push_back(v);
        std::vector<std::size_t> order;
        while (!ready.empty()) {
            std::size_t u = ready.front();
            ready.pop_front();
            order.push_back(u);
            for (std::size_t v : out[u])
                if (--indeg[v] == 0)
                    ready.push_back(v);
        }
        if (order.size() != nodes)
            throw DomainError("graph has a cycle");
        return order;
    }
};

/// {/}-circuit whose node gates carry markers {0}, ∅ (reached from s) or {1} (not reached).
/// s is reachable to t iff 1 ∉ I(C), so the reduction is negated.
inline Reduction from_gap(const Digraph& g, std::size_t s, std::size_t t)
{
    if (s >= g.nodes || t >= g.nodes)
        throw DomainError("s or t out of range");
    if (s == t)
        throw DomainError("from_gap needs s != t");
    auto order = g.topological_order();
    std::vector<std::vector<std::size_t>> in(g.nodes);
    for (auto [u, v] : g.edges)
        if (v != s && u != t)
            in[v].push_back(u);

    std::vector<Gate> gates;
    GateId extra = g.nodes + 1;
    auto node_id = [](std::size_t v) { return static_cast<GateId>(v + 1); };
    for (std::size_t v : order) {
        const auto& preds = in[v];
        const GateId id = node_id(v);
        if (v == s) {
            gates.push_back(Gate{id, Op::input, {}, 0, {}});
        } else if (preds.empty() && v != t) {
            gates.push_back(Gate{id, Op::input, {}, 1, {}});
        } else if (preds.empty()) {
            GateId d = extra++;
            gates.push_back(Gate{d, Op::input, {}, 1, {}});
            gates.push_back(Gate{id, Op::div, {d, d}, 0, {}});
        } else if (preds.size() == 1) {
            gates.push_back(Gate{id, Op::div, {node_id(preds[0]), node_id(preds[0])}, 0, {}});
        } else {
            GateId acc = node_id(preds[0]);
            for (std::size_t k = 1; k + 1 < preds.size(); ++k) {
                GateId next = extra++;
                gates.push_back(Gate{next, Op::div, {acc, node_id(preds[k])}, 0, {}});
                acc = next;
            }
            gates.push_back(Gate{id, Op::div, {acc, node_id(preds.back())}, 0, {}});
        }
    }
    return {Circuit(std::move(gates), node_id(t)), 1, true};
}

inline bool bfs_reachable(const Digraph& g, std::size_t s, std::size_t t)
{
    g.validate();
    std::vector<std::vector<std::size_t>> out(g.nodes);
    for (auto [u, v] : g.edges)
        out[u].push_back(v);
    std::vector<bool> seen(g.nodes, false);
    std::deque<std::size_t> q{s};
    seen[s] = true;
    while (!q.empty()) {
        std::size_t u = q.front();
        q.pop_front();
        if (u == t)
            return true;
        for (std::size_t v : out[u])
            if (!seen[v]) {
                seen[v] = true;
                q.push_back(v);
            }
    }
    return false;
}

// ---------------------------------------------------------------- circuit value

struct BoolGate {
    enum class Kind { input, and_, not_ };
    Kind kind = Kind::input;
    std::vector<std::size_t> args; // earlier gate indices
    std::size_t input = 0;         // assignment index for inputs
};

struct BoolCircuitInstance {
    std::vector<BoolGate> gates;
    std::size_t output = 0;
    std::vector<bool> assignment;

    void validate() const
    {
        if (output >= gates.size())
            throw DomainError("boolean circuit output out of range");
        for (std::size_t i = 0; i < gates.size(); ++i) {
            const auto& g = gates[i];
            std::size_t want = g.kind == BoolGate::Kind::input ? 0 : g.kind == BoolGate::Kind::not_ ? 1 : 2;
            if (g.args.size() != want)
                throw DomainError("boolean gate " + std::to_string(i) + " has the wrong arity");
            for (std::size_t a : g.args)
                if (a >= i)
                    throw DomainError("boolean gate " + std::to_string(i) + " refers forward");
            if (g.kind == BoolGate::Kind::input && g.input >= assignment.size())
                throw DomainError("boolean input " + std::to_string(i) + " has no assigned value");
        }
    }
};

/// false ↦ ∅ = {0}/{0}, true ↦ N = comp ∅; ∧ ↦ /, ¬ ↦ comp. Value true iff 1 ∈ I(C).
inline Reduction from_cvp(const BoolCircuitInstance& inst)
{
    inst.validate();
    CircuitBuilder b;
    GateId f = b.input(0);
    GateId f0 = b.div(f, f);
    GateId f1 = b.comp(f0);
    std::vector<GateId> id(inst.gates.size());
    for (std::size_t i = 0; i < inst.gates.size(); ++i) {
        const auto& g = inst.gates[i];
        switch (g.kind) {
        case BoolGate::Kind::input: id[i] = inst.assignment[g.input] ? f1 : f0; break;
        case BoolGate::Kind::and_: id[i] = b.div(id[g.args[0]], id[g.args[1]]); break;
        case BoolGate::Kind::not_: id[i] = b.comp(id[g.args[0]]); break;
        }
    }
    return {b.build(id[inst.output]), 1, false};
}

inline bool eval_bool(const BoolCircuitInstance& inst)
{
    inst.validate();
    std::vector<bool> v(inst.gates.size());
    for (std::size_t i = 0; i < inst.gates.size(); ++i) {
        const auto& g = inst.gates[i];
        switch (g.kind) {
        case BoolGate::Kind::input: v[i] = inst.assignment[g.input]; break;
        case BoolGate::Kind::and_: v[i] = v[g.args[0]] && v[g.args[1]]; break;
        case BoolGate::Kind::not_: v[i] = !v[g.args[0]]; break;
        }
    }
    return v[inst.output];
}

// ---------------------------------------------------------------- majority of paths

struct MajorityNode {
    enum class Kind { accept, reject, step, branch };
    Kind kind = Kind::accept;
    std::vector<std::size_t> succ; // 2 for branch, 1 for step, none for leaves
};

struct MajorityDag {
    std::vector<MajorityNode> nodes;
    std::size_t root = 0;

    void validate() const
    {
        if (root >= nodes.size())
            throw DomainError("majority DAG root out of range");
        Digraph g{nodes.size(), {}};
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            const auto& n = nodes[i];
            std::size_t want = n.kind == MajorityNode::Kind::branch ? 2 : n.kind == MajorityNode::Kind::step ? 1 : 0;
            if (n.succ.size() != want)
                throw DomainError("majority DAG node " + std::to_string(i) + " has the wrong out-degree");
            for (std::size_t v : n.succ)
                g.edges.emplace_back(i, v);
        }
        g.topological_order();
    }

    /// Successor-first order of the nodes reachable from the root.
    std::vector<std::size_t> bottom_up() const
    {
        std::vector<std::size_t> order;
        std::vector<int> state(nodes.size(), 0);
        std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
        state[root] = 1;
        while (!stack.empty()) {
            auto& [v, k] = stack.back();
            if (k < nodes[v].succ.size()) {
                std::size_t w = nodes[v].succ[k++];
                if (state[w] == 0) {
                    state[w] = 1;
                    stack.emplace_back(w, 0);
                }
            } else {
                order.push_back(v);
                stack.pop_back();
            }
        }
        return order;
    }
};

/// Two ×-copies of the DAG evaluate to {2^n} and {2^m} (n accepting, m rejecting root-leaf paths);
/// then f2 = g2 × 2, f3 = g1 / f2, f4 = f3 / f3, so 1 ∈ I(C) iff n > m.
inline Reduction from_majority_dag(const MajorityDag& d)
{
    d.validate();
    auto order = d.bottom_up();
    CircuitBuilder b;
    GateId one = b.input(1);
    GateId two = b.input(2);
    auto copy = [&](bool accept_is_two) {
        std::vector<GateId> id(d.nodes.size(), 0);
        for (std::size_t v : order) {
            const auto& n = d.nodes[v];
            switch (n.kind) {
            case MajorityNode::Kind::accept: id[v] = accept_is_two ? two : one; break;
            case MajorityNode::Kind::reject: id[v] = accept_is_two ? one : two; break;
            case MajorityNode::Kind::step: id[v] = b.mul(id[n.succ[0]], one); break;
            case MajorityNode::Kind::branch: id[v] = b.mul(id[n.succ[0]], id[n.succ[1]]); break;
            }
        }
        return id[d.root];
    };
    GateId g1 = copy(true);
    GateId g2 = copy(false);
    GateId f2 = b.mul(g2, two);
    GateId f3 = b.div(g1, f2);
    GateId f4 = b.div(f3, f3);
    return {b.build(f4), 1, false};
}

struct PathCounts {
    Natural accept = 0;
    Natural reject = 0;
};

inline PathCounts count_paths(const MajorityDag& d)
{
    d.validate();
    std::vector<PathCounts> c(d.nodes.size());
    for (std::size_t v : d.bottom_up()) {
        const auto& n = d.nodes[v];
        if (n.kind == MajorityNode::Kind::accept)
            c[v].accept = 1;
        else if (n.kind == MajorityNode::Kind::reject)
            c[v].reject = 1;
        else
            for (std::size_t w : n.succ) {
                c[v].accept += c[w].accept;
                c[v].reject += c[w].reject;
            }
    }
    return c[d.root];
}

// ---------------------------------------------------------------- primes

/// N' = comp(0 ∪ 1); I(C) = comp(N' × N') ∩ N', the primes.
inline Circuit primes_circuit()
{
    CircuitBuilder b;
    GateId zero = b.input(0);
    GateId one = b.input(1);
    GateId a = b.unite(zero, one);
    GateId n = b.comp(a);
    GateId prod = b.mul(n, n);
    GateId composite_free = b.comp(prod);
    return b.build(b.inter(composite_free, n));
}

inline bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

} // namespace setcirc
