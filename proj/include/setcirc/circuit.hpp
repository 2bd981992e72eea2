#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "setcirc/error.hpp"
#include "setcirc/natural.hpp"

namespace setcirc {

enum class Op : std::uint8_t { input, union_, inter, comp, add, mul, div, sub };

inline constexpr std::array<Op, 7> operation_kinds = {Op::union_, Op::inter, Op::comp, Op::add,
                                                      Op::mul,    Op::div,   Op::sub};

/// Keyword used by the text format.
inline const char* op_keyword(Op op)
{
    switch (op) {
    case Op::input: return "input";
    case Op::union_: return "union";
    case Op::inter: return "inter";
    case Op::comp: return "comp";
    case Op::add: return "add";
    case Op::mul: return "mul";
    case Op::div: return "div";
    case Op::sub: return "sub";
    }
    return "?";
}

inline std::size_t op_arity(Op op)
{
    switch (op) {
    case Op::input: return 0;
    case Op::comp: return 1;
    default: return 2;
    }
}

using GateId = std::uint64_t;

/// One gate. Scalar circuits use `value`, vector circuits use `vvalue`; predecessor order is positional.
struct Gate {
    GateId id = 0;
    Op op = Op::input;
    std::vector<GateId> preds;
    Natural value = 0;
    ExtVector vvalue;

    friend bool operator==(const Gate&, const Gate&) = default;
};

/// Set of operation kinds occurring in a circuit.
class Fragment {
public:
    constexpr Fragment() = default;
    constexpr Fragment(std::initializer_list<Op> ops)
    {
        for (Op op : ops)
            insert(op);
    }

    constexpr void insert(Op op)
    {
        if (op != Op::input)
            bits_ |= bit(op);
    }
    constexpr bool contains(Op op) const { return (bits_ & bit(op)) != 0; }
    constexpr bool subset_of(Fragment other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr std::uint8_t bits() const { return bits_; }

    friend constexpr bool operator==(Fragment, Fragment) = default;

    /// e.g. "{union,inter,comp,mul}" in canonical kind order.
    std::string to_string() const
    {
        std::string out = "{";
        bool first = true;
        for (Op op : operation_kinds) {
            if (!contains(op))
                continue;
            if (!first)
                out += ',';
            out += op_keyword(op);
            first = false;
        }
        return out + "}";
    }

private:
    static constexpr std::uint8_t bit(Op op) { return static_cast<std::uint8_t>(1u << static_cast<unsigned>(op)); }
    std::uint8_t bits_ = 0;
};

/// Immutable, validated circuit: gates in reverse topological order (predecessors first).
class Circuit {
public:
    /// Validates and builds. `dim` = 0 means a scalar circuit; dim >= 1 a circuit over N^dim ∪ {∞}.
    Circuit(std::vector<Gate> gates, GateId output, std::size_t dim = 0)
        : gates_(std::move(gates)), output_(output), dim_(dim)
    {
        validate();
    }

    static Circuit scalar(std::vector<Gate> gates, GateId output) { return Circuit(std::move(gates), output, 0); }
    static Circuit vector(std::size_t dim, std::vector<Gate> gates, GateId output)
    {
        if (dim == 0)
            throw ValidationError(Errc::dimension_mismatch, "vector circuits need dim >= 1");
        return Circuit(std::move(gates), output, dim);
    }

    bool is_vector() const noexcept { return dim_ > 0; }
    /// 1 for scalar circuits, m for vector circuits.
    std::size_t dim() const noexcept { return dim_ == 0 ? 1 : dim_; }

    std::span<const Gate> gates() const noexcept { return gates_; }
    std::size_t size() const noexcept { return gates_.size(); }
    const Gate& gate_at(std::size_t index) const { return gates_.at(index); }
    GateId output() const noexcept { return output_; }
    std::size_t output_index() const noexcept { return output_index_; }

    bool has_gate(GateId id) const { return index_.count(id) != 0; }
    std::size_t index_of(GateId id) const
    {
        auto it = index_.find(id);
        if (it == index_.end())
            throw ValidationError(Errc::unknown_reference, "no gate with id " + std::to_string(id));
        return it->second;
    }
    const Gate& gate(GateId id) const { return gates_[index_of(id)]; }

    /// Predecessors of gate `index` as list indices, in positional order.
    std::span<const std::size_t> preds_of(std::size_t index) const { return pred_index_[index]; }

    GateId max_id() const
    {
        GateId m = 0;
        for (const auto& g : gates_)
            m = std::max(m, g.id);
        return m;
    }

    friend bool operator==(const Circuit& a, const Circuit& b)
    {
        return a.dim_ == b.dim_ && a.output_ == b.output_ && a.gates_ == b.gates_;
    }

private:
    void validate()
    {
        index_.clear();
        pred_index_.assign(gates_.size(), {});
        std::unordered_set<GateId> all_ids;
        for (const auto& g : gates_)
            all_ids.insert(g.id);

        for (std::size_t i = 0; i < gates_.size(); ++i) {
            const Gate& g = gates_[i];
            if (index_.count(g.id))
                throw ValidationError(Errc::duplicate_id, "gate " + std::to_string(g.id) + " defined twice", i);
            if (g.preds.size() != op_arity(g.op))
                throw ValidationError(Errc::arity_mismatch,
                                      std::string(op_keyword(g.op)) + " gate " + std::to_string(g.id) + " needs " +
                                          std::to_string(op_arity(g.op)) + " predecessor(s), got " +
                                          std::to_string(g.preds.size()),
                                      i);
            if (is_vector() && (g.op == Op::mul || g.op == Op::div))
                throw ValidationError(Errc::kind_mismatch, "vector circuits have no mul/div gates", i);
            if (!is_vector() && g.op == Op::sub)
                throw ValidationError(Errc::kind_mismatch, "sub gates only occur in vector circuits", i);
            if (g.op == Op::input && is_vector() && !g.vvalue.infinite && g.vvalue.dim() != dim_)
                throw ValidationError(Errc::dimension_mismatch,
                                      "input gate " + std::to_string(g.id) + " has " +
                                          std::to_string(g.vvalue.dim()) + " coordinates, circuit dim is " +
                                          std::to_string(dim_),
                                      i);
            for (GateId p : g.preds) {
                auto it = index_.find(p);
                if (it == index_.end()) {
                    if (all_ids.count(p) || p == g.id)
                        throw ValidationError(Errc::forward_reference,
                                              "gate " + std::to_string(g.id) + " references gate " +
                                                  std::to_string(p) + " which is not defined before it",
                                              i);
                    throw ValidationError(Errc::unknown_reference,
                                          "gate " + std::to_string(g.id) + " references undefined gate " +
                                              std::to_string(p),
                                          i);
                }
                pred_index_[i].push_back(it->second);
            }
            index_.emplace(g.id, i);
        }
        auto out = index_.find(output_);
        if (out == index_.end())
            throw ValidationError(Errc::missing_output, "output gate " + std::to_string(output_) + " does not exist");
        output_index_ = out->second;
    }

    std::vector<Gate> gates_;
    GateId output_;
    std::size_t dim_;
    std::size_t output_index_ = 0;
    std::unordered_map<GateId, std::size_t> index_;
    std::vector<std::vector<std::size_t>> pred_index_;
};

/// Appends gates with sequential ids starting at 1.
class CircuitBuilder {
public:
    explicit CircuitBuilder(std::size_t dim = 0) : dim_(dim) {}

    GateId input(Natural value)
    {
        Gate g;
        g.id = next_id();
        g.value = std::move(value);
        gates_.push_back(std::move(g));
        return gates_.back().id;
    }
    GateId input(ExtVector value)
    {
        Gate g;
        g.id = next_id();
        g.vvalue = std::move(value);
        gates_.push_back(std::move(g));
        return gates_.back().id;
    }
    GateId gate(Op op, std::vector<GateId> preds)
    {
        Gate g;
        g.id = next_id();
        g.op = op;
        g.preds = std::move(preds);
        gates_.push_back(std::move(g));
        return gates_.back().id;
    }
    GateId unite(GateId a, GateId b) { return gate(Op::union_, {a, b}); }
    GateId inter(GateId a, GateId b) { return gate(Op::inter, {a, b}); }
    GateId comp(GateId a) { return gate(Op::comp, {a}); }
    GateId add(GateId a, GateId b) { return gate(Op::add, {a, b}); }
    GateId mul(GateId a, GateId b) { return gate(Op::mul, {a, b}); }
    GateId div(GateId a, GateId b) { return gate(Op::div, {a, b}); }
    GateId sub(GateId a, GateId b) { return gate(Op::sub, {a, b}); }

    std::size_t size() const noexcept { return gates_.size(); }

    Circuit build(GateId output) const { return Circuit(gates_, output, dim_); }
    Circuit build() const { return build(gates_.empty() ? 0 : gates_.back().id); }

private:
    GateId next_id() const { return static_cast<GateId>(gates_.size() + 1); }
    std::size_t dim_;
    std::vector<Gate> gates_;
};

inline Fragment fragment_of(const Circuit& c)
{
    Fragment f;
    for (const auto& g : c.gates())
        f.insert(g.op);
    return f;
}

/// Indicator over gate indices: which gates can reach gate `index` (including itself).
inline std::vector<bool> ancestors_of(const Circuit& c, std::size_t index)
{
    std::vector<bool> keep(c.size(), false);
    keep[index] = true;
    for (std::size_t i = index + 1; i-- > 0;) {
        if (!keep[i])
            continue;
        for (std::size_t p : c.preds_of(i))
            keep[p] = true;
    }
    return keep;
}

/// The circuit of all gates that can reach `g`, with output `g`.
inline Circuit subcircuit_at(const Circuit& c, GateId g)
{
    auto keep = ancestors_of(c, c.index_of(g));
    std::vector<Gate> gates;
    for (std::size_t i = 0; i < c.size(); ++i)
        if (keep[i])
            gates.push_back(c.gate_at(i));
    return Circuit(std::move(gates), g, c.is_vector() ? c.dim() : 0);
}

namespace detail {

inline std::size_t label_bits(const Circuit& c, const Gate& g)
{
    if (!c.is_vector())
        return bit_length(std::max<Natural>(g.value, 1));
    if (g.vvalue.infinite)
        return 1;
    std::size_t bits = 0;
    for (const auto& x : g.vvalue.coords)
        bits += bit_length(std::max<Natural>(x, 1));
    return bits;
}

inline std::size_t gate_bits(const Circuit& c, const Gate& g)
{
    std::size_t bits = bit_length(g.id) + 3;
    for (GateId p : g.preds)
        bits += bit_length(p);
    if (g.op == Op::input)
        bits += label_bits(c, g);
    return bits;
}

/// |C_g| for every gate g, indexed like the gate list.
inline std::vector<std::size_t> subcircuit_lengths(const Circuit& c)
{
    std::vector<std::size_t> own(c.size());
    for (std::size_t i = 0; i < c.size(); ++i)
        own[i] = gate_bits(c, c.gate_at(i));
    std::vector<std::size_t> out(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        auto keep = ancestors_of(c, i);
        std::size_t total = bit_length(c.gate_at(i).id);
        for (std::size_t j = 0; j <= i; ++j)
            if (keep[j])
                total += own[j];
        out[i] = total;
    }
    return out;
}

} // namespace detail

/// Canonical encoding length |C| in bits:
/// sum over gates of bits(id) + 3 + sum bits(pred) (+ label bits for inputs), plus bits(output id).
inline std::size_t encoding_length(const Circuit& c)
{
    std::size_t total = bit_length(c.output());
    for (const auto& g : c.gates())
        total += detail::gate_bits(c, g);
    return total;
}

} // namespace setcirc
