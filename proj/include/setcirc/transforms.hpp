#pragma once

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "setcirc/circuit.hpp"
#include "setcirc/error.hpp"
#include "setcirc/natural.hpp"
#include "setcirc/numtheory.hpp"

namespace setcirc {

/// Monoid map from (N, ×) to (N^m ∪ {∞}, +): σ(0) = ∞, σ(Π q_j^{d_j}) = (d_1, ..., d_k[, rest]).
struct SigmaMap {
    enum class Kind { gcd_free, prime_factor };

    Kind kind = Kind::gcd_free;
    std::vector<Natural> base;

    /// gcd-free: |base|; prime-factor: |base| + 1 (multiplicity of all other primes).
    std::size_t dim() const { return kind == Kind::gcd_free ? base.size() : base.size() + 1; }

    ExtVector map(const Natural& n) const
    {
        if (n == 0)
            return ExtVector::inf();
        std::vector<Natural> coords(dim(), 0);
        Natural rest = n;
        for (std::size_t j = 0; j < base.size(); ++j)
            while (rest % base[j] == 0) {
                rest /= base[j];
                ++coords[j];
            }
        if (rest != 1) {
            if (kind == Kind::gcd_free)
                throw DomainError(n.str() + " is not a product of powers of the basis");
            std::uint64_t others = 0;
            for (const auto& [p, e] : factorize(rest).factors)
                others += e;
            coords.back() = others;
        }
        return ExtVector::of(std::move(coords));
    }

    std::string describe() const
    {
        std::string s = kind == Kind::gcd_free ? "gcd-free basis" : "prime basis";
        s += " {";
        for (std::size_t j = 0; j < base.size(); ++j)
            s += (j ? "," : "") + base[j].str();
        s += "}";
        if (kind == Kind::prime_factor)
            s += " + other primes";
        return s;
    }
};

struct VectorTransform {
    Circuit circuit;
    ExtVector query;
    SigmaMap sigma;
};

namespace detail {

inline Circuit sigma_image(const Circuit& c, const SigmaMap& sigma)
{
    std::vector<Gate> gates;
    gates.reserve(c.size());
    for (const auto& g : c.gates()) {
        Gate h = g;
        switch (g.op) {
        case Op::input:
            h.vvalue = sigma.map(g.value);
            h.value = 0;
            break;
        case Op::mul: h.op = Op::add; break;
        case Op::div: h.op = Op::sub; break;
        default: break;
        }
        gates.push_back(std::move(h));
    }
    return Circuit::vector(sigma.dim(), std::move(gates), c.output());
}

inline std::vector<Natural> nonzero_labels(const Circuit& c, const Natural& b)
{
    std::vector<Natural> out;
    for (const auto& g : c.gates())
        if (g.op == Op::input && g.value != 0)
            out.push_back(g.value);
    if (b != 0)
        out.push_back(b);
    return out;
}

inline void require_scalar_fragment(const Circuit& c, Fragment allowed, const char* what)
{
    if (c.is_vector())
        throw FragmentError(std::string(what) + " needs a scalar circuit");
    Fragment f = fragment_of(c);
    if (!f.subset_of(allowed))
        throw FragmentError(std::string(what) + " needs a fragment within " + allowed.to_string() + ", got " +
                            f.to_string());
}

} // namespace detail

/// {∪,∩,×,/} circuit to an {∪,∩,+,−} vector circuit over a GCD-free basis of the labels and b.
inline VectorTransform to_vector_gcdfree(const Circuit& c, const Natural& b)
{
    detail::require_scalar_fragment(c, {Op::union_, Op::inter, Op::mul, Op::div}, "to_vector_gcdfree");
    SigmaMap sigma{SigmaMap::Kind::gcd_free, gcd_free_basis(detail::nonzero_labels(c, b)).base};
    return {detail::sigma_image(c, sigma), sigma.map(b), sigma};
}

/// {∪,∩,¬,×,/} circuit to an {∪,∩,¬,+,−} vector circuit over the primes of the labels and b,
/// with one extra coordinate counting every other prime.
inline VectorTransform to_vector_primefact(const Circuit& c, const Natural& b,
                                           std::uint64_t trial_limit = default_trial_limit)
{
    detail::require_scalar_fragment(c, {Op::union_, Op::inter, Op::comp, Op::mul, Op::div}, "to_vector_primefact");
    std::vector<Natural> primes;
    for (const auto& a : detail::nonzero_labels(c, b))
        for (const auto& [p, e] : factorize(a, trial_limit).factors)
            primes.push_back(p);
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    SigmaMap sigma{SigmaMap::Kind::prime_factor, std::move(primes)};
    return {detail::sigma_image(c, sigma), sigma.map(b), sigma};
}

/// Replaces every ∩-gate g = p1 ∩ p2 by p1 × (1 / ((p1 + 1) / (p2 + 1))).
/// Original ids are kept (g's id moves to the final ×-gate); new gates get ids above the old maximum.
inline Circuit eliminate_cap(const Circuit& c)
{
    detail::require_scalar_fragment(c, {Op::inter, Op::add, Op::mul, Op::div}, "eliminate_cap");
    if (!fragment_of(c).contains(Op::inter))
        return c;
    GateId next = c.max_id() + 1;
    std::vector<Gate> gates;
    const GateId one = next++;
    gates.push_back(Gate{one, Op::input, {}, 1, {}});
    for (const auto& g : c.gates()) {
        if (g.op != Op::inter) {
            gates.push_back(g);
            continue;
        }
        const GateId a1 = next++, a2 = next++, d1 = next++, d2 = next++;
        gates.push_back(Gate{a1, Op::add, {g.preds[0], one}, 0, {}});
        gates.push_back(Gate{a2, Op::add, {g.preds[1], one}, 0, {}});
        gates.push_back(Gate{d1, Op::div, {a1, a2}, 0, {}});
        gates.push_back(Gate{d2, Op::div, {one, d1}, 0, {}});
        gates.push_back(Gate{g.id, Op::mul, {g.preds[0], d2}, 0, {}});
    }
    return Circuit(std::move(gates), c.output(), c.is_vector() ? c.dim() : 0);
}

/// Replaces every ∩-gate by comp(comp p1 ∪ comp p2). Only for circuits that already use complement.
inline Circuit demorgan_rewrite(const Circuit& c)
{
    Fragment f = fragment_of(c);
    if (!f.contains(Op::comp))
        throw FragmentError("demorgan_rewrite needs a circuit with comp; use eliminate_cap instead");
    if (!f.contains(Op::inter))
        return c;
    GateId next = c.max_id() + 1;
    std::vector<Gate> gates;
    for (const auto& g : c.gates()) {
        if (g.op != Op::inter) {
            gates.push_back(g);
            continue;
        }
        const GateId n1 = next++, n2 = next++, u = next++;
        gates.push_back(Gate{n1, Op::comp, {g.preds[0]}, 0, {}});
        gates.push_back(Gate{n2, Op::comp, {g.preds[1]}, 0, {}});
        gates.push_back(Gate{u, Op::union_, {n1, n2}, 0, {}});
        gates.push_back(Gate{g.id, Op::comp, {u}, 0, {}});
    }
    return Circuit(std::move(gates), c.output(), c.is_vector() ? c.dim() : 0);
}

/// Number of gates of the formula expansion (tree unrolling) of the output.
inline Natural formula_size(const Circuit& c)
{
    std::vector<Natural> size(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        size[i] = 1;
        for (std::size_t p : c.preds_of(i))
            size[i] += size[p];
    }
    return size[c.output_index()];
}

/// Unrolls the output's ancestry into a tree (every gate has fan-out <= 1); ids renumbered 1..N in post-order.
inline Circuit expand_formula(const Circuit& c, std::size_t max_gates = 1'000'000)
{
    Natural n = formula_size(c);
    if (n > max_gates)
        throw BudgetExceeded("formula expansion has " + n.str() + " gates, budget " + std::to_string(max_gates));
    std::vector<Gate> gates;
    gates.reserve(static_cast<std::size_t>(n));
    std::function<GateId(std::size_t)> emit = [&](std::size_t i) -> GateId {
        Gate h = c.gate_at(i);
        std::vector<GateId> preds;
        for (std::size_t p : c.preds_of(i))
            preds.push_back(emit(p));
        h.preds = std::move(preds);
        h.id = static_cast<GateId>(gates.size() + 1);
        gates.push_back(std::move(h));
        return gates.back().id;
    };
    GateId out = emit(c.output_index());
    return Circuit(std::move(gates), out, c.is_vector() ? c.dim() : 0);
}

} // namespace setcirc
