#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "setcirc/circuit.hpp"
#include "setcirc/error.hpp"
#include "setcirc/natural.hpp"

namespace setcirc {

enum class CutoffMode { structural, certified, none };

inline const char* cutoff_mode_name(CutoffMode m)
{
    switch (m) {
    case CutoffMode::structural: return "structural";
    case CutoffMode::certified: return "certified";
    case CutoffMode::none: return "none";
    }
    return "none";
}

inline std::optional<CutoffMode> parse_cutoff_mode(std::string_view s)
{
    if (s == "structural")
        return CutoffMode::structural;
    if (s == "certified")
        return CutoffMode::certified;
    if (s == "none")
        return CutoffMode::none;
    return std::nullopt;
}

/// Per-gate cutoffs, indexed like `Circuit::gates()`.
struct CutoffProfile {
    CutoffMode mode = CutoffMode::structural;
    std::vector<Natural> cutoffs;
    /// Certified mode only: exponents e with cutoff = 2^e + 1.
    std::vector<std::size_t> exponents;

    const Natural& at(std::size_t index) const { return cutoffs.at(index); }
    Natural max() const
    {
        Natural m = 1;
        for (const auto& c : cutoffs)
            m = std::max(m, c);
        return m;
    }
    /// "257" or "2^e + 1" once the number gets long.
    std::string describe(std::size_t index) const
    {
        if (mode == CutoffMode::certified && exponents.at(index) > 64)
            return "2^" + std::to_string(exponents[index]) + " + 1";
        return cutoffs.at(index).str();
    }
};

namespace detail {

inline void require_cutoff_fragment(const Circuit& c)
{
    Fragment f = fragment_of(c);
    if (f.contains(Op::mul))
        throw FragmentError("cutoffs need a fragment without mul, got " + f.to_string());
    if (!c.is_vector() && f.contains(Op::sub))
        throw FragmentError("sub is a vector operation");
}

} // namespace detail

/// cutoff(g) = 2^{|C_g|} + 1. Materialised only while the exponent stays below `materialize_limit`.
inline CutoffProfile certified_cutoff(const Circuit& c, std::size_t materialize_limit = 1u << 16)
{
    detail::require_cutoff_fragment(c);
    CutoffProfile p;
    p.mode = CutoffMode::certified;
    p.exponents = detail::subcircuit_lengths(c);
    for (std::size_t e : p.exponents) {
        if (e > materialize_limit)
            throw BudgetExceeded("certified cutoff 2^" + std::to_string(e) + " + 1 is too large to materialise");
        p.cutoffs.push_back((Natural(1) << e) + 1);
    }
    return p;
}

inline CutoffProfile structural_cutoff(const Circuit& c)
{
    detail::require_cutoff_fragment(c);
    CutoffProfile p;
    p.mode = CutoffMode::structural;
    p.cutoffs.reserve(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        const Gate& g = c.gate_at(i);
        auto pred = [&](std::size_t k) -> const Natural& { return p.cutoffs[c.preds_of(i)[k]]; };
        Natural n;
        switch (g.op) {
        case Op::input:
            if (!c.is_vector()) {
                n = g.value + 2;
            } else if (g.vvalue.infinite) {
                n = 1;
            } else {
                Natural m = 0;
                for (const auto& x : g.vvalue.coords)
                    m = std::max(m, x);
                n = m + 1;
            }
            break;
        case Op::union_:
        case Op::inter: n = std::max(pred(0), pred(1)); break;
        case Op::comp: n = pred(0); break;
        case Op::add: n = pred(0) + pred(1); break;
        case Op::div:
        case Op::sub: n = pred(0); break;
        case Op::mul: throw FragmentError("mul has no cutoff");
        }
        p.cutoffs.push_back(std::move(n));
    }
    return p;
}

inline CutoffProfile cutoff_profile(const Circuit& c, CutoffMode mode)
{
    if (mode == CutoffMode::certified)
        return certified_cutoff(c);
    if (mode == CutoffMode::structural)
        return structural_cutoff(c);
    throw DomainError("no cutoff profile for mode none");
}

/// Upper bound on the elements of a complement-free circuit: 2^e, or 2^(2^e) when doubly.
struct SizeBound {
    std::size_t exponent = 0;
    bool doubly = false;

    /// x <= bound, without materialising 2^(2^e).
    bool contains(const Natural& x) const
    {
        if (x <= 1)
            return true;
        // x <= 2^K iff bits(x - 1) <= K
        std::size_t bits = bit_length(Natural(x - 1));
        if (!doubly)
            return bits <= exponent;
        if (exponent >= 63)
            return true;
        return bits <= (std::size_t{1} << exponent);
    }

    std::string describe() const
    {
        return doubly ? "2^(2^" + std::to_string(exponent) + ")" : "2^" + std::to_string(exponent);
    }
};

inline SizeBound element_size_bound(const Circuit& c)
{
    Fragment f = fragment_of(c);
    if (f.contains(Op::comp))
        throw FragmentError("size bounds need a complement-free circuit, got " + f.to_string());
    return SizeBound{encoding_length(c), f.contains(Op::mul)};
}

} // namespace setcirc
