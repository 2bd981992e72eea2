#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "setcirc/budget.hpp"
#include "setcirc/circuit.hpp"
#include "setcirc/engines/verdict.hpp"
#include "setcirc/error.hpp"
#include "setcirc/natural.hpp"
#include "setcirc/transforms.hpp"

namespace setcirc {

namespace detail {

/// Guess-and-check on a complement-free formula: can gate i take value v?
/// Every value lies in [lo_i, hi_i] (interval propagation), which bounds each existential choice.
class CertificateSearch {
public:
    CertificateSearch(const Circuit& f, const Budget& budget) : f_(f), budget_(budget), lo_(f.size()), hi_(f.size())
    {
        for (std::size_t i = 0; i < f.size(); ++i) {
            const Gate& g = f.gate_at(i);
            auto p = f.preds_of(i);
            switch (g.op) {
            case Op::input: lo_[i] = hi_[i] = g.value; break;
            case Op::union_:
                lo_[i] = std::min(lo_[p[0]], lo_[p[1]]);
                hi_[i] = std::max(hi_[p[0]], hi_[p[1]]);
                break;
            case Op::inter:
                lo_[i] = std::max(lo_[p[0]], lo_[p[1]]);
                hi_[i] = std::min(hi_[p[0]], hi_[p[1]]);
                break;
            case Op::add:
                lo_[i] = lo_[p[0]] + lo_[p[1]];
                hi_[i] = hi_[p[0]] + hi_[p[1]];
                break;
            case Op::mul:
                lo_[i] = lo_[p[0]] * lo_[p[1]];
                hi_[i] = hi_[p[0]] * hi_[p[1]];
                break;
            case Op::div:
                lo_[i] = 0;
                hi_[i] = hi_[p[0]];
                break;
            default: throw FragmentError(std::string("certificate search cannot handle ") + op_keyword(g.op));
            }
        }
        memo_.resize(f.size());
    }

    bool feasible(std::size_t i, const Natural& v)
    {
        if (v < lo_[i] || v > hi_[i])
            return false;
        auto& memo = memo_[i];
        if (auto it = memo.find(v); it != memo.end())
            return it->second;
        bool r = decide(i, v, nullptr);
        if (++entries_ > budget_.max_memo_entries)
            throw BudgetExceeded("certificate search exceeds memo budget");
        memo_[i].emplace(v, r);
        return r;
    }

    /// Records a witnessing assignment for a feasible (i, v).
    void assign(std::size_t i, const Natural& v, std::map<GateId, Natural>& out)
    {
        out[f_.gate_at(i).id] = v;
        decide(i, v, &out);
    }

    std::size_t memo_entries() const { return entries_; }

private:
    void spend()
    {
        if (++steps_ > budget_.max_steps)
            throw BudgetExceeded("certificate search exceeds step budget");
    }

    /// Some value in [lo, hi] of gate i with v != 0 when `nonzero`.
    std::optional<Natural> any_value(std::size_t i, bool nonzero)
    {
        Natural v = lo_[i];
        if (nonzero && v == 0)
            v = 1;
        for (; v <= hi_[i]; ++v) {
            spend();
            if (feasible(i, v))
                return v;
        }
        return std::nullopt;
    }

    // When `out` is set, assigns the first witnessing choice instead of only testing.
    bool decide(std::size_t i, const Natural& v, std::map<GateId, Natural>* out)
    {
        spend();
        const Gate& g = f_.gate_at(i);
        auto p = f_.preds_of(i);
        auto take = [&](std::size_t k, const Natural& val) {
            if (out)
                assign(p[k], val, *out);
        };
        switch (g.op) {
        case Op::input: return g.value == v;
        case Op::union_:
            for (std::size_t k = 0; k < 2; ++k)
                if (feasible(p[k], v)) {
                    take(k, v);
                    return true;
                }
            return false;
        case Op::inter:
            if (feasible(p[0], v) && feasible(p[1], v)) {
                take(0, v);
                take(1, v);
                return true;
            }
            return false;
        case Op::add: {
            Natural a = v > hi_[p[1]] ? Natural(v - hi_[p[1]]) : Natural(lo_[p[0]]);
            a = std::max(a, lo_[p[0]]);
            for (; a <= v && a <= hi_[p[0]]; ++a) {
                spend();
                if (feasible(p[0], a) && feasible(p[1], v - a)) {
                    take(0, a);
                    take(1, v - a);
                    return true;
                }
            }
            return false;
        }
        case Op::mul: {
            if (v == 0) {
                for (std::size_t k = 0; k < 2; ++k)
                    if (feasible(p[k], 0))
                        if (auto other = any_value(p[1 - k], false)) {
                            take(k, 0);
                            take(1 - k, *other);
                            return true;
                        }
                return false;
            }
            for (Natural d = 1; d * d <= v; ++d) {
                spend();
                if (v % d != 0)
                    continue;
                Natural e = v / d;
                for (auto [x, y] : {std::pair{d, e}, std::pair{e, d}})
                    if (feasible(p[0], x) && feasible(p[1], y)) {
                        take(0, x);
                        take(1, y);
                        return true;
                    }
            }
            return false;
        }
        case Op::div: {
            if (v == 0) {
                if (!feasible(p[0], 0))
                    return false;
                auto d = any_value(p[1], true);
                if (!d)
                    return false;
                take(0, 0);
                take(1, *d);
                return true;
            }
            Natural top = std::min(hi_[p[1]], Natural(hi_[p[0]] / v));
            for (Natural d = std::max(Natural(1), lo_[p[1]]); d <= top; ++d) {
                spend();
                if (feasible(p[1], d) && feasible(p[0], v * d)) {
                    take(0, v * d);
                    take(1, d);
                    return true;
                }
            }
            return false;
        }
        default: throw FragmentError(std::string("certificate search cannot handle ") + op_keyword(g.op));
        }
    }

    const Circuit& f_;
    Budget budget_;
    std::vector<Natural> lo_, hi_;
    std::vector<std::map<Natural, bool>> memo_;
    std::size_t entries_ = 0;
    std::uint64_t steps_ = 0;
};

} // namespace detail

/// Searches a per-gate value assignment on the formula expansion proving b ∈ I(C).
/// Exhausting the search without one means b ∉ I(C).
inline MembershipVerdict certificate_search(const Circuit& c, const Natural& b, const Budget& budget = {})
{
    if (c.is_vector())
        throw FragmentError("certificate search needs a scalar circuit");
    Fragment fr = fragment_of(c);
    if (fr.contains(Op::comp))
        throw FragmentError("certificate search needs a complement-free circuit, got " + fr.to_string());
    Circuit formula = expand_formula(c, budget.max_formula_gates);
    detail::CertificateSearch s(formula, budget);
    MembershipVerdict v;
    v.engine = EngineKind::certificate;
    v.cutoff_mode = CutoffMode::none;
    v.stats.gates = formula.size();
    v.member = s.feasible(formula.output_index(), b);
    if (v.member) {
        Certificate cert{formula, {}};
        s.assign(formula.output_index(), b, cert.values);
        v.witness = std::move(cert);
    }
    v.stats.memo_entries = s.memo_entries();
    return v;
}

/// Checks a witness gate by gate from the output: inputs match their labels, arithmetic relations
/// hold, ∪ follows one branch carrying the same value, ∩ carries it on both.
inline bool verify_certificate(const Circuit& c, const Natural& b, const Certificate& w)
{
    if (formula_size(c) != w.formula.size() || w.formula != expand_formula(c, w.formula.size()))
        return false;
    const Circuit& f = w.formula;
    auto value = [&](std::size_t i) -> const Natural* {
        auto it = w.values.find(f.gate_at(i).id);
        return it == w.values.end() ? nullptr : &it->second;
    };
    std::vector<std::size_t> todo{f.output_index()};
    if (!value(f.output_index()) || *value(f.output_index()) != b)
        return false;
    while (!todo.empty()) {
        std::size_t i = todo.back();
        todo.pop_back();
        const Gate& g = f.gate_at(i);
        const Natural& v = *value(i);
        auto p = f.preds_of(i);
        if (g.op == Op::input) {
            if (g.value != v)
                return false;
            continue;
        }
        if (g.op == Op::union_) {
            bool ok = false;
            for (std::size_t k = 0; k < 2 && !ok; ++k)
                if (const Natural* x = value(p[k]); x && *x == v) {
                    todo.push_back(p[k]);
                    ok = true;
                }
            if (!ok)
                return false;
            continue;
        }
        const Natural* x = value(p[0]);
        const Natural* y = value(p[1]);
        if (!x || !y)
            return false;
        bool ok = false;
        switch (g.op) {
        case Op::inter: ok = *x == v && *y == v; break;
        case Op::add: ok = *x + *y == v; break;
        case Op::mul: ok = *x * *y == v; break;
        case Op::div: ok = *y != 0 && v * *y == *x; break;
        default: return false;
        }
        if (!ok)
            return false;
        todo.push_back(p[0]);
        todo.push_back(p[1]);
    }
    return true;
}

} // namespace setcirc
