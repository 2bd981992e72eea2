#pragma once

#include <algorithm>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "setcirc/bounds.hpp"
#include "setcirc/budget.hpp"
#include "setcirc/circuit.hpp"
#include "setcirc/error.hpp"
#include "setcirc/natural.hpp"
#include "setcirc/vec_rep.hpp"

namespace setcirc {

struct SearchStats {
    std::size_t memo_entries = 0;
    std::uint64_t steps = 0;
};

/// Top-down membership search for {∪,∩,¬,+,/}-circuits: existential choices are enumerated over
/// finite clamped ranges, complement is negation of the predecessor query. Memoised on (gate, value).
class ScalarSearch {
public:
    ScalarSearch(const Circuit& c, CutoffMode mode = CutoffMode::structural, const Budget& budget = {})
        : c_(c), budget_(budget)
    {
        if (c.is_vector())
            throw FragmentError("scalar search needs a scalar circuit");
        Fragment f = fragment_of(c);
        if (!f.subset_of({Op::union_, Op::inter, Op::comp, Op::add, Op::div}))
            throw FragmentError("search needs a fragment within {union,inter,comp,add,div}, got " + f.to_string());
        auto profile = cutoff_profile(c, mode);
        for (const auto& n : profile.cutoffs)
            cutoff_.push_back(to_size_checked(n, "cutoff"));
        memo_.resize(c.size());
    }

    bool member(const Natural& x) { return query(c_.output_index(), clamp(c_.output_index(), x)); }
    bool member_at(std::size_t gate_index, const Natural& x) { return query(gate_index, clamp(gate_index, x)); }
    const SearchStats& stats() const { return stats_; }
    std::size_t cutoff(std::size_t gate_index) const { return cutoff_.at(gate_index); }

private:
    std::size_t clamp(std::size_t i, const Natural& x) const
    {
        return x >= cutoff_[i] ? cutoff_[i] : static_cast<std::size_t>(x);
    }
    std::size_t clamp(std::size_t i, std::size_t x) const { return std::min(x, cutoff_[i]); }

    void spend()
    {
        if (++stats_.steps > budget_.max_steps)
            throw BudgetExceeded("search exceeds step budget");
    }

    bool query(std::size_t i, std::size_t x)
    {
        auto& memo = memo_[i];
        if (auto it = memo.find(x); it != memo.end())
            return it->second;
        spend();
        const Gate& g = c_.gate_at(i);
        auto pre = c_.preds_of(i);
        auto ask = [&](std::size_t k, std::size_t v) { return query(pre[k], clamp(pre[k], v)); };
        bool r = false;
        switch (g.op) {
        case Op::input: r = g.value == x; break;
        case Op::union_: r = ask(0, x) || ask(1, x); break;
        case Op::inter: r = ask(0, x) && ask(1, x); break;
        case Op::comp: r = !ask(0, x); break;
        case Op::add:
            for (std::size_t a = 0; a <= x && !r; ++a)
                r = ask(0, a) && ask(1, x - a);
            break;
        case Op::div: {
            const std::size_t n1 = cutoff_[pre[0]];
            const std::size_t n2 = cutoff_[pre[1]];
            if (x == 0) {
                if (ask(0, 0))
                    for (std::size_t d = 1; d <= n2 && !r; ++d)
                        r = ask(1, d);
            } else {
                std::size_t limit = std::max(n2, (n1 + x - 1) / x);
                for (std::size_t d = 1; d <= limit && !r; ++d) {
                    std::size_t prod = d > n1 / x + 1 ? n1 : x * d;
                    r = ask(1, d) && ask(0, prod);
                }
            }
            break;
        }
        default: throw FragmentError(std::string("search cannot handle ") + op_keyword(g.op));
        }
        if (++stats_.memo_entries > budget_.max_memo_entries)
            throw BudgetExceeded("search exceeds memo budget");
        memo_[i].emplace(x, r);
        return r;
    }

    Circuit c_;
    Budget budget_;
    std::vector<std::size_t> cutoff_;
    std::vector<std::unordered_map<std::size_t, bool>> memo_;
    SearchStats stats_;
};

/// Same search over N^m ∪ {∞} for {∪,∩,¬,+,−}-vector circuits with per-coordinate clamping.
class VectorSearch {
public:
    VectorSearch(const Circuit& c, CutoffMode mode = CutoffMode::structural, const Budget& budget = {})
        : c_(c), budget_(budget), m_(c.dim())
    {
        if (!c.is_vector())
            throw FragmentError("vector search needs a vector circuit");
        Fragment f = fragment_of(c);
        if (!f.subset_of({Op::union_, Op::inter, Op::comp, Op::add, Op::sub}))
            throw FragmentError("vector search needs a fragment within {union,inter,comp,add,sub}, got " +
                                f.to_string());
        auto profile = cutoff_profile(c, mode);
        for (const auto& n : profile.cutoffs) {
            std::size_t k = to_size_checked(n, "cutoff");
            VecSetRep::checked_cells(m_, k, budget_);
            cutoff_.push_back(k);
        }
        memo_.resize(c.size());
    }

    bool member(const ExtVector& x) { return member_at(c_.output_index(), x); }
    bool member_at(std::size_t i, const ExtVector& x)
    {
        if (x.infinite)
            return query(i, infinity_key(i));
        if (x.dim() != m_)
            throw ValidationError(Errc::dimension_mismatch, "query dimension " + std::to_string(x.dim()) +
                                                                " does not match circuit dimension " +
                                                                std::to_string(m_));
        Point p(m_);
        for (std::size_t k = 0; k < m_; ++k)
            p[k] = x.coords[k] >= cutoff_[i] ? cutoff_[i] : static_cast<std::size_t>(x.coords[k]);
        return query(i, encode(i, p));
    }
    const SearchStats& stats() const { return stats_; }

private:
    using Point = std::vector<std::size_t>;

    std::size_t infinity_key(std::size_t i) const
    {
        std::size_t cells = 1;
        for (std::size_t k = 0; k < m_; ++k)
            cells *= cutoff_[i] + 1;
        return cells;
    }
    std::size_t encode(std::size_t i, const Point& p) const
    {
        std::size_t idx = 0, stride = 1;
        for (std::size_t k = 0; k < m_; ++k) {
            idx += std::min(p[k], cutoff_[i]) * stride;
            stride *= cutoff_[i] + 1;
        }
        return idx;
    }
    Point decode(std::size_t i, std::size_t key) const
    {
        Point p(m_);
        for (std::size_t k = 0; k < m_; ++k) {
            p[k] = key % (cutoff_[i] + 1);
            key /= cutoff_[i] + 1;
        }
        return p;
    }

    void spend()
    {
        if (++stats_.steps > budget_.max_steps)
            throw BudgetExceeded("vector search exceeds step budget");
    }

    bool finite_at(std::size_t i, const Point& p) { return query(i, encode(i, p)); }
    bool inf_at(std::size_t i) { return query(i, infinity_key(i)); }

    bool has_finite(std::size_t i)
    {
        Point p(m_, 0);
        const Point hi(m_, cutoff_[i]);
        do
            if (finite_at(i, p))
                return true;
        while (detail::next_point(p, hi));
        return false;
    }
    bool nonempty(std::size_t i) { return inf_at(i) || has_finite(i); }

    bool query(std::size_t i, std::size_t key)
    {
        auto& memo = memo_[i];
        if (auto it = memo.find(key); it != memo.end())
            return it->second;
        spend();
        const Gate& g = c_.gate_at(i);
        auto pre = c_.preds_of(i);
        const bool at_inf = key == infinity_key(i);
        bool r = false;
        if (at_inf) {
            switch (g.op) {
            case Op::input: r = g.vvalue.infinite; break;
            case Op::union_: r = inf_at(pre[0]) || inf_at(pre[1]); break;
            case Op::inter: r = inf_at(pre[0]) && inf_at(pre[1]); break;
            case Op::comp: r = !inf_at(pre[0]); break;
            case Op::add: r = (inf_at(pre[0]) && nonempty(pre[1])) || (inf_at(pre[1]) && nonempty(pre[0])); break;
            case Op::sub: r = inf_at(pre[0]) && has_finite(pre[1]); break;
            default: throw FragmentError(std::string("vector search cannot handle ") + op_keyword(g.op));
            }
        } else {
            const Point x = decode(i, key);
            switch (g.op) {
            case Op::input:
                r = !g.vvalue.infinite;
                for (std::size_t k = 0; k < m_ && r; ++k)
                    r = g.vvalue.coords[k] == x[k];
                break;
            case Op::union_: r = finite_at(pre[0], x) || finite_at(pre[1], x); break;
            case Op::inter: r = finite_at(pre[0], x) && finite_at(pre[1], x); break;
            case Op::comp: r = !finite_at(pre[0], x); break;
            case Op::add: {
                Point u(m_, 0), rest(m_);
                do {
                    for (std::size_t k = 0; k < m_; ++k)
                        rest[k] = x[k] - u[k];
                    r = finite_at(pre[0], u) && finite_at(pre[1], rest);
                } while (!r && detail::next_point(u, x));
                break;
            }
            case Op::sub: {
                const std::size_t lim = std::max(cutoff_[pre[0]], cutoff_[pre[1]]);
                Point y(m_, 0), s(m_);
                const Point hi(m_, lim);
                do {
                    if (!finite_at(pre[1], y))
                        continue;
                    for (std::size_t k = 0; k < m_; ++k)
                        s[k] = x[k] + y[k];
                    r = finite_at(pre[0], s);
                } while (!r && detail::next_point(y, hi));
                break;
            }
            default: throw FragmentError(std::string("vector search cannot handle ") + op_keyword(g.op));
            }
        }
        if (++stats_.memo_entries > budget_.max_memo_entries)
            throw BudgetExceeded("vector search exceeds memo budget");
        memo_[i].emplace(key, r);
        return r;
    }

    Circuit c_;
    Budget budget_;
    std::size_t m_;
    std::vector<std::size_t> cutoff_;
    std::vector<std::unordered_map<std::size_t, bool>> memo_;
    SearchStats stats_;
};

inline bool search_member(const Circuit& c, const Natural& x, CutoffMode mode = CutoffMode::structural,
                          const Budget& budget = {})
{
    ScalarSearch s(c, mode, budget);
    return s.member(x);
}

inline bool search_member(const Circuit& c, const ExtVector& x, CutoffMode mode = CutoffMode::structural,
                          const Budget& budget = {})
{
    VectorSearch s(c, mode, budget);
    return s.member(x);
}

} // namespace setcirc
