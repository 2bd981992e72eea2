#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "setcirc/budget.hpp"
#include "setcirc/circuit.hpp"
#include "setcirc/error.hpp"
#include "setcirc/exact_set.hpp"
#include "setcirc/natural.hpp"

namespace setcirc {

namespace detail {

/// (n+1)^m, or nullopt when it exceeds `limit`.
inline std::optional<std::size_t> grid_size(std::size_t dim, std::size_t cutoff, std::size_t limit)
{
    std::size_t cells = 1;
    for (std::size_t i = 0; i < dim; ++i) {
        if (cells > limit / (cutoff + 1))
            return std::nullopt;
        cells *= cutoff + 1;
    }
    return cells > limit ? std::nullopt : std::optional<std::size_t>(cells);
}

/// Steps `p` through [0, hi]^m in odometer order; false once wrapped around.
inline bool next_point(std::vector<std::size_t>& p, std::span<const std::size_t> hi)
{
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] < hi[i]) {
            ++p[i];
            return true;
        }
        p[i] = 0;
    }
    return false;
}

} // namespace detail

/// Subset of N^m ∪ {∞} under per-coordinate clamping: a finite vector z is a member iff the
/// cell (min(z_1, n), ..., min(z_m, n)) is set. Coordinate value n stands for "n or more".
class VecSetRep {
public:
    VecSetRep(std::size_t dim, std::size_t cutoff, std::vector<bool> cells, bool inf)
        : dim_(dim), cutoff_(cutoff), cells_(std::move(cells)), inf_(inf)
    {
        if (dim_ == 0 || cutoff_ == 0)
            throw DomainError("VecSetRep needs dim >= 1 and cutoff >= 1");
        auto expect = detail::grid_size(dim_, cutoff_, std::numeric_limits<std::size_t>::max() / 2);
        if (!expect || cells_.size() != *expect)
            throw DomainError("VecSetRep grid has the wrong number of cells");
    }

    static VecSetRep empty(std::size_t dim, std::size_t cutoff, const Budget& budget = {})
    {
        return VecSetRep(dim, cutoff, std::vector<bool>(checked_cells(dim, cutoff, budget), false), false);
    }
    static VecSetRep from_finite(const ExactSet<ExtVector>& s, std::size_t dim, std::size_t cutoff,
                                 const Budget& budget = {})
    {
        auto r = empty(dim, cutoff, budget);
        for (const auto& x : s) {
            if (x.infinite) {
                r.inf_ = true;
                continue;
            }
            std::vector<std::size_t> p(dim);
            for (std::size_t i = 0; i < dim; ++i) {
                if (x.coords.at(i) >= cutoff)
                    throw DomainError("vector " + to_string(x) + " is not below cutoff " + std::to_string(cutoff));
                p[i] = static_cast<std::size_t>(x.coords[i]);
            }
            r.cells_[r.index(p)] = true;
        }
        return r;
    }

    static std::size_t checked_cells(std::size_t dim, std::size_t cutoff, const Budget& budget)
    {
        auto cells = detail::grid_size(dim, cutoff, budget.max_grid_cells);
        if (!cells)
            throw BudgetExceeded("grid (" + std::to_string(cutoff) + "+1)^" + std::to_string(dim) +
                                 " exceeds cell budget " + std::to_string(budget.max_grid_cells));
        return *cells;
    }

    std::size_t dim() const noexcept { return dim_; }
    std::size_t cutoff() const noexcept { return cutoff_; }
    bool inf() const noexcept { return inf_; }
    const std::vector<bool>& cells() const noexcept { return cells_; }

    /// Lookup of a finite point; coordinates are clamped at the cutoff.
    bool at(std::span<const std::size_t> p) const
    {
        std::size_t idx = 0, stride = 1;
        for (std::size_t i = 0; i < dim_; ++i) {
            idx += std::min(p[i], cutoff_) * stride;
            stride *= cutoff_ + 1;
        }
        return cells_[idx];
    }

    bool member(const ExtVector& x) const
    {
        if (x.infinite)
            return inf_;
        if (x.dim() != dim_)
            throw ValidationError(Errc::dimension_mismatch,
                                  "query has " + std::to_string(x.dim()) + " coordinates, set has " +
                                      std::to_string(dim_));
        std::vector<std::size_t> p(dim_);
        for (std::size_t i = 0; i < dim_; ++i)
            p[i] = x.coords[i] >= cutoff_ ? cutoff_ : static_cast<std::size_t>(x.coords[i]);
        return at(p);
    }

    bool has_finite() const { return std::find(cells_.begin(), cells_.end(), true) != cells_.end(); }
    bool is_empty() const { return !inf_ && !has_finite(); }

    /// Finite members with every coordinate strictly below the cutoff.
    std::vector<ExtVector> below() const
    {
        std::vector<ExtVector> out;
        for_each_cell([&](std::span<const std::size_t> p, bool in) {
            if (!in || std::any_of(p.begin(), p.end(), [&](std::size_t v) { return v == cutoff_; }))
                return;
            std::vector<Natural> c(p.begin(), p.end());
            out.push_back(ExtVector::of(std::move(c)));
        });
        return out;
    }

    /// Cells with at least one saturated coordinate that are members, as "n+" patterns.
    std::vector<std::string> saturated_patterns() const
    {
        std::vector<std::string> out;
        for_each_cell([&](std::span<const std::size_t> p, bool in) {
            if (!in || std::none_of(p.begin(), p.end(), [&](std::size_t v) { return v == cutoff_; }))
                return;
            std::string s = "(";
            for (std::size_t i = 0; i < p.size(); ++i) {
                if (i)
                    s += ',';
                s += std::to_string(p[i]);
                if (p[i] == cutoff_)
                    s += '+';
            }
            out.push_back(s + ")");
        });
        return out;
    }

    template <class F>
    void for_each_cell(F&& f) const
    {
        std::vector<std::size_t> p(dim_, 0);
        std::vector<std::size_t> hi(dim_, cutoff_);
        std::size_t idx = 0;
        do {
            f(std::span<const std::size_t>(p), static_cast<bool>(cells_[idx]));
            ++idx;
        } while (detail::next_point(p, hi));
    }

    /// Same represented set, even when cutoffs differ.
    bool same_set(const VecSetRep& other) const
    {
        if (dim_ != other.dim_ || inf_ != other.inf_)
            return false;
        std::size_t n = std::max(cutoff_, other.cutoff_);
        std::vector<std::size_t> p(dim_, 0), hi(dim_, n);
        do {
            if (at(p) != other.at(p))
                return false;
        } while (detail::next_point(p, hi));
        return true;
    }

    friend bool operator==(const VecSetRep&, const VecSetRep&) = default;

private:
    std::size_t index(std::span<const std::size_t> p) const
    {
        std::size_t idx = 0, stride = 1;
        for (std::size_t i = 0; i < dim_; ++i) {
            idx += p[i] * stride;
            stride *= cutoff_ + 1;
        }
        return idx;
    }

    std::size_t dim_;
    std::size_t cutoff_;
    std::vector<bool> cells_;
    bool inf_;
};

/// Applies `op` ∈ {∪, ∩, ¬, +, −} with result cutoff `result_cutoff`; every result cell is evaluated
/// at its representative point with clamped operand lookups. Complement is relative to N^m ∪ {∞}.
inline VecSetRep vecrep_apply(Op op, const VecSetRep& a, const VecSetRep* b, std::size_t result_cutoff,
                              const Budget& budget = {})
{
    if (result_cutoff == 0)
        throw DomainError("result cutoff must be >= 1");
    if (op_arity(op) == 2 && b == nullptr)
        throw DomainError(std::string(op_keyword(op)) + " needs two operands");
    if (b && b->dim() != a.dim())
        throw ValidationError(Errc::dimension_mismatch, "operands of different dimension");

    const std::size_t m = a.dim();
    const std::size_t n = result_cutoff;
    std::vector<bool> out(VecSetRep::checked_cells(m, n, budget), false);
    bool inf = false;
    std::uint64_t steps = 0;
    auto spend = [&](std::uint64_t k) {
        steps += k;
        if (steps > budget.max_steps)
            throw BudgetExceeded("clamped vector operation exceeds step budget");
    };

    std::vector<std::size_t> x(m, 0);
    const std::vector<std::size_t> top(m, n);
    std::size_t idx = 0;

    switch (op) {
    case Op::comp:
        do
            out[idx++] = !a.at(x);
        while (detail::next_point(x, top));
        inf = !a.inf();
        break;
    case Op::union_:
        do
            out[idx++] = a.at(x) || b->at(x);
        while (detail::next_point(x, top));
        inf = a.inf() || b->inf();
        break;
    case Op::inter:
        do
            out[idx++] = a.at(x) && b->at(x);
        while (detail::next_point(x, top));
        inf = a.inf() && b->inf();
        break;
    case Op::add: {
        // x = u + v with u from the sparser operand; only its members in [0, n]^m are tried
        auto members = [&](const VecSetRep& s) {
            std::vector<std::vector<std::size_t>> pts;
            std::vector<std::size_t> p(m, 0);
            do {
                spend(1);
                if (s.at(p))
                    pts.push_back(p);
            } while (detail::next_point(p, top));
            return pts;
        };
        auto ma = members(a), mb = members(*b);
        const bool a_sparse = ma.size() <= mb.size();
        const auto& us = a_sparse ? ma : mb;
        const VecSetRep& other = a_sparse ? *b : a;
        std::vector<std::size_t> rest(m);
        do {
            bool in = false;
            for (const auto& u : us) {
                bool below = true;
                for (std::size_t i = 0; i < m && below; ++i)
                    below = u[i] <= x[i];
                if (!below)
                    continue;
                for (std::size_t i = 0; i < m; ++i)
                    rest[i] = x[i] - u[i];
                if (other.at(rest)) {
                    in = true;
                    break;
                }
            }
            spend(us.size() + 1);
            out[idx++] = in;
        } while (detail::next_point(x, top));
        inf = (a.inf() && !b->is_empty()) || (b->inf() && !a.is_empty());
        break;
    }
    case Op::sub: {
        // x in A - B iff x + y in A for some finite y in B; coordinates of y beyond
        // max(nA, nB) clamp identically on both sides.
        const std::size_t lim = std::max(a.cutoff(), b->cutoff());
        const std::vector<std::size_t> yhi(m, lim);
        std::vector<std::vector<std::size_t>> bs;
        std::vector<std::size_t> y(m, 0);
        do {
            spend(1);
            if (b->at(y))
                bs.push_back(y);
        } while (detail::next_point(y, yhi));
        std::vector<std::size_t> s(m);
        do {
            bool in = false;
            for (const auto& yy : bs) {
                for (std::size_t i = 0; i < m; ++i)
                    s[i] = x[i] + yy[i];
                if (a.at(s)) {
                    in = true;
                    break;
                }
            }
            spend(bs.size() + 1);
            out[idx++] = in;
        } while (detail::next_point(x, top));
        inf = a.inf() && b->has_finite();
        break;
    }
    default:
        throw FragmentError(std::string("vecrep_apply does not support ") + op_keyword(op));
    }
    return VecSetRep(m, n, std::move(out), inf);
}

inline bool vecrep_member(const VecSetRep& a, const ExtVector& x) { return a.member(x); }

/// Members with all coordinates <= up_to, then sat/inf annotations.
inline std::string describe(const VecSetRep& a, std::size_t up_to)
{
    std::string out;
    std::vector<std::size_t> p(a.dim(), 0), hi(a.dim(), up_to);
    do {
        if (a.at(p)) {
            if (!out.empty())
                out += ' ';
            out += '(';
            for (std::size_t i = 0; i < p.size(); ++i) {
                if (i)
                    out += ',';
                out += std::to_string(p[i]);
            }
            out += ')';
        }
    } while (detail::next_point(p, hi));
    auto sat = a.saturated_patterns();
    if (!out.empty())
        out += ' ';
    out += "sat=";
    if (sat.empty())
        out += "none";
    for (std::size_t i = 0; i < sat.size(); ++i)
        out += (i ? ";" : "") + sat[i];
    out += a.inf() ? " inf=in" : " inf=out";
    return out;
}

} // namespace setcirc
