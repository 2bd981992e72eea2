#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "setcirc/budget.hpp"
#include "setcirc/circuit.hpp"
#include "setcirc/error.hpp"
#include "setcirc/exact_set.hpp"
#include "setcirc/natural.hpp"

namespace setcirc {

/// Finite-or-cofinite subset of N: z is a member iff bits[min(z, cutoff)].
/// Only meaningful together with a cutoff that is valid for the set it stands for.
class NatSetRep {
public:
    NatSetRep(std::size_t cutoff, std::vector<bool> bits) : cutoff_(cutoff), bits_(std::move(bits))
    {
        if (cutoff_ == 0)
            throw DomainError("NatSetRep cutoff must be >= 1");
        if (bits_.size() != cutoff_ + 1)
            throw DomainError("NatSetRep bitmap must cover [0, cutoff]");
    }

    static NatSetRep empty(std::size_t cutoff) { return NatSetRep(cutoff, std::vector<bool>(cutoff + 1, false)); }
    static NatSetRep full(std::size_t cutoff) { return NatSetRep(cutoff, std::vector<bool>(cutoff + 1, true)); }
    static NatSetRep from_finite(const ExactSet<Natural>& s, std::size_t cutoff)
    {
        auto r = empty(cutoff);
        for (const auto& x : s) {
            if (x >= cutoff)
                throw DomainError("element " + x.str() + " is not below cutoff " + std::to_string(cutoff));
            r.bits_[static_cast<std::size_t>(x)] = true;
        }
        return r;
    }

    std::size_t cutoff() const noexcept { return cutoff_; }
    const std::vector<bool>& bits() const noexcept { return bits_; }
    bool tail() const noexcept { return bits_[cutoff_]; }

    bool at(std::size_t z) const noexcept { return bits_[std::min(z, cutoff_)]; }
    bool member(const Natural& z) const
    {
        if (z >= cutoff_)
            return tail();
        return bits_[static_cast<std::size_t>(z)];
    }

    bool is_empty() const { return std::find(bits_.begin(), bits_.end(), true) == bits_.end(); }

    /// Members strictly below the cutoff, ascending.
    std::vector<std::size_t> members_below() const
    {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < cutoff_; ++i)
            if (bits_[i])
                out.push_back(i);
        return out;
    }

    /// Smallest member, if any (cutoff itself when only the tail is in).
    std::optional<std::size_t> min_member() const
    {
        for (std::size_t i = 0; i <= cutoff_; ++i)
            if (bits_[i])
                return i;
        return std::nullopt;
    }

    /// Same set under the finite-or-cofinite reading, regardless of cutoffs.
    bool same_set(const NatSetRep& other) const
    {
        std::size_t n = std::max(cutoff_, other.cutoff_);
        for (std::size_t z = 0; z <= n; ++z)
            if (at(z) != other.at(z))
                return false;
        return true;
    }

    friend bool operator==(const NatSetRep&, const NatSetRep&) = default;

private:
    std::size_t cutoff_;
    std::vector<bool> bits_;
};

/// Applies `op` to clamped operands, producing a representation with cutoff `result_cutoff`.
/// Each result cell c is evaluated at the representative value c; operand lookups clamp at their own cutoffs.
/// `b` may be null for complement. Multiplication is rejected: products of cofinite sets are not cofinite.
inline NatSetRep natrep_apply(Op op, const NatSetRep& a, const NatSetRep* b, std::size_t result_cutoff,
                              const Budget& budget = {})
{
    if (result_cutoff == 0)
        throw DomainError("result cutoff must be >= 1");
    if (result_cutoff + 1 > budget.max_grid_cells)
        throw BudgetExceeded("cutoff " + std::to_string(result_cutoff) + " exceeds grid budget");
    if (op_arity(op) == 2 && b == nullptr)
        throw DomainError(std::string(op_keyword(op)) + " needs two operands");

    const std::size_t n = result_cutoff;
    std::vector<bool> out(n + 1, false);
    std::uint64_t steps = 0;
    auto spend = [&](std::uint64_t k) {
        steps += k;
        if (steps > budget.max_steps)
            throw BudgetExceeded("clamped scalar operation exceeds step budget");
    };

    switch (op) {
    case Op::comp:
        for (std::size_t c = 0; c <= n; ++c)
            out[c] = !a.at(c);
        break;
    case Op::union_:
        for (std::size_t c = 0; c <= n; ++c)
            out[c] = a.at(c) || b->at(c);
        break;
    case Op::inter:
        for (std::size_t c = 0; c <= n; ++c)
            out[c] = a.at(c) && b->at(c);
        break;
    case Op::add: {
        // c in A+B iff some explicit member x < cutoff of one operand has c-x in the other,
        // or that operand's tail is in and c - cutoff reaches the other's smallest member.
        const NatSetRep* x = &a;
        const NatSetRep* y = b;
        auto xs = x->members_below();
        auto ys = y->members_below();
        if (ys.size() < xs.size()) {
            std::swap(x, y);
            std::swap(xs, ys);
        }
        auto ymin = y->min_member();
        for (std::size_t c = 0; c <= n; ++c) {
            bool in = false;
            for (std::size_t v : xs) {
                if (v > c)
                    break;
                if (y->at(c - v)) {
                    in = true;
                    break;
                }
            }
            spend(xs.size() + 1);
            if (!in && x->tail() && ymin && c >= x->cutoff() && c - x->cutoff() >= *ymin)
                in = true;
            out[c] = in;
        }
        break;
    }
    case Op::div: {
        std::size_t nb = b->cutoff();
        std::size_t na = a.cutoff();
        // b beyond max(nB, ceil(nA/c)) sees the same clamped lookups on both sides.
        for (std::size_t c = 0; c <= n; ++c) {
            bool in = false;
            if (c == 0) {
                if (a.at(0))
                    for (std::size_t d = 1; d <= nb && !in; ++d)
                        in = b->at(d);
                spend(nb);
            } else {
                std::size_t limit = std::max(nb, (na + c - 1) / c);
                for (std::size_t d = 1; d <= limit && !in; ++d) {
                    std::size_t prod = (d > na / c + 1) ? na : c * d;
                    in = b->at(d) && a.at(prod);
                }
                spend(limit);
            }
            out[c] = in;
        }
        break;
    }
    default:
        throw FragmentError(std::string("natrep_apply does not support ") + op_keyword(op));
    }
    return NatSetRep(n, std::move(out));
}

inline bool natrep_member(const NatSetRep& a, const Natural& z) { return a.member(z); }

/// "0 1 5 ... tail=in" style listing of members up to `up_to`.
inline std::string describe(const NatSetRep& a, std::size_t up_to)
{
    std::string out;
    for (std::size_t z = 0; z <= up_to; ++z)
        if (a.at(z)) {
            if (!out.empty())
                out += ' ';
            out += std::to_string(z);
        }
    if (!out.empty())
        out += ' ';
    if (up_to >= a.cutoff() && a.tail())
        out += "... ";
    out += a.tail() ? "tail=in" : "tail=out";
    return out;
}

} // namespace setcirc
