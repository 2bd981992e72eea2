#pragma once

// Brute-force reference evaluators over a finite window. They share no code with the clamped
// engines or the cutoff recurrences: every gate is evaluated pointwise from the operation
// definitions on [0, W] (resp. [0, W]^m), looking beyond W only through the assumption that
// each set is constant there, which is checked on [W/2, W] for every gate.

#include <cstddef>
#include <string>
#include <vector>

#include "setcirc/circuit.hpp"
#include "setcirc/error.hpp"
#include "setcirc/vec_rep.hpp"

namespace setcirc {

/// The window was too small: some gate is not constant on [W/2, W].
class OracleInconclusive : public Error {
public:
    using Error::Error;
};

struct WindowSet {
    std::vector<bool> in; // membership of 0..W
    bool at(std::size_t z) const { return in[std::min(z, in.size() - 1)]; }
};

/// I(g) ∩ [0, W] for every gate of a scalar circuit.
inline std::vector<WindowSet> window_eval(const Circuit& c, std::size_t w)
{
    if (c.is_vector())
        throw FragmentError("window_eval needs a scalar circuit");
    if (w < 4)
        throw DomainError("window too small");
    std::vector<WindowSet> s(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        const Gate& g = c.gate_at(i);
        auto p = c.preds_of(i);
        std::vector<bool> r(w + 1, false);
        auto A = [&](std::size_t z) { return s[p[0]].at(z); };
        auto B = [&](std::size_t z) { return s[p[1]].at(z); };
        auto nonempty = [&](std::size_t k, bool nonzero) {
            for (std::size_t z = nonzero ? 1 : 0; z <= w; ++z)
                if (s[p[k]].in[z])
                    return true;
            return false;
        };
        switch (g.op) {
        case Op::input:
            if (g.value > w / 2)
                throw OracleInconclusive("input label beyond window");
            r[static_cast<std::size_t>(g.value)] = true;
            break;
        case Op::union_:
            for (std::size_t z = 0; z <= w; ++z)
                r[z] = A(z) || B(z);
            break;
        case Op::inter:
            for (std::size_t z = 0; z <= w; ++z)
                r[z] = A(z) && B(z);
            break;
        case Op::comp:
            for (std::size_t z = 0; z <= w; ++z)
                r[z] = !A(z);
            break;
        case Op::add:
            for (std::size_t z = 0; z <= w; ++z)
                for (std::size_t a = 0; a <= z && !r[z]; ++a)
                    r[z] = A(a) && B(z - a);
            break;
        case Op::mul:
            r[0] = (A(0) && nonempty(1, false)) || (B(0) && nonempty(0, false));
            for (std::size_t z = 1; z <= w; ++z)
                for (std::size_t a = 1; a <= z && !r[z]; ++a)
                    r[z] = z % a == 0 && A(a) && B(z / a);
            break;
        case Op::div:
        {
            // divisors b with z*b inside the window; beyond it A is read as A(W)
            std::vector<bool> b_from(w + 2, false);
            b_from[w + 1] = B(w);
            for (std::size_t b = w + 1; b-- > 1;)
                b_from[b] = b_from[b + 1] || B(b);
            r[0] = A(0) && nonempty(1, true);
            for (std::size_t z = 1; z <= w; ++z) {
                for (std::size_t b = 1; b * z <= w && !r[z]; ++b)
                    r[z] = B(b) && A(b * z);
                if (!r[z])
                    r[z] = A(w) && b_from[w / z + 1];
            }
            break;
        }
        case Op::sub: throw FragmentError("sub is a vector operation");
        }
        bool tail = r[w];
        for (std::size_t z = w / 2; z <= w; ++z)
            if (r[z] != tail)
                throw OracleInconclusive("gate " + std::to_string(g.id) + " not constant on [" +
                                         std::to_string(w / 2) + ", " + std::to_string(w) + "]");
        s[i].in = std::move(r);
    }
    return s;
}

struct WindowVecSet {
    std::size_t dim = 1;
    std::size_t w = 1;
    std::vector<bool> cells; // [0, W]^m, coordinate i has stride (W+1)^i
    bool inf = false;

    std::size_t index(const std::vector<std::size_t>& p) const
    {
        std::size_t idx = 0, stride = 1;
        for (std::size_t k = 0; k < dim; ++k) {
            idx += std::min(p[k], w) * stride;
            stride *= w + 1;
        }
        return idx;
    }
    bool at(const std::vector<std::size_t>& p) const { return cells[index(p)]; }
    bool any_finite() const { return std::find(cells.begin(), cells.end(), true) != cells.end(); }
};

/// I(g) ∩ ([0, W]^m ∪ {∞}) for every gate of a vector circuit.
inline std::vector<WindowVecSet> window_eval_vector(const Circuit& c, std::size_t w,
                                                    std::size_t max_cells = 4'000'000)
{
    if (!c.is_vector())
        throw FragmentError("window_eval_vector needs a vector circuit");
    const std::size_t m = c.dim();
    std::size_t cells = 1;
    for (std::size_t k = 0; k < m; ++k) {
        cells *= w + 1;
        if (cells > max_cells)
            throw BudgetExceeded("oracle grid too large");
    }
    const std::vector<std::size_t> top(m, w);
    std::vector<WindowVecSet> s(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        const Gate& g = c.gate_at(i);
        auto p = c.preds_of(i);
        WindowVecSet r{m, w, std::vector<bool>(cells, false), false};
        std::vector<std::size_t> x(m, 0);
        switch (g.op) {
        case Op::input:
            if (g.vvalue.infinite) {
                r.inf = true;
            } else {
                for (std::size_t k = 0; k < m; ++k) {
                    if (g.vvalue.coords[k] > w / 2)
                        throw OracleInconclusive("input label beyond window");
                    x[k] = static_cast<std::size_t>(g.vvalue.coords[k]);
                }
                r.cells[r.index(x)] = true;
            }
            break;
        case Op::union_:
        case Op::inter:
        case Op::comp: {
            const auto& a = s[p[0]];
            const auto* b = p.size() > 1 ? &s[p[1]] : nullptr;
            for (std::size_t j = 0; j < cells; ++j)
                r.cells[j] = g.op == Op::comp ? !a.cells[j]
                             : g.op == Op::union_ ? (a.cells[j] || b->cells[j])
                                                  : (a.cells[j] && b->cells[j]);
            r.inf = g.op == Op::comp ? !a.inf : g.op == Op::union_ ? (a.inf || b->inf) : (a.inf && b->inf);
            break;
        }
        case Op::add: {
            const auto& a = s[p[0]];
            const auto& b = s[p[1]];
            std::vector<std::size_t> u(m), rest(m);
            do {
                bool in = false;
                std::fill(u.begin(), u.end(), 0);
                do {
                    for (std::size_t k = 0; k < m; ++k)
                        rest[k] = x[k] - u[k];
                    in = a.at(u) && b.at(rest);
                } while (!in && detail::next_point(u, x));
                r.cells[r.index(x)] = in;
            } while (detail::next_point(x, top));
            r.inf = (a.inf && (b.inf || b.any_finite())) || (b.inf && (a.inf || a.any_finite()));
            break;
        }
        case Op::sub: {
            const auto& a = s[p[0]];
            const auto& b = s[p[1]];
            std::vector<std::size_t> y(m), sum(m);
            do {
                bool in = false;
                std::fill(y.begin(), y.end(), 0);
                do {
                    if (!b.at(y))
                        continue;
                    for (std::size_t k = 0; k < m; ++k)
                        sum[k] = x[k] + y[k];
                    in = a.at(sum);
                } while (!in && detail::next_point(y, top));
                r.cells[r.index(x)] = in;
            } while (detail::next_point(x, top));
            r.inf = a.inf && b.any_finite();
            break;
        }
        default: throw FragmentError(std::string("window_eval_vector cannot apply ") + op_keyword(g.op));
        }
        // along every axis, coordinates in [W/2, W] must agree with W
        std::fill(x.begin(), x.end(), 0);
        do {
            for (std::size_t k = 0; k < m; ++k)
                if (x[k] >= w / 2) {
                    auto q = x;
                    q[k] = w;
                    if (r.at(q) != r.at(x))
                        throw OracleInconclusive("vector gate " + std::to_string(g.id) +
                                                 " not constant beyond W/2 along an axis");
                }
        } while (detail::next_point(x, top));
        s[i] = std::move(r);
    }
    return s;
}

} // namespace setcirc
