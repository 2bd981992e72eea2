#pragma once

#include <optional>
#include <set>
#include <string>

#include "setcirc/circuit.hpp"
#include "setcirc/error.hpp"
#include "setcirc/natural.hpp"

namespace setcirc {

/// Finite set of naturals or of extended vectors.
template <class T>
using ExactSet = std::set<T>;

/// Element-wise arithmetic per element type. Each returns nullopt where the result is undefined.
template <class T>
struct ElementOps;

template <>
struct ElementOps<Natural> {
    static std::optional<Natural> apply(Op op, const Natural& a, const Natural& b)
    {
        switch (op) {
        case Op::add: return a + b;
        case Op::mul: return a * b;
        case Op::div:
            // c with a = c * b, b != 0
            if (b == 0 || a % b != 0)
                return std::nullopt;
            return a / b;
        default: throw FragmentError(std::string("operation ") + op_keyword(op) + " undefined on naturals");
        }
    }
};

template <>
struct ElementOps<ExtVector> {
    static std::optional<ExtVector> apply(Op op, const ExtVector& a, const ExtVector& b)
    {
        switch (op) {
        case Op::add: {
            if (a.infinite || b.infinite)
                return ExtVector::inf();
            if (a.dim() != b.dim())
                throw ValidationError(Errc::dimension_mismatch, "adding vectors of different dimension");
            ExtVector r = a;
            for (std::size_t i = 0; i < r.dim(); ++i)
                r.coords[i] += b.coords[i];
            return r;
        }
        case Op::sub: {
            // inf - m = inf; m - inf and inf - inf undefined
            if (b.infinite)
                return std::nullopt;
            if (a.infinite)
                return ExtVector::inf();
            if (a.dim() != b.dim())
                throw ValidationError(Errc::dimension_mismatch, "subtracting vectors of different dimension");
            ExtVector r = a;
            for (std::size_t i = 0; i < r.dim(); ++i) {
                if (r.coords[i] < b.coords[i])
                    return std::nullopt;
                r.coords[i] -= b.coords[i];
            }
            return r;
        }
        default: throw FragmentError(std::string("operation ") + op_keyword(op) + " undefined on vectors");
        }
    }
};

/// Exact element-wise result of a binary operation (never complement).
template <class T>
ExactSet<T> exact_apply(Op op, const ExactSet<T>& a, const ExactSet<T>& b, std::size_t max_size = 1'000'000)
{
    ExactSet<T> out;
    auto check = [&] {
        if (out.size() > max_size)
            throw BudgetExceeded("exact set exceeds " + std::to_string(max_size) + " elements");
    };
    switch (op) {
    case Op::union_:
        out = a;
        out.insert(b.begin(), b.end());
        check();
        return out;
    case Op::inter:
        for (const auto& x : a)
            if (b.count(x))
                out.insert(x);
        return out;
    case Op::comp:
    case Op::input:
        throw FragmentError(std::string("exact_apply cannot apply ") + op_keyword(op));
    default:
        for (const auto& x : a)
            for (const auto& y : b) {
                if (auto r = ElementOps<T>::apply(op, x, y)) {
                    out.insert(std::move(*r));
                    check();
                }
            }
        return out;
    }
}

inline std::string element_string(const Natural& x) { return x.str(); }
inline std::string element_string(const ExtVector& x) { return x.infinite ? "inf" : "(" + to_string(x) + ")"; }

template <class T>
std::string to_string(const ExactSet<T>& s)
{
    std::string out = "{";
    bool first = true;
    for (const auto& x : s) {
        if (!first)
            out += ", ";
        out += element_string(x);
        first = false;
    }
    return out + "}";
}

} // namespace setcirc
