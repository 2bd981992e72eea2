#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "setcirc/error.hpp"

namespace setcirc {

/// Arbitrary-precision natural number. Negative values never escape the library.
using Natural = boost::multiprecision::cpp_int;

/// Number of bits of k: floor(log2 k) + 1, with bits(0) = 1.
inline std::size_t bit_length(const Natural& k)
{
    if (k <= 0)
        return 1;
    return static_cast<std::size_t>(boost::multiprecision::msb(k)) + 1;
}

inline std::string to_string(const Natural& n) { return n.str(); }

/// Parses a decimal natural; rejects signs, whitespace and empty input.
inline std::optional<Natural> parse_natural(std::string_view s)
{
    if (s.empty())
        return std::nullopt;
    Natural v = 0;
    for (char ch : s) {
        if (ch < '0' || ch > '9')
            return std::nullopt;
        v *= 10;
        v += ch - '0';
    }
    return v;
}

inline std::optional<std::uint64_t> to_u64(const Natural& n)
{
    if (n < 0 || n > std::numeric_limits<std::uint64_t>::max())
        return std::nullopt;
    return static_cast<std::uint64_t>(n);
}

/// Converts to std::size_t or throws BudgetExceeded naming `what`.
inline std::size_t to_size_checked(const Natural& n, const char* what)
{
    auto v = to_u64(n);
    if (!v || *v > std::numeric_limits<std::size_t>::max() / 4)
        throw BudgetExceeded(std::string(what) + " too large to materialize: " + to_string(n));
    return static_cast<std::size_t>(*v);
}

/// Element of N^m extended by a single absorbing point at infinity.
struct ExtVector {
    bool infinite = false;
    std::vector<Natural> coords;

    static ExtVector inf() { return ExtVector{true, {}}; }
    static ExtVector zero(std::size_t dim) { return ExtVector{false, std::vector<Natural>(dim, 0)}; }
    static ExtVector of(std::vector<Natural> c) { return ExtVector{false, std::move(c)}; }

    std::size_t dim() const noexcept { return coords.size(); }

    friend bool operator==(const ExtVector& a, const ExtVector& b)
    {
        if (a.infinite || b.infinite)
            return a.infinite == b.infinite;
        return a.coords == b.coords;
    }

    /// Finite vectors ordered lexicographically (shorter first); infinity is the greatest element.
    friend bool operator<(const ExtVector& a, const ExtVector& b)
    {
        if (a.infinite)
            return false;
        if (b.infinite)
            return true;
        if (a.coords.size() != b.coords.size())
            return a.coords.size() < b.coords.size();
        return a.coords < b.coords;
    }
};

/// "inf" or comma-separated decimal coordinates, e.g. "1,0".
inline std::string to_string(const ExtVector& v)
{
    if (v.infinite)
        return "inf";
    std::string out;
    for (std::size_t i = 0; i < v.coords.size(); ++i) {
        if (i)
            out += ',';
        out += v.coords[i].str();
    }
    return out;
}

inline std::optional<ExtVector> parse_ext_vector(std::string_view s)
{
    if (s == "inf")
        return ExtVector::inf();
    ExtVector v;
    std::size_t start = 0;
    while (true) {
        auto comma = s.find(',', start);
        auto part = s.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        auto n = parse_natural(part);
        if (!n)
            return std::nullopt;
        v.coords.push_back(*n);
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return v;
}

} // namespace setcirc
