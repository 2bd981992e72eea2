#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "setcirc/error.hpp"
#include "setcirc/natural.hpp"

namespace setcirc {

inline Natural gcd(Natural a, Natural b)
{
    while (b != 0) {
        Natural r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

inline constexpr std::uint64_t default_sieve_limit = 10'000'000;
inline constexpr std::uint64_t default_trial_limit = 10'000'000;

/// All primes <= n by the sieve of Eratosthenes.
inline std::vector<std::uint64_t> primes_upto(std::uint64_t n, std::uint64_t limit = default_sieve_limit)
{
    if (n > limit)
        throw BudgetExceeded("primes_upto(" + std::to_string(n) + ") exceeds sieve limit " + std::to_string(limit));
    std::vector<std::uint64_t> primes;
    if (n < 2)
        return primes;
    std::vector<bool> composite(n + 1, false);
    for (std::uint64_t i = 2; i <= n; ++i) {
        if (composite[i])
            continue;
        primes.push_back(i);
        for (std::uint64_t j = i * i; j <= n; j += i)
            composite[j] = true;
    }
    return primes;
}

/// The first `count` primes (count 0 gives an empty list).
inline std::vector<std::uint64_t> first_primes(std::size_t count)
{
    std::uint64_t bound = 16;
    while (true) {
        auto p = primes_upto(bound);
        if (p.size() >= count) {
            p.resize(count);
            return p;
        }
        bound *= 2;
    }
}

/// Prime-exponent pairs, primes strictly ascending.
struct Factorization {
    std::vector<std::pair<Natural, std::uint64_t>> factors;

    Natural product() const
    {
        Natural p = 1;
        for (const auto& [q, e] : factors)
            for (std::uint64_t i = 0; i < e; ++i)
                p *= q;
        return p;
    }
    friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// Trial division. Throws BudgetExceeded when a remaining cofactor could hide a factor above `trial_limit`.
inline Factorization factorize(Natural n, std::uint64_t trial_limit = default_trial_limit)
{
    if (n < 1)
        throw DomainError("factorize needs n >= 1");
    Factorization f;
    auto take = [&](const Natural& d) {
        std::uint64_t e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        if (e)
            f.factors.emplace_back(d, e);
    };
    take(2);
    Natural d = 3;
    while (d * d <= n) {
        if (d > trial_limit)
            throw BudgetExceeded("factorization needs trial divisors beyond " + std::to_string(trial_limit));
        take(d);
        d += 2;
    }
    if (n > 1)
        f.factors.emplace_back(n, 1);
    return f;
}

/// Pairwise coprime base numbers >= 2 with an exponent vector for every source number.
struct GcdFreeBasis {
    std::vector<Natural> base;                       // ascending
    std::vector<Natural> sources;                    // as given
    std::vector<std::vector<std::uint64_t>> exponents; // exponents[i][j]: power of base[j] in sources[i]
};

/// Exponents of n over `base`, or nullopt if n is not a product of powers of the base.
inline std::optional<std::vector<std::uint64_t>> exponents_over_basis(Natural n, const std::vector<Natural>& base)
{
    if (n < 1)
        throw DomainError("exponents_over_basis needs n >= 1");
    std::vector<std::uint64_t> e(base.size(), 0);
    for (std::size_t j = 0; j < base.size() && n > 1; ++j) {
        while (n % base[j] == 0) {
            n /= base[j];
            ++e[j];
        }
    }
    if (n != 1)
        return std::nullopt;
    return e;
}

inline std::optional<std::vector<std::uint64_t>> exponents_over_basis(const Natural& n, const GcdFreeBasis& basis)
{
    return exponents_over_basis(n, basis.base);
}

/// GCD-free basis by pairwise gcd refinement: while some pair x, y has g = gcd(x, y) > 1,
/// replace it by {g, x/g, y/g} \ {1}. Terminates because the product of the working set shrinks.
/// An input of only ones yields the basis {2}.
inline GcdFreeBasis gcd_free_basis(const std::vector<Natural>& nums)
{
    std::vector<Natural> work;
    for (const auto& a : nums) {
        if (a < 1)
            throw DomainError("0 cannot enter a GCD-free basis");
        if (a > 1)
            work.push_back(a);
    }
    auto normalize = [&] {
        std::sort(work.begin(), work.end());
        work.erase(std::unique(work.begin(), work.end()), work.end());
    };
    normalize();

    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < work.size() && !changed; ++i) {
            for (std::size_t j = i + 1; j < work.size() && !changed; ++j) {
                Natural g = gcd(work[i], work[j]);
                if (g == 1)
                    continue;
                Natural x = work[i] / g;
                Natural y = work[j] / g;
                work.erase(work.begin() + static_cast<std::ptrdiff_t>(j));
                work.erase(work.begin() + static_cast<std::ptrdiff_t>(i));
                for (Natural* v : {&g, &x, &y})
                    if (*v > 1)
                        work.push_back(*v);
                normalize();
                changed = true;
            }
        }
    }
    if (work.empty())
        work.push_back(2);

    GcdFreeBasis basis;
    basis.base = work;
    basis.sources = nums;
    for (const auto& a : nums) {
        auto e = exponents_over_basis(a, basis.base);
        if (!e)
            throw std::logic_error("gcd_free_basis: refinement lost a factor of " + a.str());
        basis.exponents.push_back(std::move(*e));
    }
    return basis;
}

} // namespace setcirc
