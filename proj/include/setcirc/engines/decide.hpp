#pragma once

#include <chrono>
#include <string>

#include "setcirc/circuit.hpp"
#include "setcirc/engines/certificate.hpp"
#include "setcirc/engines/clamped.hpp"
#include "setcirc/engines/exact.hpp"
#include "setcirc/engines/search.hpp"
#include "setcirc/engines/singleton.hpp"
#include "setcirc/engines/verdict.hpp"
#include "setcirc/error.hpp"
#include "setcirc/transforms.hpp"

namespace setcirc {

inline constexpr Fragment singleton_fragment{Op::inter, Op::add, Op::mul, Op::div};
inline constexpr Fragment exact_fragment{Op::union_, Op::inter, Op::add, Op::mul, Op::div};
inline constexpr Fragment clamped_fragment{Op::union_, Op::inter, Op::comp, Op::add, Op::div};
inline constexpr Fragment sigma_fragment{Op::union_, Op::inter, Op::comp, Op::mul, Op::div};
inline constexpr Fragment gcdfree_fragment{Op::union_, Op::inter, Op::mul, Op::div};

/// Throws UnsupportedFragment for fragments combining complement, addition and multiplication.
inline void require_decidable(const Circuit& c)
{
    Fragment f = fragment_of(c);
    if (f.contains(Op::comp) && f.contains(Op::add) && f.contains(Op::mul))
        throw UnsupportedFragment("unsupported fragment " + f.to_string() +
                                  ": decidability open for circuits combining comp, add and mul");
}

/// Engine auto-dispatch picks for a scalar circuit.
inline EngineKind auto_engine(const Circuit& c)
{
    require_decidable(c);
    Fragment f = fragment_of(c);
    if (f.subset_of(singleton_fragment))
        return EngineKind::singleton;
    if (f.subset_of(exact_fragment))
        return EngineKind::exact;
    if (f.subset_of(clamped_fragment))
        return EngineKind::clamped_scalar;
    if (f.subset_of(sigma_fragment))
        return EngineKind::clamped_vector;
    throw UnsupportedFragment("no engine for fragment " + f.to_string());
}

inline EngineKind auto_vector_engine(const Circuit& c)
{
    Fragment f = fragment_of(c);
    if (f.subset_of({Op::inter, Op::add, Op::sub}))
        return EngineKind::singleton_vector;
    if (!f.contains(Op::comp))
        return EngineKind::exact_vector;
    return EngineKind::clamped_vector;
}

namespace detail {

template <class F>
MembershipVerdict timed(EngineKind engine, CutoffMode mode, std::size_t gates, F&& run)
{
    auto start = std::chrono::steady_clock::now();
    MembershipVerdict v;
    v.engine = engine;
    v.cutoff_mode = mode;
    v.stats.gates = gates;
    run(v);
    v.stats.elapsed =
        std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start);
    return v;
}

inline MembershipVerdict decide_vector_with(const Circuit& c, const ExtVector& x, EngineKind engine,
                                            const DecideOptions& opt)
{
    switch (engine) {
    case EngineKind::singleton_vector:
        return timed(engine, CutoffMode::none, c.size(),
                     [&](MembershipVerdict& v) { v.member = eval_singleton_vector(c).count(x) != 0; });
    case EngineKind::exact_vector:
        return timed(engine, CutoffMode::none, c.size(),
                     [&](MembershipVerdict& v) { v.member = eval_exact_vector(c, opt.budget).count(x) != 0; });
    case EngineKind::clamped_vector:
        return timed(engine, opt.mode, c.size(), [&](MembershipVerdict& v) {
            auto r = eval_clamped_vector(c, opt.mode, opt.budget);
            v.member = r.output().member(x);
            v.stats.memo_entries = r.output().cells().size();
        });
    case EngineKind::search:
        return timed(engine, opt.mode, c.size(), [&](MembershipVerdict& v) {
            VectorSearch s(c, opt.mode, opt.budget);
            v.member = s.member(x);
            v.stats.memo_entries = s.stats().memo_entries;
        });
    default:
        throw FragmentError(std::string("engine ") + engine_name(engine) + " does not run on vector circuits");
    }
}

} // namespace detail

/// Membership of x in I(C) for a vector circuit.
inline MembershipVerdict decide_vector(const Circuit& c, const ExtVector& x, const DecideOptions& opt = {})
{
    if (!c.is_vector())
        throw FragmentError("decide_vector needs a vector circuit");
    if (!x.infinite && x.dim() != c.dim())
        throw ValidationError(Errc::dimension_mismatch, "query has " + std::to_string(x.dim()) +
                                                            " coordinates, circuit dimension is " +
                                                            std::to_string(c.dim()));
    EngineKind e = opt.engine == EngineKind::auto_ ? auto_vector_engine(c) : opt.engine;
    return detail::decide_vector_with(c, x, e, opt);
}

/// Membership of b in I(C) for a scalar circuit, by the requested engine or by fragment dispatch.
inline MembershipVerdict decide(const Circuit& c, const Natural& b, const DecideOptions& opt = {})
{
    if (c.is_vector())
        throw FragmentError("decide needs a scalar circuit; use decide_vector");
    require_decidable(c);
    const bool automatic = opt.engine == EngineKind::auto_;
    EngineKind e = automatic ? auto_engine(c) : opt.engine;
    using detail::timed;
    switch (e) {
    case EngineKind::singleton:
        return timed(e, CutoffMode::none, c.size(),
                     [&](MembershipVerdict& v) { v.member = eval_singleton(c).count(b) != 0; });
    case EngineKind::exact:
        try {
            return timed(e, CutoffMode::none, c.size(),
                         [&](MembershipVerdict& v) { v.member = eval_exact(c, opt.budget).count(b) != 0; });
        } catch (const BudgetExceeded&) {
            if (!automatic)
                throw;
            return certificate_search(c, b, opt.budget);
        }
    case EngineKind::certificate: {
        auto start = std::chrono::steady_clock::now();
        auto v = certificate_search(c, b, opt.budget);
        v.stats.elapsed =
            std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start);
        return v;
    }
    case EngineKind::clamped_scalar:
        return timed(e, opt.mode, c.size(), [&](MembershipVerdict& v) {
            auto r = eval_clamped_scalar(c, opt.mode, opt.budget);
            v.member = r.output().member(b);
            v.stats.memo_entries = r.output().bits().size();
        });
    case EngineKind::search:
        if (fragment_of(c).contains(Op::mul)) {
            // multiplicative fragments are searched on their prime-factor image
            auto t = to_vector_primefact(c, b);
            return detail::decide_vector_with(t.circuit, t.query, e, opt);
        }
        return timed(e, opt.mode, c.size(), [&](MembershipVerdict& v) {
            ScalarSearch s(c, opt.mode, opt.budget);
            v.member = s.member(b);
            v.stats.memo_entries = s.stats().memo_entries;
        });
    case EngineKind::clamped_vector: {
        auto t = to_vector_primefact(c, b);
        return detail::decide_vector_with(t.circuit, t.query, e, opt);
    }
    case EngineKind::singleton_vector:
    case EngineKind::exact_vector: {
        auto t = to_vector_gcdfree(c, b);
        return detail::decide_vector_with(t.circuit, t.query, e, opt);
    }
    case EngineKind::auto_: break;
    }
    throw std::logic_error("unreachable engine dispatch");
}

} // namespace setcirc
