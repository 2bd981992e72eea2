#pragma once

// Engine cross-checking: every engine applicable to a circuit answers the same queries and
// the answers must coincide. Engines that run out of budget on a query abstain.

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "setcirc.hpp"

namespace setcirc::cli {

struct XcheckReport {
    std::size_t circuits = 0;
    std::size_t queries = 0;
    std::size_t comparisons = 0; // queries answered by at least two engines
    std::size_t abstentions = 0; // engine/query pairs without an answer
    std::size_t disagreements = 0;
    std::vector<std::string> messages;
};

namespace detail {

using ScalarEval = std::function<bool(const Natural&)>;
using VectorEval = std::function<bool(const ExtVector&)>;

template <class Eval>
struct Named {
    std::string name;
    Eval eval;
};

/// Wraps construction so that an engine whose setup exceeds its budget simply abstains.
template <class Eval, class Make>
void add_engine(std::vector<Named<Eval>>& engines, std::string name, Make&& make, XcheckReport& rep)
{
    try {
        engines.push_back({std::move(name), make()});
    } catch (const BudgetExceeded&) {
        ++rep.abstentions;
    } catch (const OracleInconclusive&) {
        ++rep.abstentions;
    }
}

template <class T, class Eval>
void compare(const std::string& circuit, const T& query, const std::string& query_text,
             std::vector<Named<Eval>>& engines, XcheckReport& rep)
{
    ++rep.queries;
    std::vector<std::pair<std::string, bool>> answers;
    for (auto& e : engines) {
        try {
            answers.emplace_back(e.name, e.eval(query));
        } catch (const BudgetExceeded&) {
            ++rep.abstentions;
        } catch (const OracleInconclusive&) {
            ++rep.abstentions;
        }
    }
    if (answers.size() < 2)
        return;
    ++rep.comparisons;
    for (const auto& a : answers)
        if (a.second != answers.front().second) {
            ++rep.disagreements;
            std::string msg = "disagreement circuit=" + circuit + " query=" + query_text;
            for (const auto& b : answers)
                msg += " " + b.first + "=" + (b.second ? "true" : "false");
            rep.messages.push_back(msg);
            return;
        }
}

inline std::size_t window_for(const Circuit& c)
{
    std::size_t w = 4096;
    if (!fragment_of(c).contains(Op::mul)) {
        Natural n = structural_cutoff(c).max();
        if (n * 4 + 64 > w)
            w = to_size_checked(n * 4 + 64, "oracle window");
    }
    if (w > (1u << 16))
        throw BudgetExceeded("oracle window too large");
    return w;
}

} // namespace detail

inline void xcheck_scalar(const std::string& name, const Circuit& c, std::size_t max_b, const Budget& budget,
                          XcheckReport& rep)
{
    using detail::add_engine;
    using detail::ScalarEval;
    Fragment f = fragment_of(c);
    std::vector<detail::Named<ScalarEval>> engines;
    auto via = [&](EngineKind e) {
        DecideOptions o;
        o.engine = e;
        o.budget = budget;
        return [&c, o](const Natural& b) { return decide(c, b, o).member; };
    };

    std::vector<Natural> queries;
    for (std::size_t b = 0; b <= max_b; ++b)
        queries.emplace_back(b);

    if (f.subset_of(clamped_fragment)) {
        add_engine(engines, "clamped-scalar", [&]() -> ScalarEval {
            auto r = std::make_shared<ClampedScalarResult>(eval_clamped_scalar(c, CutoffMode::structural, budget));
            return [r](const Natural& b) { return r->output().member(b); };
        }, rep);
        add_engine(engines, "search", [&]() -> ScalarEval {
            auto s = std::make_shared<ScalarSearch>(c, CutoffMode::structural, budget);
            return [s](const Natural& b) { return s->member(b); };
        }, rep);
        add_engine(engines, "oracle", [&]() -> ScalarEval {
            auto sets = std::make_shared<std::vector<WindowSet>>(window_eval(c, detail::window_for(c)));
            std::size_t out = c.output_index();
            return [sets, out](const Natural& b) {
                const auto& s = (*sets)[out];
                return b >= s.in.size() ? s.in.back() : s.in[static_cast<std::size_t>(b)];
            };
        }, rep);
        Natural n = structural_cutoff(c).at(c.output_index());
        queries.push_back(n);
        queries.push_back(n + 17);
    }
    if (!f.contains(Op::comp)) {
        add_engine(engines, "exact", [&]() -> ScalarEval {
            auto s = std::make_shared<ExactSet<Natural>>(eval_exact(c, budget));
            return [s](const Natural& b) { return s->count(b) != 0; };
        }, rep);
        add_engine(engines, "certificate", [&]() -> ScalarEval {
            return [&c, budget, &rep, name](const Natural& b) {
                auto v = certificate_search(c, b, budget);
                if (v.member && !verify_certificate(c, b, *v.witness)) {
                    ++rep.disagreements;
                    rep.messages.push_back("invalid certificate circuit=" + name + " query=" + b.str());
                }
                return v.member;
            };
        }, rep);
    }
    if (f.subset_of(singleton_fragment))
        add_engine(engines, "singleton", [&]() -> ScalarEval { return via(EngineKind::singleton); }, rep);
    if (f.subset_of(gcdfree_fragment)) {
        add_engine(engines, "exact-vector", [&]() -> ScalarEval { return via(EngineKind::exact_vector); }, rep);
        if (f.subset_of({Op::inter, Op::mul, Op::div}))
            add_engine(engines, "singleton-vector", [&]() -> ScalarEval { return via(EngineKind::singleton_vector); },
                       rep);
    }
    if (f.subset_of(sigma_fragment) && f.contains(Op::mul)) {
        add_engine(engines, "clamped-vector", [&]() -> ScalarEval { return via(EngineKind::clamped_vector); }, rep);
        add_engine(engines, "search", [&]() -> ScalarEval { return via(EngineKind::search); }, rep);
    }

    ++rep.circuits;
    for (const auto& b : queries)
        detail::compare(name, b, b.str(), engines, rep);
}

inline void xcheck_vector(const std::string& name, const Circuit& c, const Budget& budget, XcheckReport& rep)
{
    using detail::add_engine;
    using detail::VectorEval;
    Fragment f = fragment_of(c);
    std::vector<detail::Named<VectorEval>> engines;
    const std::size_t m = c.dim();
    const std::size_t n = to_size_checked(structural_cutoff(c).max(), "cutoff");

    add_engine(engines, "clamped-vector", [&]() -> VectorEval {
        auto r = std::make_shared<ClampedVectorResult>(eval_clamped_vector(c, CutoffMode::structural, budget));
        return [r](const ExtVector& x) { return r->output().member(x); };
    }, rep);
    add_engine(engines, "search", [&]() -> VectorEval {
        auto s = std::make_shared<VectorSearch>(c, CutoffMode::structural, budget);
        return [s](const ExtVector& x) { return s->member(x); };
    }, rep);
    add_engine(engines, "oracle", [&]() -> VectorEval {
        auto sets = std::make_shared<std::vector<WindowVecSet>>(window_eval_vector(c, 2 * n + 4));
        std::size_t out = c.output_index();
        return [sets, out](const ExtVector& x) {
            const auto& s = (*sets)[out];
            if (x.infinite)
                return s.inf;
            std::vector<std::size_t> p;
            for (const auto& v : x.coords)
                p.push_back(v >= s.w ? s.w : static_cast<std::size_t>(v));
            return s.at(p);
        };
    }, rep);
    if (!f.contains(Op::comp))
        add_engine(engines, "exact-vector", [&]() -> VectorEval {
            auto s = std::make_shared<ExactSet<ExtVector>>(eval_exact_vector(c, budget));
            return [s](const ExtVector& x) { return s->count(x) != 0; };
        }, rep);
    if (f.subset_of({Op::inter, Op::add, Op::sub}))
        add_engine(engines, "singleton-vector", [&]() -> VectorEval {
            auto s = std::make_shared<ExactSet<ExtVector>>(eval_singleton_vector(c));
            return [s](const ExtVector& x) { return s->count(x) != 0; };
        }, rep);

    ++rep.circuits;
    // every point of [0, side]^m with side = n + 2, shrunk until the box stays small
    std::size_t side = n + 2;
    auto box = [&](std::size_t s) {
        std::size_t cells = 1;
        for (std::size_t k = 0; k < m && cells <= 20000; ++k)
            cells *= s + 1;
        return cells;
    };
    while (side > 1 && box(side) > 20000)
        --side;
    std::vector<std::size_t> p(m, 0);
    const std::vector<std::size_t> hi(m, side);
    do {
        std::vector<Natural> coords(p.begin(), p.end());
        ExtVector x = ExtVector::of(std::move(coords));
        detail::compare(name, x, to_string(x), engines, rep);
    } while (setcirc::detail::next_point(p, hi));
    detail::compare(name, ExtVector::inf(), "inf", engines, rep);
}

inline void xcheck_circuit(const std::string& name, const Circuit& c, std::size_t max_b, const Budget& budget,
                           XcheckReport& rep)
{
    if (c.is_vector())
        xcheck_vector(name, c, budget, rep);
    else
        xcheck_scalar(name, c, max_b, budget, rep);
}

/// Fragments of the random cross-check corpus, drawn round-robin.
inline std::vector<RandomCircuitSpec> xcheck_corpus_specs()
{
    return {
        {{Op::union_, Op::inter, Op::comp, Op::add, Op::div}, 8, 8, 0, 0},
        {{Op::union_, Op::inter, Op::add, Op::mul, Op::div}, 6, 8, 0, 0},
        {{Op::inter, Op::add, Op::mul, Op::div}, 7, 8, 0, 0},
        {{Op::union_, Op::inter, Op::mul, Op::div}, 7, 30, 0, 0},
        {{Op::union_, Op::inter, Op::comp, Op::mul, Op::div}, 7, 6, 0, 0},
        {{Op::union_, Op::inter, Op::comp, Op::add, Op::sub}, 6, 2, 1, 15},
        {{Op::union_, Op::inter, Op::comp, Op::add, Op::sub}, 6, 2, 2, 15},
    };
}

/// The i-th random corpus circuit for a seed. Vector circuits with cutoffs above 28 are redrawn.
inline Circuit xcheck_corpus_circuit(Rng& rng, std::size_t i)
{
    auto specs = xcheck_corpus_specs();
    const auto& spec = specs[i % specs.size()];
    while (true) {
        Circuit c = random_circuit(rng, spec);
        if (!c.is_vector() || structural_cutoff(c).max() <= 28)
            return c;
    }
}

} // namespace setcirc::cli
