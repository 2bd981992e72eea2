// One PASS/FAIL line per acceptance criterion; exit status is the number of failures.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "test_support.hpp"

using namespace setcirc;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

template <class... T>
std::string cat(const T&... xs)
{
    std::ostringstream s;
    (s << ... << xs);
    return s.str();
}

// 1. primes circuit through the prime-factor route and the clamped vector engine
Outcome primes_end_to_end()
{
    auto start = Clock::now();
    Circuit c = testsupport::load("primes.circ");
    DecideOptions o;
    o.engine = EngineKind::clamped_vector;
    o.mode = CutoffMode::structural;
    int yes = 0, no = 0, wrong = 0;
    for (unsigned b = 0; b <= 100; ++b) {
        bool m = decide(c, b, o).member;
        (m ? yes : no) += 1;
        wrong += m != testsupport::trial_division_prime(b);
    }
    double t = seconds_since(start);
    return {wrong == 0 && yes == 25 && no == 76 && t < 10,
            cat("true=", yes, " false=", no, " mismatches=", wrong, " time=", t, "s")};
}

// 2. the two small {×,/} examples
Outcome singleton_examples()
{
    auto one = eval_singleton(testsupport::load("c1.circ"));
    auto two = eval_singleton(testsupport::load("c2.circ"));
    bool ok = one == ExactSet<Natural>{0} && two.empty();
    return {ok, cat("I(C1)=", to_string(one), " I(C2)=", to_string(two))};
}

// 3. 2 × comp(0 ∩ 1) are the even numbers
Outcome evens()
{
    Circuit c = testsupport::load("evens.circ");
    DecideOptions o;
    o.engine = EngineKind::clamped_vector;
    int wrong = 0;
    for (unsigned b = 0; b <= 40; ++b)
        wrong += decide(c, b, o).member != (b % 2 == 0);
    return {wrong == 0, cat("b in [0,40], mismatches=", wrong)};
}

// 4. membership constant on [n, n + 50] for every gate's structural cutoff n
Outcome cutoff_property()
{
    Rng rng(4001);
    std::size_t checks = 0, violations = 0, inconclusive = 0;
    for (int i = 0; i < 1000; ++i) {
        Circuit c = random_circuit(rng, {{Op::union_, Op::inter, Op::comp, Op::add, Op::div}, 8, 8, 0, 0});
        auto p = structural_cutoff(c);
        std::vector<WindowSet> w;
        try {
            w = window_eval(c, testsupport::window_size(c));
        } catch (const OracleInconclusive&) {
            ++inconclusive;
            continue;
        }
        for (std::size_t g = 0; g < c.size(); ++g) {
            auto n = static_cast<std::size_t>(p.at(g));
            for (std::size_t z = n; z <= n + 50; ++z, ++checks)
                violations += w[g].at(z) != w[g].at(n);
        }
    }
    return {violations == 0 && inconclusive == 0,
            cat("circuits=1000 checks=", checks, " violations=", violations, " oracle_inconclusive=", inconclusive)};
}

// 5. element size bounds on complement-free circuits
Outcome size_bounds()
{
    Rng rng(5001);
    std::size_t circuits = 0, with_mul = 0, elements = 0, violations = 0, skipped = 0;
    while (circuits < 500) {
        Fragment ops = circuits % 2 ? Fragment{Op::union_, Op::inter, Op::add, Op::div}
                                    : Fragment{Op::union_, Op::inter, Op::add, Op::mul, Op::div};
        Circuit c = random_circuit(rng, {ops, 7, 30, 0, 0});
        std::vector<ExactSet<Natural>> sets;
        try {
            sets = eval_exact_gates(c);
        } catch (const BudgetExceeded&) {
            ++skipped;
            continue;
        }
        ++circuits;
        with_mul += fragment_of(c).contains(Op::mul);
        for (std::size_t g = 0; g < c.size(); ++g) {
            SizeBound bound = element_size_bound(subcircuit_at(c, c.gate_at(g).id));
            for (const auto& x : sets[g]) {
                ++elements;
                violations += !bound.contains(x);
            }
        }
    }
    return {violations == 0, cat("circuits=", circuits, " with_mul=", with_mul, " elements=", elements,
                                 " violations=", violations, " redrawn_over_budget=", skipped)};
}

// 6. gcd-free vector route agrees with direct evaluation
Outcome gcdfree_equivalence()
{
    Rng rng(6001);
    std::size_t circuits = 0, queries = 0, disagreements = 0, skipped = 0;
    while (circuits < 300) {
        Circuit c = random_circuit(rng, {{Op::union_, Op::inter, Op::mul, Op::div}, 7, 30, 0, 0});
        ExactSet<Natural> direct;
        try {
            direct = eval_exact(c);
        } catch (const BudgetExceeded&) {
            ++skipped;
            continue;
        }
        ++circuits;
        for (unsigned b = 0; b <= 60; ++b, ++queries) {
            auto t = to_vector_gcdfree(c, b);
            bool image = eval_exact_vector(t.circuit).count(t.query) == 1;
            disagreements += image != (direct.count(b) == 1);
        }
    }
    return {disagreements == 0, cat("circuits=", circuits, " queries=", queries, " disagreements=", disagreements,
                                    " redrawn_over_budget=", skipped)};
}

// 7. ∩ elimination keeps the singleton value
Outcome cap_elimination()
{
    Rng rng(7001);
    std::size_t changed = 0, with_cap = 0;
    for (int i = 0; i < 300; ++i) {
        Circuit c = random_circuit(rng, {{Op::inter, Op::add, Op::mul, Op::div}, 8, 12, 0, 0});
        with_cap += fragment_of(c).contains(Op::inter);
        Circuit e = eliminate_cap(c);
        changed += fragment_of(e).contains(Op::inter) || eval_singleton(e) != eval_singleton(c);
    }
    return {changed == 0, cat("circuits=300 with_inter=", with_cap, " mismatches=", changed)};
}

// 8. reductions against their independent oracles
Outcome reductions()
{
    struct Suite {
        const char* name;
        std::function<bool(Rng&)> agree; // true iff reduction verdict matches the oracle
    };
    auto verdict = [](const Reduction& r) { return decide(r.circuit, r.query).member != r.negated; };
    std::vector<Suite> suites{
        {"exact-cover",
         [&](Rng& rng) {
             auto inst = random_exact_cover(rng);
             return verdict(from_exact_cover(inst)) == solve_exact_cover(inst);
         }},
        {"gap",
         [&](Rng& rng) {
             Digraph g = random_dag(rng, 8, 25);
             std::size_t s = rng.below(8), t = rng.below(8);
             if (s == t)
                 t = (s + 1) % 8;
             return verdict(from_gap(g, s, t)) == bfs_reachable(g, s, t);
         }},
        {"cvp",
         [&](Rng& rng) {
             auto inst = random_bool_circuit(rng, 10, 4);
             return verdict(from_cvp(inst)) == eval_bool(inst);
         }},
        {"majority",
         [&](Rng& rng) {
             auto d = random_majority_dag(rng, 6);
             auto pc = count_paths(d);
             return verdict(from_majority_dag(d)) == (pc.accept > pc.reject);
         }},
    };
    Outcome o;
    Rng rng(8001);
    for (const auto& s : suites) {
        auto start = Clock::now();
        int agree = 0;
        const int n = 250;
        for (int i = 0; i < n; ++i)
            agree += s.agree(rng);
        double t = seconds_since(start);
        o.pass = o.pass && agree == n && t < 60;
        o.detail += cat(o.detail.empty() ? "" : " ", s.name, "=", agree, "/", n, "(", t, "s)");
    }
    return o;
}

// 9. xcheck over the random corpus through the CLI entry point
Outcome engine_agreement()
{
    std::ostringstream out, err;
    int code = cli::run({"xcheck", "--random", "350", "--seed", "9001"}, out, err);
    std::string summary = out.str();
    if (auto pos = summary.rfind("xcheck "); pos != std::string::npos)
        summary = summary.substr(pos);
    while (!summary.empty() && summary.back() == '\n')
        summary.pop_back();
    return {code == 0, cat("exit=", code, " ", summary, err.str())};
}

// 10. comp together with add and mul never yields a verdict
Outcome unsupported_contract()
{
    std::vector<std::string> files{testsupport::circuit_path("open_fragment.circ")};
    Rng rng(10001);
    auto dir = std::filesystem::temp_directory_path();
    int made = 0;
    while (made < 50) {
        Circuit c = random_circuit(rng, {{Op::union_, Op::inter, Op::comp, Op::add, Op::mul, Op::div}, 8, 6, 0, 0});
        Fragment f = fragment_of(c);
        if (!(f.contains(Op::comp) && f.contains(Op::add) && f.contains(Op::mul)))
            continue;
        auto p = dir / ("setcirc_open_" + std::to_string(made++) + ".circ");
        std::ofstream(p) << serialize_circuit(c);
        files.push_back(p.string());
    }
    int bad = 0;
    for (const auto& f : files)
        for (const char* b : {"0", "1", "6"}) {
            for (const char* engine : {"auto", "search", "clamped-vector", "exact"}) {
                std::ostringstream out, err;
                int code = cli::run({"member", f, b, "--engine", engine}, out, err);
                bad += code != 4 || !out.str().empty();
            }
        }
    for (std::size_t i = 1; i < files.size(); ++i)
        std::filesystem::remove(files[i]);
    return {bad == 0, cat("circuits=", files.size(), " runs=", files.size() * 12, " wrong_exit_or_verdict=", bad)};
}

} // namespace

int main()
{
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"primes circuit decided correctly for b in [0,100]", primes_end_to_end},
        {"singleton examples C1 and C2", singleton_examples},
        {"even numbers formula", evens},
        {"structural cutoff property on 1000 random circuits", cutoff_property},
        {"element size bounds on 500 complement-free circuits", size_bounds},
        {"gcd-free vector transform preserves membership", gcdfree_equivalence},
        {"intersection elimination preserves singleton values", cap_elimination},
        {"reductions agree with independent oracles", reductions},
        {"engine cross-agreement over the random corpus", engine_agreement},
        {"unsupported fragment exits with code 4", unsupported_contract},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        auto start = Clock::now();
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failures += !o.pass;
        std::printf("%s criterion %zu: %s [%s] (%.2fs)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                    o.detail.c_str(), seconds_since(start));
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures;
}
