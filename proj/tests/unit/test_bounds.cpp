#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace setcirc;
using testsupport::circ;

namespace {

const Fragment kClampedOps{Op::union_, Op::inter, Op::comp, Op::add, Op::div};
const Fragment kVectorOps{Op::union_, Op::inter, Op::comp, Op::add, Op::sub};

std::size_t as_size(const Natural& n) { return static_cast<std::size_t>(n); }

} // namespace

TEST(StructuralCutoff, ScalarExamples)
{
    Circuit c = circ("circuit v1\n"
                     "gate 1 input 3\n"
                     "gate 2 input 5\n"
                     "gate 3 union 1 2\n"
                     "gate 4 add 1 2\n"
                     "gate 5 comp 1\n"
                     "gate 6 div 2 1\n"
                     "gate 7 inter 4 3\n"
                     "output 7\n");
    auto p = structural_cutoff(c);
    std::vector<Natural> want{5, 7, 7, 12, 5, 7, 12};
    EXPECT_EQ(p.cutoffs, want);
    EXPECT_EQ(p.max(), 12);
    EXPECT_EQ(p.mode, CutoffMode::structural);
    EXPECT_EQ(p.describe(3), "12");
}

TEST(StructuralCutoff, VectorExamples)
{
    Circuit c = circ("vcircuit v1 dim 2\n"
                     "gate 1 input 2,0\n"
                     "gate 2 input inf\n"
                     "gate 3 sub 1 2\n"
                     "gate 4 add 1 1\n"
                     "gate 5 union 2 4\n"
                     "output 5\n");
    auto p = structural_cutoff(c);
    std::vector<Natural> want{3, 1, 3, 6, 6};
    EXPECT_EQ(p.cutoffs, want);
}

TEST(StructuralCutoff, RejectsMultiplication)
{
    EXPECT_THROW(structural_cutoff(testsupport::load("primes.circ")), FragmentError);
    EXPECT_THROW(certified_cutoff(testsupport::load("primes.circ")), FragmentError);
    EXPECT_THROW(structural_cutoff(circ("circuit v1\ngate 1 input 1\ngate 2 mul 1 1\noutput 2\n")), FragmentError);
}

TEST(CertifiedCutoff, IsTwoToTheSubcircuitLengthPlusOne)
{
    Circuit c = testsupport::load("above_one.circ");
    auto p = certified_cutoff(c);
    auto lens = detail::subcircuit_lengths(c);
    ASSERT_EQ(p.exponents, lens);
    for (std::size_t i = 0; i < c.size(); ++i)
        EXPECT_EQ(p.at(i), (Natural(1) << lens[i]) + 1);
    EXPECT_EQ(lens[c.output_index()], encoding_length(c));
    EXPECT_EQ(cutoff_mode_name(p.mode), std::string("certified"));
}

TEST(CertifiedCutoff, LargeExponentsAreDescribedSymbolically)
{
    std::string text = "circuit v1\ngate 1 input 1\n";
    for (int i = 2; i <= 12; ++i)
        text += "gate " + std::to_string(i) + " add " + std::to_string(i - 1) + " 1\n";
    text += "output 12\n";
    Circuit c = circ(text);
    auto p = certified_cutoff(c);
    EXPECT_GT(p.exponents.back(), 64u);
    EXPECT_EQ(p.describe(c.size() - 1), "2^" + std::to_string(p.exponents.back()) + " + 1");
    EXPECT_THROW(certified_cutoff(c, 20), BudgetExceeded);
}

TEST(CutoffMode, Parsing)
{
    for (auto m : {CutoffMode::structural, CutoffMode::certified, CutoffMode::none})
        EXPECT_EQ(parse_cutoff_mode(cutoff_mode_name(m)), m);
    EXPECT_FALSE(parse_cutoff_mode("fast").has_value());
    EXPECT_THROW(cutoff_profile(circ("circuit v1\ngate 1 input 0\noutput 1\n"), CutoffMode::none), DomainError);
}

// every gate is constant (in membership) from its structural cutoff on
TEST(StructuralCutoff, ValidOnRandomScalarCircuits)
{
    Rng rng(201);
    for (int i = 0; i < 1000; ++i) {
        Circuit c = random_circuit(rng, {kClampedOps, 8, 8, 0, 0});
        auto p = structural_cutoff(c);
        auto w = window_eval(c, testsupport::window_size(c));
        for (std::size_t g = 0; g < c.size(); ++g) {
            std::size_t n = as_size(p.at(g));
            for (std::size_t z = n; z <= n + 200; ++z)
                ASSERT_EQ(w[g].at(z), w[g].at(n)) << serialize_circuit(c) << "gate index " << g << " z=" << z;
        }
    }
}

TEST(CertifiedCutoff, DominatesStructural)
{
    Rng rng(203);
    for (int i = 0; i < 1000; ++i) {
        Circuit c = random_circuit(rng, {kClampedOps, 8, 8, 0, 0});
        auto s = structural_cutoff(c);
        auto t = certified_cutoff(c);
        for (std::size_t g = 0; g < c.size(); ++g)
            ASSERT_LE(s.at(g), t.at(g)) << serialize_circuit(c);
    }
}

// every point agrees with its per-coordinate clamp to [0, n]
TEST(StructuralCutoff, ValidOnRandomVectorCircuits)
{
    Rng rng(205);
    int checked = 0;
    while (checked < 300) {
        std::size_t dim = 1 + checked % 2;
        Circuit c = random_circuit(rng, {kVectorOps, 6, 2, dim, 15});
        auto p = structural_cutoff(c);
        if (p.max() > 20)
            continue;
        ++checked;
        std::size_t top = as_size(p.max());
        auto w = window_eval_vector(c, 2 * top + 4);
        for (std::size_t g = 0; g < c.size(); ++g) {
            std::size_t n = as_size(p.at(g));
            std::vector<std::size_t> pt(dim, 0), hi(dim, n + 3);
            do {
                std::vector<std::size_t> clamped = pt;
                for (auto& x : clamped)
                    x = std::min(x, n);
                ASSERT_EQ(w[g].at(pt), w[g].at(clamped)) << serialize_circuit(c) << "gate index " << g;
            } while (detail::next_point(pt, hi));
        }
    }
}

TEST(SizeBound, Contains)
{
    SizeBound single{10, false};
    EXPECT_TRUE(single.contains(1024));
    EXPECT_FALSE(single.contains(1025));
    EXPECT_TRUE(single.contains(0));
    SizeBound dbl{3, true};
    EXPECT_TRUE(dbl.contains(256));
    EXPECT_FALSE(dbl.contains(257));
    SizeBound huge{100, true};
    EXPECT_TRUE(huge.contains(Natural(1) << 4000));
    EXPECT_EQ(dbl.describe(), "2^(2^3)");
    EXPECT_EQ(single.describe(), "2^10");
}

TEST(SizeBound, RejectsComplement)
{
    EXPECT_THROW(element_size_bound(testsupport::load("primes.circ")), FragmentError);
}

// elements of complement-free circuits stay below 2^|C| (2^(2^|C|) with mul)
TEST(SizeBound, HoldsOnRandomComplementFreeCircuits)
{
    Rng rng(207);
    int checked = 0, with_mul = 0;
    for (int i = 0; i < 1000; ++i) {
        Fragment ops = i % 2 ? Fragment{Op::union_, Op::inter, Op::add, Op::div}
                             : Fragment{Op::union_, Op::inter, Op::add, Op::mul, Op::div};
        Circuit c = random_circuit(rng, {ops, 7, 30, 0, 0});
        std::vector<ExactSet<Natural>> sets;
        try {
            sets = eval_exact_gates(c);
        } catch (const BudgetExceeded&) {
            continue;
        }
        ++checked;
        bool mul = fragment_of(c).contains(Op::mul);
        with_mul += mul;
        for (std::size_t g = 0; g < c.size(); ++g) {
            SizeBound b = element_size_bound(subcircuit_at(c, c.gate_at(g).id));
            EXPECT_EQ(b.doubly, fragment_of(subcircuit_at(c, c.gate_at(g).id)).contains(Op::mul));
            for (const auto& x : sets[g])
                ASSERT_TRUE(b.contains(x)) << serialize_circuit(c) << x;
        }
    }
    EXPECT_GT(checked, 900);
    EXPECT_GT(with_mul, 150);
}
