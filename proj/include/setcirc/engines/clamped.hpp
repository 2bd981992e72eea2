#pragma once

#include <utility>
#include <vector>

#include "setcirc/bounds.hpp"
#include "setcirc/budget.hpp"
#include "setcirc/circuit.hpp"
#include "setcirc/error.hpp"
#include "setcirc/nat_rep.hpp"
#include "setcirc/vec_rep.hpp"

namespace setcirc {

struct ClampedScalarResult {
    CutoffProfile profile;
    std::vector<NatSetRep> reps;
    std::size_t output_index = 0;
    const NatSetRep& output() const& { return reps.at(output_index); }
    NatSetRep output() && { return std::move(reps.at(output_index)); }
};

struct ClampedVectorResult {
    CutoffProfile profile;
    std::vector<VecSetRep> reps;
    std::size_t output_index = 0;
    const VecSetRep& output() const& { return reps.at(output_index); }
    VecSetRep output() && { return std::move(reps.at(output_index)); }
};

/// Bottom-up evaluation of an {∪,∩,¬,+,/}-circuit with a NatSetRep per gate.
inline ClampedScalarResult eval_clamped_scalar(const Circuit& c, CutoffMode mode = CutoffMode::structural,
                                               const Budget& budget = {})
{
    if (c.is_vector())
        throw FragmentError("eval_clamped_scalar needs a scalar circuit");
    Fragment f = fragment_of(c);
    if (!f.subset_of({Op::union_, Op::inter, Op::comp, Op::add, Op::div}))
        throw FragmentError("clamped scalar evaluation needs a fragment within {union,inter,comp,add,div}, got " +
                            f.to_string());
    ClampedScalarResult r{cutoff_profile(c, mode), {}, c.output_index()};
    r.reps.reserve(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        const Gate& g = c.gate_at(i);
        std::size_t n = to_size_checked(r.profile.at(i), "cutoff");
        if (n + 1 > budget.max_grid_cells)
            throw BudgetExceeded("cutoff " + std::to_string(n) + " exceeds grid budget");
        auto pre = c.preds_of(i);
        if (g.op == Op::input)
            r.reps.push_back(NatSetRep::from_finite({g.value}, n));
        else
            r.reps.push_back(natrep_apply(g.op, r.reps[pre[0]], pre.size() > 1 ? &r.reps[pre[1]] : nullptr, n, budget));
    }
    return r;
}

/// Bottom-up evaluation of an {∪,∩,¬,+,−}-vector circuit with a VecSetRep per gate.
inline ClampedVectorResult eval_clamped_vector(const Circuit& c, CutoffMode mode = CutoffMode::structural,
                                               const Budget& budget = {})
{
    if (!c.is_vector())
        throw FragmentError("eval_clamped_vector needs a vector circuit");
    Fragment f = fragment_of(c);
    if (!f.subset_of({Op::union_, Op::inter, Op::comp, Op::add, Op::sub}))
        throw FragmentError("clamped vector evaluation needs a fragment within {union,inter,comp,add,sub}, got " +
                            f.to_string());
    ClampedVectorResult r{cutoff_profile(c, mode), {}, c.output_index()};
    r.reps.reserve(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        const Gate& g = c.gate_at(i);
        std::size_t n = to_size_checked(r.profile.at(i), "cutoff");
        auto pre = c.preds_of(i);
        if (g.op == Op::input)
            r.reps.push_back(VecSetRep::from_finite({g.vvalue}, c.dim(), n, budget));
        else
            r.reps.push_back(vecrep_apply(g.op, r.reps[pre[0]], pre.size() > 1 ? &r.reps[pre[1]] : nullptr, n, budget));
    }
    return r;
}

} // namespace setcirc
