#pragma once

#include <vector>

#include "setcirc/budget.hpp"
#include "setcirc/circuit.hpp"
#include "setcirc/engines/singleton.hpp"
#include "setcirc/error.hpp"
#include "setcirc/exact_set.hpp"

namespace setcirc {

namespace detail {

template <class T>
std::vector<ExactSet<T>> exact_gates(const Circuit& c, const Budget& budget)
{
    std::vector<ExactSet<T>> sets(c.size());
    std::size_t total = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
        const Gate& g = c.gate_at(i);
        auto pre = c.preds_of(i);
        if (g.op == Op::input)
            sets[i] = {input_element<T>(g)};
        else
            sets[i] = exact_apply<T>(g.op, sets[pre[0]], sets[pre[1]], budget.max_set_size);
        total += sets[i].size();
        if (total > budget.max_set_size * 4)
            throw BudgetExceeded("exact evaluation holds more than " + std::to_string(budget.max_set_size * 4) +
                                 " elements");
    }
    return sets;
}

} // namespace detail

/// I(g) for every gate of a complement-free scalar circuit.
inline std::vector<ExactSet<Natural>> eval_exact_gates(const Circuit& c, const Budget& budget = {})
{
    if (c.is_vector())
        throw FragmentError("eval_exact needs a scalar circuit; use eval_exact_vector");
    Fragment f = fragment_of(c);
    if (f.contains(Op::comp))
        throw FragmentError("exact evaluation needs a complement-free circuit, got " + f.to_string());
    return detail::exact_gates<Natural>(c, budget);
}

inline ExactSet<Natural> eval_exact(const Circuit& c, const Budget& budget = {})
{
    return eval_exact_gates(c, budget)[c.output_index()];
}

inline std::vector<ExactSet<ExtVector>> eval_exact_vector_gates(const Circuit& c, const Budget& budget = {})
{
    if (!c.is_vector())
        throw FragmentError("eval_exact_vector needs a vector circuit");
    Fragment f = fragment_of(c);
    if (f.contains(Op::comp))
        throw FragmentError("exact evaluation needs a complement-free circuit, got " + f.to_string());
    return detail::exact_gates<ExtVector>(c, budget);
}

inline ExactSet<ExtVector> eval_exact_vector(const Circuit& c, const Budget& budget = {})
{
    return eval_exact_vector_gates(c, budget)[c.output_index()];
}

} // namespace setcirc
