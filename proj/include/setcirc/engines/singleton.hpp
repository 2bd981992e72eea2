#pragma once

#include <string>
#include <vector>

#include "setcirc/circuit.hpp"
#include "setcirc/error.hpp"
#include "setcirc/exact_set.hpp"

namespace setcirc {

namespace detail {

template <class T>
T input_element(const Gate& g);
template <>
inline Natural input_element<Natural>(const Gate& g) { return g.value; }
template <>
inline ExtVector input_element<ExtVector>(const Gate& g) { return g.vvalue; }

template <class T>
std::vector<ExactSet<T>> singleton_gates(const Circuit& c)
{
    std::vector<ExactSet<T>> sets(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        const Gate& g = c.gate_at(i);
        auto pre = c.preds_of(i);
        if (g.op == Op::input)
            sets[i] = {input_element<T>(g)};
        else
            sets[i] = exact_apply<T>(g.op, sets[pre[0]], sets[pre[1]], 1);
        if (sets[i].size() > 1)
            throw Error("singleton invariant violated at gate " + std::to_string(g.id));
    }
    return sets;
}

} // namespace detail

/// Every gate of an {∩,+,×,/}-circuit holds at most one number.
inline std::vector<ExactSet<Natural>> eval_singleton_gates(const Circuit& c)
{
    if (c.is_vector())
        throw FragmentError("eval_singleton needs a scalar circuit");
    Fragment f = fragment_of(c);
    if (!f.subset_of({Op::inter, Op::add, Op::mul, Op::div}))
        throw FragmentError("singleton evaluation needs a fragment within {inter,add,mul,div}, got " + f.to_string());
    return detail::singleton_gates<Natural>(c);
}

inline ExactSet<Natural> eval_singleton(const Circuit& c) { return eval_singleton_gates(c)[c.output_index()]; }

inline std::vector<ExactSet<ExtVector>> eval_singleton_vector_gates(const Circuit& c)
{
    if (!c.is_vector())
        throw FragmentError("eval_singleton_vector needs a vector circuit");
    Fragment f = fragment_of(c);
    if (!f.subset_of({Op::inter, Op::add, Op::sub}))
        throw FragmentError("singleton vector evaluation needs a fragment within {inter,add,sub}, got " +
                            f.to_string());
    return detail::singleton_gates<ExtVector>(c);
}

inline ExactSet<ExtVector> eval_singleton_vector(const Circuit& c)
{
    return eval_singleton_vector_gates(c)[c.output_index()];
}

} // namespace setcirc
