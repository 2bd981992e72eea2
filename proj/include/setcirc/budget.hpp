#pragma once

#include <cstddef>
#include <cstdint>

namespace setcirc {

/// Resource limits shared by every engine.
struct Budget {
    std::size_t max_set_size = 1'000'000;     // elements of one exact set
    std::size_t max_grid_cells = 10'000'000;  // cells of one clamped representation
    std::size_t max_memo_entries = 10'000'000;
    std::uint64_t max_steps = 2'000'000'000;  // inner-loop iterations of one call
    std::size_t max_formula_gates = 1'000'000;
};

} // namespace setcirc
