#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "cli.hpp"
#include "setcirc.hpp"

namespace testsupport {

inline setcirc::Circuit circ(std::string_view text) { return setcirc::parse_circuit(text); }

inline std::string circuits_dir() { return SETCIRC_CIRCUITS_DIR; }
inline std::string circuit_path(const std::string& name) { return circuits_dir() + "/" + name; }
inline setcirc::Circuit load(const std::string& name)
{
    return setcirc::parse_circuit(setcirc::cli::read_file(circuit_path(name)));
}

/// Primality by trial division, written independently of the library.
inline bool trial_division_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d <= n / d; ++d)
        if (n % d == 0)
            return false;
    return true;
}

/// Brute-force windowed membership of z in I(g).
inline bool oracle_at(const std::vector<setcirc::WindowSet>& w, std::size_t gate_index, std::size_t z)
{
    return w[gate_index].at(z);
}

/// Oracle window large enough for every structural cutoff of c.
inline std::size_t window_size(const setcirc::Circuit& c)
{
    auto n = static_cast<std::size_t>(setcirc::structural_cutoff(c).max());
    return std::max<std::size_t>(4096, 4 * n + 128);
}

} // namespace testsupport
