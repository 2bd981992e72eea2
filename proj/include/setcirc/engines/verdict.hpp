#pragma once

#include <chrono>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "setcirc/bounds.hpp"
#include "setcirc/budget.hpp"
#include "setcirc/circuit.hpp"
#include "setcirc/natural.hpp"

namespace setcirc {

enum class EngineKind {
    singleton,
    exact,
    clamped_scalar,
    clamped_vector,
    singleton_vector,
    exact_vector,
    search,
    certificate,
    auto_,
};

inline const char* engine_name(EngineKind e)
{
    switch (e) {
    case EngineKind::singleton: return "singleton";
    case EngineKind::exact: return "exact";
    case EngineKind::clamped_scalar: return "clamped-scalar";
    case EngineKind::clamped_vector: return "clamped-vector";
    case EngineKind::singleton_vector: return "singleton-vector";
    case EngineKind::exact_vector: return "exact-vector";
    case EngineKind::search: return "search";
    case EngineKind::certificate: return "certificate";
    case EngineKind::auto_: return "auto";
    }
    return "auto";
}

inline std::optional<EngineKind> parse_engine(std::string_view s)
{
    for (auto e : {EngineKind::singleton, EngineKind::exact, EngineKind::clamped_scalar, EngineKind::clamped_vector,
                   EngineKind::singleton_vector, EngineKind::exact_vector, EngineKind::search,
                   EngineKind::certificate, EngineKind::auto_})
        if (s == engine_name(e))
            return e;
    return std::nullopt;
}

struct EngineStats {
    std::size_t gates = 0;
    std::size_t memo_entries = 0;
    std::chrono::microseconds elapsed{0};
};

/// Value assignment on a formula expansion witnessing membership.
struct Certificate {
    Circuit formula;
    std::map<GateId, Natural> values;
};

struct MembershipVerdict {
    bool member = false;
    EngineKind engine = EngineKind::auto_;
    CutoffMode cutoff_mode = CutoffMode::none;
    EngineStats stats;
    std::optional<Certificate> witness;
};

struct DecideOptions {
    EngineKind engine = EngineKind::auto_;
    CutoffMode mode = CutoffMode::structural;
    Budget budget;
};

} // namespace setcirc
