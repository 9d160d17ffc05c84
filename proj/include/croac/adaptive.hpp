#pragma once

#include <cmath>
#include <cstdint>

#include "croac/config.hpp"

namespace croac::adaptive {

// Sigmoid mapping of the success counter onto a collision rate in (0, 1).
// counter = 0 gives exactly 0.5; more successful inters push the rate up,
// more successful onwalls push it down.
inline double coll_rate(std::int64_t counter, std::int64_t max_fe) {
    return 1.0 /
           (1.0 + std::exp(-6.0 * static_cast<double>(counter) /
                           static_cast<double>(max_fe)));
}

// Counter moves only on reactions that pass their energy check: -1 for an
// onwall, +1 for an inter. Dec, Syn and every rejected reaction leave it
// untouched.
inline std::int64_t update_counter(std::int64_t counter, ReactionKind kind,
                                   bool accepted) {
    if (!accepted) return counter;
    if (kind == ReactionKind::Onwall) return counter - 1;
    if (kind == ReactionKind::Inter) return counter + 1;
    return counter;
}

}  // namespace croac::adaptive
