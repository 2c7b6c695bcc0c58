#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "qcc/quasicrystal.hpp"

namespace qcc {

/**
 * Brute-force reference implementations. Deliberately slow and simple so
 * they stay independent of the stepping generator they are used to check.
 */
namespace oracle {

struct EnumerationResult {
    std::vector<RingElement> points; // sorted strictly ascending by value
    std::vector<RingElement> stars;  // star of each point
};

/**
 * Direct enumeration of the acceptance condition: for every b in
 * [-b_bound, b_bound] the admissible a values form a closed integer
 * interval, computed exactly from the window endpoints.
 */
EnumerationResult enumerate_window(const QuadraticField& f, const Window& w,
                                   std::int64_t b_bound);

/// Smallest period p <= n/2 of the label word, or nullopt. Direct check.
std::optional<std::int64_t> find_period(std::span<const char> labels);

} // namespace oracle

} // namespace qcc
