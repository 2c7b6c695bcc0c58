#include "qcc/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace qcc::oracle {

EnumerationResult enumerate_window(const QuadraticField& f, const Window& w,
                                   std::int64_t b_bound)
{
    if (b_bound < 1)
        raise(ErrorCode::invalid_argument, "enumerate_window: b_bound must be >= 1");

    EnumerationResult out;
    for (std::int64_t b = -b_bound; b <= b_bound; ++b) {
        // a + b*tau' in [lo, hi)  <=>  a in [lo - b*tau', hi - b*tau'),
        // with b*tau' = (b*m, -b) in the tau basis.
        const RingElement b_tau_conj = scale(RingElement{f.m(), -1}, b);
        const std::int64_t a_min = ceil_value(sub(w.lo(), b_tau_conj), f);
        const std::int64_t a_max = ceil_value(sub(w.hi(), b_tau_conj), f) - 1;
        for (std::int64_t a = a_min; a <= a_max; ++a)
            out.points.push_back({a, b});
    }

    std::sort(out.points.begin(), out.points.end(),
              [&](const RingElement& x, const RingElement& y) { return compare(x, y, f) < 0; });

    out.stars.reserve(out.points.size());
    for (const RingElement& p : out.points) {
        const RingElement s = star(p, f);
        assert(w.contains_star(s, f));
        out.stars.push_back(s);
    }
    return out;
}

std::optional<std::int64_t> find_period(std::span<const char> labels)
{
    const std::int64_t n = static_cast<std::int64_t>(labels.size());
    for (std::int64_t p = 1; p <= n / 2; ++p) {
        bool periodic = true;
        for (std::int64_t i = 0; i + p < n; ++i) {
            if (labels[static_cast<std::size_t>(i)] != labels[static_cast<std::size_t>(i + p)]) {
                periodic = false;
                break;
            }
        }
        if (periodic)
            return p;
    }
    return std::nullopt;
}

} // namespace qcc::oracle
