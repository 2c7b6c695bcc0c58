#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qcc/qring.hpp"

namespace qcc {

/**
 * Half-open acceptance interval [c, c+d) with an epsilon guard band.
 * Candidate points whose star lands within epsilon of either boundary are
 * rejected, so the set actually generated is the quasicrystal of the
 * shrunk interval [c+eps, c+d-eps).
 */
class Window {
public:
    Window(const FieldElement& c, const FieldElement& d, const FieldElement& epsilon,
           const QuadraticField& f);

    const FieldElement& c() const noexcept { return c_; }
    const FieldElement& d() const noexcept { return d_; }
    const FieldElement& epsilon() const noexcept { return eps_; }

    const FieldElement& lo() const noexcept { return lo_; }
    const FieldElement& hi() const noexcept { return hi_; }
    FieldElement effective_length() const;

    bool contains_star(const RingElement& s, const QuadraticField& f) const;

    friend bool operator==(const Window&, const Window&) = default;

private:
    FieldElement c_, d_, eps_;
    FieldElement lo_, hi_;
};

/// The at-most-three distances between adjacent quasicrystal points.
struct GapTable {
    RingElement d1; // shortest
    RingElement d2; // middle
    RingElement d3; // longest, always d1 + d2

    friend bool operator==(const GapTable&, const GapTable&) = default;
};

enum class Direction : char {
    plus = '+',
    minus = '-',
};

/// Key-controlled order in which the three candidate gaps are tried.
class TrialOrder {
public:
    TrialOrder() noexcept
        : order_{'s', 'm', 'l'}
    {
    }

    static TrialOrder parse(std::string_view text);

    char at(int i) const noexcept { return order_[static_cast<std::size_t>(i)]; }
    TrialOrder reversed() const noexcept;
    std::string str() const { return std::string(order_.begin(), order_.end()); }

    friend bool operator==(const TrialOrder&, const TrialOrder&) = default;

private:
    std::array<char, 3> order_;
};

struct GeneratorConfig {
    QuadraticField field;
    Window window;
    RingElement seed;
    Direction direction = Direction::plus;
    TrialOrder trial_order;
};

struct QCPoint {
    RingElement value;
    RingElement star_value;
    std::int64_t ns = 0; // generation order index

    friend bool operator==(const QCPoint&, const QCPoint&) = default;
};

/// Throws SeedOutsideWindow unless star(seed) lies in the effective window.
void validate_seed(const GeneratorConfig& config);

/// True when the window qualifies for the closed-form gap table below.
bool has_canonical_gaps(const QuadraticField& f, const Window& w);

/**
 * Gap table {tau, 1+tau, 1+2tau} for e = +1 and effective window length L
 * with max{1+tau', -tau'} < L <= 1.  Throws NotNormalized otherwise.
 */
GapTable canonical_gaps(const QuadraticField& f, const Window& w);

/**
 * Constructive gap search: enumerates every lattice point with |b| <= bound
 * whose star lies in the effective window, sorts by value, and reads the
 * distinct adjacent differences. At most three may occur, the largest equal
 * to the sum of the two smallest. min_points guards against under-sampled
 * windows. Throws GapDiscoveryFailed.
 */
GapTable discover_gaps(const QuadraticField& f, const Window& w, std::int64_t bound,
                       std::int64_t min_points = 2);

/// canonical_gaps when applicable, otherwise discover_gaps sized for n points.
GapTable gap_table_for(const QuadraticField& f, const Window& w, std::int64_t n);

/**
 * The stepping rule: from a valid point, try value +/- gap for each gap in
 * the trial order (reversed for direction '-') and return the first
 * candidate whose star lies in the effective window. NoCandidate signals a
 * gap table inconsistent with the window.
 */
QCPoint next_point(const QCPoint& current, const GeneratorConfig& config, const GapTable& gaps);

/// Seed plus n-1 steps of next_point, ns assigned in generation order.
std::vector<QCPoint> generate(const GeneratorConfig& config, std::int64_t n);

/// Labels each adjacent difference of a one-directional run as s, m or l.
std::vector<char> gap_sequence(std::span<const QCPoint> points, const GapTable& gaps);

/// One line per point: "ns<TAB>a<TAB>b<TAB>a_star<TAB>b_star\n".
std::string format_points(std::span<const QCPoint> points);

} // namespace qcc
