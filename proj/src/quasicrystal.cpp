#include "qcc/quasicrystal.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <sstream>

#include "qcc/oracle.hpp"

namespace qcc {

Window::Window(const FieldElement& c, const FieldElement& d, const FieldElement& epsilon,
               const QuadraticField& f)
    : c_(c)
    , d_(d)
    , eps_(epsilon)
    , lo_(add(c, epsilon))
    , hi_(sub(add(c, d), epsilon))
{
    if (sign(d_, f) <= 0)
        raise(ErrorCode::invalid_key, "window: length d must be positive");
    if (sign(eps_, f) < 0)
        raise(ErrorCode::invalid_key, "window: epsilon must be nonnegative");
    if (compare(add(eps_, eps_), d_, f) >= 0)
        raise(ErrorCode::invalid_key, "window: 2*epsilon must be smaller than d");
}

FieldElement Window::effective_length() const
{
    return sub(d_, add(eps_, eps_));
}

bool Window::contains_star(const RingElement& s, const QuadraticField& f) const
{
    return compare(s, lo_, f) >= 0 && compare(s, hi_, f) < 0;
}

TrialOrder TrialOrder::parse(std::string_view text)
{
    bool seen[3] = {false, false, false};
    if (text.size() == 3) {
        for (char ch : text) {
            if (ch == 's')
                seen[0] = true;
            else if (ch == 'm')
                seen[1] = true;
            else if (ch == 'l')
                seen[2] = true;
        }
    }
    if (!(seen[0] && seen[1] && seen[2]))
        raise(ErrorCode::invalid_key,
              "trial order must be a permutation of \"sml\", got \"" + std::string(text) + "\"");
    TrialOrder order;
    std::copy(text.begin(), text.end(), order.order_.begin());
    return order;
}

TrialOrder TrialOrder::reversed() const noexcept
{
    TrialOrder r;
    r.order_ = {order_[2], order_[1], order_[0]};
    return r;
}

void validate_seed(const GeneratorConfig& config)
{
    const RingElement s = star(config.seed, config.field);
    if (!config.window.contains_star(s, config.field))
        raise(ErrorCode::seed_outside_window,
              "star of seed " + to_string(config.seed) + " = " + to_string(s) +
                  " misses the effective window [" + to_string(config.window.lo()) + ", " +
                  to_string(config.window.hi()) + ")");
}

bool has_canonical_gaps(const QuadraticField& f, const Window& w)
{
    if (f.e() != 1)
        return false;
    const FieldElement len = w.effective_length();
    // Requires max{1+tau', -tau'} < len <= 1, with 1+tau' = (1+m) - tau and
    // -tau' = tau - m.
    const RingElement one_plus_conj{f.m() + 1, -1};
    const RingElement minus_conj{-f.m(), 1};
    return compare(one_plus_conj, len, f) < 0 && compare(minus_conj, len, f) < 0 &&
           compare(len, FieldElement::from_int(1), f) <= 0;
}

GapTable canonical_gaps(const QuadraticField& f, const Window& w)
{
    if (!has_canonical_gaps(f, w))
        raise(ErrorCode::not_normalized,
              "window length is outside (max{1+tau',-tau'}, 1] for e=+1; use gap discovery");
    return GapTable{{0, 1}, {1, 1}, {1, 2}};
}

namespace {

long double approx_value(const FieldElement& x, const QuadraticField& f)
{
    return (static_cast<long double>(x.p) + static_cast<long double>(x.q) * f.tau_approx()) /
           static_cast<long double>(x.r);
}

bool contains_element(const std::vector<RingElement>& v, const RingElement& x)
{
    return std::find(v.begin(), v.end(), x) != v.end();
}

} // namespace

GapTable discover_gaps(const QuadraticField& f, const Window& w, std::int64_t bound,
                       std::int64_t min_points)
{
    if (bound < 100)
        raise(ErrorCode::invalid_argument, "discover_gaps: bound must be >= 100");

    const oracle::EnumerationResult res = oracle::enumerate_window(f, w, bound);
    const auto count = static_cast<std::int64_t>(res.points.size());
    if (count < std::max<std::int64_t>(min_points, 2))
        raise(ErrorCode::gap_discovery_failed,
              "only " + std::to_string(count) + " points within |b| <= " + std::to_string(bound) +
                  ", need " + std::to_string(std::max<std::int64_t>(min_points, 2)));

    // Pairs whose b components are within `slack` of the bound may be split
    // by an unenumerated point, so their differences are not trusted.
    const long double span = approx_value(w.effective_length(), f);
    const long double sqrt_d = std::sqrt(static_cast<long double>(f.discriminant()));
    const std::int64_t slack = static_cast<std::int64_t>(span / sqrt_d) + 2;

    std::vector<RingElement> distinct;
    for (std::size_t i = 0; i + 1 < res.points.size(); ++i) {
        const std::int64_t bmax =
            std::max(std::abs(res.points[i].b), std::abs(res.points[i + 1].b));
        if (bmax + slack > bound)
            continue;
        const RingElement diff = sub(res.points[i + 1], res.points[i]);
        if (!contains_element(distinct, diff)) {
            distinct.push_back(diff);
            if (distinct.size() > 3)
                raise(ErrorCode::gap_discovery_failed,
                      "more than 3 distinct adjacent gaps; window degenerate w.r.t. bound " +
                          std::to_string(bound));
        }
    }

    if (distinct.size() < 2)
        raise(ErrorCode::gap_discovery_failed,
              "fewer than 2 distinct gaps within bound " + std::to_string(bound));

    std::sort(distinct.begin(), distinct.end(),
              [&](const RingElement& x, const RingElement& y) { return compare(x, y, f) < 0; });
    assert(sign(distinct[0], f) > 0);

    if (distinct.size() == 3 && distinct[2] != add(distinct[0], distinct[1]))
        raise(ErrorCode::gap_discovery_failed,
              "largest observed gap is not the sum of the two smallest");

    return GapTable{distinct[0], distinct[1], add(distinct[0], distinct[1])};
}

GapTable gap_table_for(const QuadraticField& f, const Window& w, std::int64_t n)
{
    if (has_canonical_gaps(f, w))
        return canonical_gaps(f, w);

    // Size the enumeration so that roughly 3n points fall inside it; the
    // per-b hit rate equals the effective window length.
    const long double span = approx_value(w.effective_length(), f);
    long double wanted = 3.0L * static_cast<long double>(std::max<std::int64_t>(n, 1)) /
                         std::max(span, 1e-6L);
    wanted = std::min(wanted, 2.0e7L);
    const std::int64_t bound = std::max<std::int64_t>(10000, static_cast<std::int64_t>(wanted));
    return discover_gaps(f, w, bound, 2 * n);
}

namespace {

const RingElement& gap_by_label(const GapTable& gaps, char label)
{
    switch (label) {
    case 's': return gaps.d1;
    case 'm': return gaps.d2;
    default: return gaps.d3;
    }
}

} // namespace

QCPoint next_point(const QCPoint& current, const GeneratorConfig& config, const GapTable& gaps)
{
    const bool forward = config.direction == Direction::plus;
    const TrialOrder order = forward ? config.trial_order : config.trial_order.reversed();
    for (int i = 0; i < 3; ++i) {
        const RingElement& g = gap_by_label(gaps, order.at(i));
        const RingElement gs = star(g, config.field);
        const RingElement cand_star =
            forward ? add(current.star_value, gs) : sub(current.star_value, gs);
        if (config.window.contains_star(cand_star, config.field)) {
            const RingElement value =
                forward ? add(current.value, g) : sub(current.value, g);
            return QCPoint{value, cand_star, current.ns + 1};
        }
    }
    raise(ErrorCode::no_candidate,
          "no candidate gap from " + to_string(current.value) +
              " lands in the window; the gap table is inconsistent with the window");
}

std::vector<QCPoint> generate(const GeneratorConfig& config, std::int64_t n)
{
    if (n < 1)
        raise(ErrorCode::invalid_argument, "generate: n must be >= 1");
    validate_seed(config);

    const GapTable gaps = gap_table_for(config.field, config.window, n);

    std::vector<QCPoint> points;
    points.reserve(static_cast<std::size_t>(n));
    points.push_back(QCPoint{config.seed, star(config.seed, config.field), 0});
    for (std::int64_t i = 1; i < n; ++i)
        points.push_back(next_point(points.back(), config, gaps));
    return points;
}

std::vector<char> gap_sequence(std::span<const QCPoint> points, const GapTable& gaps)
{
    if (points.size() < 2)
        raise(ErrorCode::invalid_argument, "gap_sequence: need at least 2 points");

    std::vector<char> labels;
    labels.reserve(points.size() - 1);
    for (std::size_t i = 0; i + 1 < points.size(); ++i) {
        // Leftward runs descend, so a difference may match a negated gap.
        const RingElement diff = sub(points[i + 1].value, points[i].value);
        if (diff == gaps.d1 || diff == neg(gaps.d1))
            labels.push_back('s');
        else if (diff == gaps.d2 || diff == neg(gaps.d2))
            labels.push_back('m');
        else if (diff == gaps.d3 || diff == neg(gaps.d3))
            labels.push_back('l');
        else
            raise(ErrorCode::unknown_gap,
                  "adjacent difference " + to_string(diff) + " is not in the gap table");
    }
    return labels;
}

std::string format_points(std::span<const QCPoint> points)
{
    std::ostringstream os;
    for (const QCPoint& p : points)
        os << p.ns << '\t' << p.value.a << '\t' << p.value.b << '\t' << p.star_value.a << '\t'
           << p.star_value.b << '\n';
    return os.str();
}

} // namespace qcc
