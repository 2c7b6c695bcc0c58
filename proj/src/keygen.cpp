#include "qcc/keygen.hpp"

#include <array>
#include <cmath>

namespace qcc {

std::uint64_t BufferEntropy::next_u64()
{
    if (pos_ + 8 > bytes_.size())
        raise(ErrorCode::entropy_exhausted, "entropy buffer drained");
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i)
        v = (v << 8) | bytes_[pos_++];
    return v;
}

namespace {

constexpr std::array<const char*, 6> kOrders = {"sml", "slm", "msl", "mls", "lsm", "lms"};

std::int64_t draw_range(EntropySource& entropy, std::int64_t lo, std::int64_t hi)
{
    return lo + static_cast<std::int64_t>(entropy.next_u64() %
                                          static_cast<std::uint64_t>(hi - lo + 1));
}

// Valid normalized window length: max{1+tau', -tau'} < d <= 1, exact test.
bool normalized_length_ok(const FieldElement& d, const QuadraticField& field)
{
    const RingElement one_plus_conj{field.m() + 1, -1};
    const RingElement minus_conj{-field.m(), 1};
    return compare(one_plus_conj, d, field) < 0 && compare(minus_conj, d, field) < 0 &&
           compare(d, FieldElement::from_int(1), field) <= 0;
}

std::optional<FieldElement> sample_length(EntropySource& entropy, const QuadraticField& field)
{
    for (int attempt = 0; attempt < 16; ++attempt) {
        FieldElement d{1, 0, 1};
        if (field.e() == 1 && (entropy.next_u64() & 1) != 0) {
            // Rational multiple of tau: k*tau/64 for k up to 64/tau.
            const auto kmax = static_cast<std::int64_t>(64.0L / field.tau_approx());
            if (kmax < 1)
                continue;
            d = FieldElement::make(0, draw_range(entropy, 1, kmax), 64);
        } else {
            d = FieldElement::make(64 - draw_range(entropy, 0, 31), 0, 64);
        }
        if (field.e() == 1) {
            if (normalized_length_ok(d, field))
                return d;
        } else {
            // tau' > 0 here, so the normalized regime never applies; any
            // length in (1/2, 1] keeps the point set dense enough for
            // discovery. The rational grid above lands there by design.
            return d;
        }
    }
    return std::nullopt;
}

std::optional<RingElement> find_seed(EntropySource& entropy, const QuadraticField& field,
                                     const Window& window)
{
    const std::int64_t b0 = draw_range(entropy, -1000, 1000);
    for (std::int64_t off = 0; off <= 2000; ++off) {
        const std::int64_t b = b0 + off;
        const RingElement b_tau_conj = scale(RingElement{field.m(), -1}, b);
        const std::int64_t a_min = ceil_value(sub(window.lo(), b_tau_conj), field);
        const std::int64_t a_max = ceil_value(sub(window.hi(), b_tau_conj), field) - 1;
        if (a_min <= a_max)
            return RingElement{a_min, b};
    }
    return std::nullopt;
}

KeySpec sample_axis(EntropySource& entropy, const KeygenOptions& options)
{
    for (int attempt = 0; attempt < 64; ++attempt) {
        int e;
        if (options.force_e)
            e = *options.force_e;
        else
            e = (entropy.next_u64() & 1) != 0 ? 1 : -1;
        const std::int64_t m = options.force_m ? *options.force_m
                                               : draw_range(entropy, e == 1 ? 1 : 3, 50);
        const QuadraticField field(m, e);

        const std::int64_t u = draw_range(entropy, 1, 16);
        const FieldElement c =
            FieldElement::make(draw_range(entropy, -8, 8), draw_range(entropy, -8, 8), u);

        const auto d = sample_length(entropy, field);
        if (!d)
            continue;

        FieldElement eps{0, 0, 1};
        if (draw_range(entropy, 0, 7) == 0)
            eps = FieldElement::make(1, 0, 256 * draw_range(entropy, 1, 4));
        if (compare(add(eps, eps), *d, field) >= 0)
            eps = FieldElement{0, 0, 1};

        const Window window(c, *d, eps, field);
        const auto seed = find_seed(entropy, field, window);
        if (!seed)
            continue;

        const TrialOrder order =
            TrialOrder::parse(kOrders[static_cast<std::size_t>(draw_range(entropy, 0, 5))]);
        const Direction direction =
            (entropy.next_u64() & 1) != 0 ? Direction::plus : Direction::minus;

        KeySpec spec{field, *seed, window, order, direction};
        validate_seed(spec.generator());
        return spec;
    }
    raise(ErrorCode::entropy_exhausted, "no valid axis found within the sampling budget");
}

} // namespace

CipherKey keygen(EntropySource& entropy, const KeygenOptions& options)
{
    if (options.iterations < 1)
        raise(ErrorCode::invalid_argument, "keygen: iterations must be >= 1");

    KeySpec axis_x = sample_axis(entropy, options);
    KeySpec axis_y = sample_axis(entropy, options);
    std::optional<KeySpec> value_axis;
    if (options.palette)
        value_axis = sample_axis(entropy, options);

    CipherKey key{std::move(axis_x), std::move(axis_y), std::move(value_axis), options.variant,
                  options.iterations};
    validate(key);
    return key;
}

} // namespace qcc
