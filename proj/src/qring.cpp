#include "qcc/qring.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace qcc {

using detail::i128;
using detail::u64;

namespace {

std::int64_t checked_add(std::int64_t x, std::int64_t y)
{
    std::int64_t r;
    if (__builtin_add_overflow(x, y, &r))
        raise(ErrorCode::overflow, "ring component addition exceeds 64 bits");
    return r;
}

std::int64_t checked_sub(std::int64_t x, std::int64_t y)
{
    std::int64_t r;
    if (__builtin_sub_overflow(x, y, &r))
        raise(ErrorCode::overflow, "ring component subtraction exceeds 64 bits");
    return r;
}

std::int64_t checked_mul(std::int64_t x, std::int64_t y)
{
    std::int64_t r;
    if (__builtin_mul_overflow(x, y, &r))
        raise(ErrorCode::overflow, "ring component product exceeds 64 bits");
    return r;
}

std::int64_t narrow(i128 v, const char* what)
{
    if (v > INT64_MAX || v < INT64_MIN)
        raise(ErrorCode::overflow, std::string(what) + " exceeds 64 bits");
    return static_cast<std::int64_t>(v);
}

std::uint64_t magnitude(std::int64_t v) noexcept
{
    return v < 0 ? std::uint64_t{0} - static_cast<std::uint64_t>(v)
                 : static_cast<std::uint64_t>(v);
}

} // namespace

QuadraticField::QuadraticField(std::int64_t m, int e)
    : m_(m)
    , e_(e)
{
    if (e != 1 && e != -1)
        raise(ErrorCode::invalid_key, "field: e must be +1 or -1");
    if (e == 1 && m < 1)
        raise(ErrorCode::invalid_key, "field: e=+1 requires m >= 1");
    if (e == -1 && m < 3)
        raise(ErrorCode::invalid_key, "field: e=-1 requires m >= 3");
    if (m > kMaxM)
        raise(ErrorCode::invalid_key, "field: m exceeds supported maximum 2^20");

    d_ = m * m + 4 * e;
    std::int64_t s = static_cast<std::int64_t>(std::sqrt(static_cast<double>(d_)));
    while (s > 0 && s * s > d_)
        --s;
    while ((s + 1) * (s + 1) <= d_)
        ++s;
    if (s * s == d_)
        raise(ErrorCode::invalid_key, "field: discriminant is a perfect square");

    tau_ = (static_cast<long double>(m_) + std::sqrt(static_cast<long double>(d_))) / 2.0L;
}

RingElement add(const RingElement& x, const RingElement& y)
{
    return {checked_add(x.a, y.a), checked_add(x.b, y.b)};
}

RingElement sub(const RingElement& x, const RingElement& y)
{
    return {checked_sub(x.a, y.a), checked_sub(x.b, y.b)};
}

RingElement neg(const RingElement& x)
{
    return {checked_sub(0, x.a), checked_sub(0, x.b)};
}

RingElement scale(const RingElement& x, std::int64_t k)
{
    return {checked_mul(x.a, k), checked_mul(x.b, k)};
}

RingElement mul(const RingElement& x, const RingElement& y, const QuadraticField& f)
{
    // (a1 + b1 t)(a2 + b2 t) with t^2 = m t + e.
    const i128 a = static_cast<i128>(x.a) * y.a + static_cast<i128>(f.e()) * x.b * y.b;
    i128 cross, bb, b;
    if (__builtin_mul_overflow(static_cast<i128>(x.b) * y.b, static_cast<i128>(f.m()), &bb))
        raise(ErrorCode::overflow, "ring product intermediate exceeds 128 bits");
    cross = static_cast<i128>(x.a) * y.b + static_cast<i128>(x.b) * y.a;
    if (__builtin_add_overflow(cross, bb, &b))
        raise(ErrorCode::overflow, "ring product intermediate exceeds 128 bits");
    return {narrow(a, "ring product"), narrow(b, "ring product")};
}

RingElement star(const RingElement& x, const QuadraticField& f)
{
    return {checked_add(x.a, checked_mul(x.b, f.m())), checked_sub(0, x.b)};
}

namespace detail {

int sign_pair(i128 ca, i128 cb, const QuadraticField& f)
{
    // ca + cb*tau = ((2*ca + cb*m) + cb*sqrt(D)) / 2
    i128 t, a;
    if (__builtin_mul_overflow(cb, static_cast<i128>(f.m()), &t) ||
        __builtin_add_overflow(ca, ca, &a) ||
        __builtin_add_overflow(a, t, &a))
        raise(ErrorCode::overflow, "field comparison intermediate exceeds 128 bits");
    return sign_surd(a, cb, static_cast<u64>(f.discriminant()));
}

} // namespace detail

int sign(const RingElement& x, const QuadraticField& f) noexcept
{
    // A = 2a + b*m fits in 128 bits for any 64-bit components and m <= 2^20.
    const i128 a = 2 * static_cast<i128>(x.a) + static_cast<i128>(x.b) * f.m();
    return detail::sign_surd(a, static_cast<i128>(x.b), static_cast<u64>(f.discriminant()));
}

int compare(const RingElement& x, const RingElement& y, const QuadraticField& f) noexcept
{
    const i128 da = static_cast<i128>(x.a) - y.a;
    const i128 db = static_cast<i128>(x.b) - y.b;
    const i128 a = 2 * da + db * f.m();
    return detail::sign_surd(a, db, static_cast<u64>(f.discriminant()));
}

FieldElement FieldElement::make(std::int64_t p, std::int64_t q, std::int64_t r)
{
    if (r == 0)
        raise(ErrorCode::invalid_key, "field element: denominator must be nonzero");
    if (r < 0) {
        p = checked_sub(0, p);
        q = checked_sub(0, q);
        r = checked_sub(0, r);
    }
    if (p == 0 && q == 0)
        return {0, 0, 1};
    const std::uint64_t g64 =
        std::gcd(std::gcd(magnitude(p), magnitude(q)), magnitude(r));
    const auto g = static_cast<std::int64_t>(g64);
    return {p / g, q / g, r / g};
}

FieldElement FieldElement::from_fractions(std::int64_t pn, std::int64_t pd,
                                          std::int64_t qn, std::int64_t qd)
{
    if (pd <= 0 || qd <= 0)
        raise(ErrorCode::invalid_key, "field element: fraction denominators must be positive");
    const std::int64_t g = std::gcd(pd, qd);
    const std::int64_t r = checked_mul(pd / g, qd);
    return make(checked_mul(pn, r / pd), checked_mul(qn, r / qd), r);
}

FieldElement add(const FieldElement& x, const FieldElement& y)
{
    const std::int64_t g = std::gcd(x.r, y.r);
    const std::int64_t r = checked_mul(x.r / g, y.r);
    const std::int64_t fx = r / x.r, fy = r / y.r;
    return FieldElement::make(checked_add(checked_mul(x.p, fx), checked_mul(y.p, fy)),
                              checked_add(checked_mul(x.q, fx), checked_mul(y.q, fy)), r);
}

FieldElement sub(const FieldElement& x, const FieldElement& y)
{
    return add(x, neg(y));
}

FieldElement sub(const FieldElement& x, const RingElement& y)
{
    return add(x, FieldElement::make(checked_sub(0, y.a), checked_sub(0, y.b), 1));
}

FieldElement neg(const FieldElement& x)
{
    return {checked_sub(0, x.p), checked_sub(0, x.q), x.r};
}

int sign(const FieldElement& x, const QuadraticField& f)
{
    return detail::sign_pair(static_cast<i128>(x.p), static_cast<i128>(x.q), f);
}

int compare(const FieldElement& x, const FieldElement& y, const QuadraticField& f)
{
    const i128 ca = static_cast<i128>(x.p) * y.r - static_cast<i128>(y.p) * x.r;
    const i128 cb = static_cast<i128>(x.q) * y.r - static_cast<i128>(y.q) * x.r;
    return detail::sign_pair(ca, cb, f);
}

int compare(const RingElement& x, const FieldElement& y, const QuadraticField& f)
{
    const i128 ca = static_cast<i128>(x.a) * y.r - y.p;
    const i128 cb = static_cast<i128>(x.b) * y.r - y.q;
    return detail::sign_pair(ca, cb, f);
}

std::int64_t floor_value(const FieldElement& x, const QuadraticField& f)
{
    const long double est =
        (static_cast<long double>(x.p) + static_cast<long double>(x.q) * f.tau_approx()) /
        static_cast<long double>(x.r);
    if (!(est > -9.0e18L && est < 9.0e18L))
        raise(ErrorCode::overflow, "floor outside the 64-bit range");
    std::int64_t n = static_cast<std::int64_t>(std::floor(est));
    while (compare(x, FieldElement::from_int(n), f) < 0)
        --n;
    while (compare(x, FieldElement::from_int(n + 1), f) >= 0)
        ++n;
    return n;
}

std::int64_t ceil_value(const FieldElement& x, const QuadraticField& f)
{
    const std::int64_t n = floor_value(x, f);
    return compare(x, FieldElement::from_int(n), f) == 0 ? n : n + 1;
}

std::string to_string(const RingElement& x)
{
    std::ostringstream os;
    os << x.a << (x.b < 0 ? "" : "+") << x.b << "t";
    return os.str();
}

std::string to_string(const FieldElement& x)
{
    std::ostringstream os;
    os << "(" << x.p << (x.q < 0 ? "" : "+") << x.q << "t)/" << x.r;
    return os.str();
}

} // namespace qcc
