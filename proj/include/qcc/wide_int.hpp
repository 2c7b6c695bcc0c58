#pragma once

#include <array>
#include <cassert>
#include <cstdint>

namespace qcc::detail {

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using i128 = __int128;

// 256-bit product of two u128 values, little-endian 64-bit limbs.
inline std::array<u64, 4> mul_u128(u128 x, u128 y) noexcept
{
    const u64 x0 = static_cast<u64>(x), x1 = static_cast<u64>(x >> 64);
    const u64 y0 = static_cast<u64>(y), y1 = static_cast<u64>(y >> 64);
    const u128 p00 = static_cast<u128>(x0) * y0;
    const u128 p01 = static_cast<u128>(x0) * y1;
    const u128 p10 = static_cast<u128>(x1) * y0;
    const u128 p11 = static_cast<u128>(x1) * y1;

    std::array<u64, 4> r{};
    r[0] = static_cast<u64>(p00);
    const u128 mid = (p00 >> 64) + static_cast<u64>(p01) + static_cast<u64>(p10);
    r[1] = static_cast<u64>(mid);
    const u128 hi = (mid >> 64) + (p01 >> 64) + (p10 >> 64) + static_cast<u64>(p11);
    r[2] = static_cast<u64>(hi);
    r[3] = static_cast<u64>((hi >> 64) + (p11 >> 64));
    return r;
}

// 320-bit product of a 256-bit value and a u64, little-endian limbs.
inline std::array<u64, 5> mul_u256_u64(const std::array<u64, 4>& x, u64 y) noexcept
{
    std::array<u64, 5> r{};
    u128 carry = 0;
    for (int i = 0; i < 4; ++i) {
        const u128 t = static_cast<u128>(x[i]) * y + carry;
        r[i] = static_cast<u64>(t);
        carry = t >> 64;
    }
    r[4] = static_cast<u64>(carry);
    return r;
}

inline int cmp_limbs(const std::array<u64, 5>& a, const std::array<u64, 5>& b) noexcept
{
    for (int i = 4; i >= 0; --i) {
        if (a[i] != b[i])
            return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

inline u128 abs_u128(i128 v) noexcept
{
    // Two's complement negation maps i128 min to its magnitude correctly.
    return v < 0 ? static_cast<u128>(0) - static_cast<u128>(v) : static_cast<u128>(v);
}

// Exact sign of A + B*sqrt(D) for D > 0 and not a perfect square.
// The mixed-sign case compares A^2 against B^2*D in 320-bit precision,
// so no input combination can overflow.
inline int sign_surd(i128 A, i128 B, u64 D) noexcept
{
    if (B == 0)
        return A == 0 ? 0 : (A < 0 ? -1 : 1);
    if (A == 0)
        return B < 0 ? -1 : 1;
    if (A > 0 && B > 0)
        return 1;
    if (A < 0 && B < 0)
        return -1;

    const auto a2 = mul_u128(abs_u128(A), abs_u128(A));
    const std::array<u64, 5> lhs{a2[0], a2[1], a2[2], a2[3], 0};
    const auto rhs = mul_u256_u64(mul_u128(abs_u128(B), abs_u128(B)), D);
    const int c = cmp_limbs(lhs, rhs);
    // Equality would make sqrt(D) rational.
    assert(c != 0);
    return c > 0 ? (A < 0 ? -1 : 1) : (B < 0 ? -1 : 1);
}

} // namespace qcc::detail
