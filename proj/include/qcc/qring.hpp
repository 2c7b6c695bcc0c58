#pragma once

#include <cstdint>
#include <string>

#include "qcc/errors.hpp"
#include "qcc/wide_int.hpp"

namespace qcc {

/**
 * Parameters of the quadratic ring Z[tau], where tau is the positive root
 * of x^2 = m*x + e with e in {+1, -1}.
 *
 * The discriminant D = m^2 + 4e is positive and never a perfect square for
 * the admissible (m, e), so tau = (m + sqrt(D))/2 is irrational. Its
 * conjugate tau' = (m - sqrt(D))/2 satisfies tau + tau' = m, tau*tau' = -e.
 * With e = +1 (m >= 1) the conjugate lies in (-1, 0); with e = -1 (m >= 3)
 * it lies in (0, 1).
 */
class QuadraticField {
public:
    // m is capped so that discriminant products stay within the 320-bit
    // comparison budget of sign_surd.
    static constexpr std::int64_t kMaxM = std::int64_t{1} << 20;

    QuadraticField(std::int64_t m, int e);

    std::int64_t m() const noexcept { return m_; }
    int e() const noexcept { return e_; }
    std::int64_t discriminant() const noexcept { return d_; }

    // Floating approximations, for diagnostics and first guesses only;
    // all decisions are made in exact integer arithmetic.
    long double tau_approx() const noexcept { return tau_; }
    long double tau_conj_approx() const noexcept { return static_cast<long double>(m_) - tau_; }

    friend bool operator==(const QuadraticField&, const QuadraticField&) = default;

private:
    std::int64_t m_;
    int e_;
    std::int64_t d_;
    long double tau_;
};

/// An element a + b*tau of Z[tau], held as the integer pair (a, b).
struct RingElement {
    std::int64_t a = 0;
    std::int64_t b = 0;

    friend bool operator==(const RingElement&, const RingElement&) = default;
};

/**
 * An element (p + q*tau) / r of Q[tau] in canonical form:
 * r > 0 and gcd(p, q, r) = 1; zero is always (0, 0, 1).
 */
struct FieldElement {
    std::int64_t p = 0;
    std::int64_t q = 0;
    std::int64_t r = 1;

    // Canonicalizes an arbitrary (p, q, r) triple; r must be nonzero.
    static FieldElement make(std::int64_t p, std::int64_t q, std::int64_t r);
    // (pn/pd) + (qn/qd)*tau over the common denominator.
    static FieldElement from_fractions(std::int64_t pn, std::int64_t pd,
                                       std::int64_t qn, std::int64_t qd);
    static FieldElement from_ring(const RingElement& x) noexcept { return {x.a, x.b, 1}; }
    static FieldElement from_int(std::int64_t n) noexcept { return {n, 0, 1}; }

    friend bool operator==(const FieldElement&, const FieldElement&) = default;
};

// --- Z[tau] arithmetic (overflow-checked; components stay in 64 bits) ---

RingElement add(const RingElement& x, const RingElement& y);
RingElement sub(const RingElement& x, const RingElement& y);
RingElement neg(const RingElement& x);
RingElement scale(const RingElement& x, std::int64_t k);
RingElement mul(const RingElement& x, const RingElement& y, const QuadraticField& f);

// Field conjugation a + b*tau -> a + b*tau', expressed in the tau basis
// as (a + b*m, -b) since tau' = m - tau.
RingElement star(const RingElement& x, const QuadraticField& f);

// Exact sign of the real value a + b*tau. Total: the comparison runs in
// wide integer arithmetic and cannot overflow for 64-bit components.
int sign(const RingElement& x, const QuadraticField& f) noexcept;

// Strict total order on real values; 0 only for identical component pairs.
int compare(const RingElement& x, const RingElement& y, const QuadraticField& f) noexcept;

// --- Q[tau] arithmetic ---

FieldElement add(const FieldElement& x, const FieldElement& y);
FieldElement sub(const FieldElement& x, const FieldElement& y);
FieldElement sub(const FieldElement& x, const RingElement& y);
FieldElement neg(const FieldElement& x);

int sign(const FieldElement& x, const QuadraticField& f);
int compare(const FieldElement& x, const FieldElement& y, const QuadraticField& f);
int compare(const RingElement& x, const FieldElement& y, const QuadraticField& f);

// Exact floor/ceiling of the real value of x. The floating estimate is only
// a starting point; the result is pinned down by exact comparisons.
std::int64_t floor_value(const FieldElement& x, const QuadraticField& f);
std::int64_t ceil_value(const FieldElement& x, const QuadraticField& f);

std::string to_string(const RingElement& x);
std::string to_string(const FieldElement& x);

namespace detail {

// Sign of ca + cb*tau for 128-bit coefficients. Throws Overflow only when
// 2*ca + cb*m exceeds 128 bits, which 64-bit ring elements cannot reach.
int sign_pair(i128 ca, i128 cb, const QuadraticField& f);

} // namespace detail

} // namespace qcc
