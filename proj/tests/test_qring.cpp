#include <cmath>
#include <random>

#include "doctest.h"
#include "qcc/qring.hpp"

using namespace qcc;

namespace {

const QuadraticField kGolden(1, 1); // tau = (1+sqrt(5))/2
const QuadraticField kSilver(2, 1); // tau = 1+sqrt(2)

long double real_value(const RingElement& x, const QuadraticField& f)
{
    return static_cast<long double>(x.a) + static_cast<long double>(x.b) * f.tau_approx();
}

RingElement random_element(std::mt19937_64& rng, std::int64_t bound)
{
    const auto span = static_cast<std::uint64_t>(2 * bound + 1);
    const auto a = static_cast<std::int64_t>(rng() % span) - bound;
    const auto b = static_cast<std::int64_t>(rng() % span) - bound;
    return {a, b};
}

} // namespace

TEST_CASE("field construction enforces the two series")
{
    CHECK_NOTHROW(QuadraticField(1, 1));
    CHECK_NOTHROW(QuadraticField(50, 1));
    CHECK_NOTHROW(QuadraticField(3, -1));
    CHECK_THROWS_AS(QuadraticField(0, 1), Error);
    CHECK_THROWS_AS(QuadraticField(2, -1), Error);
    CHECK_THROWS_AS(QuadraticField(1, 0), Error);
    CHECK_THROWS_AS(QuadraticField(QuadraticField::kMaxM + 1, 1), Error);

    CHECK(kGolden.discriminant() == 5);
    CHECK(kSilver.discriminant() == 8);
    CHECK(QuadraticField(3, -1).discriminant() == 5);
}

TEST_CASE("addition and subtraction")
{
    CHECK(add(RingElement{0, 0}, RingElement{1, 1}) == RingElement{1, 1});
    CHECK(add(RingElement{1, 1}, RingElement{1, 1}) == RingElement{2, 2});
    CHECK(add(RingElement{2, 3}, RingElement{1, 1}) == RingElement{3, 4});

    CHECK(sub(RingElement{0, 0}, RingElement{0, 1}) == RingElement{0, -1});
    CHECK(sub(RingElement{1, 1}, RingElement{1, 1}) == RingElement{0, 0});
    CHECK(sub(RingElement{-1, -2}, RingElement{1, 1}) == RingElement{-2, -3});

    CHECK_THROWS_AS(add(RingElement{INT64_MAX, 0}, RingElement{1, 0}), Error);
    CHECK_THROWS_AS(sub(RingElement{INT64_MIN, 0}, RingElement{1, 0}), Error);
}

TEST_CASE("multiplication uses tau^2 = m tau + e")
{
    CHECK(mul({0, 1}, {0, 1}, kGolden) == RingElement{1, 1});
    CHECK(mul({1, 0}, {5, 7}, kGolden) == RingElement{5, 7});
    CHECK(mul({0, 1}, {0, 1}, kSilver) == RingElement{1, 2});
    // tau * tau' = -e
    CHECK(mul({0, 1}, star({0, 1}, kGolden), kGolden) == RingElement{-1, 0});
    CHECK(mul({0, 1}, star({0, 1}, QuadraticField(3, -1)), QuadraticField(3, -1)) ==
          RingElement{1, 0});
    CHECK_THROWS_AS(mul({0, INT64_MAX}, {0, 2}, kGolden), Error);
}

TEST_CASE("star map")
{
    CHECK(star({0, 1}, kGolden) == RingElement{1, -1}); // tau' = 1 - tau
    CHECK(star({7, 0}, kGolden) == RingElement{7, 0});
    CHECK(star({-3, 0}, kSilver) == RingElement{-3, 0});
    CHECK(star({2, 3}, kGolden) == RingElement{5, -3});
}

TEST_CASE("exact sign")
{
    CHECK(sign(RingElement{1, -1}, kGolden) == -1); // tau' < 0
    CHECK(sign(RingElement{0, 0}, kGolden) == 0);
    CHECK(sign(RingElement{1, -2}, kSilver) == -1); // 1 - 2(1+sqrt 2) < 0
    CHECK(sign(RingElement{0, 1}, kGolden) == 1);
    CHECK(sign(RingElement{2, -1}, kGolden) == 1); // 2 - tau > 0
    const QuadraticField bronze(3, -1);
    CHECK(sign(RingElement{1, -1}, bronze) == -1);      // 1 - tau < 0
    CHECK(sign(star({0, 1}, bronze), bronze) == 1);     // tau' > 0 in the e=-1 series
    CHECK(sign(star({0, 1}, kGolden), kGolden) == -1);  // tau' < 0 in the e=+1 series
}

TEST_CASE("exact comparison")
{
    CHECK(compare(RingElement{0, 0}, RingElement{1, -1}, kGolden) == 1);
    CHECK(compare(RingElement{5, 3}, RingElement{5, 3}, kGolden) == 0);
    CHECK(compare(RingElement{5, -3}, RingElement{2, -1}, kGolden) == -1);
}

TEST_CASE("field elements canonicalize")
{
    CHECK(FieldElement::make(2, 4, 6) == FieldElement{1, 2, 3});
    CHECK(FieldElement::make(0, 0, 7) == FieldElement{0, 0, 1});
    CHECK(FieldElement::make(1, 1, -2) == FieldElement{-1, -1, 2});
    CHECK(FieldElement::from_fractions(1, 2, 3, 4) == FieldElement{2, 3, 4});
    CHECK_THROWS_AS(FieldElement::make(1, 1, 0), Error);

    CHECK(add(FieldElement{1, 0, 2}, FieldElement{1, 0, 3}) == FieldElement{5, 0, 6});
    CHECK(sub(FieldElement{1, 1, 2}, RingElement{1, 0}) == FieldElement{-1, 1, 2});
}

TEST_CASE("field element comparison")
{
    CHECK(compare(FieldElement{1, 0, 2}, FieldElement{0, 1, 2}, kGolden) == -1);
    CHECK(compare(FieldElement::make(0, 0, 1), FieldElement::make(0, 0, 5), kGolden) == 0);
    CHECK(compare(FieldElement{0, 1, 2}, FieldElement{1, 0, 1}, kGolden) == -1);
    CHECK(compare(RingElement{0, 1}, FieldElement{0, 3, 2}, kGolden) == -1);
    CHECK(compare(RingElement{2, 0}, FieldElement{0, 1, 1}, kGolden) == 1);
}

TEST_CASE("floor and ceiling are exact")
{
    const FieldElement half_tau{0, 1, 2};
    CHECK(floor_value(half_tau, kGolden) == 0);
    CHECK(ceil_value(half_tau, kGolden) == 1);
    CHECK(floor_value(FieldElement{0, 1, 1}, kGolden) == 1);
    CHECK(ceil_value(FieldElement{0, 1, 1}, kGolden) == 2);
    CHECK(floor_value(FieldElement{0, -1, 1}, kGolden) == -2);
    CHECK(floor_value(FieldElement{5, 0, 1}, kGolden) == 5);
    CHECK(ceil_value(FieldElement{5, 0, 1}, kGolden) == 5);
    CHECK(floor_value(FieldElement{-7, 0, 2}, kGolden) == -4);

    std::mt19937_64 rng(42);
    for (int i = 0; i < 2000; ++i) {
        const auto p = static_cast<std::int64_t>(rng() % 2001) - 1000;
        const auto q = static_cast<std::int64_t>(rng() % 2001) - 1000;
        const auto r = static_cast<std::int64_t>(rng() % 50) + 1;
        const FieldElement x = FieldElement::make(p, q, r);
        const std::int64_t fl = floor_value(x, kSilver);
        CHECK(compare(FieldElement::from_int(fl), x, kSilver) <= 0);
        CHECK(compare(FieldElement::from_int(fl + 1), x, kSilver) > 0);
    }
}

TEST_CASE("star is an involutive ring automorphism")
{
    std::mt19937_64 rng(7);
    for (const QuadraticField& f :
         {kGolden, kSilver, QuadraticField(3, -1), QuadraticField(10, 1)}) {
        for (int i = 0; i < 2000; ++i) {
            const RingElement x = random_element(rng, 1'000'000);
            const RingElement y = random_element(rng, 1'000'000);
            CHECK(star(star(x, f), f) == x);
            CHECK(star(add(x, y), f) == add(star(x, f), star(y, f)));
            CHECK(star(mul(x, y, f), f) == mul(star(x, f), star(y, f), f));
        }
    }
}

TEST_CASE("norm x * star(x) is rational")
{
    std::mt19937_64 rng(11);
    for (const QuadraticField& f : {kGolden, kSilver, QuadraticField(4, -1)}) {
        for (int i = 0; i < 2000; ++i) {
            const RingElement x = random_element(rng, 1'000'000);
            const RingElement n = mul(x, star(x, f), f);
            CHECK(n.b == 0);
            const auto expected = static_cast<__int128>(x.a) * x.a +
                                  static_cast<__int128>(x.a) * x.b * f.m() -
                                  static_cast<__int128>(f.e()) * x.b * x.b;
            CHECK(static_cast<__int128>(n.a) == expected);
        }
    }
}

TEST_CASE("sign agrees with floating evaluation")
{
    std::mt19937_64 rng(13);
    for (const QuadraticField& f :
         {kGolden, kSilver, QuadraticField(3, -1), QuadraticField(10, -1)}) {
        for (int i = 0; i < 20000; ++i) {
            const RingElement x = random_element(rng, std::int64_t{1} << 31);
            const long double v = real_value(x, f);
            const long double margin =
                1e-9L * (std::fabs(static_cast<long double>(x.a)) +
                         std::fabs(static_cast<long double>(x.b)) * f.tau_approx() + 1.0L);
            if (std::fabs(v) > margin)
                CHECK(sign(x, f) == (v > 0 ? 1 : -1));
        }
    }
}

TEST_CASE("comparison is a strict total order")
{
    std::mt19937_64 rng(17);
    for (int i = 0; i < 2000; ++i) {
        const RingElement x = random_element(rng, 1000);
        const RingElement y = random_element(rng, 1000);
        const int cxy = compare(x, y, kGolden);
        CHECK(compare(y, x, kGolden) == -cxy);
        CHECK((cxy == 0) == (x == y));
    }
}
