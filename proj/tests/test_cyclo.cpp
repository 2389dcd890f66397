#include <doctest.h>

#include <random>

#include "arrangetop/cyclotomic.hpp"
#include "arrangetop/scalar_io.hpp"

using namespace arrangetop;

namespace {

CycNumber random_cyc(std::mt19937& rng, long conductor) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 9);
    std::vector<Rational> c(euler_phi(conductor));
    for (auto& q : c) {
        q = Rational(num(rng), den(rng));
        q.canonicalize();
    }
    return CycNumber::from_coeffs(conductor, std::move(c));
}

} // namespace

TEST_CASE("zeta_3 satisfies its minimal polynomial") {
    CycNumber z = CycNumber::zeta(3);
    CHECK((z * z + z + CycNumber(1)).is_zero());
    CHECK(CycNumber::zeta(3, 3) == CycNumber(1));
}

TEST_CASE("inverse of 1 + zeta_3") {
    CycNumber z = CycNumber::zeta(3);
    CycNumber a = CycNumber(1) + z;
    CycNumber b = a.inv();
    CHECK(a * b == CycNumber(1));
    CHECK(b == -z);
}

TEST_CASE("conjugation sends zeta_5 to zeta_5^4") {
    CHECK(CycNumber::zeta(5).conj() == CycNumber::zeta(5, 4));
    CHECK(CycNumber::zeta(5).conj() == CycNumber::zeta(5).pow(-1));
}

TEST_CASE("inversion of zero fails") {
    CHECK_THROWS_AS(CycNumber(0).inv(), DivisionByZero);
}

TEST_CASE("sign of real cyclotomic numbers") {
    CycNumber z3 = CycNumber::zeta(3);
    CHECK(sign_real(z3.real_part()) == -1); // Re(zeta_3) = -1/2
    CHECK(z3.real_part() == CycNumber(Rational(-1, 2)));
    CHECK(sign_real(CycNumber(0)) == 0);

    CycNumber c = CycNumber::zeta(5) + CycNumber::zeta(5, 4); // 2 cos(2 pi / 5)
    CHECK(sign_real(c) == 1);

    CHECK_THROWS_AS(sign_real(CycNumber::zeta(5)), NotReal);
}

TEST_CASE("sign is odd under negation") {
    std::mt19937 rng(2024);
    for (long n : {1L, 3L, 4L, 9L, 12L}) {
        for (int it = 0; it < 40; ++it) {
            CycNumber a = random_cyc(rng, n);
            CycNumber r = a.real_part();
            if (r.is_zero()) continue;
            CHECK(sign_real(r) * sign_real(-r) == -1);
        }
    }
}

TEST_CASE("rational bounds enclose the value strictly") {
    CycNumber c = CycNumber::zeta(5) + CycNumber::zeta(5, 4); // (sqrt(5)-1)/2 > 0
    auto [lo, hi] = rational_bounds(c, 64);
    CHECK(lo < hi);
    CHECK(sign_real(c - CycNumber(lo)) == 1);
    CHECK(sign_real(CycNumber(hi) - c) == 1);
}

TEST_CASE("field axioms on random triples") {
    std::mt19937 rng(7);
    int cases = 0;
    for (long n : {1L, 3L, 4L, 9L, 12L}) {
        for (int it = 0; it < 70; ++it) {
            CycNumber a = random_cyc(rng, n);
            CycNumber b = random_cyc(rng, n);
            CycNumber c = random_cyc(rng, n);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            if (!a.is_zero()) CHECK(a * a.inv() == CycNumber(1));
            CHECK((a * b).conj() == a.conj() * b.conj());
            cases += 5;
        }
    }
    CHECK(cases >= 1000);
}

TEST_CASE("coercion is a ring embedding") {
    std::mt19937 rng(99);
    for (int it = 0; it < 50; ++it) {
        CycNumber a = random_cyc(rng, 3);
        CycNumber b = random_cyc(rng, 3);
        CHECK((a * b).coerced(9) == a.coerced(9) * b.coerced(9));
        CHECK((a + b).coerced(9) == a.coerced(9) + b.coerced(9));
        CHECK((CycNumber::cmp(a, b) == 0) == (a.coerced(9) == b.coerced(9)));
    }
    // zeta_3 viewed inside Q(zeta_9)
    CHECK(CycNumber::zeta(3).coerced(9) == CycNumber::zeta(9, 3));
}

TEST_CASE("mixed-conductor arithmetic lands in the lcm field") {
    CycNumber a = CycNumber::zeta(3) + CycNumber::zeta(4);
    CHECK(a.conductor() == 12);
    CHECK(a - CycNumber::zeta(4) == CycNumber::zeta(3).coerced(12));
}

TEST_CASE("real and imaginary parts") {
    CycNumber z = CycNumber::zeta(12, 5);
    CycNumber re = z.real_part(), im = z.imag_part();
    CHECK(re.is_real());
    CHECK(im.is_real());
    CHECK(re + im * CycNumber::zeta(4) == z);
}

TEST_CASE("scalar literals parse and render canonically") {
    CycNumber v = parse_scalar("1/2*z^2 - 3", 5);
    CycNumber expect = CycNumber(Rational(1, 2)) * CycNumber::zeta(5, 2) - CycNumber(3);
    CHECK(v == expect);
    CHECK(render_scalar(v) == "1/2*z^2 - 3");
    CHECK(parse_scalar(render_scalar(v), 5) == v);

    CHECK(parse_scalar("z^4", 5) == CycNumber::zeta(5, 4));
    CHECK(parse_scalar("-z + 1", 7) == CycNumber(1) - CycNumber::zeta(7));
    CHECK(parse_scalar("2^3", 1) == CycNumber(8));
    CHECK(parse_scalar("(1 - z)*(1 - z^2)", 3) == (CycNumber(1) - CycNumber::zeta(3)) *
                                                      (CycNumber(1) - CycNumber::zeta(3, 2)));
    CHECK(render_scalar(CycNumber(0)) == "0");

    CHECK_THROWS_AS(parse_scalar("1 +", 3), ParseError);
    CHECK_THROWS_AS(parse_scalar("(z", 3), ParseError);
    CHECK_THROWS_AS(parse_scalar("q", 3), ParseError);
}
