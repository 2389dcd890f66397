#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "arrangetop/matrix.hpp"
#include "arrangetop/poly.hpp"
#include "arrangetop/scalar_io.hpp"

using namespace arrangetop;

namespace {

const std::vector<std::string> XYZ = {"x", "y", "z"};
const std::vector<std::string> UV = {"u", "v"};

MultiPoly lin(const CycNumber& a, const CycNumber& b, const CycNumber& c) {
    MultiPoly p(XYZ);
    p.add_term({1, 0, 0}, a);
    p.add_term({0, 1, 0}, b);
    p.add_term({0, 0, 1}, c);
    return p;
}

MultiPoly cube_diff(size_t i, size_t j) {
    // x_i^3 - x_j^3
    MultiPoly p(XYZ);
    MultiPoly::Exponents e(3, 0);
    e[i] = 3;
    p.add_term(e, CycNumber(1));
    e[i] = 0;
    e[j] = 3;
    p.add_term(e, CycNumber(-1));
    return p;
}

} // namespace

TEST_CASE("cube factorization over Q(zeta_3)") {
    CycNumber z = CycNumber::zeta(3);
    MultiPoly prod = lin(CycNumber(1), CycNumber(-1), CycNumber(0)) *
                     lin(CycNumber(1), -z, CycNumber(0)) * lin(CycNumber(1), -(z * z), CycNumber(0));
    CHECK(prod == cube_diff(0, 1));
}

TEST_CASE("Ceva defining polynomial as a product of linear forms") {
    CycNumber z = CycNumber::zeta(3);
    MultiPoly f = MultiPoly::constant(XYZ, CycNumber(1));
    for (size_t pair = 0; pair < 3; ++pair) {
        size_t i = pair == 2 ? 1 : 0;
        size_t j = pair == 0 ? 1 : 2;
        for (int a = 0; a < 3; ++a) {
            CycNumber coef[3] = {CycNumber(0), CycNumber(0), CycNumber(0)};
            coef[i] = CycNumber(1);
            coef[j] = -z.pow(a);
            f *= lin(coef[0], coef[1], coef[2]);
        }
    }
    MultiPoly expect = cube_diff(0, 1) * cube_diff(0, 2) * cube_diff(1, 2);
    CHECK(f == expect);
    CHECK(f.degree() == 9);
    CHECK(f.is_homogeneous());
}

TEST_CASE("partial derivative of u*v*(u+v)") {
    MultiPoly u = MultiPoly::variable(UV, 0), v = MultiPoly::variable(UV, 1);
    MultiPoly g = u * v * (u + v);
    MultiPoly gu = g.partial(0);
    MultiPoly expect(UV); // 2uv + v^2
    expect.add_term({1, 1}, CycNumber(2));
    expect.add_term({0, 2}, CycNumber(1));
    CHECK(gu == expect);
    CHECK(render_poly(gu) == "2*u*v + v^2");
    CHECK(render_poly(g) == "u^2*v + u*v^2");
}

TEST_CASE("substitution certifies a composition identity") {
    MultiPoly u = MultiPoly::variable(UV, 0), v = MultiPoly::variable(UV, 1);
    MultiPoly g = u * v * (u + v);
    MultiPoly q1 = cube_diff(0, 1); // x^3 - y^3
    MultiPoly q2 = cube_diff(1, 2); // y^3 - z^3
    MultiPoly composed = g.substitute({q1, q2});
    CHECK(composed == cube_diff(0, 1) * cube_diff(1, 2) * cube_diff(0, 2));
}

TEST_CASE("rank of identity and zero matrices") {
    CHECK(CycMatrix::identity(3).rank_kernel().rank == 3);
    CHECK(CycMatrix::identity(3).rank_kernel().kernel.empty());

    CycMatrix zero(2, 5);
    auto rk = zero.rank_kernel();
    CHECK(rk.rank == 0);
    CHECK(rk.kernel.size() == 5);
}

TEST_CASE("kernel vectors are exact solutions and rank is permutation invariant") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<long> entry(-4, 4);
    for (int it = 0; it < 25; ++it) {
        size_t rows = 4, cols = 6;
        CycMatrix m(rows, cols);
        CycNumber z = CycNumber::zeta(3);
        for (size_t i = 0; i < rows; ++i)
            for (size_t j = 0; j < cols; ++j)
                m.at(i, j) = CycNumber(entry(rng)) + z * CycNumber(entry(rng) % 2);

        auto rk = m.rank_kernel();
        CHECK(rk.rank + rk.kernel.size() == cols);
        for (const auto& v : rk.kernel) {
            for (const auto& y : m.apply(v)) CHECK(y.is_zero());
        }

        // permute rows and columns; rank must not change
        std::vector<size_t> rp(rows), cp(cols);
        std::iota(rp.begin(), rp.end(), 0);
        std::iota(cp.begin(), cp.end(), 0);
        std::shuffle(rp.begin(), rp.end(), rng);
        std::shuffle(cp.begin(), cp.end(), rng);
        CycMatrix p(rows, cols);
        for (size_t i = 0; i < rows; ++i)
            for (size_t j = 0; j < cols; ++j) p.at(i, j) = m.at(rp[i], cp[j]);
        CHECK(p.rank_kernel().rank == rk.rank);
    }
}

TEST_CASE("polynomial rendering with cyclotomic coefficients") {
    MultiPoly p(UV);
    p.add_term({2, 0}, CycNumber::zeta(3));
    p.add_term({0, 1}, CycNumber(1) + CycNumber::zeta(3));
    p.add_term({0, 0}, CycNumber(Rational(-2, 3)));
    CHECK(render_poly(p) == "z*u^2 + (z + 1)*v - 2/3");
}
