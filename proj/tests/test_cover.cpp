#include <doctest.h>

#include <numeric>

#include "arrangetop/cover.hpp"

using namespace arrangetop;

namespace {

int point_index_of(const Arrangement& a, const ProjPoint& p) {
    const auto& lat = a.lattice();
    for (size_t i = 0; i < lat.points.size(); ++i)
        if (lat.points[i].point == p) return static_cast<int>(i);
    return -1;
}

} // namespace

TEST_CASE("boundary loops read off incidences") {
    Arrangement c = ceva3();
    // [1:1:1] is a base point of the Ceva pencil
    int idx = point_index_of(c, ProjPoint::canonical({CycNumber(1), CycNumber(1), CycNumber(1)}));
    REQUIRE(idx >= 0);
    LoopClass loop = boundary_loop(c, idx);
    CHECK(loop.r_value(9) == 3);

    // an elementary loop about a single line
    LoopClass elem;
    elem.coefficients.assign(9, 0);
    elem.coefficients[4] = 1;
    CHECK(elem.r_value(9) == 1);

    Arrangement t = triangle();
    CHECK(boundary_loop(t, 0).r_value(3) == 2);
}

TEST_CASE("R is additive on loop classes") {
    Arrangement c = ceva3();
    LoopClass sum;
    sum.coefficients.assign(9, 0);
    long plain = 0;
    for (int p = 0; p < 4; ++p) {
        LoopClass lp = boundary_loop(c, p);
        plain += lp.r_value(9);
        for (size_t i = 0; i < 9; ++i) sum.coefficients[i] += lp.coefficients[i];
    }
    CHECK(sum.r_value(9) == plain % 9);
}

TEST_CASE("boundary loop R-value is the multiplicity mod d") {
    for (Arrangement a : {ceva3(), triangle(), central(5), generic_arrangement(5)}) {
        long d = static_cast<long>(a.size());
        const auto& lat = a.lattice();
        for (size_t p = 0; p < lat.points.size(); ++p) {
            CHECK(boundary_loop(a, static_cast<int>(p)).r_value(d) ==
                  static_cast<long>(lat.points[p].multiplicity()) % d);
        }
    }
}

TEST_CASE("orbit counts") {
    CHECK(orbit_count(9, {3}) == 3);
    CHECK(orbit_count(9, {1}) == 1);
    CHECK(orbit_count(9, {}) == 9);
    CHECK(orbit_count(12, {8, 6}) == 2);
}

TEST_CASE("orbit count times subgroup order is d") {
    // exhaustive over all subsets for small d
    for (long d = 1; d <= 12; ++d) {
        for (long mask = 0; mask < (1L << d); ++mask) {
            std::vector<long> vals;
            for (long v = 0; v < d; ++v)
                if (mask & (1L << v)) vals.push_back(v);
            long orbits = orbit_count(d, vals);
            long g = d;
            for (long v : vals) g = std::gcd(g, v);
            long order = d / g;
            CHECK(orbits * order == d);
        }
    }
    // singletons and pairs for larger d
    for (long d = 13; d <= 100; ++d) {
        for (long v = 0; v < d; ++v) CHECK(orbit_count(d, {v}) * (d / std::gcd(d, v)) == d);
        for (long v = 0; v < d; v += 7)
            for (long w = 0; w < d; w += 11)
                CHECK(orbit_count(d, {v, w}) == std::gcd(std::gcd(d, v), w));
    }
}

TEST_CASE("global fiber connectivity of the Ceva pencil") {
    Arrangement c = ceva3();
    NetPartition net;
    net.blocks = {{1, 2, 3}, {7, 8, 9}, {4, 5, 6}};
    Pencil p = pencil_from_net(c, net);
    ConnectivityVerdict v = global_fiber_connectivity(c, p);
    CHECK(v.components == 1);
    REQUIRE(!v.rationale.empty());
    CHECK(v.rationale[0].find("3") != std::string::npos);
}

TEST_CASE("global fiber connectivity of a central pencil with simple base point") {
    Arrangement a = central(4);
    NetPartition net;
    net.blocks = {{1}, {2}, {3}, {4}};
    Pencil p = pencil_from_net(a, net);
    ConnectivityVerdict v = global_fiber_connectivity(a, p);
    CHECK(v.components == 1);
}

TEST_CASE("exponent-2 pencils are rejected by the connectivity verdict") {
    CycNumber one(1), zero(0), i4 = CycNumber::zeta(4);
    Arrangement a = build_arrangement({
        LinearForm(one, zero, zero),
        LinearForm(zero, one, zero),
        LinearForm(one, i4, zero),
        LinearForm(one, -i4, zero),
        LinearForm(one, one, zero),
    });
    NetPartition net;
    net.blocks = {{1, 2}, {3, 4}, {5}};
    net.exponents[5] = 2;
    Pencil p = pencil_from_net(a, net);
    CHECK_THROWS_AS(global_fiber_connectivity(a, p), PropositionHypothesesNotMet);
}

TEST_CASE("local fiber connectivity") {
    Arrangement c = ceva3();
    ConnectivityVerdict v = local_fiber_connectivity(c, 0); // any triple point
    CHECK(v.components == 1);

    Arrangement a = central(4);
    ConnectivityVerdict vc = local_fiber_connectivity(a, 0);
    CHECK(vc.components == 4);

    Arrangement t = triangle();
    CHECK_THROWS_AS(local_fiber_connectivity(t, 0), NotAdmissible);
}
