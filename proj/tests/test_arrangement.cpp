#include <doctest.h>

#include <algorithm>
#include <random>

#include "arrangetop/arrangement.hpp"

using namespace arrangetop;

namespace {

std::vector<Arrangement> catalog() {
    std::vector<Arrangement> list;
    list.push_back(ceva3());
    list.push_back(triangle());
    list.push_back(central(3));
    list.push_back(central(4));
    list.push_back(generic_arrangement(4));
    list.push_back(generic_arrangement(5));
    return list;
}

} // namespace

TEST_CASE("Ceva arrangement has nine lines and the right polynomial") {
    Arrangement a = ceva3();
    CHECK(a.size() == 9);
    MultiPoly f = a.defining_polynomial();
    // (x^3 - y^3)(x^3 - z^3)(y^3 - z^3)
    const std::vector<std::string> XYZ = {"x", "y", "z"};
    auto cube = [&](int i, int j) {
        MultiPoly p(XYZ);
        MultiPoly::Exponents e(3, 0);
        e[i] = 3;
        p.add_term(e, CycNumber(1));
        e[i] = 0;
        e[j] = 3;
        p.add_term(e, CycNumber(-1));
        return p;
    };
    CHECK(f == cube(0, 1) * cube(0, 2) * cube(1, 2));
}

TEST_CASE("duplicate and zero forms are rejected") {
    CycNumber one(1), zero(0);
    CHECK_THROWS_AS(build_arrangement({LinearForm(one, zero, zero), LinearForm(one, zero, zero)}),
                    DuplicateLine);
    // projective duplicates: x and 2x
    CHECK_THROWS_AS(build_arrangement({LinearForm(one, zero, zero), LinearForm(CycNumber(2), zero, zero)}),
                    DuplicateLine);
    CHECK_THROWS_AS(LinearForm(zero, zero, zero), InvalidForm);
}

TEST_CASE("Ceva lattice: twelve triple points, no double points") {
    Arrangement a = ceva3();
    const auto& lat = a.lattice();
    CHECK(lat.points.size() == 12);
    CHECK(lat.count_of_multiplicity(3) == 12);
    CHECK(lat.count_of_multiplicity(2) == 0);
    // each line carries four triple points
    for (int i = 1; i <= 9; ++i) {
        size_t on_line = 0;
        for (const auto& p : lat.points)
            on_line += std::binary_search(p.incident.begin(), p.incident.end(), i) ? 1 : 0;
        CHECK(on_line == 4);
    }
}

TEST_CASE("triangle and near-pencil lattices") {
    CHECK(triangle().lattice().points.size() == 3);
    CHECK(triangle().lattice().count_of_multiplicity(2) == 3);

    // x, y, x+y, x-y all pass through [0:0:1]
    CycNumber one(1), zero(0);
    Arrangement a = build_arrangement({LinearForm(one, zero, zero), LinearForm(zero, one, zero),
                                       LinearForm(one, one, zero), LinearForm(one, -one, zero)});
    const auto& lat = a.lattice();
    REQUIRE(lat.points.size() == 1);
    CHECK(lat.points[0].multiplicity() == 4);
    CHECK(lat.points[0].point ==
          ProjPoint::canonical({CycNumber(0), CycNumber(0), CycNumber(1)}));
    CHECK(a.is_central());
}

TEST_CASE("centrality of catalog members") {
    CHECK_FALSE(ceva3().is_central());
    CHECK_FALSE(triangle().is_central());
    CHECK(central(4).is_central());
    CHECK_FALSE(generic_arrangement(4).is_central());
}

TEST_CASE("Euler characteristic of the complement") {
    CycNumber one(1), zero(0);
    Arrangement single = build_arrangement({LinearForm(one, zero, zero)});
    CHECK(single.euler_complement() == 1);
    CHECK(triangle().euler_complement() == 0);
    CHECK(ceva3().euler_complement() == 9);
}

TEST_CASE("lattice invariants across the catalog") {
    std::mt19937 rng(5);
    for (const auto& a : catalog()) {
        const size_t d = a.size();
        const auto& lat = a.lattice();
        size_t pairs = 0;
        bool has_full = false;
        for (const auto& p : lat.points) {
            pairs += p.multiplicity() * (p.multiplicity() - 1) / 2;
            if (p.multiplicity() == d) has_full = true;
        }
        CHECK(pairs == d * (d - 1) / 2);
        CHECK(a.is_central() == has_full);

        // permuting the lines yields the same lattice up to relabeling
        std::vector<int> perm(d);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<LinearForm> shuffled;
        for (int i : perm) shuffled.push_back(a.lines()[i]);
        Arrangement b = build_arrangement(std::move(shuffled));
        const auto& latb = b.lattice();
        REQUIRE(latb.points.size() == lat.points.size());
        for (size_t k = 0; k < lat.points.size(); ++k) {
            CHECK(lat.points[k].point == latb.points[k].point);
            CHECK(lat.points[k].multiplicity() == latb.points[k].multiplicity());
        }
    }
}

TEST_CASE("generic arrangements have only double points") {
    for (int k = 3; k <= 6; ++k) {
        Arrangement a = generic_arrangement(k);
        const auto& lat = a.lattice();
        CHECK(lat.points.size() == static_cast<size_t>(k * (k - 1) / 2));
        CHECK(lat.count_of_multiplicity(2) == lat.points.size());
    }
}

TEST_CASE("arrangement file round-trip") {
    for (const auto& a : catalog()) {
        Arrangement b = parse_arrangement(emit_arrangement(a));
        REQUIRE(a.size() == b.size());
        for (size_t i = 0; i < a.size(); ++i) CHECK(a.lines()[i] == b.lines()[i]);
    }
}

TEST_CASE("arrangement file errors carry positions") {
    CHECK_THROWS_AS(parse_arrangement("conductor 3\n1, 0\n"), ParseError);
    CHECK_THROWS_AS(parse_arrangement("1, 0, 0\n"), ParseError);
    CHECK_THROWS_AS(parse_arrangement("conductor 3\n0, 0, 0\n"), ParseError);
    CHECK_THROWS_AS(parse_arrangement("conductor 3\n1, 0, 0\n1, 0, 0\n"), DuplicateLine);
    Arrangement t = parse_arrangement("conductor 1\n# a comment\n1,0,0\n0,1,0\n0,0,1\n");
    CHECK(t.size() == 3);
}

TEST_CASE("builtin lookup") {
    CHECK(builtin_arrangement("ceva3").size() == 9);
    CHECK(builtin_arrangement("central(5)").size() == 5);
    CHECK(builtin_arrangement("generic(6)").size() == 6);
    CHECK_THROWS_AS(builtin_arrangement("nope"), UnknownBuiltin);
    CHECK_THROWS_AS(builtin_arrangement("central(x)"), UnknownBuiltin);
}
