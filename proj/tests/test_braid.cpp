#include <doctest.h>

#include <map>

#include "arrangetop/braid.hpp"

using namespace arrangetop;

namespace {

Arrangement three_concurrent_plus_infinity() {
    CycNumber one(1), zero(0);
    return build_arrangement({LinearForm(one, zero, zero), LinearForm(zero, one, zero),
                              LinearForm(one, one, zero), LinearForm(zero, zero, one)});
}

long total_exponent_sum(const MonodromyData& md) {
    long s = 0;
    for (const auto& e : md.events) s += e.braid.exponent_sum();
    return s;
}

} // namespace

TEST_CASE("deconing the Ceva arrangement") {
    Arrangement c = ceva3();
    AffineArrangement aa = decone(c, 1);
    CHECK(aa.lines.size() == 8);
    CHECK(aa.parallel_classes.size() == 4); // line 1 carries four triple points
    for (const auto& cls : aa.parallel_classes) CHECK(cls.size() == 2);

    auto pts = affine_points(aa);
    CHECK(pts.size() == 8); // 12 triple points minus the 4 on the removed line
    for (const auto& p : pts) CHECK(p.lines.size() == 3);
}

TEST_CASE("deconing small arrangements") {
    AffineArrangement t = decone(triangle(), 3);
    CHECK(t.lines.size() == 2);
    CHECK(t.parallel_classes.empty());
    CHECK(affine_points(t).size() == 1);

    Arrangement two = central(2); // {x, y}
    AffineArrangement s = decone(two, 2);
    CHECK(s.lines.size() == 1);
    CHECK(affine_points(s).empty());

    // all lines of a central arrangement pass through the removed line
    AffineArrangement par = decone(central(3), 1);
    CHECK(par.lines.size() == 2);
    CHECK(par.parallel_classes.size() == 1);
    CHECK(affine_points(par).empty());
}

TEST_CASE("a node gives the full positive twist on two strands") {
    MonodromyData md = braid_monodromy(decone(triangle(), 3));
    CHECK(md.strands == 2);
    REQUIRE(md.events.size() == 1);
    CHECK(md.events[0].braid.letters == std::vector<int>{1, 1});
    CHECK(md.events[0].point.lines.size() == 2);
}

TEST_CASE("three concurrent affine lines give a full twist on three strands") {
    MonodromyData md = braid_monodromy(decone(three_concurrent_plus_infinity(), 4));
    CHECK(md.strands == 3);
    REQUIRE(md.events.size() == 1);
    const BraidWord& b = md.events[0].braid;
    CHECK(b.is_pure());
    CHECK(b.exponent_sum() == 6);
    CHECK(md.events[0].point.lines == std::vector<int>{1, 2, 3});
}

TEST_CASE("Ceva braid monodromy satisfies the lattice identities") {
    Arrangement c = ceva3();
    AffineArrangement aa = decone(c, 1);
    MonodromyData md = braid_monodromy(aa);
    CHECK(md.strands == 8);
    REQUIRE(md.events.size() == 8);
    for (const auto& e : md.events) {
        CHECK(e.point.lines.size() == 3);
        CHECK(e.braid.is_pure());
        CHECK(e.braid.exponent_sum() == 6); // m(m-1) with m = 3
    }
    CHECK(total_exponent_sum(md) == 48);
}

TEST_CASE("exponent sums match the affine lattice for every deconing choice") {
    Arrangement c = ceva3();
    for (int inf = 1; inf <= 9; ++inf) {
        AffineArrangement aa = decone(c, inf);
        auto pts = affine_points(aa);
        long expected = 0;
        for (const auto& p : pts)
            expected += static_cast<long>(p.lines.size() * (p.lines.size() - 1));
        MonodromyData md = braid_monodromy(aa);
        CHECK(total_exponent_sum(md) == expected);
        for (const auto& e : md.events) CHECK(e.braid.is_pure());
    }
}

TEST_CASE("generic arrangement braids are nodal") {
    AffineArrangement aa = decone(generic_arrangement(5), 5);
    MonodromyData md = braid_monodromy(aa);
    CHECK(md.events.size() == 6); // C(4,2) affine double points
    for (const auto& e : md.events) {
        CHECK(e.point.lines.size() == 2);
        CHECK(e.braid.exponent_sum() == 2);
        CHECK(e.braid.is_pure());
    }
}

TEST_CASE("monodromy output is deterministic") {
    Arrangement c = ceva3();
    MonodromyData a = braid_monodromy(decone(c, 2));
    MonodromyData b = braid_monodromy(decone(c, 2));
    REQUIRE(a.events.size() == b.events.size());
    CHECK(a.strand_lines == b.strand_lines);
    for (size_t i = 0; i < a.events.size(); ++i) {
        CHECK(a.events[i].braid.letters == b.events[i].braid.letters);
        CHECK(a.events[i].point.x == b.events[i].point.x);
    }
}

TEST_CASE("invariants are stable under basepoint and direction changes") {
    Arrangement c = ceva3();
    AffineArrangement aa = decone(c, 1);
    std::map<std::string, MonodromyData> runs;
    runs["default"] = braid_monodromy(aa);
    BraidOptions far;
    far.extra_left = 7;
    far.extra_below = 5;
    runs["far basepoint"] = braid_monodromy(aa, far);
    BraidOptions dir;
    dir.first_direction = 1;
    runs["second direction"] = braid_monodromy(aa, dir);

    for (const auto& [name, md] : runs) {
        CAPTURE(name);
        CHECK(total_exponent_sum(md) == 48);
        for (const auto& e : md.events) CHECK(e.braid.is_pure());
    }
}
