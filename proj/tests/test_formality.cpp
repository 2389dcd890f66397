#include <doctest.h>

#include <algorithm>
#include <random>

#include "arrangetop/formality.hpp"

using namespace arrangetop;

namespace {

FiberMHS hand_mhs(long d, long h11, long w1, std::vector<long> support) {
    FiberMHS fm;
    fm.d = d;
    fm.h11F = h11;
    fm.w1F = w1;
    fm.w1_h10 = w1 / 2;
    fm.nontrivial_exponents = std::move(support);
    return fm;
}

TangentConeComponent hand_E(size_t e11, size_t e10, size_t e01, size_t k) {
    TangentConeComponent E;
    E.e11 = e11;
    E.e10 = e10;
    E.e01 = e01;
    E.k = k;
    E.chi = 1 - static_cast<long>((k - 1) * (k - 1));
    return E;
}

} // namespace

TEST_CASE("fiber MHS of the Ceva spectrum") {
    FiberMHS fm = fiber_mhs(milnor_spectrum(ceva3()));
    CHECK(fm.h11F == 8);
    CHECK(fm.w1F == 4);
    CHECK(fm.w1_h10 == 2);
    CHECK(fm.nontrivial_exponents == std::vector<long>{3, 6});
}

TEST_CASE("fiber MHS of the triangle spectrum") {
    FiberMHS fm = fiber_mhs(milnor_spectrum(triangle()));
    CHECK(fm.h11F == 2);
    CHECK(fm.w1F == 0);
    CHECK(fm.nontrivial_exponents.empty());
}

TEST_CASE("odd weight-1 dimension is rejected") {
    Spectrum s;
    s.d = 2;
    s.dims = {1, 1};
    s.b1F = 2;
    s.monodromy_order = 2;
    CHECK_THROWS_AS(fiber_mhs(s), InconsistentSpectrum);
}

TEST_CASE("the obstruction fires on the Ceva dimensions") {
    ObstructionReport r = obstruction_test(hand_E(2, 1, 1, 3), hand_mhs(9, 8, 4, {3, 6}));
    CHECK(r.verdict == ObstructionReport::Verdict::NotOneFormal);
    CHECK(r.witness_w1_h10 == 2);
    CHECK(r.witness_e10 == 1);
    CHECK(r.witness_w1_h10 > r.witness_e10); // the report re-derives its own inequality
    CHECK(!r.assumptions.empty());
}

TEST_CASE("no weight-1 part means no obstruction") {
    ObstructionReport r = obstruction_test(hand_E(2, 1, 1, 3), hand_mhs(3, 2, 0, {}));
    CHECK(r.verdict == ObstructionReport::Verdict::Inconclusive);
}

TEST_CASE("boundary case: equal dimensions do not separate the components") {
    ObstructionReport r = obstruction_test(hand_E(3, 3, 3, 4), hand_mhs(9, 8, 6, {3, 6}));
    CHECK(r.verdict == ObstructionReport::Verdict::Inconclusive);
}

TEST_CASE("more than two non-unit eigenvalues defeats the cup rule") {
    ObstructionReport r = obstruction_test(hand_E(2, 1, 1, 3), hand_mhs(8, 7, 6, {1, 4, 7}));
    CHECK(r.verdict == ObstructionReport::Verdict::Inconclusive);
}

TEST_CASE("non-general-type components are rejected") {
    CHECK_THROWS_AS(obstruction_test(hand_E(1, 0, 0, 2), hand_mhs(9, 8, 4, {3, 6})),
                    NotGeneralType);
}

TEST_CASE("every assumption carries a citation") {
    ObstructionReport r = obstruction_test(hand_E(2, 1, 1, 3), hand_mhs(9, 8, 4, {3, 6}));
    for (const auto& s : r.assumptions) {
        CHECK(s.find('(') != std::string::npos);
        CHECK(s.find(')') != std::string::npos);
    }
}

TEST_CASE("the Ceva arrangement is not 1-formal") {
    FormalityAnalysis analysis = analyze_formality(ceva3());
    CHECK(analysis.verdict.verdict == ObstructionReport::Verdict::NotOneFormal);
    CHECK(analysis.verdict.witness_w1_h10 == 2);
    CHECK(analysis.verdict.witness_e10 == 1);
    CHECK(analysis.fiber.w1F == 4);
    REQUIRE(analysis.verdict.has_pencil);
    CHECK(analysis.verdict.winning_net.blocks.size() == 3);

    // four certified full-support pencils, all of which obstruct
    CHECK(analysis.candidates.size() == 4);
    for (const auto& cand : analysis.candidates) {
        CHECK(cand.certified);
        CHECK(cand.test.verdict == ObstructionReport::Verdict::NotOneFormal);
        CHECK(cand.E.e11 == 2);
    }
}

TEST_CASE("verdicts for arrangements without usable pencils") {
    CHECK(formality_report(triangle()).verdict == ObstructionReport::Verdict::Inconclusive);
    CHECK(formality_report(generic_arrangement(5)).verdict ==
          ObstructionReport::Verdict::Inconclusive);
}

TEST_CASE("a central pencil certifies but does not obstruct") {
    FormalityAnalysis analysis = analyze_formality(central(4));
    REQUIRE(analysis.candidates.size() == 1);
    CHECK(analysis.candidates[0].certified);
    CHECK(analysis.verdict.verdict == ObstructionReport::Verdict::Inconclusive);
}

TEST_CASE("the verdict is invariant under reordering the input lines") {
    std::mt19937 rng(17);
    Arrangement c = ceva3();
    for (int trial = 0; trial < 3; ++trial) {
        std::vector<LinearForm> lines(c.lines().begin(), c.lines().end());
        std::shuffle(lines.begin(), lines.end(), rng);
        Arrangement shuffled = build_arrangement(std::move(lines));
        CHECK(formality_report(shuffled).verdict == ObstructionReport::Verdict::NotOneFormal);
    }
}
