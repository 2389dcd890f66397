#include <doctest.h>

#include "arrangetop/fiber.hpp"

using namespace arrangetop;

namespace {

Arrangement three_concurrent_plus_infinity() {
    CycNumber one(1), zero(0);
    return build_arrangement({LinearForm(one, zero, zero), LinearForm(zero, one, zero),
                              LinearForm(one, one, zero), LinearForm(zero, zero, one)});
}

std::vector<long> generator_exponent_sums(const std::vector<int>& relator, int n) {
    std::vector<long> sums(n, 0);
    for (int letter : relator) sums[std::abs(letter) - 1] += letter > 0 ? 1 : -1;
    return sums;
}

} // namespace

TEST_CASE("node presentation is the free abelian group of rank two") {
    GroupPresentation pres = complement_presentation(triangle());
    CHECK(pres.n == 2);
    REQUIRE(pres.relators.size() == 1);
    // the relator abelianizes to zero: the group is Z^2
    CHECK(generator_exponent_sums(pres.relators[0], 2) == std::vector<long>{0, 0});
    CHECK(local_system_h1(pres, character(3, 0)) == 2);
}

TEST_CASE("three concurrent lines: abelianization is free of rank three") {
    GroupPresentation pres = complement_presentation(three_concurrent_plus_infinity(), 4);
    CHECK(pres.n == 3);
    CHECK(pres.relators.size() == 2);
    for (const auto& r : pres.relators)
        CHECK(generator_exponent_sums(r, 3) == std::vector<long>{0, 0, 0});
}

TEST_CASE("relators abelianize to zero on the whole catalog") {
    for (const Arrangement& a :
         {ceva3(), triangle(), central(4), generic_arrangement(4), generic_arrangement(5)}) {
        GroupPresentation pres = complement_presentation(a);
        for (const auto& r : pres.relators) {
            auto sums = generator_exponent_sums(r, pres.n);
            for (long s : sums) CHECK(s == 0);
        }
    }
}

TEST_CASE("Fox derivatives of a commutator relator") {
    GroupPresentation pres;
    pres.n = 2;
    pres.relators = {{1, 2, -1, -2}};
    Character chi = character(5, 1);
    CycMatrix jac = fox_jacobian(pres, chi);
    CHECK(jac.at(0, 0) == CycNumber(1) - chi.lambda);
    CHECK(jac.at(0, 1) == chi.lambda - CycNumber(1));

    // at lambda = 1 the row vanishes exactly
    CycMatrix at_one = fox_jacobian(pres, character(5, 0));
    CHECK(at_one.at(0, 0).is_zero());
    CHECK(at_one.at(0, 1).is_zero());

    // an unbalanced relator does not vanish at lambda = 1
    GroupPresentation unbal;
    unbal.n = 2;
    unbal.relators = {{1, 2, -1}};
    CHECK_FALSE(fox_jacobian(unbal, character(5, 0)).at(0, 1).is_zero());
}

TEST_CASE("Ceva presentation and twisted ranks") {
    Arrangement c = ceva3();
    GroupPresentation pres = complement_presentation(c, 1);
    CHECK(pres.n == 8);
    CHECK(pres.relators.size() == 16);
    // 1 - n + s = chi(M)
    CHECK(1 - pres.n + static_cast<int>(pres.relators.size()) == c.euler_complement());

    CHECK(fox_jacobian(pres, character(9, 3)).rank_kernel().rank == 5);
    CHECK(local_system_h1(pres, character(9, 0)) == 8);
    CHECK(local_system_h1(pres, character(9, 3)) == 2);
    CHECK(local_system_h1(pres, character(9, 1)) == 0);
}

TEST_CASE("Milnor fiber spectrum of the Ceva arrangement") {
    Spectrum s = milnor_spectrum(ceva3());
    CHECK(s.d == 9);
    CHECK(s.monodromy_order == 9);
    CHECK(s.dims == std::vector<int>{8, 0, 0, 2, 0, 0, 2, 0, 0});
    CHECK(s.b1F == 12);
}

TEST_CASE("small catalog spectra") {
    Spectrum t = milnor_spectrum(triangle());
    CHECK(t.dims == std::vector<int>{2, 0, 0});
    CHECK(t.b1F == 2);

    Arrangement single = build_arrangement({LinearForm(CycNumber(1), CycNumber(0), CycNumber(0))});
    Spectrum s1 = milnor_spectrum(single);
    CHECK(s1.dims == std::vector<int>{0});
    CHECK(s1.b1F == 0);

    Spectrum s2 = milnor_spectrum(central(2));
    CHECK(s2.dims == std::vector<int>{1, 0});
    CHECK(s2.b1F == 1);

    // three concurrent lines: the Milnor fiber of a binary cubic form
    Spectrum s3 = milnor_spectrum(central(3));
    CHECK(s3.dims == std::vector<int>{2, 1, 1});
    CHECK(s3.b1F == 4);
}

TEST_CASE("spectrum is independent of the deconing choice") {
    Arrangement c = ceva3();
    Spectrum reference = milnor_spectrum(c, 1);
    for (int inf = 2; inf <= 9; ++inf) {
        Spectrum s = milnor_spectrum(c, inf);
        CHECK(s.dims == reference.dims);
    }
}

TEST_CASE("spectrum is independent of basepoint and projection choices") {
    Arrangement c = ceva3();
    Spectrum reference = milnor_spectrum(c);
    BraidOptions far;
    far.extra_left = 11;
    far.extra_below = 3;
    CHECK(milnor_spectrum(c, 0, far).dims == reference.dims);
    BraidOptions dir;
    dir.first_direction = 2;
    CHECK(milnor_spectrum(c, 0, dir).dims == reference.dims);
}

TEST_CASE("cyclic cover oracle agrees with the spectrum") {
    CHECK(spectrum_crosscheck(triangle()));
    CHECK(spectrum_crosscheck(central(2)));
    CHECK(spectrum_crosscheck(central(3)));
    CHECK(spectrum_crosscheck(central(4)));
    CHECK(spectrum_crosscheck(generic_arrangement(4)));
    CHECK(spectrum_crosscheck(generic_arrangement(5)));
    CHECK(spectrum_crosscheck(three_concurrent_plus_infinity()));
}

TEST_CASE("cyclic cover oracle on the Ceva arrangement") {
    CHECK(spectrum_crosscheck(ceva3()));
}

TEST_CASE("conjugation symmetry and unit eigenvalue dimension on the catalog") {
    for (const Arrangement& a :
         {ceva3(), triangle(), central(3), central(5), generic_arrangement(5)}) {
        Spectrum s = milnor_spectrum(a);
        long d = s.d;
        CHECK(s.dims[0] == static_cast<int>(d - 1));
        for (long e = 1; e < d; ++e) CHECK(s.dims[e] == s.dims[d - e]);
        long total = 0;
        for (int v : s.dims) total += v;
        CHECK(total == s.b1F);
    }
}
