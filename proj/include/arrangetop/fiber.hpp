#pragma once

#include "arrangetop/braid.hpp"
#include "arrangetop/matrix.hpp"

namespace arrangetop {

/// Presentation of the fundamental group of the affine complement: one
/// generator per strand at the basepoint, braid-action relators from each
/// monodromy event with one redundant relator dropped.
struct GroupPresentation {
    int n = 0;                              // generator count (d - 1)
    std::vector<int> generator_lines;       // generator -> original line index
    std::vector<std::vector<int>> relators; // words over +-(generator index + 1)
};

/// A rank-one character sending every elementary loop to the same d-th
/// root of unity lambda = zeta_d^exponent.
struct Character {
    long d = 1;
    long exponent = 0;
    CycNumber lambda;
};

Character character(long d, long exponent);

/// Monodromy eigenspace dimensions of H^1 of the Milnor fiber, indexed by
/// the exponent of the d-th root of unity.
struct Spectrum {
    long d = 1;
    std::vector<int> dims;   // size d, exponent-indexed
    long b1F = 0;            // sum of the dims
    long monodromy_order = 1;
};

GroupPresentation zvk_presentation(const MonodromyData& md, long euler_characteristic);

/// Fox Jacobian of the presentation evaluated at the character.
CycMatrix fox_jacobian(const GroupPresentation& p, const Character& chi);

/// dim H^1 of the complement with coefficients twisted by the character.
int local_system_h1(const GroupPresentation& p, const Character& chi);

/// Full pipeline: decone, braid monodromy, presentation, and the twisted
/// first cohomology for every d-th root of unity. The infinity line
/// defaults to the last one; the result is independent of the choice.
Spectrum milnor_spectrum(const Arrangement& a, int infinity_index = 0,
                         const BraidOptions& opts = {});

GroupPresentation complement_presentation(const Arrangement& a, int infinity_index = 0,
                                          const BraidOptions& opts = {});

/// Independent oracle: the first Betti number of the d-fold cyclic cover of
/// the presentation 2-complex, computed from the integral chain complex of
/// lifted cells, compared against the spectrum total.
bool spectrum_crosscheck(const Arrangement& a, int infinity_index = 0);

} // namespace arrangetop
