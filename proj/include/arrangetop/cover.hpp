#pragma once

#include <string>

#include "arrangetop/pencil.hpp"

namespace arrangetop {

/// The character classifying the Milnor fiber cover: every elementary loop
/// about a line maps to 1 in Z/d.
struct DeckCharacter {
    long d;
    long value_on_generator(int) const { return 1; }
};

/// An H_1 class written on the elementary loop basis gamma_1..gamma_d.
struct LoopClass {
    std::vector<long> coefficients;

    long r_value(long d) const; // sum of coefficients mod d
};

struct ConnectivityVerdict {
    long components = 0;
    std::vector<std::string> rationale; // the loop R-values and bounds used
};

/// Boundary loop of a small disk about a lattice point, transverse to the
/// fiber through it: coefficient 1 on each incident line.
LoopClass boundary_loop(const Arrangement& a, int point_index);

/// Orbits of the subgroup of Z/d generated by the given values, acting by
/// translation; equals d divided by the subgroup order.
long orbit_count(long d, const std::vector<long>& r_values);

/// Connectivity of the generic fiber of the lifted pencil map out of the
/// Milnor fiber; requires a certified lift.
ConnectivityVerdict global_fiber_connectivity(const Arrangement& a, const Pencil& p);

/// Connectivity of the composite map to the local pencil target of a point
/// of multiplicity >= 3: connected unless the arrangement is central.
ConnectivityVerdict local_fiber_connectivity(const Arrangement& a, int point_index);

} // namespace arrangetop
