#pragma once

#include "arrangetop/arrangement.hpp"
#include "arrangetop/resonance.hpp"

namespace arrangetop {

/// A pencil attached to a block partition: the fiber polynomials Q_i span a
/// two-dimensional space, Q_1 and Q_2 generate, and every further fiber is
/// Q_j = alpha_j Q_1 + beta_j Q_2. Target punctures follow the convention
/// a_1 = [0:1], a_2 = [1:0].
struct Pencil {
    Arrangement arrangement;
    NetPartition net;
    std::vector<MultiPoly> Q;                              // size k, variables x, y, z
    std::vector<std::pair<CycNumber, CycNumber>> coords;   // (alpha_j, beta_j) for j >= 3
    bool full_support = false;                             // blocks cover every line

    size_t k() const { return Q.size(); }
};

struct BaseLocusReport {
    struct BasePoint {
        ProjPoint point;
        std::vector<size_t> fiber_multiplicity; // per block; lines through the point
    };
    std::vector<BasePoint> points;
    bool simple_point_exists = false; // some point has multiplicity 1 in every fiber
};

/// The plane curve g(u, v) = 1 covering the pencil target, where g is the
/// degree-k binary form u*v*prod(alpha_j u + beta_j v).
struct LiftedCurve {
    MultiPoly g; // variables u, v
    std::vector<std::pair<CycNumber, CycNumber>> factors; // k pairwise non-proportional
    bool certified = false; // set by lift_pencil after the composition identity check

    size_t k() const { return factors.size(); }
};

struct MilnorAlgebra {
    std::vector<MultiPoly> jacobian_generators; // the two partials of g
    std::vector<size_t> graded_dims;            // degree 0 up to the top nonzero degree
    size_t total() const;
};

struct CurveMHS {
    long chi = 0;
    long genus = 0;
    size_t h11 = 0, h10 = 0, h01 = 0;
    bool general_type = false; // chi < 0
    size_t k = 0;
    bool certified = false;
};

/// Dimensions of the subspace E of H^1 of the Milnor fiber pulled back
/// through a certified lift.
struct TangentConeComponent {
    size_t e11 = 0, e10 = 0, e01 = 0;
    size_t k = 0;
    long chi = 0;
    NetPartition net;
};

/// Build the pencil of a partition: fiber products with exponents, exact
/// span check, exact (alpha, beta) coordinates. Throws NotAPencil when the
/// span dimension is not 2.
Pencil pencil_from_net(const Arrangement& a, const NetPartition& net);

BaseLocusReport base_locus(const Pencil& p);

/// Certify the lifted curve: requires exponents 1, full support, and a
/// simple base point; checks g(Q_1, Q_2) = f exactly.
LiftedCurve lift_pencil(const Pencil& p);

/// Test-friendly constructor for a lifted curve from explicit factors.
LiftedCurve make_lifted_curve(std::vector<std::pair<CycNumber, CycNumber>> factors);

/// Graded Milnor algebra of a squarefree binary form of degree >= 2.
MilnorAlgebra milnor_algebra(const MultiPoly& g);

CurveMHS curve_mhs(const LiftedCurve& curve);

TangentConeComponent pullback_E(const CurveMHS& c, const Pencil& p);

} // namespace arrangetop
