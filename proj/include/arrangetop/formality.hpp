#pragma once

#include <string>

#include "arrangetop/cover.hpp"
#include "arrangetop/fiber.hpp"
#include "arrangetop/pencil.hpp"

namespace arrangetop {

/// Mixed-Hodge bookkeeping of H^1 of the Milnor fiber, read off the
/// monodromy spectrum: the (1,1) part is the unit eigenspace, the weight-1
/// part is everything else, split evenly between (1,0) and (0,1) by
/// conjugation.
struct FiberMHS {
    long d = 1;
    long h11F = 0;
    long w1F = 0;
    long w1_h10 = 0;
    std::vector<long> nontrivial_exponents; // e != 0 with dims[e] > 0
};

FiberMHS fiber_mhs(const Spectrum& s);

struct ObstructionReport {
    enum class Verdict { NotOneFormal, Inconclusive };
    Verdict verdict = Verdict::Inconclusive;

    bool has_witness = false;
    long witness_w1_h10 = 0; // dim of W_1(F) meet H^{1,0}(F)
    long witness_e10 = 0;    // dim of E meet H^{1,0}(F)

    std::vector<std::string> assumptions; // cited rules used by the test

    bool has_pencil = false;
    NetPartition winning_net;
};

std::string verdict_name(ObstructionReport::Verdict v);

/// The dimension comparison of the tangent-cone argument; requires a
/// component of negative Euler characteristic.
ObstructionReport obstruction_test(const TangentConeComponent& E, const FiberMHS& fm);

/// One evaluated pencil candidate of the end-to-end driver.
struct PencilCandidate {
    NetPartition net;
    bool certified = false;
    std::string failure; // reason when the lift is not certified
    std::vector<std::pair<CycNumber, CycNumber>> coords;
    MultiPoly lifted_equation;
    CurveMHS mhs;
    TangentConeComponent E;
    ObstructionReport test;
};

struct FormalityAnalysis {
    Spectrum spectrum;
    FiberMHS fiber;
    std::vector<PencilCandidate> candidates; // canonical net order
    ObstructionReport verdict;
};

/// End-to-end driver: nets, certified lifts, spectrum, fiber MHS, and the
/// obstruction test over every candidate.
FormalityAnalysis analyze_formality(const Arrangement& a);

ObstructionReport formality_report(const Arrangement& a);

} // namespace arrangetop
