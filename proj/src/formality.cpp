#include "arrangetop/formality.hpp"

#include <algorithm>

#include "arrangetop/parallel.hpp"

namespace arrangetop {

FiberMHS fiber_mhs(const Spectrum& s) {
    for (long e = 1; e < s.d; ++e)
        if (s.dims[e] != s.dims[s.d - e])
            throw InconsistentSpectrum("spectrum is not conjugation symmetric");
    FiberMHS fm;
    fm.d = s.d;
    fm.h11F = s.dims[0];
    for (long e = 1; e < s.d; ++e) {
        fm.w1F += s.dims[e];
        if (s.dims[e] > 0) fm.nontrivial_exponents.push_back(e);
    }
    if (fm.w1F % 2 != 0)
        throw InconsistentSpectrum("weight-1 part has odd dimension");
    fm.w1_h10 = fm.w1F / 2;
    return fm;
}

std::string verdict_name(ObstructionReport::Verdict v) {
    return v == ObstructionReport::Verdict::NotOneFormal ? "NOT_1_FORMAL" : "INCONCLUSIVE";
}

namespace {

const char* kTangentConeRule =
    "for a 1-formal space, exp maps the resonance variety onto the components of the "
    "characteristic variety through the origin, so R_1 is the tangent cone of V_1 "
    "(Dimca-Papadima-Suciu 2008)";
const char* kComponentRule =
    "an admissible map to a curve of negative Euler characteristic gives an irreducible "
    "component of the characteristic variety, hence of the tangent cone (Arapura 1997)";
const char* kEigenspaceRule =
    "the unit eigenspace of H^1 of the Milnor fiber is H^{1,1} and the other eigenspaces "
    "form the weight-1 part (Dimca-Papadima 2009, Theorem 4.1)";
const char* kCupRule =
    "cup products of classes from the two conjugate non-unit eigenspaces land in the "
    "weight-4 pure part of H^2 and vanish for weight reasons, so the weight-1 part lies "
    "in a single resonance component (monodromy equivariance with Deligne's functorial "
    "mixed Hodge structure, cf. Dimca 1992, Appendix C)";
const char* kMhsOnE =
    "a component obtained by pullback along the lifted pencil carries an induced mixed "
    "Hodge structure with the dimensions of the curve invariants (Deligne functoriality; "
    "Dimca 1992, Theorem C24 and Example C26)";

void self_audit(const ObstructionReport& r) {
    if (r.assumptions.empty())
        throw InternalError("obstruction report carries no cited assumptions");
    for (const auto& s : r.assumptions) {
        if (s.find('(') == std::string::npos)
            throw InternalError("obstruction assumption lacks a citation");
    }
}

} // namespace

ObstructionReport obstruction_test(const TangentConeComponent& E, const FiberMHS& fm) {
    if (E.chi >= 0)
        throw NotGeneralType("the lifted curve must have negative Euler characteristic");

    ObstructionReport report;
    report.assumptions = {kTangentConeRule, kComponentRule, kEigenspaceRule, kMhsOnE};

    // (i) the weight-1 part is nonzero and carried by exactly two conjugate
    //     non-unit eigenvalues, so the cup-vanishing rule applies
    bool two_conjugate = fm.nontrivial_exponents.size() == 2 &&
                         fm.nontrivial_exponents[0] + fm.nontrivial_exponents[1] == fm.d &&
                         fm.nontrivial_exponents[0] != fm.nontrivial_exponents[1];
    bool cond_i = fm.w1F > 0 && two_conjugate;
    if (cond_i) report.assumptions.push_back(kCupRule);

    // (ii) E meets the component containing the weight-1 part
    bool cond_ii = E.e10 + E.e01 > 0;

    // (iii) that component is strictly bigger than E in the (1,0) direction
    report.has_witness = true;
    report.witness_w1_h10 = fm.w1_h10;
    report.witness_e10 = static_cast<long>(E.e10);
    bool cond_iii = fm.w1_h10 > static_cast<long>(E.e10);

    report.verdict = (cond_i && cond_ii && cond_iii) ? ObstructionReport::Verdict::NotOneFormal
                                                     : ObstructionReport::Verdict::Inconclusive;
    self_audit(report);
    return report;
}

FormalityAnalysis analyze_formality(const Arrangement& a) {
    FormalityAnalysis out;
    out.spectrum = milnor_spectrum(a);
    out.fiber = fiber_mhs(out.spectrum);

    std::vector<NetPartition> nets;
    if (a.size() >= 3) {
        for (auto& net : net_search(a, static_cast<int>(a.size()))) {
            bool full = net.support().size() == a.size();
            if (full) nets.push_back(std::move(net));
        }
    }

    out.candidates.assign(nets.size(), {});
    parallel_for(nets.size(), [&](size_t i) {
        PencilCandidate cand;
        cand.net = nets[i];
        try {
            Pencil p = pencil_from_net(a, nets[i]);
            cand.coords = p.coords;
            LiftedCurve curve = lift_pencil(p);
            cand.lifted_equation = curve.g;
            cand.mhs = curve_mhs(curve);
            cand.E = pullback_E(cand.mhs, p);
            cand.certified = true;
            cand.test = obstruction_test(cand.E, out.fiber);
        } catch (const Error& e) {
            cand.certified = false;
            cand.failure = e.what();
        }
        out.candidates[i] = std::move(cand);
    });

    // first obstruction in canonical pencil order wins
    for (const auto& cand : out.candidates) {
        if (cand.certified && cand.test.verdict == ObstructionReport::Verdict::NotOneFormal) {
            out.verdict = cand.test;
            out.verdict.has_pencil = true;
            out.verdict.winning_net = cand.net;
            return out;
        }
    }
    out.verdict.verdict = ObstructionReport::Verdict::Inconclusive;
    out.verdict.assumptions = {kTangentConeRule, kComponentRule, kEigenspaceRule};
    self_audit(out.verdict);
    return out;
}

ObstructionReport formality_report(const Arrangement& a) { return analyze_formality(a).verdict; }

} // namespace arrangetop
