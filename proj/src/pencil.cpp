#include "arrangetop/pencil.hpp"

#include <algorithm>

#include "arrangetop/matrix.hpp"
#include "arrangetop/scalar_io.hpp"

namespace arrangetop {

namespace {

const std::vector<std::string> UV = {"u", "v"};

std::vector<MultiPoly::Exponents> degree_basis(const MultiPoly& p) {
    return monomials_of_degree(p.variables().size(), static_cast<unsigned>(p.degree()));
}

} // namespace

Pencil pencil_from_net(const Arrangement& a, const NetPartition& net) {
    const size_t k = net.blocks.size();
    if (k < 3) throw NotAPencil("a pencil needs at least three fibers");
    std::vector<bool> seen(a.size() + 1, false);
    for (const auto& block : net.blocks) {
        if (block.empty()) throw NotAPencil("empty fiber block");
        for (int line : block) {
            if (line < 1 || line > static_cast<int>(a.size()))
                throw NotAPencil("line index out of range");
            if (seen[line]) throw NotAPencil("blocks are not disjoint");
            seen[line] = true;
        }
    }

    Pencil p{a, net, {}, {}, false};
    for (const auto& block : net.blocks) {
        MultiPoly q = MultiPoly::constant({"x", "y", "z"}, CycNumber(1));
        for (int line : block) {
            int e = net.exponent(line);
            if (e < 1) throw NotAPencil("fiber exponents must be positive");
            q *= a.line(line).poly().pow(static_cast<unsigned>(e));
        }
        p.Q.push_back(std::move(q));
    }

    long deg = p.Q[0].degree();
    for (const auto& q : p.Q) {
        if (q.degree() != deg || !q.is_homogeneous())
            throw NotAPencil("fiber polynomials do not share a degree");
    }

    auto basis = degree_basis(p.Q[0]);
    CycMatrix span(k, basis.size());
    for (size_t i = 0; i < k; ++i) {
        auto row = p.Q[i].dense_coeffs(basis);
        for (size_t j = 0; j < basis.size(); ++j) span.at(i, j) = row[j];
    }
    if (span.rank_kernel().rank != 2)
        throw NotAPencil("fiber polynomials do not span a plane");

    for (size_t j = 2; j < k; ++j) {
        CycMatrix m(basis.size(), 3);
        auto c1 = p.Q[0].dense_coeffs(basis);
        auto c2 = p.Q[1].dense_coeffs(basis);
        auto cj = p.Q[j].dense_coeffs(basis);
        for (size_t r = 0; r < basis.size(); ++r) {
            m.at(r, 0) = c1[r];
            m.at(r, 1) = c2[r];
            m.at(r, 2) = cj[r];
        }
        auto rk = m.rank_kernel();
        if (rk.kernel.size() != 1) throw InternalError("pencil coordinate solve is not unique");
        const auto& v = rk.kernel[0];
        if (v[2].is_zero()) throw InternalError("degenerate pencil coordinates");
        CycNumber alpha = -v[0] / v[2];
        CycNumber beta = -v[1] / v[2];
        if (p.Q[j] != p.Q[0] * alpha + p.Q[1] * beta)
            throw InternalError("pencil coordinates fail to reproduce the fiber");
        if (alpha.is_zero() || beta.is_zero())
            throw InternalError("a fiber coincides with a generator of the pencil");
        p.coords.push_back({alpha, beta});
    }

    size_t support = 0;
    for (bool s : seen) support += s ? 1 : 0;
    p.full_support = (support == a.size());
    return p;
}

BaseLocusReport base_locus(const Pencil& p) {
    const Arrangement& a = p.arrangement;
    const auto& lat = a.lattice();
    std::vector<int> block_of(a.size() + 1, 0);
    for (size_t b = 0; b < p.net.blocks.size(); ++b)
        for (int line : p.net.blocks[b]) block_of[line] = static_cast<int>(b) + 1;

    std::vector<int> base_points;
    for (int i : p.net.blocks[0])
        for (int j : p.net.blocks[1]) base_points.push_back(lat.point_of_pair[i - 1][j - 1]);
    std::sort(base_points.begin(), base_points.end());
    base_points.erase(std::unique(base_points.begin(), base_points.end()), base_points.end());

    BaseLocusReport report;
    for (int idx : base_points) {
        const auto& pt = lat.points[idx];
        BaseLocusReport::BasePoint bp;
        bp.point = pt.point;
        bp.fiber_multiplicity.assign(p.k(), 0);
        for (int line : pt.incident) {
            int b = block_of[line];
            if (b > 0)
                bp.fiber_multiplicity[b - 1] += static_cast<size_t>(p.net.exponent(line));
        }
        bool simple = std::all_of(bp.fiber_multiplicity.begin(), bp.fiber_multiplicity.end(),
                                  [](size_t m) { return m == 1; });
        if (simple) report.simple_point_exists = true;
        report.points.push_back(std::move(bp));
    }
    return report;
}

LiftedCurve make_lifted_curve(std::vector<std::pair<CycNumber, CycNumber>> factors) {
    LiftedCurve curve;
    MultiPoly g = MultiPoly::constant(UV, CycNumber(1));
    for (const auto& [alpha, beta] : factors) {
        MultiPoly lin(UV);
        lin.add_term({1, 0}, alpha);
        lin.add_term({0, 1}, beta);
        g *= lin;
    }
    for (size_t i = 0; i < factors.size(); ++i) {
        for (size_t j = i + 1; j < factors.size(); ++j) {
            CycNumber det = factors[i].first * factors[j].second - factors[i].second * factors[j].first;
            if (det.is_zero()) throw NonIsolatedSingularity("proportional linear factors");
        }
    }
    curve.g = std::move(g);
    curve.factors = std::move(factors);
    return curve;
}

LiftedCurve lift_pencil(const Pencil& p) {
    for (int line : p.net.support()) {
        if (p.net.exponent(line) != 1)
            throw PropositionHypothesesNotMet("fiber exponents must all equal 1");
    }
    if (!p.full_support)
        throw PropositionHypothesesNotMet(
            "the pencil fibers must exhaust the arrangement to lift to the Milnor fiber");
    if (!base_locus(p).simple_point_exists)
        throw PropositionHypothesesNotMet("no base point is simple on every fiber");

    std::vector<std::pair<CycNumber, CycNumber>> factors = {{CycNumber(1), CycNumber(0)},
                                                            {CycNumber(0), CycNumber(1)}};
    factors.insert(factors.end(), p.coords.begin(), p.coords.end());
    LiftedCurve curve = make_lifted_curve(std::move(factors));

    // the commuting square: g(Q1, Q2) must equal the defining polynomial
    if (curve.g.substitute({p.Q[0], p.Q[1]}) != p.arrangement.defining_polynomial())
        throw InternalError("lift certification identity failed");
    curve.certified = true;
    return curve;
}

// ---------------------------------------------------------------------------
// Milnor algebra and curve invariants
// ---------------------------------------------------------------------------

namespace {

// univariate view of a binary form: coefficients of t^m = u^m v^(k-m)
std::vector<CycNumber> univariate(const MultiPoly& g, size_t k) {
    std::vector<CycNumber> a(k + 1, CycNumber(0));
    for (const auto& [e, c] : g.terms()) a[e[0]] = c;
    return a;
}

size_t poly_degree(const std::vector<CycNumber>& a) {
    for (size_t i = a.size(); i-- > 0;)
        if (!a[i].is_zero()) return i;
    return 0;
}

bool gcd_is_constant(std::vector<CycNumber> f, std::vector<CycNumber> g) {
    auto trim = [](std::vector<CycNumber>& p) {
        while (!p.empty() && p.back().is_zero()) p.pop_back();
    };
    trim(f);
    trim(g);
    while (!g.empty()) {
        // f mod g
        while (f.size() >= g.size() && !f.empty()) {
            CycNumber c = f.back() / g.back();
            size_t shift = f.size() - g.size();
            for (size_t i = 0; i < g.size(); ++i) f[shift + i] -= c * g[i];
            trim(f);
        }
        std::swap(f, g);
    }
    return f.size() == 1;
}

} // namespace

size_t MilnorAlgebra::total() const {
    size_t t = 0;
    for (size_t d : graded_dims) t += d;
    return t;
}

MilnorAlgebra milnor_algebra(const MultiPoly& g) {
    if (g.variables().size() != 2) throw InternalError("milnor_algebra expects a binary form");
    if (!g.is_homogeneous() || g.degree() < 2)
        throw InternalError("milnor_algebra expects a homogeneous form of degree >= 2");
    const size_t k = static_cast<size_t>(g.degree());

    // squarefree check: no repeated root, including at v = 0
    auto a = univariate(g, k);
    if (k - poly_degree(a) > 1) throw NonIsolatedSingularity("repeated factor v");
    std::vector<CycNumber> da(a.size() - 1, CycNumber(0));
    for (size_t i = 1; i < a.size(); ++i) da[i - 1] = a[i] * CycNumber(static_cast<long>(i));
    if (!gcd_is_constant(a, da)) throw NonIsolatedSingularity();

    MultiPoly gu = g.partial(0), gv = g.partial(1);
    MilnorAlgebra alg;
    alg.jacobian_generators = {gu, gv};
    for (unsigned m = 0;; ++m) {
        auto basis = monomials_of_degree(2, m);
        size_t dim_m = basis.size(); // m + 1 monomials
        if (m + 1 >= k) {
            auto multipliers = monomials_of_degree(2, m + 1 - static_cast<unsigned>(k));
            CycMatrix rows(0, 0);
            for (const auto& mult : multipliers) {
                MultiPoly mono(UV);
                mono.add_term(mult, CycNumber(1));
                rows.append_row((mono * gu).dense_coeffs(basis));
                rows.append_row((mono * gv).dense_coeffs(basis));
            }
            dim_m -= rows.rank_kernel().rank;
        }
        if (dim_m == 0) break;
        alg.graded_dims.push_back(dim_m);
        if (m > 2 * k) throw InternalError("Milnor algebra fails to terminate");
    }
    if (alg.total() != (k - 1) * (k - 1))
        throw InternalError("Milnor number disagrees with (k-1)^2");
    return alg;
}

CurveMHS curve_mhs(const LiftedCurve& curve) {
    const size_t k = curve.k();
    if (k < 2) throw InternalError("curve_mhs expects degree >= 2");
    MilnorAlgebra alg = milnor_algebra(curve.g); // also certifies distinct roots

    CurveMHS c;
    c.k = k;
    c.certified = curve.certified;
    c.chi = 1 - static_cast<long>((k - 1) * (k - 1));
    c.genus = static_cast<long>((k - 1) * (k - 2) / 2);
    c.h11 = (k - 2 < alg.graded_dims.size()) ? alg.graded_dims[k - 2] : 0;
    c.h10 = static_cast<size_t>(c.genus);
    c.h01 = static_cast<size_t>(c.genus);
    c.general_type = c.chi < 0;
    if (c.h11 + c.h10 + c.h01 != (k - 1) * (k - 1))
        throw InternalError("Hodge pieces disagree with the first Betti number");
    return c;
}

TangentConeComponent pullback_E(const CurveMHS& c, const Pencil& p) {
    if (!c.certified)
        throw PropositionHypothesesNotMet("tangent-cone component requires a certified lift");
    TangentConeComponent e;
    e.e11 = c.h11;
    e.e10 = c.h10;
    e.e01 = c.h01;
    e.k = c.k;
    e.chi = c.chi;
    e.net = p.net;
    return e;
}

} // namespace arrangetop
