#include "arrangetop/arrangement.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include "arrangetop/scalar_io.hpp"

namespace arrangetop {

LinearForm::LinearForm(CycNumber a, CycNumber b, CycNumber c) : c_{a, b, c} {
    int lead = -1;
    for (int i = 0; i < 3; ++i) {
        if (!c_[i].is_zero()) {
            lead = i;
            break;
        }
    }
    if (lead < 0) throw InvalidForm();
    CycNumber scale = c_[lead].inv();
    for (auto& x : c_) x *= scale;
}

CycNumber LinearForm::eval(const std::array<CycNumber, 3>& point) const {
    return c_[0] * point[0] + c_[1] * point[1] + c_[2] * point[2];
}

MultiPoly LinearForm::poly() const {
    MultiPoly p({"x", "y", "z"});
    p.add_term({1, 0, 0}, c_[0]);
    p.add_term({0, 1, 0}, c_[1]);
    p.add_term({0, 0, 1}, c_[2]);
    return p;
}

ProjPoint ProjPoint::canonical(std::array<CycNumber, 3> coords) {
    int last = -1;
    for (int i = 2; i >= 0; --i) {
        if (!coords[i].is_zero()) {
            last = i;
            break;
        }
    }
    if (last < 0) throw InternalError("zero vector is not a projective point");
    CycNumber scale = coords[last].inv();
    for (auto& x : coords) x *= scale;
    return ProjPoint{coords};
}

int ProjPoint::cmp(const ProjPoint& a, const ProjPoint& b) {
    for (int i = 0; i < 3; ++i) {
        int c = CycNumber::cmp(a.h[i], b.h[i]);
        if (c != 0) return c;
    }
    return 0;
}

size_t IntersectionLattice::count_of_multiplicity(size_t m) const {
    size_t n = 0;
    for (const auto& p : points)
        if (p.multiplicity() == m) ++n;
    return n;
}

Arrangement::Arrangement(std::vector<LinearForm> lines, std::string label)
    : lines_(std::move(lines)), label_(std::move(label)) {
    if (lines_.empty()) throw InvalidForm("an arrangement needs at least one line");
    for (size_t i = 0; i < lines_.size(); ++i)
        for (size_t j = i + 1; j < lines_.size(); ++j)
            if (lines_[i] == lines_[j])
                throw DuplicateLine(static_cast<int>(i) + 1, static_cast<int>(j) + 1);
}

Arrangement build_arrangement(std::vector<LinearForm> forms, std::string label) {
    return Arrangement(std::move(forms), std::move(label));
}

long Arrangement::conductor() const {
    long n = 1;
    for (const auto& l : lines_)
        for (const auto& c : l.coeffs()) n = std::lcm(n, c.conductor());
    return n;
}

MultiPoly Arrangement::defining_polynomial() const {
    MultiPoly f = MultiPoly::constant({"x", "y", "z"}, CycNumber(1));
    for (const auto& l : lines_) f *= l.poly();
    return f;
}

namespace {

// intersection point of two distinct projective lines: the cross product
// of their coefficient vectors
ProjPoint meet(const LinearForm& a, const LinearForm& b) {
    const auto& u = a.coeffs();
    const auto& v = b.coeffs();
    std::array<CycNumber, 3> w = {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2],
                                  u[0] * v[1] - u[1] * v[0]};
    return ProjPoint::canonical(w);
}

} // namespace

const IntersectionLattice& Arrangement::lattice() const {
    if (lattice_) return *lattice_;
    const size_t d = lines_.size();
    if (d < 2) throw InternalError("intersection lattice needs at least two lines");

    std::vector<std::pair<ProjPoint, std::pair<int, int>>> meets;
    meets.reserve(d * (d - 1) / 2);
    for (size_t i = 0; i < d; ++i)
        for (size_t j = i + 1; j < d; ++j)
            meets.push_back({meet(lines_[i], lines_[j]), {int(i) + 1, int(j) + 1}});

    std::sort(meets.begin(), meets.end(), [](const auto& a, const auto& b) {
        return ProjPoint::cmp(a.first, b.first) < 0;
    });

    IntersectionLattice lat;
    lat.point_of_pair.assign(d, std::vector<int>(d, -1));
    for (size_t k = 0; k < meets.size();) {
        size_t k2 = k;
        std::vector<int> incident;
        while (k2 < meets.size() && ProjPoint::cmp(meets[k2].first, meets[k].first) == 0) {
            incident.push_back(meets[k2].second.first);
            incident.push_back(meets[k2].second.second);
            ++k2;
        }
        std::sort(incident.begin(), incident.end());
        incident.erase(std::unique(incident.begin(), incident.end()), incident.end());
        int point_index = static_cast<int>(lat.points.size());
        for (size_t m = k; m < k2; ++m) {
            auto [i, j] = meets[m].second;
            lat.point_of_pair[i - 1][j - 1] = point_index;
            lat.point_of_pair[j - 1][i - 1] = point_index;
        }
        lat.points.push_back(LatticePoint{meets[k].first, std::move(incident)});
        k = k2;
    }

    // double-count audit: sum over points of C(m_p, 2) = C(d, 2)
    size_t pairs = 0;
    for (const auto& p : lat.points) pairs += p.multiplicity() * (p.multiplicity() - 1) / 2;
    if (pairs != d * (d - 1) / 2)
        throw InternalError("intersection lattice double-count audit failed");

    lattice_ = std::move(lat);
    return *lattice_;
}

bool Arrangement::is_central() const {
    if (lines_.size() <= 2) return true;
    for (const auto& p : lattice().points)
        if (p.multiplicity() == lines_.size()) return true;
    return false;
}

long Arrangement::euler_complement() const {
    const long d = static_cast<long>(lines_.size());
    if (d == 1) return 1;
    long s = 0;
    for (const auto& p : lattice().points) s += static_cast<long>(p.multiplicity()) - 1;
    return 3 - 2 * d + s;
}

// ---------------------------------------------------------------------------
// builtin catalog
// ---------------------------------------------------------------------------

Arrangement ceva3() {
    CycNumber z = CycNumber::zeta(3);
    std::vector<LinearForm> forms;
    // factors of x^3 - y^3, then x^3 - z^3, then y^3 - z^3
    for (int a = 0; a < 3; ++a) forms.emplace_back(CycNumber(1), -z.pow(a), CycNumber(0));
    for (int a = 0; a < 3; ++a) forms.emplace_back(CycNumber(1), CycNumber(0), -z.pow(a));
    for (int a = 0; a < 3; ++a) forms.emplace_back(CycNumber(0), CycNumber(1), -z.pow(a));
    return Arrangement(std::move(forms), "ceva3");
}

Arrangement triangle() {
    std::vector<LinearForm> forms = {{CycNumber(1), CycNumber(0), CycNumber(0)},
                                     {CycNumber(0), CycNumber(1), CycNumber(0)},
                                     {CycNumber(0), CycNumber(0), CycNumber(1)}};
    return Arrangement(std::move(forms), "triangle");
}

Arrangement central(int k) {
    if (k < 2) throw UnknownBuiltin("central(k) needs k >= 2");
    std::vector<LinearForm> forms;
    forms.emplace_back(CycNumber(1), CycNumber(0), CycNumber(0)); // x
    forms.emplace_back(CycNumber(0), CycNumber(1), CycNumber(0)); // y
    for (int j = 1; j <= k - 2; ++j)
        forms.emplace_back(CycNumber(1), CycNumber(j), CycNumber(0)); // x + j*y
    return Arrangement(std::move(forms), "central(" + std::to_string(k) + ")");
}

Arrangement generic_arrangement(int k) {
    if (k < 1) throw UnknownBuiltin("generic(k) needs k >= 1");
    std::vector<LinearForm> forms;
    for (int t = 0; t < k; ++t)
        forms.emplace_back(CycNumber(1), CycNumber(t), CycNumber(static_cast<long>(t) * t));
    return Arrangement(std::move(forms), "generic(" + std::to_string(k) + ")");
}

Arrangement builtin_arrangement(const std::string& name) {
    if (name == "ceva3") return ceva3();
    if (name == "triangle") return triangle();
    auto paren = name.find('(');
    if (paren != std::string::npos && name.back() == ')') {
        std::string head = name.substr(0, paren);
        std::string arg = name.substr(paren + 1, name.size() - paren - 2);
        try {
            int k = std::stoi(arg);
            if (head == "central") return central(k);
            if (head == "generic") return generic_arrangement(k);
        } catch (const std::logic_error&) {
            throw UnknownBuiltin(name);
        }
    }
    throw UnknownBuiltin(name);
}

// ---------------------------------------------------------------------------
// file format
// ---------------------------------------------------------------------------

namespace {

std::string strip(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

} // namespace

Arrangement parse_arrangement(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    long conductor = 0;
    std::vector<LinearForm> forms;
    while (std::getline(in, raw)) {
        ++line_no;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw = raw.substr(0, hash);
        std::string line = strip(raw);
        if (line.empty()) continue;
        if (conductor == 0) {
            std::istringstream head(line);
            std::string kw, rest;
            head >> kw >> conductor >> rest;
            if (kw != "conductor" || conductor < 1 || !rest.empty() || head.bad())
                throw ParseError(line_no, 1, "expected `conductor N`");
            continue;
        }
        std::vector<std::string> parts;
        size_t start = 0;
        for (;;) {
            size_t comma = line.find(',', start);
            if (comma == std::string::npos) {
                parts.push_back(line.substr(start));
                break;
            }
            parts.push_back(line.substr(start, comma - start));
            start = comma + 1;
        }
        if (parts.size() != 3)
            throw ParseError(line_no, 1, "expected three comma-separated scalars");
        CycNumber a = parse_scalar(parts[0], conductor, line_no);
        CycNumber b = parse_scalar(parts[1], conductor, line_no);
        CycNumber c = parse_scalar(parts[2], conductor, line_no);
        if (a.is_zero() && b.is_zero() && c.is_zero())
            throw ParseError(line_no, 1, "zero linear form");
        forms.emplace_back(a, b, c);
    }
    if (conductor == 0) throw ParseError(line_no, 1, "missing `conductor N` header");
    if (forms.empty()) throw ParseError(line_no, 1, "no linear forms given");
    return Arrangement(std::move(forms));
}

Arrangement load_arrangement(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorClass::Input, "cannot open file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_arrangement(buf.str());
}

std::string emit_arrangement(const Arrangement& a) {
    std::ostringstream out;
    long n = a.conductor();
    out << "conductor " << n << "\n";
    for (const auto& l : a.lines()) {
        const auto& c = l.coeffs();
        out << render_scalar(c[0].coerced(n)) << ", " << render_scalar(c[1].coerced(n)) << ", "
            << render_scalar(c[2].coerced(n)) << "\n";
    }
    return out.str();
}

} // namespace arrangetop
