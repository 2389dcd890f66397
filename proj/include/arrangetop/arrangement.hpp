#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "arrangetop/cyclotomic.hpp"
#include "arrangetop/poly.hpp"

namespace arrangetop {

/// A projective line a*x + b*y + c*z = 0, canonicalized so that the first
/// nonzero coefficient is 1. Equality is therefore exact coefficientwise.
class LinearForm {
public:
    LinearForm(CycNumber a, CycNumber b, CycNumber c);

    const std::array<CycNumber, 3>& coeffs() const { return c_; }
    bool operator==(const LinearForm& o) const { return c_ == o.c_; }
    bool operator!=(const LinearForm& o) const { return !(*this == o); }

    CycNumber eval(const std::array<CycNumber, 3>& point) const;
    MultiPoly poly() const; // in variables x, y, z

private:
    std::array<CycNumber, 3> c_;
};

/// A projective point, canonicalized by scaling the last nonzero
/// coordinate to 1.
struct ProjPoint {
    std::array<CycNumber, 3> h;

    static ProjPoint canonical(std::array<CycNumber, 3> coords);
    bool operator==(const ProjPoint& o) const { return h == o.h; }
    static int cmp(const ProjPoint& a, const ProjPoint& b);
};

struct LatticePoint {
    ProjPoint point;
    std::vector<int> incident; // 1-based line indices, sorted
    size_t multiplicity() const { return incident.size(); }
};

struct IntersectionLattice {
    std::vector<LatticePoint> points; // sorted by canonical point order
    size_t count_of_multiplicity(size_t m) const;
    // index (0-based) of the lattice point where lines i and j meet
    std::vector<std::vector<int>> point_of_pair; // d x d, -1 on diagonal
};

class Arrangement {
public:
    explicit Arrangement(std::vector<LinearForm> lines, std::string label = "");

    size_t size() const { return lines_.size(); } // d
    const std::vector<LinearForm>& lines() const { return lines_; }
    const LinearForm& line(int index_1based) const { return lines_.at(index_1based - 1); }
    const std::string& label() const { return label_; }

    long conductor() const; // lcm of coefficient conductors (display only)
    MultiPoly defining_polynomial() const;

    const IntersectionLattice& lattice() const; // computed on first use, d >= 2
    bool is_central() const;
    long euler_complement() const; // chi of the projective complement

private:
    std::vector<LinearForm> lines_;
    std::string label_;
    mutable std::optional<IntersectionLattice> lattice_;
};

Arrangement build_arrangement(std::vector<LinearForm> forms, std::string label = "");

// ---- builtin catalog ----

Arrangement ceva3();                // the 9-line arrangement (x^3-y^3)(x^3-z^3)(y^3-z^3)
Arrangement triangle();             // {x, y, z}
Arrangement central(int k);         // k >= 2 concurrent lines through [0:0:1]
Arrangement generic_arrangement(int k); // k >= 1 lines tangent to a conic: only double points
Arrangement builtin_arrangement(const std::string& name); // parses central(k), generic(k)

// ---- arrangement file format ----
// line 1: `conductor N`; then one line per form, three scalar literals
// separated by commas; `#` starts a comment.
Arrangement parse_arrangement(const std::string& text);
Arrangement load_arrangement(const std::string& path);
std::string emit_arrangement(const Arrangement& a);

} // namespace arrangetop
