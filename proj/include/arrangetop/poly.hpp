#pragma once

#include <map>
#include <string>
#include <vector>

#include "arrangetop/cyclotomic.hpp"

namespace arrangetop {

/// Exact multivariate polynomial over a cyclotomic field. Terms are kept in
/// a map from exponent tuples to nonzero coefficients, so the representation
/// is canonical for a fixed variable list.
class MultiPoly {
public:
    using Exponents = std::vector<unsigned>;

    MultiPoly() = default;
    explicit MultiPoly(std::vector<std::string> variables) : vars_(std::move(variables)) {}

    static MultiPoly constant(std::vector<std::string> variables, const CycNumber& c);
    static MultiPoly variable(std::vector<std::string> variables, size_t index);

    const std::vector<std::string>& variables() const { return vars_; }
    const std::map<Exponents, CycNumber>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    long degree() const; // -1 for the zero polynomial
    bool is_homogeneous() const;
    size_t term_count() const { return terms_.size(); }

    void add_term(const Exponents& e, const CycNumber& c);
    CycNumber coefficient(const Exponents& e) const;

    MultiPoly operator-() const;
    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator*(const CycNumber& c) const;
    MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
    MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    bool operator==(const MultiPoly& o) const;
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    MultiPoly partial(size_t var_index) const;
    MultiPoly pow(unsigned e) const;

    /// Substitute a polynomial for every variable (composition). The
    /// replacement polynomials must share one variable universe.
    MultiPoly substitute(const std::vector<MultiPoly>& values) const;

    /// Coefficients listed on the monomial basis of the given degree, in
    /// lexicographic exponent order; used for exact linear algebra on spans.
    std::vector<CycNumber> dense_coeffs(const std::vector<Exponents>& basis) const;

private:
    void check_same_universe(const MultiPoly& o) const;

    std::vector<std::string> vars_;
    std::map<Exponents, CycNumber> terms_;
};

/// All exponent tuples of the given total degree, lexicographically ordered.
std::vector<MultiPoly::Exponents> monomials_of_degree(size_t nvars, unsigned degree);

} // namespace arrangetop
