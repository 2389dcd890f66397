#pragma once

#include <string>

#include "arrangetop/cyclotomic.hpp"
#include "arrangetop/poly.hpp"

namespace arrangetop {

/// Parse a scalar literal over Q(zeta_N): rationals `p/q`, the symbol `z`
/// for zeta_N, operators `+ - * ^` with standard precedence, parentheses.
/// Example: `1/2*z^2 - 3`. Offsets are 1-based and reported in ParseError.
CycNumber parse_scalar(const std::string& text, long conductor, int line_no = 1);

/// Canonical rendering of a scalar as a literal in z = zeta_N (descending
/// powers, no zero terms); the conductor is carried by the enclosing file.
std::string render_scalar(const CycNumber& a);

/// Canonical rendering of a polynomial with scalar-literal coefficients,
/// monomials in descending lexicographic order.
std::string render_poly(const MultiPoly& p);

} // namespace arrangetop
