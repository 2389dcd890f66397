#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <utility>
#include <vector>

#include "arrangetop/errors.hpp"

namespace arrangetop {

using Rational = mpq_class;
using Integer = mpz_class;

long euler_phi(long n);
std::vector<long> divisors(long n);

/// An element of the cyclotomic field Q(zeta_N), stored on the power basis
/// 1, z, ..., z^(phi(N)-1) with exact rational coordinates, reduced modulo
/// the N-th cyclotomic polynomial. The representation is canonical for a
/// fixed conductor; mixed-conductor operations coerce to the lcm.
class CycNumber {
public:
    CycNumber() : n_(1), c_(1, Rational(0)) {}
    CycNumber(long v) : n_(1), c_(1, Rational(v)) {}
    CycNumber(const Rational& r) : n_(1), c_(1, r) {}

    static CycNumber zeta(long n, long power = 1);
    // Coefficients on the power basis of Q(zeta_n); length must be phi(n).
    static CycNumber from_coeffs(long n, std::vector<Rational> coeffs);

    long conductor() const { return n_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    Rational rational_value() const; // requires is_rational()

    CycNumber coerced(long n) const; // conductor() must divide n

    CycNumber operator-() const;
    CycNumber operator+(const CycNumber& o) const;
    CycNumber operator-(const CycNumber& o) const;
    CycNumber operator*(const CycNumber& o) const;
    CycNumber operator/(const CycNumber& o) const { return *this * o.inv(); }
    CycNumber& operator+=(const CycNumber& o) { return *this = *this + o; }
    CycNumber& operator-=(const CycNumber& o) { return *this = *this - o; }
    CycNumber& operator*=(const CycNumber& o) { return *this = *this * o; }
    CycNumber& operator/=(const CycNumber& o) { return *this = *this / o; }

    CycNumber inv() const; // throws DivisionByZero on zero
    CycNumber conj() const;
    CycNumber pow(long e) const;

    bool operator==(const CycNumber& o) const { return cmp(*this, o) == 0; }
    bool operator!=(const CycNumber& o) const { return cmp(*this, o) != 0; }

    // Canonical total order (coefficientwise after coercion); not the order
    // of real values. Used for deterministic grouping and sorting.
    static int cmp(const CycNumber& a, const CycNumber& b);

    bool is_real() const { return *this == conj(); }
    CycNumber real_part() const;
    CycNumber imag_part() const; // lands in conductor lcm(N, 4)

private:
    long n_;
    std::vector<Rational> c_;
};

inline CycNumber operator+(long a, const CycNumber& b) { return CycNumber(a) + b; }
inline CycNumber operator-(long a, const CycNumber& b) { return CycNumber(a) - b; }
inline CycNumber operator*(long a, const CycNumber& b) { return CycNumber(a) * b; }

/// Exact sign of a real cyclotomic number. Zero is decided symbolically;
/// otherwise an adaptive-precision interval enclosure of the cosine values
/// of zeta_N is refined (doubling from 64 bits) until it excludes zero.
int sign_real(const CycNumber& a);

/// Strict rational bounds lo < a < hi for a real cyclotomic number,
/// computed at the given working precision.
std::pair<Rational, Rational> rational_bounds(const CycNumber& a, int precision_bits = 64);

/// sign_real(a - b) for real a, b.
int compare_real(const CycNumber& a, const CycNumber& b);

} // namespace arrangetop
