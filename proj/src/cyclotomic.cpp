#include "arrangetop/cyclotomic.hpp"

#include <mpfr.h>

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

namespace arrangetop {

long euler_phi(long n) {
    long result = n;
    long m = n;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

std::vector<long> divisors(long n) {
    std::vector<long> divs;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            divs.push_back(d);
            if (d != n / d) divs.push_back(n / d);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

namespace {

// ---- integer polynomial helpers for cyclotomic polynomials ----

using ZPoly = std::vector<Integer>; // coeffs, low degree first, no trailing zeros

void ztrim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division of integer polynomials (remainder known to vanish).
ZPoly zdiv_exact(ZPoly num, const ZPoly& den) {
    ZPoly q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, Integer(0));
    while (num.size() >= den.size() && !num.empty()) {
        Integer c = num.back() / den.back();
        size_t shift = num.size() - den.size();
        q[shift] = c;
        for (size_t i = 0; i < den.size(); ++i) num[shift + i] -= c * den[i];
        ztrim(num);
    }
    return q;
}

const ZPoly& cyclotomic_poly(long n) {
    static std::map<long, ZPoly> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    ZPoly f(n + 1, Integer(0));
    f[0] = -1;
    f[n] = 1; // x^n - 1
    for (long d : divisors(n)) {
        if (d == n) continue;
        // recursion depth is the divisor chain length; compute iteratively
        if (cache.find(d) == cache.end()) {
            ZPoly g(d + 1, Integer(0));
            g[0] = -1;
            g[d] = 1;
            for (long e : divisors(d)) {
                if (e == d) continue;
                g = zdiv_exact(std::move(g), cache.at(e));
            }
            cache.emplace(d, std::move(g));
        }
        f = zdiv_exact(std::move(f), cache.at(d));
    }
    return cache.emplace(n, std::move(f)).first->second;
}

// Reduce a rational polynomial (any degree) modulo Phi_n; returns exactly
// phi(n) coordinates.
std::vector<Rational> reduce_mod_cyclotomic(std::vector<Rational> p, long n) {
    const ZPoly& phi_poly = cyclotomic_poly(n);
    const size_t deg = phi_poly.size() - 1; // = euler_phi(n)
    while (p.size() > deg) {
        Rational c = p.back();
        p.pop_back();
        if (c != 0) {
            size_t base = p.size() - deg;
            for (size_t i = 0; i < deg; ++i) p[base + i] -= c * Rational(phi_poly[i]);
        }
    }
    p.resize(deg, Rational(0));
    for (auto& q : p) q.canonicalize();
    return p;
}

// Extended Euclid over Q[x]: returns u with u*a = 1 mod Phi_n, for a != 0.
using QPoly = std::vector<Rational>;

void qtrim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// (quotient, remainder) of rational polynomial division
std::pair<QPoly, QPoly> qdivmod(QPoly num, const QPoly& den) {
    QPoly q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, Rational(0));
    while (num.size() >= den.size() && !den.empty()) {
        Rational c = num.back() / den.back();
        size_t shift = num.size() - den.size();
        q[shift] = c;
        for (size_t i = 0; i < den.size(); ++i) num[shift + i] -= c * den[i];
        qtrim(num);
    }
    return {std::move(q), std::move(num)};
}

QPoly qsub(QPoly a, const QPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), Rational(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    qtrim(a);
    return a;
}

QPoly qmul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    qtrim(r);
    return r;
}

} // namespace

CycNumber CycNumber::zeta(long n, long power) {
    if (n < 1) throw InternalError("conductor must be positive");
    long e = ((power % n) + n) % n;
    std::vector<Rational> p(e + 1, Rational(0));
    p[e] = 1;
    CycNumber z;
    z.n_ = n;
    z.c_ = reduce_mod_cyclotomic(std::move(p), n);
    return z;
}

CycNumber CycNumber::from_coeffs(long n, std::vector<Rational> coeffs) {
    if (n < 1) throw InternalError("conductor must be positive");
    if (coeffs.size() != static_cast<size_t>(euler_phi(n)))
        throw InternalError("coefficient vector length must equal phi(conductor)");
    CycNumber z;
    z.n_ = n;
    for (auto& q : coeffs) q.canonicalize();
    z.c_ = std::move(coeffs);
    return z;
}

bool CycNumber::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& q) { return q == 0; });
}

bool CycNumber::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rational CycNumber::rational_value() const {
    if (!is_rational()) throw InternalError("rational_value on a non-rational cyclotomic number");
    return c_[0];
}

CycNumber CycNumber::coerced(long n) const {
    if (n == n_) return *this;
    if (n % n_ != 0) throw InternalError("coercion target conductor must be a multiple");
    long e = n / n_;
    std::vector<Rational> p;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        size_t k = i * e;
        if (p.size() <= k) p.resize(k + 1, Rational(0));
        p[k] += c_[i];
    }
    if (p.empty()) p.assign(1, Rational(0));
    CycNumber z;
    z.n_ = n;
    z.c_ = reduce_mod_cyclotomic(std::move(p), n);
    return z;
}

CycNumber CycNumber::operator-() const {
    CycNumber z = *this;
    for (auto& q : z.c_) q = -q;
    return z;
}

CycNumber CycNumber::operator+(const CycNumber& o) const {
    long n = std::lcm(n_, o.n_);
    CycNumber a = coerced(n), b = o.coerced(n);
    for (size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
    return a;
}

CycNumber CycNumber::operator-(const CycNumber& o) const { return *this + (-o); }

CycNumber CycNumber::operator*(const CycNumber& o) const {
    long n = std::lcm(n_, o.n_);
    CycNumber a = coerced(n), b = o.coerced(n);
    std::vector<Rational> prod(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j] == 0) continue;
            prod[i + j] += a.c_[i] * b.c_[j];
        }
    }
    CycNumber z;
    z.n_ = n;
    z.c_ = reduce_mod_cyclotomic(std::move(prod), n);
    return z;
}

CycNumber CycNumber::inv() const {
    if (is_zero()) throw DivisionByZero("inversion of zero cyclotomic number");
    if (is_rational()) return CycNumber(Rational(1) / c_[0]);
    // extended Euclid of the coordinate polynomial against Phi_n
    const ZPoly& phiz = cyclotomic_poly(n_);
    QPoly phi(phiz.size());
    for (size_t i = 0; i < phiz.size(); ++i) phi[i] = Rational(phiz[i]);
    QPoly r0 = phi, r1(c_.begin(), c_.end());
    qtrim(r1);
    QPoly u0 = {}, u1 = {Rational(1)}; // coefficients of the input polynomial
    while (!r1.empty()) {
        auto [q, r2] = qdivmod(r0, r1);
        QPoly u2 = qsub(u0, qmul(q, u1));
        r0 = std::move(r1);
        r1 = std::move(r2);
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    // r0 = gcd (a nonzero constant since Phi_n is irreducible)
    if (r0.size() != 1) throw InternalError("cyclotomic gcd is not a unit");
    QPoly u = u0;
    for (auto& q : u) q /= r0[0];
    CycNumber z;
    z.n_ = n_;
    z.c_ = reduce_mod_cyclotomic(std::move(u), n_);
    return z;
}

CycNumber CycNumber::conj() const {
    std::vector<Rational> p;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        size_t k = (i == 0) ? 0 : static_cast<size_t>(n_) - i;
        if (p.size() <= k) p.resize(k + 1, Rational(0));
        p[k] += c_[i];
    }
    if (p.empty()) p.assign(1, Rational(0));
    CycNumber z;
    z.n_ = n_;
    z.c_ = reduce_mod_cyclotomic(std::move(p), n_);
    return z;
}

CycNumber CycNumber::pow(long e) const {
    if (e < 0) return inv().pow(-e);
    CycNumber result(1), base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

int CycNumber::cmp(const CycNumber& a, const CycNumber& b) {
    long n = std::lcm(a.n_, b.n_);
    CycNumber x = a.coerced(n), y = b.coerced(n);
    for (size_t i = 0; i < x.c_.size(); ++i) {
        int c = ::cmp(x.c_[i], y.c_[i]);
        if (c != 0) return c;
    }
    return 0;
}

CycNumber CycNumber::real_part() const { return (*this + conj()) * CycNumber(Rational(1, 2)); }

CycNumber CycNumber::imag_part() const {
    // (a - conj(a)) / (2i); multiply by -i/2 = -zeta_4/2
    CycNumber diff = *this - conj();
    return diff * CycNumber::zeta(4) * CycNumber(Rational(-1, 2));
}

// ---------------------------------------------------------------------------
// sign determination by adaptive-precision interval arithmetic
// ---------------------------------------------------------------------------

namespace {

struct Interval {
    mpfr_t lo, hi;
    explicit Interval(mpfr_prec_t prec) {
        mpfr_init2(lo, prec);
        mpfr_init2(hi, prec);
        mpfr_set_zero(lo, 1);
        mpfr_set_zero(hi, 1);
    }
    ~Interval() {
        mpfr_clear(lo);
        mpfr_clear(hi);
    }
    Interval(const Interval&) = delete;
    Interval& operator=(const Interval&) = delete;
};

// Enclosure of cos(2*pi*i/n) for 0 < i < n with 2i != n.
void cos_enclosure(long i, long n, mpfr_prec_t prec, Interval& out) {
    mpfr_t pi_lo, pi_hi, th_lo, th_hi;
    mpfr_inits2(prec, pi_lo, pi_hi, th_lo, th_hi, static_cast<mpfr_ptr>(nullptr));
    mpfr_const_pi(pi_lo, MPFR_RNDD);
    mpfr_const_pi(pi_hi, MPFR_RNDU);
    mpq_class r(2 * i, n);
    r.canonicalize();
    mpfr_mul_q(th_lo, pi_lo, r.get_mpq_t(), MPFR_RNDD);
    mpfr_mul_q(th_hi, pi_hi, r.get_mpq_t(), MPFR_RNDU);

    bool ok = false;
    if (r < 1) {
        // theta in (0, pi): cos is decreasing there
        if (mpfr_cmp(th_hi, pi_lo) < 0) {
            mpfr_cos(out.lo, th_hi, MPFR_RNDD);
            mpfr_cos(out.hi, th_lo, MPFR_RNDU);
            ok = true;
        }
    } else {
        // theta in (pi, 2*pi): cos is increasing there
        if (mpfr_cmp(th_lo, pi_hi) > 0) {
            mpfr_cos(out.lo, th_lo, MPFR_RNDD);
            mpfr_cos(out.hi, th_hi, MPFR_RNDU);
            ok = true;
        }
    }
    if (!ok) {
        // enclosure too wide to certify monotonicity at this precision
        mpfr_set_si(out.lo, -1, MPFR_RNDD);
        mpfr_set_si(out.hi, 1, MPFR_RNDU);
    }
    mpfr_clears(pi_lo, pi_hi, th_lo, th_hi, static_cast<mpfr_ptr>(nullptr));
}

// Enclosure of the real value sum_i c_i cos(2*pi*i/N).
void real_enclosure(const CycNumber& a, mpfr_prec_t prec, Interval& acc) {
    const auto& c = a.coeffs();
    long n = a.conductor();
    mpfr_t t_lo, t_hi;
    mpfr_inits2(prec, t_lo, t_hi, static_cast<mpfr_ptr>(nullptr));
    mpfr_set_zero(acc.lo, 1);
    mpfr_set_zero(acc.hi, 1);
    Interval cosv(prec);
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        if (i == 0) {
            mpfr_set_q(t_lo, c[0].get_mpq_t(), MPFR_RNDD);
            mpfr_set_q(t_hi, c[0].get_mpq_t(), MPFR_RNDU);
        } else {
            cos_enclosure(static_cast<long>(i), n, prec, cosv);
            if (c[i] > 0) {
                mpfr_mul_q(t_lo, cosv.lo, c[i].get_mpq_t(), MPFR_RNDD);
                mpfr_mul_q(t_hi, cosv.hi, c[i].get_mpq_t(), MPFR_RNDU);
            } else {
                mpfr_mul_q(t_lo, cosv.hi, c[i].get_mpq_t(), MPFR_RNDD);
                mpfr_mul_q(t_hi, cosv.lo, c[i].get_mpq_t(), MPFR_RNDU);
            }
        }
        mpfr_add(acc.lo, acc.lo, t_lo, MPFR_RNDD);
        mpfr_add(acc.hi, acc.hi, t_hi, MPFR_RNDU);
    }
    mpfr_clears(t_lo, t_hi, static_cast<mpfr_ptr>(nullptr));
}

Rational mpfr_to_rational(const mpfr_t x) {
    if (mpfr_zero_p(x)) return Rational(0);
    mpz_class m;
    mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), x);
    Rational r(m);
    if (e >= 0) {
        mpz_class p;
        mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e));
        r *= Rational(p);
    } else {
        mpz_class p;
        mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(-e));
        r /= Rational(p);
    }
    r.canonicalize();
    return r;
}

} // namespace

int sign_real(const CycNumber& a) {
    if (!a.is_real()) throw NotReal();
    if (a.is_zero()) return 0;
    if (a.is_rational()) return sgn(a.rational_value());
    for (mpfr_prec_t prec = 64; prec <= (1 << 22); prec *= 2) {
        Interval enc(prec);
        real_enclosure(a, prec, enc);
        if (mpfr_sgn(enc.lo) > 0) return 1;
        if (mpfr_sgn(enc.hi) < 0) return -1;
    }
    throw InternalError("interval refinement failed to separate a nonzero value from zero");
}

std::pair<Rational, Rational> rational_bounds(const CycNumber& a, int precision_bits) {
    if (!a.is_real()) throw NotReal();
    mpfr_prec_t prec = std::max(16, precision_bits);
    Interval enc(prec);
    real_enclosure(a, prec, enc);
    Rational lo = mpfr_to_rational(enc.lo);
    Rational hi = mpfr_to_rational(enc.hi);
    // widen so the bounds are strict even for exactly representable values
    Rational pad(Integer(1), Integer(1));
    mpz_ui_pow_ui(pad.get_den_mpz_t(), 2, static_cast<unsigned long>(prec));
    pad.canonicalize();
    return {lo - pad, hi + pad};
}

int compare_real(const CycNumber& a, const CycNumber& b) { return sign_real(a - b); }

} // namespace arrangetop
