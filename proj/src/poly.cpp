#include "arrangetop/poly.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace arrangetop {

MultiPoly MultiPoly::constant(std::vector<std::string> variables, const CycNumber& c) {
    MultiPoly p(std::move(variables));
    p.add_term(Exponents(p.vars_.size(), 0), c);
    return p;
}

MultiPoly MultiPoly::variable(std::vector<std::string> variables, size_t index) {
    MultiPoly p(std::move(variables));
    if (index >= p.vars_.size()) throw InternalError("variable index out of range");
    Exponents e(p.vars_.size(), 0);
    e[index] = 1;
    p.add_term(e, CycNumber(1));
    return p;
}

long MultiPoly::degree() const {
    long deg = -1;
    for (const auto& [e, c] : terms_) {
        long d = std::accumulate(e.begin(), e.end(), 0L);
        deg = std::max(deg, d);
    }
    return deg;
}

bool MultiPoly::is_homogeneous() const {
    long deg = -1;
    for (const auto& [e, c] : terms_) {
        long d = std::accumulate(e.begin(), e.end(), 0L);
        if (deg == -1) deg = d;
        if (d != deg) return false;
    }
    return true;
}

void MultiPoly::add_term(const Exponents& e, const CycNumber& c) {
    if (e.size() != vars_.size()) throw InternalError("exponent tuple length mismatch");
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

CycNumber MultiPoly::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? CycNumber(0) : it->second;
}

void MultiPoly::check_same_universe(const MultiPoly& o) const {
    if (vars_ != o.vars_) throw InternalError("polynomials live in different variable universes");
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    check_same_universe(o);
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    check_same_universe(o);
    MultiPoly r(vars_);
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : o.terms_) {
            Exponents e = e1;
            for (size_t i = 0; i < e.size(); ++i) e[i] += e2[i];
            r.add_term(e, c1 * c2);
        }
    }
    return r;
}

MultiPoly MultiPoly::operator*(const CycNumber& c) const {
    MultiPoly r(vars_);
    if (c.is_zero()) return r;
    for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
    return r;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    check_same_universe(o);
    if (terms_.size() != o.terms_.size()) return false;
    auto it = terms_.begin(), jt = o.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt) {
        if (it->first != jt->first || it->second != jt->second) return false;
    }
    return true;
}

MultiPoly MultiPoly::partial(size_t var_index) const {
    if (var_index >= vars_.size()) throw InternalError("variable index out of range");
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) {
        if (e[var_index] == 0) continue;
        Exponents d = e;
        d[var_index] -= 1;
        r.add_term(d, c * CycNumber(static_cast<long>(e[var_index])));
    }
    return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly result = constant(vars_, CycNumber(1));
    MultiPoly base = *this;
    while (e > 0) {
        if (e & 1u) result *= base;
        base *= base;
        e >>= 1u;
    }
    return result;
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& values) const {
    if (values.size() != vars_.size()) throw InternalError("substitution arity mismatch");
    for (const auto& v : values)
        if (v.variables() != values[0].variables())
            throw InternalError("substitution targets live in different universes");
    MultiPoly r(values.empty() ? std::vector<std::string>{} : values[0].variables());
    for (const auto& [e, c] : terms_) {
        MultiPoly term = MultiPoly::constant(r.variables(), c);
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] > 0) term *= values[i].pow(e[i]);
        }
        r += term;
    }
    return r;
}

std::vector<CycNumber> MultiPoly::dense_coeffs(const std::vector<Exponents>& basis) const {
    std::vector<CycNumber> out;
    out.reserve(basis.size());
    for (const auto& e : basis) out.push_back(coefficient(e));
    return out;
}

std::vector<MultiPoly::Exponents> monomials_of_degree(size_t nvars, unsigned degree) {
    std::vector<MultiPoly::Exponents> out;
    MultiPoly::Exponents cur(nvars, 0);
    // lexicographic enumeration by recursion on positions
    std::function<void(size_t, unsigned)> rec = [&](size_t pos, unsigned remaining) {
        if (pos + 1 == nvars) {
            cur[pos] = remaining;
            out.push_back(cur);
            return;
        }
        for (unsigned k = 0; k <= remaining; ++k) {
            cur[pos] = k;
            rec(pos + 1, remaining - k);
        }
    };
    if (nvars == 0) return out;
    rec(0, degree);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace arrangetop
