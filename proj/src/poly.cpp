/*
   Copyright 2026 The lwcert authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "lw/poly.hpp"

#include <algorithm>

#include "lw/error.hpp"

namespace lw {

namespace {
const Rat kZero(0);
const Int kZeroInt(0);
} // namespace

// ---------------------------------------------------------------------------
// RatPoly
// ---------------------------------------------------------------------------

RatPoly::RatPoly(Rat constant) {
    if (constant != 0) c_.push_back(std::move(constant));
}

RatPoly::RatPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) {
    normalize();
}

RatPoly::RatPoly(std::initializer_list<Rat> coeffs) : c_(coeffs) {
    normalize();
}

RatPoly RatPoly::x() {
    return RatPoly{Rat(0), Rat(1)};
}

RatPoly RatPoly::monomial(const Rat& coeff, unsigned deg) {
    if (coeff == 0) return RatPoly();
    std::vector<Rat> c(deg + 1, Rat(0));
    c[deg] = coeff;
    return RatPoly(std::move(c));
}

void RatPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rat& RatPoly::coeff(std::size_t i) const {
    return i < c_.size() ? c_[i] : kZero;
}

const Rat& RatPoly::lc() const {
    if (c_.empty()) throw domain_error("lc of zero polynomial");
    return c_.back();
}

RatPoly RatPoly::operator-() const {
    RatPoly r(*this);
    for (Rat& v : r.c_) v = -v;
    return r;
}

RatPoly& RatPoly::operator+=(const RatPoly& rhs) {
    if (c_.size() < rhs.c_.size()) c_.resize(rhs.c_.size(), Rat(0));
    for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] += rhs.c_[i];
    normalize();
    return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& rhs) {
    if (c_.size() < rhs.c_.size()) c_.resize(rhs.c_.size(), Rat(0));
    for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] -= rhs.c_[i];
    normalize();
    return *this;
}

RatPoly operator*(const RatPoly& lhs, const RatPoly& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return RatPoly();
    std::vector<Rat> c(lhs.c_.size() + rhs.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < lhs.c_.size(); ++i) {
        if (lhs.c_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.c_.size(); ++j) c[i + j] += lhs.c_[i] * rhs.c_[j];
    }
    return RatPoly(std::move(c));
}

RatPoly operator*(const Rat& s, const RatPoly& p) {
    if (s == 0) return RatPoly();
    RatPoly r(p);
    for (Rat& v : r.c_) v *= s;
    return r;
}

bool operator<(const RatPoly& lhs, const RatPoly& rhs) {
    if (lhs.degree() != rhs.degree()) return lhs.degree() < rhs.degree();
    for (std::size_t i = 0; i < lhs.c_.size(); ++i) {
        int cmp = mpq_cmp(lhs.c_[i].get_mpq_t(), rhs.c_[i].get_mpq_t());
        if (cmp != 0) return cmp < 0;
    }
    return false;
}

Rat RatPoly::operator()(const Rat& point) const {
    Rat acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * point + c_[i];
    return acc;
}

RatPoly RatPoly::derivative() const {
    if (c_.size() <= 1) return RatPoly();
    std::vector<Rat> c(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = Rat(static_cast<long>(i)) * c_[i];
    return RatPoly(std::move(c));
}

RatPoly RatPoly::monic() const {
    if (is_zero()) throw domain_error("monic of zero polynomial");
    if (c_.back() == 1) return *this;
    Rat inv = 1 / c_.back();
    return inv * *this;
}

RatPoly RatPoly::shift(const Rat& c) const {
    // Horner in (x + c)
    RatPoly acc;
    RatPoly lin{c, Rat(1)};
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * lin + RatPoly(c_[i]);
    return acc;
}

RatPoly RatPoly::scale_arg(const Rat& c) const {
    std::vector<Rat> out(c_);
    Rat pw(1);
    for (std::size_t i = 1; i < out.size(); ++i) {
        pw *= c;
        out[i] *= pw;
    }
    return RatPoly(std::move(out));
}

RatPoly RatPoly::scale_roots(const Rat& c) const {
    if (c == 0) throw domain_error("scale_roots: zero scale");
    // c^n f(x/c): coefficient of x^i picks up c^(n-i)
    std::vector<Rat> out(c_);
    Rat pw(1);
    for (std::size_t i = out.size(); i-- > 0;) {
        out[i] *= pw;
        pw *= c;
    }
    return RatPoly(std::move(out));
}

RatPoly RatPoly::reverse() const {
    std::vector<Rat> out(c_.rbegin(), c_.rend());
    return RatPoly(std::move(out));
}

RatPoly RatPoly::negate_roots() const {
    // (-1)^n f(-x): coefficient of x^i flips sign when n - i is odd
    std::vector<Rat> out(c_);
    for (std::size_t i = 0; i < out.size(); ++i)
        if ((degree() - static_cast<int>(i)) % 2 != 0) out[i] = -out[i];
    return RatPoly(std::move(out));
}

unsigned RatPoly::trailing_zero_count() const {
    if (is_zero()) throw domain_error("trailing_zero_count of zero polynomial");
    unsigned v = 0;
    while (v < c_.size() && c_[v] == 0) ++v;
    return v;
}

std::pair<IntPoly, Rat> RatPoly::to_integer_scaled() const {
    if (is_zero()) throw domain_error("to_integer_scaled: zero polynomial");
    Int common_den(1);
    for (const Rat& q : c_) common_den = lcm_int(common_den, den(q));
    std::vector<Int> scaled(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i)
        scaled[i] = num(c_[i]) * (common_den / den(c_[i]));
    Int cont(0);
    for (const Int& v : scaled) cont = gcd_int(cont, v);
    if (scaled.back() < 0) cont = -cont;
    for (Int& v : scaled) v /= cont;
    return {IntPoly(std::move(scaled)), make_rat(cont, common_den)};
}

// ---------------------------------------------------------------------------
// IntPoly
// ---------------------------------------------------------------------------

IntPoly::IntPoly(Int constant) {
    if (constant != 0) c_.push_back(std::move(constant));
}

IntPoly::IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) {
    normalize();
}

IntPoly::IntPoly(std::initializer_list<Int> coeffs) : c_(coeffs) {
    normalize();
}

void IntPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Int& IntPoly::coeff(std::size_t i) const {
    return i < c_.size() ? c_[i] : kZeroInt;
}

const Int& IntPoly::lc() const {
    if (c_.empty()) throw domain_error("lc of zero polynomial");
    return c_.back();
}

IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return IntPoly();
    std::vector<Int> c(lhs.c_.size() + rhs.c_.size() - 1, Int(0));
    for (std::size_t i = 0; i < lhs.c_.size(); ++i) {
        if (lhs.c_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.c_.size(); ++j) c[i + j] += lhs.c_[i] * rhs.c_[j];
    }
    return IntPoly(std::move(c));
}

IntPoly operator+(const IntPoly& lhs, const IntPoly& rhs) {
    std::vector<Int> c(std::max(lhs.c_.size(), rhs.c_.size()), Int(0));
    for (std::size_t i = 0; i < lhs.c_.size(); ++i) c[i] += lhs.c_[i];
    for (std::size_t i = 0; i < rhs.c_.size(); ++i) c[i] += rhs.c_[i];
    return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& lhs, const IntPoly& rhs) {
    std::vector<Int> c(std::max(lhs.c_.size(), rhs.c_.size()), Int(0));
    for (std::size_t i = 0; i < lhs.c_.size(); ++i) c[i] += lhs.c_[i];
    for (std::size_t i = 0; i < rhs.c_.size(); ++i) c[i] -= rhs.c_[i];
    return IntPoly(std::move(c));
}

IntPoly operator*(const Int& s, const IntPoly& p) {
    if (s == 0) return IntPoly();
    IntPoly r(p);
    for (Int& v : r.c_) v *= s;
    return r;
}

Int IntPoly::operator()(const Int& point) const {
    Int acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * point + c_[i];
    return acc;
}

IntPoly IntPoly::derivative() const {
    if (c_.size() <= 1) return IntPoly();
    std::vector<Int> c(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = Int(static_cast<long>(i)) * c_[i];
    return IntPoly(std::move(c));
}

Int IntPoly::content() const {
    Int cont(0);
    for (const Int& v : c_) cont = gcd_int(cont, v);
    return cont;
}

RatPoly IntPoly::to_rat() const {
    std::vector<Rat> c(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = Rat(c_[i]);
    return RatPoly(std::move(c));
}

// ---------------------------------------------------------------------------
// Division, gcd
// ---------------------------------------------------------------------------

std::pair<RatPoly, RatPoly> divrem(const RatPoly& f, const RatPoly& g) {
    if (g.is_zero()) throw domain_error("divrem: division by zero polynomial");
    std::vector<Rat> rem(f.coeffs());
    int dg = g.degree();
    if (f.degree() < dg) return {RatPoly(), f};
    std::vector<Rat> quot(f.degree() - dg + 1, Rat(0));
    const Rat& glc = g.lc();
    for (int i = f.degree(); i >= dg; --i) {
        Rat q = rem[i] / glc;
        if (q == 0) continue;
        quot[i - dg] = q;
        for (int j = 0; j <= dg; ++j) rem[i - dg + j] -= q * g.coeff(j);
    }
    return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

RatPoly exact_div(const RatPoly& f, const RatPoly& g) {
    auto [q, r] = divrem(f, g);
    if (!r.is_zero()) throw consistency_error("exact_div: nonzero remainder");
    return q;
}

RatPoly gcd(const RatPoly& f, const RatPoly& g) {
    if (f.is_zero() && g.is_zero()) throw domain_error("gcd(0, 0)");
    if (f.is_zero()) return g.monic();
    if (g.is_zero()) return f.monic();
    RatPoly a = f.monic(), b = g.monic();
    while (!b.is_zero()) {
        RatPoly r = divrem(a, b).second;
        a = std::move(b);
        b = r.is_zero() ? RatPoly() : r.monic();
    }
    return a;
}

ExtGcdResult ext_gcd_poly(const RatPoly& f, const RatPoly& g) {
    if (f.is_zero() && g.is_zero()) throw domain_error("ext_gcd_poly(0, 0)");
    if (g.is_zero()) {
        Rat inv = 1 / f.lc();
        return {f.monic(), RatPoly(inv), RatPoly()};
    }
    if (f.is_zero()) {
        Rat inv = 1 / g.lc();
        return {g.monic(), RatPoly(), RatPoly(inv)};
    }
    RatPoly r0 = f, r1 = g;
    RatPoly u0(Rat(1)), u1;
    while (!r1.is_zero()) {
        auto [q, r] = divrem(r0, r1);
        RatPoly u2 = u0 - q * u1;
        r0 = std::move(r1);
        r1 = std::move(r);
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    Rat inv = 1 / r0.lc();
    RatPoly d = inv * r0;
    RatPoly u = inv * u0;
    // reduce u modulo g/d for the degree bounds, then recover v exactly
    if (!g.is_constant()) {
        RatPoly gd = exact_div(g, d);
        if (gd.degree() > 0) u = divrem(u, gd).second;
    }
    RatPoly v = exact_div(d - u * f, g);
    return {std::move(d), std::move(u), std::move(v)};
}

// ---------------------------------------------------------------------------
// Resultant via the subresultant PRS
// ---------------------------------------------------------------------------

namespace {

// Pseudo-remainder: lc(B)^(deg A - deg B + 1) * A mod B over Z.
IntPoly pseudo_rem(const IntPoly& A, const IntPoly& B) {
    std::vector<Int> rem(A.coeffs());
    const int db = B.degree();
    const Int& blc = B.lc();
    int dr = static_cast<int>(rem.size()) - 1;
    int steps = dr - db + 1;
    for (int pass = 0; pass < steps; ++pass) {
        while (dr >= 0 && rem[dr] == 0) --dr;
        if (dr < db) {
            // premature drop still has to absorb the remaining lc powers
            for (Int& v : rem) v *= blc;
            continue;
        }
        Int top = rem[dr];
        for (int i = 0; i <= dr; ++i) rem[i] *= blc;
        for (int j = 0; j <= db; ++j) rem[dr - db + j] -= top * B.coeff(j);
        --dr;
    }
    rem.resize(static_cast<std::size_t>(db));
    return IntPoly(std::move(rem));
}

// Resultant of two nonzero integer polynomials by the subresultant PRS,
// tracking the exact scale introduced by each pseudo-division.
Rat resultant_int(IntPoly A, IntPoly B) {
    Rat acc(1);
    if (A.degree() < B.degree()) {
        if ((A.degree() * B.degree()) % 2 != 0) acc = -acc;
        std::swap(A, B);
    }
    if (B.degree() == 0) return acc * Rat(pow_int(B.lc(), A.degree()));
    Int g(1), h(1);
    while (true) {
        int da = A.degree(), db = B.degree();
        int d = da - db;
        IntPoly R = pseudo_rem(A, B);
        if (R.is_zero()) return Rat(0);
        // Res(A, B) = (-1)^(da db) lc(B)^(da - dr - (d+1) db) Res(B, R)
        int dr = R.degree();
        if ((da * db) % 2 != 0) acc = -acc;
        long e = static_cast<long>(da - dr) - static_cast<long>(d + 1) * db;
        Rat lcpow = pow_rat(Rat(B.lc()), e);
        acc *= lcpow;
        // subresultant coefficient reduction: B_next = R / (g h^d)
        Int divisor = g * pow_int(h, static_cast<unsigned long>(d));
        std::vector<Int> rc(R.coeffs());
        for (Int& v : rc) {
            Int q, r;
            mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), v.get_mpz_t(), divisor.get_mpz_t());
            if (r != 0) throw consistency_error("subresultant PRS: inexact reduction");
            v = q;
        }
        IntPoly Bn(std::move(rc));
        // scale change: Res(B, R) = (g h^d)^(deg B) Res(B, B_next)
        acc *= pow_rat(Rat(divisor), db);
        A = std::move(B);
        B = std::move(Bn);
        g = A.lc();
        if (d > 0) {
            // h = g^d / h^(d-1)
            Int numr = pow_int(g, static_cast<unsigned long>(d));
            Int denr = pow_int(h, static_cast<unsigned long>(d - 1));
            Int q, r;
            mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), numr.get_mpz_t(), denr.get_mpz_t());
            if (r != 0) throw consistency_error("subresultant PRS: inexact h update");
            h = q;
        }
        if (B.degree() == 0) {
            return acc * Rat(pow_int(B.lc(), A.degree()));
        }
    }
}

} // namespace

Rat resultant(const RatPoly& f, const RatPoly& g) {
    if (f.is_zero() || g.is_zero()) throw domain_error("resultant: zero input");
    if (f.is_constant() && g.is_constant()) return Rat(1);
    if (f.is_constant()) return pow_rat(f.coeff(0), g.degree());
    if (g.is_constant()) return pow_rat(g.coeff(0), f.degree());
    auto [fi, fs] = f.to_integer_scaled();
    auto [gi, gs] = g.to_integer_scaled();
    Rat r = resultant_int(fi, gi);
    return r * pow_rat(fs, g.degree()) * pow_rat(gs, f.degree());
}

// ---------------------------------------------------------------------------
// Squarefree decomposition (Yun)
// ---------------------------------------------------------------------------

std::vector<std::pair<RatPoly, unsigned>> squarefree_decomposition(const RatPoly& f) {
    if (f.is_zero() || f.is_constant())
        throw domain_error("squarefree_decomposition: constant input");
    RatPoly a = f.monic();
    RatPoly g = gcd(a, a.derivative());
    std::vector<std::pair<RatPoly, unsigned>> out;
    if (g.is_constant()) {
        out.emplace_back(a, 1);
        return out;
    }
    RatPoly w = exact_div(a, g);
    RatPoly y = exact_div(a.derivative(), g);
    RatPoly z = y - w.derivative();
    unsigned i = 1;
    while (!z.is_zero()) {
        RatPoly h = gcd(w, z);
        if (h.degree() > 0) out.emplace_back(h, i);
        w = exact_div(w, h);
        y = exact_div(z, h);
        z = y - w.derivative();
        ++i;
    }
    if (w.degree() > 0) out.emplace_back(w.monic(), i);
    return out;
}

RatPoly squarefree_part(const RatPoly& f) {
    if (f.is_zero() || f.is_constant()) throw domain_error("squarefree_part: constant input");
    RatPoly a = f.monic();
    RatPoly g = gcd(a, a.derivative());
    if (g.is_constant()) return a;
    return exact_div(a, g).monic();
}

// ---------------------------------------------------------------------------
// Power sums, symmetric sums
// ---------------------------------------------------------------------------

std::vector<Rat> power_sums(const RatPoly& f, unsigned N) {
    if (f.is_zero() || !f.is_monic()) throw domain_error("power_sums: input must be monic");
    const int n = f.degree();
    // e_i = (-1)^i * coeff(x^(n-i))
    std::vector<Rat> e(static_cast<std::size_t>(n) + 1);
    e[0] = Rat(1);
    for (int i = 1; i <= n; ++i) {
        e[i] = f.coeff(static_cast<std::size_t>(n - i));
        if (i % 2 != 0) e[i] = -e[i];
    }
    std::vector<Rat> p(N + 1);
    p[0] = Rat(n);
    for (unsigned k = 1; k <= N; ++k) {
        // p_k = e1 p_{k-1} - e2 p_{k-2} + ... +- (-1)^(k-1) k e_k
        Rat acc(0);
        for (unsigned i = 1; i < k && i <= static_cast<unsigned>(n); ++i) {
            Rat term = e[i] * p[k - i];
            if (i % 2 == 0) term = -term;
            acc += term;
        }
        if (k <= static_cast<unsigned>(n)) {
            Rat term = Rat(static_cast<long>(k)) * e[k];
            if (k % 2 == 0) term = -term;
            acc += term;
        }
        p[k] = acc;
    }
    return p;
}

Rat sum_over_roots(const RatPoly& g, const RatPoly& f) {
    if (f.is_zero() || !f.is_monic() || f.is_constant())
        throw domain_error("sum_over_roots: f must be monic nonconstant");
    if (g.is_zero()) return Rat(0);
    std::vector<Rat> p = power_sums(f, static_cast<unsigned>(g.degree()));
    Rat acc(0);
    for (int s = 0; s <= g.degree(); ++s) acc += g.coeff(static_cast<std::size_t>(s)) * p[static_cast<std::size_t>(s)];
    return acc;
}

// ---------------------------------------------------------------------------
// Composed sum by interpolation
// ---------------------------------------------------------------------------

RatPoly interpolate(const std::vector<Rat>& nodes, const std::vector<Rat>& values) {
    if (nodes.size() != values.size() || nodes.empty())
        throw domain_error("interpolate: mismatched inputs");
    // Newton form
    std::vector<Rat> dd(values);
    const std::size_t n = nodes.size();
    for (std::size_t level = 1; level < n; ++level)
        for (std::size_t i = n - 1; i >= level; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / (nodes[i] - nodes[i - level]);
            if (i == level) break;
        }
    RatPoly acc;
    for (std::size_t i = n; i-- > 0;) {
        acc = acc * RatPoly{-nodes[i], Rat(1)} + RatPoly(dd[i]);
    }
    return acc;
}

namespace {

// b(point - y) as a polynomial in y.
RatPoly substitute_reflected(const RatPoly& b, const Rat& point) {
    RatPoly acc;
    RatPoly lin{point, Rat(-1)};
    for (std::size_t i = b.coeffs().size(); i-- > 0;)
        acc = acc * lin + RatPoly(b.coeff(i));
    return acc;
}

} // namespace

RatPoly composed_sum(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero() || a.is_constant() || b.is_constant())
        throw domain_error("composed_sum: inputs must be nonconstant");
    RatPoly am = a.monic(), bm = b.monic();
    const int n = am.degree(), m = bm.degree();
    const int dout = n * m;
    std::vector<Rat> nodes, values;
    nodes.reserve(dout + 1);
    values.reserve(dout + 1);
    long q = 0;
    while (static_cast<int>(nodes.size()) <= dout) {
        Rat point(q);
        nodes.push_back(point);
        values.push_back(resultant(am, substitute_reflected(bm, point)));
        q = q <= 0 ? 1 - q : -q; // 0, 1, -1, 2, -2, ...
    }
    RatPoly r = interpolate(nodes, values);
    if (r.degree() != dout) throw consistency_error("composed_sum: degree drop");
    return r.monic();
}

RatPoly poly_kth_root(const RatPoly& f, unsigned k) {
    if (k == 0) throw domain_error("poly_kth_root: k must be positive");
    if (k == 1) return f;
    if (f.is_zero() || !f.is_monic() || f.degree() % k != 0)
        throw consistency_error("poly_kth_root: not a monic k-th power");
    const int m = f.degree() / static_cast<int>(k);
    std::vector<Rat> b(static_cast<std::size_t>(m) + 1, Rat(0));
    b[static_cast<std::size_t>(m)] = Rat(1);
    RatPoly root(b);
    // solve for coefficients top-down: coefficient of x^(k m - 1 - j) in root^k
    for (int j = m - 1; j >= 0; --j) {
        RatPoly cur = root;
        for (unsigned i = 1; i < k; ++i) cur = cur * root;
        std::size_t idx = static_cast<std::size_t>(f.degree() - (m - j));
        Rat delta = f.coeff(idx) - cur.coeff(idx);
        // the unknown coefficient appears with factor k in that slot
        b[static_cast<std::size_t>(j)] = delta / Rat(static_cast<long>(k));
        root = RatPoly(b);
    }
    RatPoly check = root;
    for (unsigned i = 1; i < k; ++i) check = check * root;
    if (check != f) throw consistency_error("poly_kth_root: input is not a perfect power");
    return root;
}

} // namespace lw
