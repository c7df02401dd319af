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

#include "lw/qbar.hpp"

#include <algorithm>

#include "lw/error.hpp"

namespace lw {

AlgebraicNumber make_algebraic_unchecked(RatPoly minpoly, IsolatingBox box) {
    return AlgebraicNumber(std::move(minpoly), std::move(box));
}

namespace {

// interval overlap of a ball and a box, exact rational arithmetic
bool ball_overlaps_box(const ComplexBall& v, const IsolatingBox& b) {
    auto [rlo, rhi] = v.real_interval();
    auto [ilo, ihi] = v.imag_interval();
    return !(rhi < b.re_lo || b.re_hi < rlo || ihi < b.im_lo || b.im_hi < ilo);
}

} // namespace

AlgebraicNumber AlgebraicNumber::from_rational(const Rat& q) {
    return AlgebraicNumber(RatPoly{-q, Rat(1)}, IsolatingBox::point(q, Rat(0)));
}

bool AlgebraicNumber::is_zero() const {
    return minpoly_ == RatPoly::x();
}

Rat AlgebraicNumber::rational_value() const {
    if (!is_rational()) throw domain_error("rational_value: degree > 1");
    return -minpoly_.coeff(0);
}

ComplexBall AlgebraicNumber::value_ball(const Rat& target_radius) const {
    return refined_root_ball(minpoly_, box_, target_radius);
}

AlgebraicNumber AlgebraicNumber::conj() const {
    return AlgebraicNumber(minpoly_, box_.conjugate());
}

bool operator==(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    if (a.minpoly_ != b.minpoly_) return false;
    if (a.degree() == 1) return true; // same linear minpoly = same rational
    return canonical_root_index(a.minpoly_, a.box_) == canonical_root_index(b.minpoly_, b.box_);
}

AlgebraicNumber algebraic_from_poly(const RatPoly& f, const IsolatingBox& box) {
    if (f.is_zero() || f.is_constant()) throw domain_error("algebraic_from_poly: constant input");
    Factorization fac = factor_rational(f);
    // locate every root of every irreducible factor inside the box
    struct Hit {
        const RatPoly* factor;
        std::size_t root;
    };
    std::vector<Hit> hits;
    for (const auto& [g, mult] : fac.factors) {
        (void)mult;
        auto canon = canonical_roots(g);
        for (std::size_t i = 0; i < canon->boxes.size(); ++i) {
            // decide membership of root i of g in box by shrinking enclosures
            IsolatingBox cur = canon->boxes[i];
            int guard = 0;
            bool inside = false;
            if (box.width() == 0) {
                auto [pre, pim] = box.center();
                // the exact point is this root iff g vanishes there and the
                // enclosure contains the point
                bool vanishes = false;
                if (pim == 0) {
                    vanishes = g(pre) == 0;
                } else {
                    // complex rational evaluation via conjugate pairing
                    RatPoly re_part, im_part; // g(pre + i pim) exactly
                    Rat re_acc(0), im_acc(0);
                    Rat pr(1), pi(0);
                    for (std::size_t k = 0; k < g.coeffs().size(); ++k) {
                        re_acc += g.coeffs()[k] * pr;
                        im_acc += g.coeffs()[k] * pi;
                        Rat npr = pr * pre - pi * pim;
                        Rat npi = pr * pim + pi * pre;
                        pr = npr;
                        pi = npi;
                    }
                    vanishes = re_acc == 0 && im_acc == 0;
                }
                inside = vanishes && cur.contains_point(pre, pim);
            } else {
                while (cur.intersects(box) && !box.contains_box(cur)) {
                    if (++guard > 48)
                        throw ambiguity_error(
                            "algebraic_from_poly: box boundary cannot be separated");
                    Rat w = cur.width();
                    if (w == 0) break;
                    cur = refine_box(g, cur, w / 8);
                }
                inside = cur.intersects(box);
            }
            if (inside) hits.push_back(Hit{&g, i});
        }
    }
    if (hits.empty()) throw domain_error("algebraic_from_poly: box contains no root");
    if (hits.size() > 1)
        throw ambiguity_error("algebraic_from_poly: box selects more than one root");
    const RatPoly& minpoly = *hits[0].factor;
    IsolatingBox enclosure = canonical_roots(minpoly)->boxes[hits[0].root];
    // shrink until the enclosure excludes every root of every other factor
    bool clean = false;
    int guard = 0;
    while (!clean) {
        clean = true;
        for (const auto& [g, mult] : fac.factors) {
            (void)mult;
            if (g == minpoly) continue;
            for (const IsolatingBox& other : canonical_roots(g)->boxes) {
                if (enclosure.intersects(other)) {
                    clean = false;
                    break;
                }
            }
            if (!clean) break;
        }
        if (!clean) {
            if (++guard > 48)
                throw ambiguity_error("algebraic_from_poly: cannot separate factors");
            enclosure = refine_box(minpoly, enclosure, enclosure.width() / 8);
        }
    }
    return make_algebraic_unchecked(minpoly, enclosure);
}

// ---------------------------------------------------------------------------
// root selection by a shrinking value ball
// ---------------------------------------------------------------------------

AlgebraicNumber select_root(const std::vector<RatPoly>& irreducible_candidates,
                            const std::function<ComplexBall(const Rat&)>& value_at) {
    Rat r(1, 1 << 30);
    for (int round = 0; round < 16; ++round) {
        ComplexBall v = value_at(r);
        const RatPoly* chosen_poly = nullptr;
        std::size_t chosen_root = 0;
        int matches = 0;
        for (const RatPoly& g : irreducible_candidates) {
            auto canon = canonical_roots(g);
            for (std::size_t i = 0; i < canon->boxes.size(); ++i) {
                IsolatingBox cb = canon->boxes[i];
                if (cb.width() > r) cb = refine_box(g, cb, r);
                if (ball_overlaps_box(v, cb)) {
                    ++matches;
                    chosen_poly = &g;
                    chosen_root = i;
                }
            }
        }
        if (matches == 1) {
            return make_algebraic_unchecked(*chosen_poly,
                                            canonical_roots(*chosen_poly)->boxes[chosen_root]);
        }
        if (matches == 0)
            throw consistency_error("select_root: value escaped every candidate root");
        r = r * r; // square the radius: quadratically tighter each round
    }
    throw precision_error("select_root: could not separate candidate roots");
}

// ---------------------------------------------------------------------------
// arithmetic
// ---------------------------------------------------------------------------

namespace {

AlgebraicNumber add_rational(const AlgebraicNumber& a, const Rat& q) {
    if (q == 0) return a;
    if (a.is_rational()) return AlgebraicNumber::from_rational(a.rational_value() + q);
    return make_algebraic_unchecked(a.minpoly().shift(-q), a.box().shift(q));
}

AlgebraicNumber mul_rational(const AlgebraicNumber& a, const Rat& q) {
    if (q == 0) return AlgebraicNumber::from_rational(Rat(0));
    if (q == 1) return a;
    if (a.is_rational()) return AlgebraicNumber::from_rational(a.rational_value() * q);
    return make_algebraic_unchecked(a.minpoly().scale_roots(q), a.box().scale(q));
}

// resultant-based annihilator for the product: Res_y(f(y), y^m g(x/y))
RatPoly product_annihilator(const RatPoly& f, const RatPoly& g) {
    const int n = f.degree(), m = g.degree();
    const int dout = n * m;
    std::vector<Rat> nodes, values;
    nodes.reserve(dout + 1);
    values.reserve(dout + 1);
    long q = 0;
    while (static_cast<int>(nodes.size()) <= dout) {
        Rat point(q);
        // h(y) = sum_j g_j point^j y^(m-j); leading y-coefficient g(0) != 0
        std::vector<Rat> h(static_cast<std::size_t>(m) + 1, Rat(0));
        Rat pw(1);
        for (int j = 0; j <= m; ++j) {
            h[static_cast<std::size_t>(m - j)] = g.coeff(static_cast<std::size_t>(j)) * pw;
            pw *= point;
        }
        RatPoly hy(std::move(h));
        nodes.push_back(point);
        values.push_back(resultant(f, hy));
        q = q <= 0 ? 1 - q : -q;
    }
    RatPoly r = interpolate(nodes, values);
    if (r.degree() != dout) throw consistency_error("product_annihilator: degree drop");
    return r.monic();
}

std::vector<RatPoly> irreducible_factors(const RatPoly& f) {
    std::vector<RatPoly> out;
    for (const auto& [g, m] : factor_rational(f).factors) {
        (void)m;
        out.push_back(g);
    }
    return out;
}

} // namespace

AlgebraicNumber qbar_add(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    if (b.is_rational()) return add_rational(a, b.rational_value());
    if (a.is_rational()) return add_rational(b, a.rational_value());
    RatPoly ann = composed_sum(a.minpoly(), b.minpoly());
    std::vector<RatPoly> cands = irreducible_factors(ann);
    return select_root(cands, [&](const Rat& r) {
        return a.value_ball(r / 4) + b.value_ball(r / 4);
    });
}

AlgebraicNumber qbar_neg(const AlgebraicNumber& a) {
    if (a.is_rational()) return AlgebraicNumber::from_rational(-a.rational_value());
    return make_algebraic_unchecked(a.minpoly().negate_roots(), a.box().negate());
}

AlgebraicNumber qbar_sub(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    return qbar_add(a, qbar_neg(b));
}

AlgebraicNumber qbar_mul(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    if (b.is_rational()) return mul_rational(a, b.rational_value());
    if (a.is_rational()) return mul_rational(b, a.rational_value());
    RatPoly ann = product_annihilator(a.minpoly(), b.minpoly());
    std::vector<RatPoly> cands = irreducible_factors(ann);
    return select_root(cands, [&](const Rat& r) {
        // scale the operand targets by the magnitudes to keep the product
        // radius near r
        Rat t = r / 16;
        ComplexBall va = a.value_ball(t);
        ComplexBall vb = b.value_ball(t);
        Rat bound = va.abs_upper() + vb.abs_upper() + 1;
        Rat tt = t / bound;
        return a.value_ball(tt) * b.value_ball(tt);
    });
}

AlgebraicNumber qbar_inverse(const AlgebraicNumber& a) {
    if (a.is_zero()) throw domain_error("qbar_inverse: division by zero");
    if (a.is_rational()) return AlgebraicNumber::from_rational(1 / a.rational_value());
    RatPoly inv_poly = a.minpoly().reverse().monic();
    std::vector<RatPoly> cands{inv_poly};
    return select_root(cands, [&](const Rat& r) {
        // |1/z - 1/w| <= |z-w| / (|z||w|); pick the operand radius accordingly
        Rat t0(1, 1024);
        ComplexBall probe = a.value_ball(t0);
        int guard = 0;
        while (probe.contains_zero()) {
            if (++guard > 64) throw precision_error("qbar_inverse: cannot separate from zero");
            t0 /= 1024;
            probe = a.value_ball(t0);
        }
        Rat lo = probe.abs_lower();
        Rat t = r * lo * lo / 4;
        if (t > t0) t = t0;
        return a.value_ball(t).inverse();
    });
}

AlgebraicNumber qbar_div(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    if (b.is_zero()) throw domain_error("qbar_div: division by zero");
    return qbar_mul(a, qbar_inverse(b));
}

AlgebraicNumber qbar_arith(QbarOp op, const AlgebraicNumber& a, const AlgebraicNumber& b) {
    switch (op) {
        case QbarOp::add: return qbar_add(a, b);
        case QbarOp::sub: return qbar_sub(a, b);
        case QbarOp::mul: return qbar_mul(a, b);
        case QbarOp::div: return qbar_div(a, b);
    }
    throw domain_error("qbar_arith: unknown operation");
}

std::vector<AlgebraicNumber> conjugates(const AlgebraicNumber& a) {
    std::vector<AlgebraicNumber> out;
    for (const IsolatingBox& b : canonical_roots(a.minpoly())->boxes)
        out.push_back(make_algebraic_unchecked(a.minpoly(), b));
    return out;
}

// ---------------------------------------------------------------------------
// integrality
// ---------------------------------------------------------------------------

bool is_algebraic_integer(const AlgebraicNumber& a) {
    for (const Rat& c : a.minpoly().coeffs())
        if (!is_integer(c)) return false;
    return true;
}

IntegerMultiplier integer_multiplier(const AlgebraicNumber& a) {
    const int n = a.degree();
    // least d with den(a_i) | d^(n-i) for every coefficient: for each prime p
    // with p^e in den(a_i), d needs p^ceil(e/(n-i))
    Int d(1);
    std::vector<std::pair<Int, unsigned long>> requirement; // prime, exponent
    for (int i = 0; i < n; ++i) {
        const Int& dn = den(a.minpoly().coeff(static_cast<std::size_t>(i)));
        if (dn == 1) continue;
        for (const Int& p : prime_factors(dn)) {
            unsigned long e = prime_valuation(dn, p);
            unsigned long slot = static_cast<unsigned long>(n - i);
            unsigned long need = (e + slot - 1) / slot;
            bool merged = false;
            for (auto& [q, ex] : requirement)
                if (q == p) {
                    ex = std::max(ex, need);
                    merged = true;
                }
            if (!merged) requirement.emplace_back(p, need);
        }
    }
    for (const auto& [p, e] : requirement) d *= pow_int(p, e);
    RatPoly scaled = a.minpoly().scale_roots(Rat(d));
    std::vector<Int> proof(scaled.coeffs().size());
    for (std::size_t i = 0; i < proof.size(); ++i) {
        if (!is_integer(scaled.coeffs()[i]))
            throw consistency_error("integer_multiplier: scaling failed to clear denominators");
        proof[i] = num(scaled.coeffs()[i]);
    }
    // verification through the arithmetic path
    if (!is_algebraic_integer(mul_rational(a, Rat(d))))
        throw consistency_error("integer_multiplier: verification failed");
    return IntegerMultiplier{d, IntPoly(std::move(proof))};
}

bool divisible_by_integer(const AlgebraicNumber& a, const Int& n) {
    if (n == 0) throw domain_error("divisible_by_integer: zero divisor");
    if (!is_algebraic_integer(a)) throw domain_error("divisible_by_integer: input not integral");
    AlgebraicNumber quotient = mul_rational(a, Rat(Int(1), n));
    return is_algebraic_integer(quotient);
}

std::vector<Int> prime_divisor_set(const AlgebraicNumber& a) {
    if (a.is_zero()) throw domain_error("prime_divisor_set: zero input");
    if (!is_algebraic_integer(a)) throw domain_error("prime_divisor_set: input not integral");
    // norm over Q[alpha]: (-1)^m f(0), an ordinary integer
    const int m = a.degree();
    Rat norm = a.minpoly().coeff(0);
    if (m % 2 != 0) norm = -norm;
    Int nval = num(norm);
    std::vector<Int> out;
    for (const Int& p : prime_factors(nval))
        if (divisible_by_integer(a, p)) out.push_back(p);
    return out;
}

// ---------------------------------------------------------------------------
// lexicographic order on C
// ---------------------------------------------------------------------------

namespace {

// sign of a nonzero real algebraic number (imaginary part identically zero)
int sign_real(const AlgebraicNumber& x) {
    Rat r(1, 1024);
    for (int round = 0; round < 40; ++round) {
        ComplexBall v = x.value_ball(r);
        auto [lo, hi] = v.real_interval();
        if (lo > 0) return 1;
        if (hi < 0) return -1;
        r = r * r;
    }
    throw precision_error("sign_real: could not separate from zero");
}

// sign of the imaginary part of a nonzero purely imaginary algebraic number
int sign_imag(const AlgebraicNumber& x) {
    Rat r(1, 1024);
    for (int round = 0; round < 40; ++round) {
        ComplexBall v = x.value_ball(r);
        auto [lo, hi] = v.imag_interval();
        if (lo > 0) return 1;
        if (hi < 0) return -1;
        r = r * r;
    }
    throw precision_error("sign_imag: could not separate from zero");
}

} // namespace

int compare_lex(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    AlgebraicNumber d = qbar_sub(a, b);
    if (d.is_zero()) return 0;
    // 2 Re(d) = d + conj(d) is real algebraic
    AlgebraicNumber re2 = qbar_add(d, d.conj());
    if (!re2.is_zero()) return sign_real(re2);
    // real parts tie: compare 2i Im(d) = d - conj(d)
    AlgebraicNumber im2 = qbar_sub(d, d.conj());
    return sign_imag(im2);
}

} // namespace lw
