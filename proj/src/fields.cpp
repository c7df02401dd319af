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

#include "lw/fields.hpp"

#include <algorithm>

#include "lw/error.hpp"

namespace lw {

namespace {

void require_same_owner(const FieldElement& a, const FieldElement& b, const char* what) {
    if (a.owner() != b.owner()) throw domain_error(std::string(what) + ": owner field mismatch");
}

} // namespace

// ---------------------------------------------------------------------------
// FieldElement arithmetic (mod h)
// ---------------------------------------------------------------------------

FieldElement FieldElement::operator-() const {
    return FieldElement(owner_, -rep_);
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    require_same_owner(a, b, "FieldElement::add");
    return FieldElement(a.owner_, a.rep_ + b.rep_);
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    require_same_owner(a, b, "FieldElement::sub");
    return FieldElement(a.owner_, a.rep_ - b.rep_);
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    require_same_owner(a, b, "FieldElement::mul");
    RatPoly prod = a.rep_ * b.rep_;
    return FieldElement(a.owner_, divrem(prod, a.owner_->h()).second);
}

FieldElement operator*(const Rat& s, const FieldElement& a) {
    return FieldElement(a.owner_, s * a.rep_);
}

bool operator==(const FieldElement& a, const FieldElement& b) {
    require_same_owner(a, b, "FieldElement::eq");
    return a.rep_ == b.rep_;
}

FieldElement FieldElement::pow(unsigned long e) const {
    FieldElement acc = owner_->one();
    FieldElement base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

namespace {

mpfr_prec_t prec_for_target(const Rat& target) {
    long bits = 128;
    Rat t = target;
    while (t < 1 && bits < 16384) {
        t *= 65536;
        bits += 16;
    }
    mpfr_prec_t prec = 128;
    while (prec < bits) prec *= 2;
    return prec;
}

} // namespace

ComplexBall FieldElement::value_ball(const Rat& target_radius) const {
    if (rep_.is_constant()) {
        Rat c = rep_.is_zero() ? Rat(0) : rep_.coeff(0);
        return ComplexBall::from_rat(c, Rat(0), prec_for_target(target_radius) + 64);
    }
    // shrink the theta ball until the Horner image meets the target
    Rat t = target_radius;
    for (int round = 0; round < 40; ++round) {
        ComplexBall theta = refined_root_ball(owner_->h(), owner_->theta_box(), t);
        ComplexBall v = eval_ball(rep_, theta);
        if (v.radius_upper() <= target_radius) return v;
        t /= 65536;
    }
    throw precision_error("FieldElement::value_ball: target not reached");
}

// ---------------------------------------------------------------------------
// NumberField
// ---------------------------------------------------------------------------

FieldPtr NumberField::create(const RatPoly& h, const IsolatingBox& theta_box) {
    if (h.is_zero() || !h.is_monic()) throw domain_error("NumberField: h must be monic");
    auto field = std::shared_ptr<NumberField>(new NumberField());
    field->h_ = h;
    field->theta_box_ = theta_box;
    // embeddings: one per root of h, identity first, canonical order after
    auto canon = canonical_roots(h);
    if (static_cast<int>(canon->boxes.size()) != h.degree())
        throw consistency_error("NumberField: h is not squarefree");
    std::size_t id_index = canonical_root_index(h, theta_box);
    std::vector<Embedding> embs;
    for (std::size_t pass = 0; pass < 2; ++pass) {
        for (std::size_t i = 0; i < canon->boxes.size(); ++i) {
            bool identity = i == id_index;
            if ((pass == 0) != identity) continue;
            Embedding e;
            e.owner_ = field;
            e.image_box_ = canon->boxes[i];
            e.root_index_ = i;
            e.is_identity_ = identity;
            embs.push_back(std::move(e));
        }
    }
    field->embeddings_ = std::move(embs);
    return field;
}

FieldElement NumberField::element(const RatPoly& rep) const {
    RatPoly reduced = rep.degree() < degree() ? rep : divrem(rep, h_).second;
    return FieldElement(shared_from_this(), std::move(reduced));
}

FieldElement NumberField::constant(const Rat& q) const {
    return FieldElement(shared_from_this(), RatPoly(q));
}

FieldElement NumberField::theta() const {
    if (degree() == 1) return element(RatPoly(-h_.coeff(0)));
    return element(RatPoly::x());
}

AlgebraicNumber NumberField::theta_algebraic() const {
    return algebraic_from_poly(h_, theta_box_);
}

// ---------------------------------------------------------------------------
// inverse, embeddings, norms
// ---------------------------------------------------------------------------

FieldElement element_inverse(const FieldElement& a) {
    if (a.is_zero()) throw domain_error("element_inverse: zero element");
    if (a.rep().is_constant()) return a.owner()->constant(1 / a.rep().coeff(0));
    ExtGcdResult bez = ext_gcd_poly(a.rep(), a.owner()->h());
    if (bez.d.degree() != 0)
        throw consistency_error("element_inverse: rep shares a factor with h");
    return a.owner()->element(bez.u);
}

ComplexBall apply_embedding(const Embedding& sigma, const FieldElement& a,
                            const Rat& target_radius) {
    if (sigma.owner() != a.owner()) throw domain_error("apply_embedding: owner mismatch");
    if (a.rep().is_constant()) {
        Rat c = a.rep().is_zero() ? Rat(0) : a.rep().coeff(0);
        return ComplexBall::from_rat(c, Rat(0), prec_for_target(target_radius) + 64);
    }
    Rat t = target_radius;
    for (int round = 0; round < 40; ++round) {
        ComplexBall root = refined_root_ball(sigma.owner()->h(), sigma.image_box(), t);
        ComplexBall v = eval_ball(a.rep(), root);
        if (v.radius_upper() <= target_radius) return v;
        t /= 65536;
    }
    throw precision_error("apply_embedding: target not reached");
}

RatPoly char_poly(const FieldElement& a) {
    const int n = a.owner()->degree();
    if (a.rep().is_constant()) {
        Rat c = a.rep().is_zero() ? Rat(0) : a.rep().coeff(0);
        // (x - c)^n
        RatPoly acc(Rat(1));
        RatPoly lin{-c, Rat(1)};
        for (int i = 0; i < n; ++i) acc = acc * lin;
        return acc;
    }
    std::vector<Rat> nodes, values;
    nodes.reserve(n + 1);
    values.reserve(n + 1);
    long q = 0;
    while (static_cast<int>(nodes.size()) <= n) {
        Rat point(q);
        RatPoly second = RatPoly(point) - a.rep();
        values.push_back(resultant(a.owner()->h(), second));
        nodes.push_back(point);
        q = q <= 0 ? 1 - q : -q;
    }
    RatPoly r = interpolate(nodes, values);
    if (r.degree() != n) throw consistency_error("char_poly: degree drop");
    return r.monic();
}

RatPoly element_minpoly(const FieldElement& a) {
    RatPoly cp = char_poly(a);
    Factorization fac = factor_rational(cp);
    if (fac.factors.size() != 1)
        throw consistency_error("element_minpoly: characteristic polynomial is not a prime power");
    return fac.factors[0].first;
}

AlgebraicNumber exact_image(const Embedding& sigma, const FieldElement& a) {
    if (sigma.owner() != a.owner()) throw domain_error("exact_image: owner mismatch");
    if (a.rep().is_constant())
        return AlgebraicNumber::from_rational(a.rep().is_zero() ? Rat(0) : a.rep().coeff(0));
    RatPoly mp = element_minpoly(a);
    std::vector<RatPoly> cands{mp};
    return select_root(cands, [&](const Rat& r) { return apply_embedding(sigma, a, r); });
}

AlgebraicNumber element_to_algebraic(const FieldElement& a) {
    for (const Embedding& e : a.owner()->embeddings())
        if (e.is_identity()) return exact_image(e, a);
    throw consistency_error("element_to_algebraic: no identity embedding");
}

Rat field_norm(const FieldElement& a) {
    const int n = a.owner()->degree();
    if (a.is_zero()) return Rat(0);
    if (a.rep().is_constant()) return pow_rat(a.rep().coeff(0), n);
    return resultant(a.owner()->h(), a.rep());
}

Rat field_norm_via_minpoly(const FieldElement& a) {
    const int n = a.owner()->degree();
    if (a.is_zero()) return Rat(0);
    RatPoly mp = a.rep().is_constant() ? RatPoly{-a.rep().coeff(0), Rat(1)} : element_minpoly(a);
    const int m = mp.degree();
    if (n % m != 0) throw consistency_error("field_norm_via_minpoly: degree does not divide");
    Rat base = mp.coeff(0);
    if (m % 2 != 0) base = -base;
    return pow_rat(base, n / m);
}

std::optional<Rat> fixed_rational(const FieldElement& a) {
    if (a.rep().degree() > 0) return std::nullopt;
    return a.is_zero() ? Rat(0) : a.rep().coeff(0);
}

bool element_is_algebraic_integer(const FieldElement& a) {
    RatPoly mp = a.rep().is_constant() ? RatPoly{a.rep().is_zero() ? Rat(0) : -a.rep().coeff(0), Rat(1)}
                                       : element_minpoly(a);
    for (const Rat& c : mp.coeffs())
        if (!is_integer(c)) return false;
    return true;
}

bool element_divisible_by_integer(const FieldElement& a, const Int& n) {
    if (n == 0) throw domain_error("element_divisible_by_integer: zero divisor");
    return element_is_algebraic_integer(Rat(Int(1), n) * a);
}

// ---------------------------------------------------------------------------
// FieldPoly
// ---------------------------------------------------------------------------

FieldPoly::FieldPoly(FieldPtr owner, std::vector<FieldElement> coeffs)
    : owner_(std::move(owner)), c_(std::move(coeffs)) {
    normalize();
}

void FieldPoly::normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

FieldElement FieldPoly::coeff(std::size_t i) const {
    if (i < c_.size()) return c_[i];
    return owner_->zero();
}

FieldPoly FieldPoly::from_constant(const FieldPtr& owner, const FieldElement& c) {
    return FieldPoly(owner, std::vector<FieldElement>{c});
}

FieldPoly FieldPoly::linear_root(const FieldPtr& owner, const FieldElement& c) {
    return FieldPoly(owner, std::vector<FieldElement>{-c, owner->one()});
}

FieldPoly operator+(const FieldPoly& a, const FieldPoly& b) {
    const FieldPtr& owner = a.owner_ ? a.owner_ : b.owner_;
    std::vector<FieldElement> c(std::max(a.c_.size(), b.c_.size()), owner->zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] = c[i] + a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] = c[i] + b.c_[i];
    return FieldPoly(owner, std::move(c));
}

FieldPoly operator-(const FieldPoly& a, const FieldPoly& b) {
    const FieldPtr& owner = a.owner_ ? a.owner_ : b.owner_;
    std::vector<FieldElement> c(std::max(a.c_.size(), b.c_.size()), owner->zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] = c[i] + a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] = c[i] - b.c_[i];
    return FieldPoly(owner, std::move(c));
}

FieldPoly operator*(const FieldPoly& a, const FieldPoly& b) {
    const FieldPtr& owner = a.owner_ ? a.owner_ : b.owner_;
    if (a.is_zero() || b.is_zero()) return FieldPoly(owner);
    std::vector<FieldElement> c(a.c_.size() + b.c_.size() - 1, owner->zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
    }
    return FieldPoly(owner, std::move(c));
}

FieldPoly FieldPoly::scale(const FieldElement& s) const {
    std::vector<FieldElement> c(c_);
    for (FieldElement& v : c) v = v * s;
    return FieldPoly(owner_, std::move(c));
}

FieldPoly FieldPoly::scale(const Rat& s) const {
    std::vector<FieldElement> c(c_);
    for (FieldElement& v : c) v = s * v;
    return FieldPoly(owner_, std::move(c));
}

FieldPoly FieldPoly::derivative() const {
    if (c_.size() <= 1) return FieldPoly(owner_);
    std::vector<FieldElement> c(c_.size() - 1, owner_->zero());
    for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = Rat(static_cast<long>(i)) * c_[i];
    return FieldPoly(owner_, std::move(c));
}

FieldElement FieldPoly::operator()(const FieldElement& point) const {
    FieldElement acc = owner_->zero();
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * point + c_[i];
    return acc;
}

FieldPoly FieldPoly::pow(unsigned e) const {
    FieldPoly acc = from_constant(owner_, owner_->one());
    FieldPoly base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

namespace {

// remainder of a by b in K[y], b nonzero
FieldPoly field_poly_rem(const FieldPoly& a, const FieldPoly& b) {
    FieldPoly r = a;
    FieldElement lead_inv = element_inverse(b.coeffs().back());
    while (!r.is_zero() && r.degree() >= b.degree()) {
        FieldElement q = r.coeffs().back() * lead_inv;
        std::vector<FieldElement> shift(static_cast<std::size_t>(r.degree() - b.degree()),
                                        a.owner()->zero());
        shift.push_back(q);
        r = r - FieldPoly(a.owner(), std::move(shift)) * b;
    }
    return r;
}

} // namespace

FieldPoly field_poly_gcd(const FieldPoly& a, const FieldPoly& b) {
    FieldPoly x = a, y = b;
    while (!y.is_zero()) {
        FieldPoly r = field_poly_rem(x, y);
        x = y;
        y = r;
    }
    if (!x.is_zero()) x = x.scale(element_inverse(x.coeffs().back()));
    return x;
}

// ---------------------------------------------------------------------------
// field_generate
// ---------------------------------------------------------------------------

namespace {

// evaluate a rational polynomial at a field element
FieldElement eval_in_field(const RatPoly& f, const FieldElement& point) {
    FieldElement acc = point.owner()->zero();
    for (std::size_t i = f.coeffs().size(); i-- > 0;)
        acc = acc * point + point.owner()->constant(f.coeffs()[i]);
    return acc;
}

} // namespace

GeneratedField field_generate(const std::vector<AlgebraicNumber>& generators) {
    if (generators.empty()) throw domain_error("field_generate: empty generator list");
    // start from Q presented as Q[x]/(x)
    FieldPtr field = NumberField::create(RatPoly::x(), IsolatingBox::point(Rat(0), Rat(0)));
    AlgebraicNumber theta = AlgebraicNumber::from_rational(Rat(0));
    std::vector<FieldElement> reps;

    for (const AlgebraicNumber& beta : generators) {
        if (beta.is_rational()) {
            reps.push_back(field->constant(beta.rational_value()));
            continue;
        }
        // skip work when an identical generator was already processed
        bool duplicate = false;
        for (std::size_t i = 0; i < reps.size(); ++i) {
            if (generators[i].minpoly() == beta.minpoly() && generators[i] == beta) {
                reps.push_back(reps[i]);
                duplicate = true;
                break;
            }
        }
        if (duplicate) continue;

        const RatPoly& g = beta.minpoly();
        bool extended = false;
        for (long k = 1; k <= 64 && !extended; ++k) {
            AlgebraicNumber theta_next = qbar_add(theta, qbar_mul(beta, AlgebraicNumber::from_rational(Rat(k))));
            if (theta_next.degree() < field->degree()) continue;
            FieldPtr candidate = NumberField::create(theta_next.minpoly(), theta_next.box());
            FieldElement theta_elem = candidate->theta();
            // B(y) = h_prev(theta' - k y) in the candidate field
            FieldPoly lin(candidate, std::vector<FieldElement>{theta_elem,
                                                               candidate->constant(Rat(-k))});
            FieldPoly B(candidate);
            {
                const RatPoly& hp = field->h();
                for (std::size_t i = hp.coeffs().size(); i-- > 0;) {
                    B = B * lin +
                        FieldPoly::from_constant(candidate, candidate->constant(hp.coeffs()[i]));
                }
            }
            // A(y) = g(y) with rational coefficients
            std::vector<FieldElement> ac;
            ac.reserve(g.coeffs().size());
            for (const Rat& c : g.coeffs()) ac.push_back(candidate->constant(c));
            FieldPoly A(candidate, std::move(ac));
            FieldPoly d = B.is_zero() ? A : field_poly_gcd(A, B);
            if (d.degree() != 1) continue;
            // beta = -d0 (d monic)
            FieldElement rep_beta = -d.coeff(0);
            // exact certificate: g(rep_beta) = 0 in the candidate field
            if (!eval_in_field(g, rep_beta).is_zero())
                throw consistency_error("field_generate: representation fails its annihilator");
            // numeric witness: the representation tracks beta's box
            {
                ComplexBall vb = rep_beta.value_ball(Rat(1, 1 << 20));
                ComplexBall bb = beta.value_ball(Rat(1, 1 << 20));
                if (!vb.intersects(bb))
                    throw consistency_error("field_generate: representation numeric mismatch");
            }
            // rewrite earlier representations in terms of the new generator
            FieldElement theta_prev_rep = theta_elem - Rat(k) * rep_beta;
            std::vector<FieldElement> rewritten;
            rewritten.reserve(reps.size());
            for (const FieldElement& r : reps)
                rewritten.push_back(eval_in_field(r.rep(), theta_prev_rep));
            rewritten.push_back(rep_beta);
            reps = std::move(rewritten);
            field = candidate;
            theta = theta_next;
            extended = true;
        }
        if (!extended)
            throw consistency_error("field_generate: no primitive weight found (cap reached)");
    }
    return GeneratedField{field, std::move(reps)};
}

// ---------------------------------------------------------------------------
// symmetric bridge
// ---------------------------------------------------------------------------

SymmetricSetResult symmetric_set_polynomial(const std::vector<AlgebraicNumber>& multiset) {
    if (multiset.empty()) throw domain_error("symmetric_set_polynomial: empty multiset");
    GeneratedField gen = field_generate(multiset);
    FieldPoly prod = FieldPoly::from_constant(gen.field, gen.field->one());
    for (const FieldElement& gamma : gen.reps)
        prod = prod * FieldPoly::linear_root(gen.field, gamma);
    std::vector<Rat> coeffs;
    coeffs.reserve(prod.coeffs().size());
    for (std::size_t i = 0; i < prod.coeffs().size(); ++i) {
        std::optional<Rat> q = fixed_rational(prod.coeffs()[i]);
        if (!q) {
            SymmetricSetResult res;
            res.violating_index = i;
            return res;
        }
        coeffs.push_back(*q);
    }
    SymmetricSetResult res;
    res.poly = RatPoly(std::move(coeffs));
    return res;
}

} // namespace lw
