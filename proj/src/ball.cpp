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

#include "lw/ball.hpp"

#include <sstream>

#include "lw/error.hpp"

namespace lw {

namespace {

constexpr mpfr_prec_t kRadPrec = 64;

// rad += x, rounded up
void radd(MpFloat& rad, mpfr_srcptr x) {
    mpfr_add(rad.get(), rad.get(), x, MPFR_RNDU);
}

// rad += 2^(exp(val) + k - prec); covers 2^k ulps of val
void radd_ulp(MpFloat& rad, mpfr_srcptr val, mpfr_prec_t prec, int k = 0) {
    MpFloat e(kRadPrec);
    if (mpfr_zero_p(val)) {
        mpfr_set_ui_2exp(e.get(), 1, mpfr_get_emin() + 64, MPFR_RNDU);
    } else {
        mpfr_set_ui_2exp(e.get(), 1, mpfr_get_exp(val) + k - prec, MPFR_RNDU);
    }
    radd(rad, e.get());
}

void radd_ulp_if(MpFloat& rad, mpfr_srcptr val, int ternary, mpfr_prec_t prec) {
    if (ternary != 0) radd_ulp(rad, val, prec);
}

// |mid| rounded in the given direction
MpFloat hypot_dir(const MpFloat& re, const MpFloat& im, mpfr_rnd_t rnd) {
    MpFloat h(kRadPrec);
    mpfr_hypot(h.get(), re.get(), im.get(), rnd);
    return h;
}

} // namespace

Rat MpFloat::to_rat_exact() const {
    if (mpfr_zero_p(v_)) return Rat(0);
    if (mpfr_number_p(v_) == 0) throw precision_error("to_rat_exact: non-finite value");
    Int z;
    mpfr_exp_t e = mpfr_get_z_2exp(z.get_mpz_t(), v_);
    Rat r(z);
    if (e >= 0) {
        mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(e));
    } else {
        mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(-e));
    }
    return r;
}

ComplexBall::ComplexBall(mpfr_prec_t prec)
    : re_(prec), im_(prec), rad_(kRadPrec), prec_(prec) {}

ComplexBall ComplexBall::from_rat(const Rat& re, const Rat& im, mpfr_prec_t prec) {
    ComplexBall z(prec);
    int t1 = mpfr_set_q(z.re_.get(), re.get_mpq_t(), MPFR_RNDN);
    int t2 = mpfr_set_q(z.im_.get(), im.get_mpq_t(), MPFR_RNDN);
    radd_ulp_if(z.rad_, z.re_.get(), t1, prec);
    radd_ulp_if(z.rad_, z.im_.get(), t2, prec);
    return z;
}

ComplexBall ComplexBall::from_int(long v, mpfr_prec_t prec) {
    ComplexBall z(prec);
    mpfr_set_si(z.re_.get(), v, MPFR_RNDN);
    return z;
}

ComplexBall ComplexBall::with_radius(const Rat& re, const Rat& im, const Rat& radius,
                                     mpfr_prec_t prec) {
    ComplexBall z = from_rat(re, im, prec);
    MpFloat r(64);
    mpfr_set_q(r.get(), radius.get_mpq_t(), MPFR_RNDU);
    radd(z.rad_, r.get());
    return z;
}

ComplexBall ComplexBall::operator-() const {
    ComplexBall z(*this);
    mpfr_neg(z.re_.get(), z.re_.get(), MPFR_RNDN);
    mpfr_neg(z.im_.get(), z.im_.get(), MPFR_RNDN);
    return z;
}

ComplexBall operator+(const ComplexBall& a, const ComplexBall& b) {
    mpfr_prec_t prec = std::max(a.prec_, b.prec_);
    ComplexBall z(prec);
    int t1 = mpfr_add(z.re_.get(), a.re_.get(), b.re_.get(), MPFR_RNDN);
    int t2 = mpfr_add(z.im_.get(), a.im_.get(), b.im_.get(), MPFR_RNDN);
    mpfr_add(z.rad_.get(), a.rad_.get(), b.rad_.get(), MPFR_RNDU);
    radd_ulp_if(z.rad_, z.re_.get(), t1, prec);
    radd_ulp_if(z.rad_, z.im_.get(), t2, prec);
    return z;
}

ComplexBall operator-(const ComplexBall& a, const ComplexBall& b) {
    return a + (-b);
}

ComplexBall operator*(const ComplexBall& a, const ComplexBall& b) {
    mpfr_prec_t prec = std::max(a.prec_, b.prec_);
    ComplexBall z(prec);
    // midpoint products of exact dyadic midpoints; each op adds at most 1 ulp
    MpFloat u1(prec), u2(prec), v1(prec), v2(prec);
    int s1 = mpfr_mul(u1.get(), a.re_.get(), b.re_.get(), MPFR_RNDN);
    int s2 = mpfr_mul(u2.get(), a.im_.get(), b.im_.get(), MPFR_RNDN);
    int s3 = mpfr_mul(v1.get(), a.re_.get(), b.im_.get(), MPFR_RNDN);
    int s4 = mpfr_mul(v2.get(), a.im_.get(), b.re_.get(), MPFR_RNDN);
    int t1 = mpfr_sub(z.re_.get(), u1.get(), u2.get(), MPFR_RNDN);
    int t2 = mpfr_add(z.im_.get(), v1.get(), v2.get(), MPFR_RNDN);
    // |a||b| cross terms
    MpFloat abs_a = hypot_dir(a.re_, a.im_, MPFR_RNDU);
    MpFloat abs_b = hypot_dir(b.re_, b.im_, MPFR_RNDU);
    MpFloat t(kRadPrec);
    mpfr_mul(t.get(), abs_a.get(), b.rad_.get(), MPFR_RNDU);
    radd(z.rad_, t.get());
    mpfr_mul(t.get(), abs_b.get(), a.rad_.get(), MPFR_RNDU);
    radd(z.rad_, t.get());
    mpfr_mul(t.get(), a.rad_.get(), b.rad_.get(), MPFR_RNDU);
    radd(z.rad_, t.get());
    radd_ulp_if(z.rad_, u1.get(), s1, prec);
    radd_ulp_if(z.rad_, u2.get(), s2, prec);
    radd_ulp_if(z.rad_, v1.get(), s3, prec);
    radd_ulp_if(z.rad_, v2.get(), s4, prec);
    radd_ulp_if(z.rad_, z.re_.get(), t1, prec);
    radd_ulp_if(z.rad_, z.im_.get(), t2, prec);
    return z;
}

ComplexBall ComplexBall::inverse() const {
    // lower bound on |midpoint|
    MpFloat lo = hypot_dir(re_, im_, MPFR_RNDD);
    if (mpfr_cmp(lo.get(), rad_.get()) <= 0)
        throw precision_error("ComplexBall::inverse: ball contains zero");
    // exact rational inversion of the dyadic midpoint
    Rat c = re_.to_rat_exact(), d = im_.to_rat_exact();
    Rat den = c * c + d * d;
    ComplexBall z = from_rat(c / den, -d / den, prec_);
    // |1/(m+delta) - 1/m| <= r / (|m| (|m| - r))
    MpFloat margin(kRadPrec), err(kRadPrec);
    mpfr_sub(margin.get(), lo.get(), rad_.get(), MPFR_RNDD);
    mpfr_mul(err.get(), lo.get(), margin.get(), MPFR_RNDD);
    mpfr_div(err.get(), rad_.get(), err.get(), MPFR_RNDU);
    radd(z.rad_, err.get());
    return z;
}

ComplexBall operator/(const ComplexBall& a, const ComplexBall& b) {
    return a * b.inverse();
}

ComplexBall ComplexBall::exp() const {
    ComplexBall z(prec_);
    MpFloat ex(prec_), c(prec_), s(prec_);
    mpfr_exp(ex.get(), re_.get(), MPFR_RNDN);
    mpfr_cos(c.get(), im_.get(), MPFR_RNDN);
    mpfr_sin(s.get(), im_.get(), MPFR_RNDN);
    mpfr_mul(z.re_.get(), ex.get(), c.get(), MPFR_RNDN);
    mpfr_mul(z.im_.get(), ex.get(), s.get(), MPFR_RNDN);
    // each part carries a handful of ulp errors from the rounded chain
    radd_ulp(z.rad_, ex.get(), prec_, 3);
    // input radius: |e^(z+d) - e^z| <= |e^z| (e^r - 1)
    MpFloat exu(kRadPrec), em1(kRadPrec);
    mpfr_exp(exu.get(), re_.get(), MPFR_RNDU);
    mpfr_expm1(em1.get(), rad_.get(), MPFR_RNDU);
    mpfr_mul(em1.get(), em1.get(), exu.get(), MPFR_RNDU);
    radd(z.rad_, em1.get());
    return z;
}

ComplexBall ComplexBall::pow(unsigned long e) const {
    ComplexBall acc = from_int(1, prec_);
    ComplexBall base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool ComplexBall::contains_zero() const {
    MpFloat lo = hypot_dir(re_, im_, MPFR_RNDD);
    return mpfr_cmp(lo.get(), rad_.get()) <= 0;
}

bool ComplexBall::intersects(const ComplexBall& o) const {
    MpFloat dre(kRadPrec), dim(kRadPrec), dist(kRadPrec), rsum(kRadPrec);
    mpfr_sub(dre.get(), re_.get(), o.re_.get(), MPFR_RNDN);
    mpfr_sub(dim.get(), im_.get(), o.im_.get(), MPFR_RNDN);
    mpfr_hypot(dist.get(), dre.get(), dim.get(), MPFR_RNDD);
    // the two subtractions may each lose an ulp at radius precision
    radd_ulp(rsum, dre.get(), kRadPrec, 1);
    radd_ulp(rsum, dim.get(), kRadPrec, 1);
    mpfr_add(rsum.get(), rsum.get(), rad_.get(), MPFR_RNDU);
    mpfr_add(rsum.get(), rsum.get(), o.rad_.get(), MPFR_RNDU);
    return mpfr_cmp(dist.get(), rsum.get()) <= 0;
}

bool ComplexBall::contains_point(const Rat& re, const Rat& im) const {
    Rat dre = re_.to_rat_exact() - re;
    Rat dim = im_.to_rat_exact() - im;
    Rat rad = rad_.to_rat_exact();
    return dre * dre + dim * dim <= rad * rad;
}

Rat ComplexBall::abs_upper() const {
    MpFloat hi = hypot_dir(re_, im_, MPFR_RNDU);
    mpfr_add(hi.get(), hi.get(), rad_.get(), MPFR_RNDU);
    return hi.to_rat_exact();
}

Rat ComplexBall::abs_lower() const {
    MpFloat lo = hypot_dir(re_, im_, MPFR_RNDD);
    mpfr_sub(lo.get(), lo.get(), rad_.get(), MPFR_RNDD);
    if (mpfr_sgn(lo.get()) < 0) return Rat(0);
    return lo.to_rat_exact();
}

Rat ComplexBall::radius_upper() const {
    return rad_.to_rat_exact();
}

std::pair<Rat, Rat> ComplexBall::real_interval() const {
    Rat m = re_.to_rat_exact(), r = rad_.to_rat_exact();
    return {m - r, m + r};
}

std::pair<Rat, Rat> ComplexBall::imag_interval() const {
    Rat m = im_.to_rat_exact(), r = rad_.to_rat_exact();
    return {m - r, m + r};
}

std::string ComplexBall::to_string(std::size_t digits) const {
    char* re = nullptr;
    char* im = nullptr;
    char* rad = nullptr;
    mpfr_asprintf(&re, "%.*Rg", static_cast<int>(digits), re_.get());
    mpfr_asprintf(&im, "%.*Rg", static_cast<int>(digits), im_.get());
    mpfr_asprintf(&rad, "%.3Rg", rad_.get());
    std::ostringstream os;
    os << "(" << re << (im_.sign() < 0 ? " " : " +") << im << "i +/- " << rad << ")";
    mpfr_free_str(re);
    mpfr_free_str(im);
    mpfr_free_str(rad);
    return os.str();
}

ComplexBall eval_ball(const RatPoly& f, const ComplexBall& z) {
    ComplexBall acc(z.precision());
    for (std::size_t i = f.coeffs().size(); i-- > 0;) {
        acc = acc * z + ComplexBall::from_rat(f.coeffs()[i], Rat(0), z.precision());
    }
    return acc;
}

ComplexBall eval_ball(const IntPoly& f, const ComplexBall& z) {
    ComplexBall acc(z.precision());
    for (std::size_t i = f.coeffs().size(); i-- > 0;) {
        acc = acc * z + ComplexBall::from_rat(Rat(f.coeffs()[i]), Rat(0), z.precision());
    }
    return acc;
}

ComplexBall exp_rat_ball(const Rat& q, mpfr_prec_t prec) {
    return ComplexBall::from_rat(q, Rat(0), prec).exp();
}

} // namespace lw
