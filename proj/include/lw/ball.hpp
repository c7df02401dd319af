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

#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

#include "lw/numeric.hpp"
#include "lw/poly.hpp"

namespace lw {

/// Thin RAII wrapper around one mpfr_t value.
class MpFloat {
public:
    explicit MpFloat(mpfr_prec_t prec = 64) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
    MpFloat(const MpFloat& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    MpFloat(MpFloat&& o) noexcept {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_swap(v_, o.v_);
    }
    MpFloat& operator=(const MpFloat& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    MpFloat& operator=(MpFloat&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~MpFloat() { mpfr_clear(v_); }

    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    /// Exact rational value (mpfr values are dyadic).
    Rat to_rat_exact() const;

private:
    mpfr_t v_;
};

/// Complex ball: arbitrary-precision midpoint plus one radius bound. Sound:
/// the represented value always lies within `radius` of the midpoint, every
/// operation widens the radius to cover rounding.
class ComplexBall {
public:
    explicit ComplexBall(mpfr_prec_t prec = 128);

    static ComplexBall from_rat(const Rat& re, const Rat& im, mpfr_prec_t prec);
    static ComplexBall from_int(long v, mpfr_prec_t prec);
    /// Ball with an explicit extra radius (both given exactly).
    static ComplexBall with_radius(const Rat& re, const Rat& im, const Rat& radius,
                                   mpfr_prec_t prec);

    mpfr_prec_t precision() const { return prec_; }
    const MpFloat& mid_re() const { return re_; }
    const MpFloat& mid_im() const { return im_; }
    const MpFloat& radius() const { return rad_; }

    ComplexBall operator-() const;
    friend ComplexBall operator+(const ComplexBall& a, const ComplexBall& b);
    friend ComplexBall operator-(const ComplexBall& a, const ComplexBall& b);
    friend ComplexBall operator*(const ComplexBall& a, const ComplexBall& b);
    /// Throws precision_error if the divisor ball contains zero.
    friend ComplexBall operator/(const ComplexBall& a, const ComplexBall& b);

    ComplexBall inverse() const;
    /// e^z with a rigorous propagation of the input radius.
    ComplexBall exp() const;
    ComplexBall pow(unsigned long e) const;

    bool contains_zero() const;
    /// True if the two balls have a common point.
    bool intersects(const ComplexBall& o) const;
    /// True if the exact complex rational point lies in the ball.
    bool contains_point(const Rat& re, const Rat& im) const;

    /// Upper/lower bounds of |z| over the ball, as exact rationals (lower is
    /// clamped at zero).
    Rat abs_upper() const;
    Rat abs_lower() const;
    /// Upper bound on the radius as an exact rational.
    Rat radius_upper() const;
    /// Bounds for the real part interval [re_lo, re_hi] as exact rationals.
    std::pair<Rat, Rat> real_interval() const;
    std::pair<Rat, Rat> imag_interval() const;

    std::string to_string(std::size_t digits = 20) const;

private:
    friend ComplexBall add_rounding_error(ComplexBall z, int ternary_re, int ternary_im);
    MpFloat re_, im_, rad_;
    mpfr_prec_t prec_;
};

/// Horner evaluation of an exact polynomial on a ball.
ComplexBall eval_ball(const RatPoly& f, const ComplexBall& z);
ComplexBall eval_ball(const IntPoly& f, const ComplexBall& z);

/// e^q for rational q as a real ball (imaginary part exactly zero).
ComplexBall exp_rat_ball(const Rat& q, mpfr_prec_t prec);

} // namespace lw
