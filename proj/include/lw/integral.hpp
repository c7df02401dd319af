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

#include "lw/ball.hpp"
#include "lw/poly.hpp"

namespace lw {

/// F-transform: f + f' + f'' + ... (all derivatives summed, exact). With
/// F = f_transform(f), the antiderivative of f(x) e^-x is -e^-x F(x).
IntPoly f_transform(const IntPoly& f);
RatPoly f_transform(const RatPoly& f);

/// Sound enclosure of the integral of (f/denom)(x) e^-x over the straight
/// segment [a, b]. Primary route: exact repeated integration by parts,
/// reducing to F-transform values at the endpoints. precision must be >= 64.
ComplexBall segment_integral_exp(const IntPoly& f, const Int& denom, const ComplexBall& a,
                                 const ComplexBall& b, mpfr_prec_t precision);

/// Independent cross-check: composite Gauss-Legendre quadrature with
/// certified nodes/weights and a rigorous derivative-based error bound.
ComplexBall segment_integral_gauss_legendre(const IntPoly& f, const Int& denom,
                                            const ComplexBall& a, const ComplexBall& b,
                                            mpfr_prec_t precision);

} // namespace lw
