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

#include <initializer_list>
#include <utility>
#include <vector>

#include "lw/numeric.hpp"

namespace lw {

class IntPoly;

/// Dense univariate polynomial over Q, coefficients stored low-to-high with
/// no trailing zeros. The zero polynomial has an empty coefficient vector and
/// degree kZeroDegree.
class RatPoly {
public:
    static constexpr int kZeroDegree = -1;

    RatPoly() = default;
    explicit RatPoly(Rat constant);
    explicit RatPoly(std::vector<Rat> coeffs);
    RatPoly(std::initializer_list<Rat> coeffs);

    /// The monomial x.
    static RatPoly x();
    /// coeff * x^deg
    static RatPoly monomial(const Rat& coeff, unsigned deg);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    /// Coefficient of x^i (zero beyond the degree).
    const Rat& coeff(std::size_t i) const;
    const std::vector<Rat>& coeffs() const { return c_; }

    /// Leading coefficient; zero polynomial has none.
    const Rat& lc() const;

    RatPoly operator-() const;
    RatPoly& operator+=(const RatPoly& rhs);
    RatPoly& operator-=(const RatPoly& rhs);
    friend RatPoly operator+(RatPoly lhs, const RatPoly& rhs) { return lhs += rhs; }
    friend RatPoly operator-(RatPoly lhs, const RatPoly& rhs) { return lhs -= rhs; }
    friend RatPoly operator*(const RatPoly& lhs, const RatPoly& rhs);
    friend RatPoly operator*(const Rat& s, const RatPoly& p);
    friend RatPoly operator*(const RatPoly& p, const Rat& s) { return s * p; }
    friend bool operator==(const RatPoly& lhs, const RatPoly& rhs) { return lhs.c_ == rhs.c_; }
    friend bool operator!=(const RatPoly& lhs, const RatPoly& rhs) { return !(lhs == rhs); }

    /// Deterministic total order (degree, then coefficients low-to-high).
    friend bool operator<(const RatPoly& lhs, const RatPoly& rhs);

    Rat operator()(const Rat& point) const;

    RatPoly derivative() const;
    RatPoly monic() const;

    /// f(x + c)
    RatPoly shift(const Rat& c) const;
    /// f(c * x)
    RatPoly scale_arg(const Rat& c) const;
    /// Polynomial whose roots are c times the roots: c^n f(x/c), normalized monic
    /// for monic input. c must be nonzero.
    RatPoly scale_roots(const Rat& c) const;
    /// x^n f(1/x) (coefficients reversed; input constant term need not be nonzero).
    RatPoly reverse() const;
    /// f(-x) adjusted so monic input stays monic.
    RatPoly negate_roots() const;

    /// Largest v with x^v dividing f (0 for nonzero constant). f must be nonzero.
    unsigned trailing_zero_count() const;

    /// Splits f into (primitive integer polynomial, rational scale) with
    /// f = scale * primitive and the primitive part having positive leading
    /// coefficient. f must be nonzero.
    std::pair<IntPoly, Rat> to_integer_scaled() const;

private:
    void normalize();
    std::vector<Rat> c_;
};

/// Dense univariate polynomial over Z, same storage convention as RatPoly.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(Int constant);
    explicit IntPoly(std::vector<Int> coeffs);
    IntPoly(std::initializer_list<Int> coeffs);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const Int& coeff(std::size_t i) const;
    const std::vector<Int>& coeffs() const { return c_; }
    const Int& lc() const;

    friend IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs);
    friend IntPoly operator+(const IntPoly& lhs, const IntPoly& rhs);
    friend IntPoly operator-(const IntPoly& lhs, const IntPoly& rhs);
    friend IntPoly operator*(const Int& s, const IntPoly& p);
    friend bool operator==(const IntPoly& lhs, const IntPoly& rhs) { return lhs.c_ == rhs.c_; }

    Int operator()(const Int& point) const;
    IntPoly derivative() const;

    /// gcd of all coefficients (positive); zero polynomial has content 0.
    Int content() const;

    RatPoly to_rat() const;

private:
    void normalize();
    std::vector<Int> c_;
};

/// Quotient and remainder of f by g (g nonzero), f = q*g + r, deg r < deg g.
std::pair<RatPoly, RatPoly> divrem(const RatPoly& f, const RatPoly& g);

/// Exact quotient; throws consistency_error if the division leaves a remainder.
RatPoly exact_div(const RatPoly& f, const RatPoly& g);

/// Monic gcd. gcd(0, 0) is an error.
RatPoly gcd(const RatPoly& f, const RatPoly& g);

struct ExtGcdResult {
    RatPoly d, u, v; // u*f + v*g == d, d monic
};

/// Extended gcd with the Bezout cofactors reduced so that
/// deg u < deg g - deg d and deg v < deg f - deg d when both degrees are positive.
ExtGcdResult ext_gcd_poly(const RatPoly& f, const RatPoly& g);

/// Resultant of two nonzero polynomials, computed by the subresultant
/// polynomial remainder sequence.
Rat resultant(const RatPoly& f, const RatPoly& g);

/// Yun squarefree decomposition of a nonconstant polynomial:
/// monic(f) = prod factor^multiplicity with the factors monic, squarefree and
/// pairwise coprime. Multiplicities ascend.
std::vector<std::pair<RatPoly, unsigned>> squarefree_decomposition(const RatPoly& f);

/// Product of the distinct monic irreducible-free factors: monic(f / gcd(f, f')).
RatPoly squarefree_part(const RatPoly& f);

/// Power sums p_0..p_N of the roots of a monic f (with multiplicity), via
/// Newton's identities. p_0 = deg f.
std::vector<Rat> power_sums(const RatPoly& f, unsigned N);

/// Sum of g over the roots of monic nonconstant f, with multiplicity.
Rat sum_over_roots(const RatPoly& g, const RatPoly& f);

/// Polynomial whose roots are all pairwise sums a_i + b_j of the roots of
/// a and b (monic output of degree deg a * deg b).
RatPoly composed_sum(const RatPoly& a, const RatPoly& b);

/// Exact k-th root of a monic polynomial known to be a perfect k-th power.
/// Throws consistency_error otherwise.
RatPoly poly_kth_root(const RatPoly& f, unsigned k);

/// Interpolating polynomial through (nodes[i], values[i]), nodes distinct.
RatPoly interpolate(const std::vector<Rat>& nodes, const std::vector<Rat>& values);

} // namespace lw
