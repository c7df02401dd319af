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

#include <functional>
#include <set>
#include <vector>

#include "lw/factor.hpp"
#include "lw/poly.hpp"
#include "lw/roots.hpp"

namespace lw {

/// An exact algebraic number: a monic irreducible minimal polynomial over Q
/// together with an isolating box selecting one of its roots. Immutable.
class AlgebraicNumber {
public:
    /// The rational q, with minimal polynomial x - q.
    static AlgebraicNumber from_rational(const Rat& q);

    const RatPoly& minpoly() const { return minpoly_; }
    const IsolatingBox& box() const { return box_; }
    int degree() const { return minpoly_.degree(); }

    bool is_zero() const;              // iff minpoly is x
    bool is_rational() const { return minpoly_.degree() == 1; }
    Rat rational_value() const;        // requires is_rational()

    /// Ball around the value, refined until its radius is below the target.
    ComplexBall value_ball(const Rat& target_radius) const;

    /// Complex conjugate (same minimal polynomial, mirrored box).
    AlgebraicNumber conj() const;

    friend bool operator==(const AlgebraicNumber& a, const AlgebraicNumber& b);
    friend bool operator!=(const AlgebraicNumber& a, const AlgebraicNumber& b) {
        return !(a == b);
    }

private:
    AlgebraicNumber(RatPoly minpoly, IsolatingBox box)
        : minpoly_(std::move(minpoly)), box_(std::move(box)) {}
    RatPoly minpoly_;
    IsolatingBox box_;
    friend AlgebraicNumber make_algebraic_unchecked(RatPoly, IsolatingBox);
};

/// Constructs the algebraic number selected by a box containing at least one
/// root of f: the minimal polynomial is the unique irreducible factor of f
/// with a root in the box, and the returned box isolates that root among all
/// roots of f. Throws ambiguity_error when the box selects several roots.
AlgebraicNumber algebraic_from_poly(const RatPoly& f, const IsolatingBox& box);

enum class QbarOp { add, sub, mul, div };

AlgebraicNumber qbar_arith(QbarOp op, const AlgebraicNumber& a, const AlgebraicNumber& b);
AlgebraicNumber qbar_add(const AlgebraicNumber& a, const AlgebraicNumber& b);
AlgebraicNumber qbar_sub(const AlgebraicNumber& a, const AlgebraicNumber& b);
AlgebraicNumber qbar_mul(const AlgebraicNumber& a, const AlgebraicNumber& b);
AlgebraicNumber qbar_div(const AlgebraicNumber& a, const AlgebraicNumber& b);
AlgebraicNumber qbar_neg(const AlgebraicNumber& a);
AlgebraicNumber qbar_inverse(const AlgebraicNumber& a);

/// All deg(minpoly) conjugates in canonical root order; the input value is
/// among them (as a value).
std::vector<AlgebraicNumber> conjugates(const AlgebraicNumber& a);

/// True iff the minimal polynomial has integer coefficients.
bool is_algebraic_integer(const AlgebraicNumber& a);

struct IntegerMultiplier {
    Int d;          // least positive integer with d*alpha integral
    IntPoly proof;  // monic integer annihilator of d*alpha
};

/// Least d >= 1 with d*alpha an algebraic integer, plus the monic integer
/// polynomial annihilating d*alpha.
IntegerMultiplier integer_multiplier(const AlgebraicNumber& a);

/// True iff alpha/n is an algebraic integer. alpha must be an algebraic
/// integer and n nonzero.
bool divisible_by_integer(const AlgebraicNumber& a, const Int& n);

/// The finitely many primes p dividing alpha (alpha a nonzero algebraic
/// integer): candidates are the prime divisors of the norm, each tested.
std::vector<Int> prime_divisor_set(const AlgebraicNumber& a);

/// Lexicographic comparison on C (real part, then imaginary part):
/// -1, 0, +1. Exact: refines until the order is decided.
int compare_lex(const AlgebraicNumber& a, const AlgebraicNumber& b);

/// Selects, among the roots of the given irreducible candidates, the one a
/// shrinking value ball converges to. value_at(r) must return a ball of
/// radius <= ~r containing the true value for every r.
AlgebraicNumber select_root(const std::vector<RatPoly>& irreducible_candidates,
                            const std::function<ComplexBall(const Rat&)>& value_at);

} // namespace lw
