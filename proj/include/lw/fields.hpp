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

#include <memory>
#include <optional>
#include <vector>

#include "lw/qbar.hpp"

namespace lw {

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

/// Element of a number field in the power basis of the generator:
/// a polynomial of degree < [K:Q] in theta, arithmetic modulo h.
class FieldElement {
public:
    FieldElement() = default;
    const FieldPtr& owner() const { return owner_; }
    const RatPoly& rep() const { return rep_; }
    bool is_zero() const { return rep_.is_zero(); }

    FieldElement operator-() const;
    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const Rat& s, const FieldElement& a);
    friend bool operator==(const FieldElement& a, const FieldElement& b);
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

    FieldElement pow(unsigned long e) const;

    /// Ball around the value under the identity embedding.
    ComplexBall value_ball(const Rat& target_radius) const;

private:
    friend class NumberField;
    FieldElement(FieldPtr owner, RatPoly rep) : owner_(std::move(owner)), rep_(std::move(rep)) {}
    FieldPtr owner_;
    RatPoly rep_;
};

/// One of the [K:Q] embeddings of K into C, identified by the root of h it
/// sends theta to.
class Embedding {
public:
    const FieldPtr& owner() const { return owner_; }
    const IsolatingBox& image_box() const { return image_box_; }
    std::size_t root_index() const { return root_index_; }
    bool is_identity() const { return is_identity_; }

private:
    friend class NumberField;
    FieldPtr owner_;
    IsolatingBox image_box_;
    std::size_t root_index_ = 0;
    bool is_identity_ = false;
};

/// A number field Q(theta) presented by the monic irreducible minimal
/// polynomial h of theta and an isolating box picking which root theta is.
/// The embedding list is computed once at construction, identity first.
class NumberField : public std::enable_shared_from_this<NumberField> {
public:
    static FieldPtr create(const RatPoly& h, const IsolatingBox& theta_box);

    const RatPoly& h() const { return h_; }
    const IsolatingBox& theta_box() const { return theta_box_; }
    int degree() const { return h_.degree(); }
    const std::vector<Embedding>& embeddings() const { return embeddings_; }

    FieldElement element(const RatPoly& rep) const;
    FieldElement constant(const Rat& q) const;
    FieldElement zero() const { return constant(Rat(0)); }
    FieldElement one() const { return constant(Rat(1)); }
    FieldElement theta() const;
    AlgebraicNumber theta_algebraic() const;

private:
    NumberField() = default;
    RatPoly h_;
    IsolatingBox theta_box_;
    std::vector<Embedding> embeddings_;
};

struct GeneratedField {
    FieldPtr field;
    std::vector<FieldElement> reps; // one per input generator, in order
};

/// Primitive-element construction of Q(gens...): tries integer weights in a
/// deterministic low-to-high order, accepts a candidate when the new
/// generator is representable (certified by a linear gcd in the candidate
/// field), and rewrites all previous representations.
GeneratedField field_generate(const std::vector<AlgebraicNumber>& generators);

/// Inverse in the field via the Bezout identity with h. a must be nonzero.
FieldElement element_inverse(const FieldElement& a);

/// Ball enclosing sigma(a): the representation evaluated at sigma's root.
ComplexBall apply_embedding(const Embedding& sigma, const FieldElement& a,
                            const Rat& target_radius);

/// Exact image sigma(a) as an algebraic number.
AlgebraicNumber exact_image(const Embedding& sigma, const FieldElement& a);

/// Exact value of a as an algebraic number (identity embedding).
AlgebraicNumber element_to_algebraic(const FieldElement& a);

/// Characteristic polynomial of multiplication by a: prod (x - sigma(a)),
/// monic of degree [K:Q]; a power of the minimal polynomial of a.
RatPoly char_poly(const FieldElement& a);

/// Minimal polynomial of a over Q (the unique irreducible factor of the
/// characteristic polynomial).
RatPoly element_minpoly(const FieldElement& a);

/// Field norm N_{K/Q}(a), exactly, via the resultant Res(h, rep).
Rat field_norm(const FieldElement& a);

/// Independent route: [(-1)^m f_a(0)]^(n/m) from the minimal polynomial.
Rat field_norm_via_minpoly(const FieldElement& a);

/// The rational value iff the representation is constant.
std::optional<Rat> fixed_rational(const FieldElement& a);

/// True iff a is an algebraic integer (its minimal polynomial is integral).
bool element_is_algebraic_integer(const FieldElement& a);

/// True iff a/n is an algebraic integer (a integral, n nonzero).
bool element_divisible_by_integer(const FieldElement& a, const Int& n);

struct SymmetricSetResult {
    std::optional<RatPoly> poly;             // set on success
    std::optional<std::size_t> violating_index; // lowest non-rational coefficient
};

/// Expands prod (x - gamma) over the multiset inside a common field and
/// returns it iff every coefficient is rational; otherwise reports the first
/// non-rational symmetric function (lowest coefficient index).
SymmetricSetResult symmetric_set_polynomial(const std::vector<AlgebraicNumber>& multiset);

// ---------------------------------------------------------------------------
// dense polynomials with FieldElement coefficients
// ---------------------------------------------------------------------------

class FieldPoly {
public:
    FieldPoly() = default;
    explicit FieldPoly(FieldPtr owner) : owner_(std::move(owner)) {}
    FieldPoly(FieldPtr owner, std::vector<FieldElement> coeffs);

    const FieldPtr& owner() const { return owner_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    FieldElement coeff(std::size_t i) const;
    const std::vector<FieldElement>& coeffs() const { return c_; }

    static FieldPoly from_constant(const FieldPtr& owner, const FieldElement& c);
    /// x - c
    static FieldPoly linear_root(const FieldPtr& owner, const FieldElement& c);

    friend FieldPoly operator+(const FieldPoly& a, const FieldPoly& b);
    friend FieldPoly operator-(const FieldPoly& a, const FieldPoly& b);
    friend FieldPoly operator*(const FieldPoly& a, const FieldPoly& b);
    FieldPoly scale(const FieldElement& s) const;
    FieldPoly scale(const Rat& s) const;

    FieldPoly derivative() const;
    FieldElement operator()(const FieldElement& point) const;
    FieldPoly pow(unsigned e) const;

private:
    void normalize();
    FieldPtr owner_;
    std::vector<FieldElement> c_;
};

/// Monic gcd in K[y] by the Euclidean algorithm.
FieldPoly field_poly_gcd(const FieldPoly& a, const FieldPoly& b);

} // namespace lw
