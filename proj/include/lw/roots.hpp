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
#include <utility>
#include <vector>

#include "lw/ball.hpp"
#include "lw/poly.hpp"

namespace lw {

/// Axis-aligned complex rectangle with exact rational bounds. Boxes returned
/// by isolation each contain exactly one root of their polynomial.
struct IsolatingBox {
    Rat re_lo, re_hi, im_lo, im_hi;

    /// Largest side length.
    Rat width() const;
    std::pair<Rat, Rat> center() const;
    bool intersects(const IsolatingBox& o) const;
    /// True if o lies inside this box (closed containment).
    bool contains_box(const IsolatingBox& o) const;
    bool contains_point(const Rat& re, const Rat& im) const;

    /// Ball covering the whole box.
    ComplexBall to_ball(mpfr_prec_t prec) const;

    /// Exact point box around a rational value.
    static IsolatingBox point(const Rat& re, const Rat& im);
    /// Box mirrored across the real axis.
    IsolatingBox conjugate() const;
    /// Box of -z.
    IsolatingBox negate() const;
    /// Box of q*z (coordinatewise scale by a rational).
    IsolatingBox scale(const Rat& q) const;
    /// Box of z + q (real rational shift).
    IsolatingBox shift(const Rat& q) const;

    /// Deterministic order by (re_lo, im_lo, re_hi, im_hi).
    friend bool operator<(const IsolatingBox& a, const IsolatingBox& b);
    friend bool operator==(const IsolatingBox& a, const IsolatingBox& b);
};

/// Isolates all complex roots of f: one box per distinct root with its
/// multiplicity (from the squarefree decomposition), boxes pairwise disjoint,
/// each box width <= target_radius. Deterministic output order by box bounds.
std::vector<std::pair<IsolatingBox, unsigned>> isolate_complex_roots(const RatPoly& f,
                                                                     const Rat& target_radius);

/// Shrinks an isolating box of (the squarefree part of) f around its root to
/// the requested width. The result is contained in the input box.
IsolatingBox refine_box(const RatPoly& f, const IsolatingBox& box, const Rat& target_radius);

/// Cached deterministic isolation of the squarefree part of f at a default
/// radius, sorted by box bounds. Index order is the canonical root order.
struct CanonicalRoots {
    RatPoly squarefree;
    std::vector<IsolatingBox> boxes;
};
std::shared_ptr<const CanonicalRoots> canonical_roots(const RatPoly& f);

/// Index of the canonical root of f selected by a box that isolates exactly
/// one root of f. Throws ambiguity_error when the box cannot be matched.
std::size_t canonical_root_index(const RatPoly& f, const IsolatingBox& box);

/// Ball around the single root of f inside box, refined to the target radius.
ComplexBall refined_root_ball(const RatPoly& f, const IsolatingBox& box, const Rat& target_radius);

/// Default isolation radius (2^-16).
const Rat& default_isolation_radius();

} // namespace lw
