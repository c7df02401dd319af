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

#include <utility>
#include <vector>

#include "lw/poly.hpp"

namespace lw {

struct Factorization {
    Rat lead;                                          // leading constant
    std::vector<std::pair<RatPoly, unsigned>> factors; // monic irreducible, multiplicity

    /// Re-expanded product lead * prod factor^multiplicity.
    RatPoly expand() const;
};

/// Complete factorization over Q: squarefree decomposition, factorization
/// modulo a fixed-schedule prime, Hensel lifting to a Mignotte-bound modulus
/// and subset recombination. Factors are pairwise distinct, monic and
/// irreducible, sorted by (degree, coefficient sequence). f must be nonzero.
Factorization factor_rational(const RatPoly& f);

/// True iff f is irreducible over Q (degree >= 1).
bool is_irreducible(const RatPoly& f);

} // namespace lw
