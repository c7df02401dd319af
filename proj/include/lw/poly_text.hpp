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

#include <string>

#include "lw/poly.hpp"

namespace lw {

/// Parses the polynomial syntax used everywhere a polynomial is read:
/// integer or rational coefficients, `^` powers, optional `*`,
/// e.g. "x^4 - 4", "x^2 + 3/2*x + 5/4". Throws domain_error on bad input.
RatPoly parse_poly(const std::string& text);

/// Emits the same syntax with minimal parentheses, e.g. "x^2 - 6".
std::string format_poly(const RatPoly& p);
std::string format_poly(const IntPoly& p);

} // namespace lw
