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

#include <gmpxx.h>

#include <string>
#include <vector>

namespace lw {

// Exact scalars. Int is an arbitrary-precision integer, Rat an always
// canonical rational (gcd(num, den) = 1, den >= 1).
using Int = mpz_class;
using Rat = mpq_class;

/// num/den as a canonical rational. den must be nonzero.
Rat make_rat(const Int& num, const Int& den);

inline const Int& num(const Rat& q) { return q.get_num(); }
inline const Int& den(const Rat& q) { return q.get_den(); }

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

Int factorial(unsigned long n);
Int binomial(unsigned long n, unsigned long k);
Int pow_int(const Int& base, unsigned long e);
Rat pow_rat(const Rat& base, long e);

/// 2^e as a rational (e may be negative).
Rat pow2_rat(long e);

inline Int gcd_int(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int lcm_int(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

/// Deterministic primality test (BPSW backed, exact for all desk-scale inputs).
bool is_prime(const Int& n);

/// Smallest prime strictly greater than n.
Int next_prime(const Int& n);

/// Distinct prime divisors of |n|, ascending. n must be nonzero.
/// Trial division followed by a fixed-schedule Pollard rho.
std::vector<Int> prime_factors(Int n);

/// Exponent of the prime p in |n| (n nonzero).
unsigned long prime_valuation(Int n, const Int& p);

/// Positive divisors of |n| in ascending order. n must be nonzero.
std::vector<Int> divisors(const Int& n);

/// Exact rational from a decimal string such as "3", "-4/7" or "1.25".
Rat rat_from_string(const std::string& text);

/// Canonical text form: "3", "-4/7".
std::string rat_to_string(const Rat& q);

} // namespace lw
