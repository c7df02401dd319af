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

#include "lw/numeric.hpp"

#include <algorithm>
#include <cstddef>

#include "lw/error.hpp"

namespace lw {

Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw domain_error("make_rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Rat pow_rat(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    if (base == 0) {
        if (e < 0) throw domain_error("pow_rat: zero base, negative exponent");
        return Rat(0);
    }
    unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
    Rat r = make_rat(pow_int(num(base), a), pow_int(den(base), a));
    if (e < 0) r = 1 / r;
    return r;
}

Rat pow2_rat(long e) {
    Rat r;
    if (e >= 0) {
        mpq_mul_2exp(r.get_mpq_t(), Rat(1).get_mpq_t(), static_cast<unsigned long>(e));
    } else {
        mpq_div_2exp(r.get_mpq_t(), Rat(1).get_mpq_t(), static_cast<unsigned long>(-e));
    }
    return r;
}

bool is_prime(const Int& n) {
    if (n < 2) return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

Int next_prime(const Int& n) {
    Int r;
    mpz_nextprime(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

namespace {

// Pollard rho with a fixed increment schedule so runs are reproducible.
Int pollard_rho(const Int& n) {
    for (unsigned long c = 1; c < 64; ++c) {
        Int x(2), y(2), d(1);
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            Int diff = x - y;
            if (diff < 0) diff = -diff;
            if (diff == 0) break;
            d = gcd_int(diff, n);
        }
        if (d > 1 && d < n) return d;
    }
    throw error("pollard_rho: failed to split " + Int(n).get_str());
}

void factor_into(Int n, std::vector<Int>& out) {
    if (n <= 1) return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    Int d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

} // namespace

std::vector<Int> prime_factors(Int n) {
    if (n == 0) throw domain_error("prime_factors: zero input");
    if (n < 0) n = -n;
    std::vector<Int> out;
    for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul, 29ul, 31ul, 37ul}) {
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            out.emplace_back(p);
            while (mpz_divisible_ui_p(n.get_mpz_t(), p)) n /= static_cast<long>(p);
        }
    }
    // remaining trial division up to 2^16
    for (Int p(41); p * p <= n && p < 65536; p = next_prime(p)) {
        if (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
            out.push_back(p);
            while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) n /= p;
        }
    }
    factor_into(n, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

unsigned long prime_valuation(Int n, const Int& p) {
    if (n == 0) throw domain_error("prime_valuation: zero input");
    if (n < 0) n = -n;
    unsigned long v = 0;
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
        n /= p;
        ++v;
    }
    return v;
}

std::vector<Int> divisors(const Int& n) {
    std::vector<Int> primes = prime_factors(n);
    Int m = n < 0 ? Int(-n) : n;
    std::vector<Int> out{Int(1)};
    for (const Int& p : primes) {
        unsigned long e = prime_valuation(m, p);
        std::size_t base = out.size();
        Int pk(1);
        for (unsigned long i = 1; i <= e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Rat rat_from_string(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw domain_error("rat_from_string: empty input");
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        // decimal literal: shift the point away
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        std::size_t frac = s.size() - dot - 1;
        if (digits.empty() || digits == "-" || digits == "+")
            throw domain_error("rat_from_string: bad decimal '" + text + "'");
        Int n;
        if (mpz_set_str(n.get_mpz_t(), digits.c_str(), 10) != 0)
            throw domain_error("rat_from_string: bad decimal '" + text + "'");
        return make_rat(n, pow_int(Int(10), frac));
    }
    Rat q;
    if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
        throw domain_error("rat_from_string: bad rational '" + text + "'");
    if (q.get_den() == 0) throw domain_error("rat_from_string: zero denominator");
    q.canonicalize();
    return q;
}

std::string rat_to_string(const Rat& q) {
    return q.get_str();
}

} // namespace lw
