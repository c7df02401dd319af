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

#include "lw/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "lw/error.hpp"

namespace lw {

namespace {

// ---------------------------------------------------------------------------
// F_p polynomial arithmetic (p small, coefficients in uint64)
// ---------------------------------------------------------------------------

using u64 = std::uint64_t;
using FpPoly = std::vector<u64>; // low-to-high, normalized

void fp_normalize(FpPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int fp_degree(const FpPoly& f) { return static_cast<int>(f.size()) - 1; }

u64 fp_pow(u64 base, u64 e, u64 p) {
    u64 r = 1 % p;
    base %= p;
    while (e) {
        if (e & 1) r = r * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return r;
}

u64 fp_inv(u64 a, u64 p) { return fp_pow(a % p, p - 2, p); }

FpPoly fp_mul(const FpPoly& a, const FpPoly& b, u64 p) {
    if (a.empty() || b.empty()) return {};
    FpPoly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    }
    fp_normalize(c);
    return c;
}

FpPoly fp_sub(FpPoly a, const FpPoly& b, u64 p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
    fp_normalize(a);
    return a;
}

// remainder of a by b, b nonzero
FpPoly fp_rem(FpPoly a, const FpPoly& b, u64 p) {
    const int db = fp_degree(b);
    u64 inv = fp_inv(b.back(), p);
    while (fp_degree(a) >= db) {
        int da = fp_degree(a);
        u64 q = a.back() * inv % p;
        for (int j = 0; j <= db; ++j) {
            a[static_cast<std::size_t>(da - db + j)] =
                (a[static_cast<std::size_t>(da - db + j)] + p - q * b[static_cast<std::size_t>(j)] % p) % p;
        }
        fp_normalize(a);
        if (a.empty()) break;
    }
    return a;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, u64 p) {
    while (!b.empty()) {
        FpPoly r = fp_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        u64 inv = fp_inv(a.back(), p);
        for (u64& v : a) v = v * inv % p;
    }
    return a;
}

FpPoly fp_monic(FpPoly a, u64 p) {
    if (a.empty()) return a;
    u64 inv = fp_inv(a.back(), p);
    for (u64& v : a) v = v * inv % p;
    return a;
}

FpPoly fp_derivative(const FpPoly& a, u64 p) {
    if (a.size() <= 1) return {};
    FpPoly d(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) d[i - 1] = a[i] * (i % p) % p;
    fp_normalize(d);
    return d;
}

// x^(p*i) mod f for i = 0..n-1, as rows of the Berlekamp matrix
std::vector<FpPoly> berlekamp_rows(const FpPoly& f, u64 p) {
    const int n = fp_degree(f);
    // x^p mod f by square-and-multiply on exponent p
    FpPoly xp = {0, 1};
    {
        FpPoly acc = {1};
        FpPoly base = fp_rem({0, 1}, f, p);
        u64 e = p;
        while (e) {
            if (e & 1) acc = fp_rem(fp_mul(acc, base, p), f, p);
            base = fp_rem(fp_mul(base, base, p), f, p);
            e >>= 1;
        }
        xp = acc;
    }
    std::vector<FpPoly> rows(static_cast<std::size_t>(n));
    FpPoly cur = {1};
    for (int i = 0; i < n; ++i) {
        rows[static_cast<std::size_t>(i)] = cur;
        if (i + 1 < n) cur = fp_rem(fp_mul(cur, xp, p), f, p);
    }
    return rows;
}

// nullspace basis of (Q - I)^T-free Gaussian elimination over F_p
std::vector<FpPoly> berlekamp_nullspace(const FpPoly& f, u64 p) {
    const int n = fp_degree(f);
    std::vector<FpPoly> rows = berlekamp_rows(f, p);
    // Want the left nullspace of Q - I (vectors v with v (Q - I) = 0), so row
    // reduce the transpose: M[j][i] = coeff_j(x^(p i) mod f) - delta_ij.
    std::vector<std::vector<u64>> M(static_cast<std::size_t>(n), std::vector<u64>(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < n; ++i) {
        const FpPoly& r = rows[static_cast<std::size_t>(i)];
        for (int j = 0; j < n; ++j) {
            u64 v = j < static_cast<int>(r.size()) ? r[static_cast<std::size_t>(j)] : 0;
            if (i == j) v = (v + p - 1) % p;
            M[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = v;
        }
    }
    // Track pivot column for each row.
    std::vector<int> pivot_of_row(static_cast<std::size_t>(n), -1);
    int rank = 0;
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int row = 0; row < n; ++row) {
            if (pivot_of_row[static_cast<std::size_t>(row)] == -1 &&
                M[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] != 0) {
                piv = row;
                break;
            }
        }
        if (piv < 0) continue;
        pivot_of_row[static_cast<std::size_t>(piv)] = col;
        ++rank;
        u64 inv = fp_inv(M[static_cast<std::size_t>(piv)][static_cast<std::size_t>(col)], p);
        for (int j = 0; j < n; ++j)
            M[static_cast<std::size_t>(piv)][static_cast<std::size_t>(j)] =
                M[static_cast<std::size_t>(piv)][static_cast<std::size_t>(j)] * inv % p;
        for (int row = 0; row < n; ++row) {
            if (row == piv) continue;
            u64 factor = M[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
            if (factor == 0) continue;
            for (int j = 0; j < n; ++j) {
                u64& tgt = M[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)];
                tgt = (tgt + p - factor * M[static_cast<std::size_t>(piv)][static_cast<std::size_t>(j)] % p) % p;
            }
        }
    }
    // free columns give basis vectors: v_col = e_col - sum over pivot rows
    std::vector<FpPoly> basis;
    std::vector<int> row_of_pivot_col(static_cast<std::size_t>(n), -1);
    for (int row = 0; row < n; ++row)
        if (pivot_of_row[static_cast<std::size_t>(row)] >= 0)
            row_of_pivot_col[static_cast<std::size_t>(pivot_of_row[static_cast<std::size_t>(row)])] = row;
    for (int col = 0; col < n; ++col) {
        if (row_of_pivot_col[static_cast<std::size_t>(col)] >= 0) continue;
        FpPoly v(static_cast<std::size_t>(n), 0);
        v[static_cast<std::size_t>(col)] = 1;
        for (int pc = 0; pc < n; ++pc) {
            int row = row_of_pivot_col[static_cast<std::size_t>(pc)];
            if (row < 0) continue;
            u64 val = M[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
            if (val != 0) v[static_cast<std::size_t>(pc)] = (p - val) % p;
        }
        fp_normalize(v);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Deterministic Berlekamp split of a monic squarefree f over F_p.
std::vector<FpPoly> berlekamp_factor(const FpPoly& f, u64 p) {
    std::vector<FpPoly> basis = berlekamp_nullspace(f, p);
    // nullity of Q - I (the constant vector included) = number of irreducible factors
    const std::size_t r = basis.size();
    std::vector<FpPoly> factors{fp_monic(f, p)};
    if (r == 1) return factors;
    for (const FpPoly& v : basis) {
        if (factors.size() == r) break;
        if (fp_degree(v) < 1) continue; // constant vectors never split
        for (u64 s = 0; s < p && factors.size() < r; ++s) {
            FpPoly shifted = v;
            if (shifted.empty()) shifted = {0};
            shifted[0] = (shifted[0] + p - s) % p;
            fp_normalize(shifted);
            std::vector<FpPoly> next;
            for (FpPoly& g : factors) {
                if (fp_degree(g) <= 1) {
                    next.push_back(std::move(g));
                    continue;
                }
                FpPoly d = shifted.empty() ? FpPoly{} : fp_gcd(g, shifted, p);
                if (d.empty() || fp_degree(d) == 0 || fp_degree(d) == fp_degree(g)) {
                    next.push_back(std::move(g));
                } else {
                    FpPoly q = fp_monic(g, p);
                    // q = d * (q/d)
                    FpPoly quo;
                    {
                        // synthetic division by monic-ized d
                        FpPoly dm = fp_monic(d, p);
                        FpPoly rem = q;
                        int dd = fp_degree(dm);
                        quo.assign(q.size() - dm.size() + 1, 0);
                        while (fp_degree(rem) >= dd) {
                            int dr = fp_degree(rem);
                            u64 c = rem.back();
                            quo[static_cast<std::size_t>(dr - dd)] = c;
                            for (int j = 0; j <= dd; ++j)
                                rem[static_cast<std::size_t>(dr - dd + j)] =
                                    (rem[static_cast<std::size_t>(dr - dd + j)] + p -
                                     c * dm[static_cast<std::size_t>(j)] % p) %
                                    p;
                            fp_normalize(rem);
                            if (rem.empty()) break;
                        }
                        next.push_back(dm);
                        fp_normalize(quo);
                        next.push_back(fp_monic(quo, p));
                    }
                }
            }
            factors = std::move(next);
        }
    }
    if (factors.size() != r) throw consistency_error("berlekamp: missed factor count");
    for (FpPoly& g : factors) g = fp_monic(g, p);
    std::sort(factors.begin(), factors.end());
    return factors;
}

// ---------------------------------------------------------------------------
// Hensel lifting (quadratic, recursive two-way split)
// ---------------------------------------------------------------------------

// polynomials modulo m, coefficients in [0, m)
using ModPoly = std::vector<Int>;

void mod_normalize(ModPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

ModPoly mod_reduce(const IntPoly& f, const Int& m) {
    ModPoly c(f.coeffs().size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        c[i] = f.coeffs()[i] % m;
        if (c[i] < 0) c[i] += m;
    }
    mod_normalize(c);
    return c;
}

ModPoly mod_mul(const ModPoly& a, const ModPoly& b, const Int& m) {
    if (a.empty() || b.empty()) return {};
    ModPoly c(a.size() + b.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    }
    for (Int& v : c) {
        v %= m;
        if (v < 0) v += m;
    }
    mod_normalize(c);
    return c;
}

ModPoly mod_add(ModPoly a, const ModPoly& b, const Int& m) {
    if (a.size() < b.size()) a.resize(b.size(), Int(0));
    for (std::size_t i = 0; i < b.size(); ++i) {
        a[i] += b[i];
        if (a[i] >= m) a[i] -= m;
    }
    mod_normalize(a);
    return a;
}

ModPoly mod_sub(ModPoly a, const ModPoly& b, const Int& m) {
    if (a.size() < b.size()) a.resize(b.size(), Int(0));
    for (std::size_t i = 0; i < b.size(); ++i) {
        a[i] -= b[i];
        if (a[i] < 0) a[i] += m;
    }
    mod_normalize(a);
    return a;
}

// division by a monic divisor modulo m
std::pair<ModPoly, ModPoly> mod_divrem_monic(ModPoly f, const ModPoly& g, const Int& m) {
    const int dg = static_cast<int>(g.size()) - 1;
    if (static_cast<int>(f.size()) - 1 < dg) return {{}, std::move(f)};
    ModPoly quo(f.size() - g.size() + 1, Int(0));
    for (int i = static_cast<int>(f.size()) - 1; i >= dg; --i) {
        Int c = f[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        quo[static_cast<std::size_t>(i - dg)] = c;
        for (int j = 0; j <= dg; ++j) {
            Int& tgt = f[static_cast<std::size_t>(i - dg + j)];
            tgt = (tgt - c * g[static_cast<std::size_t>(j)]) % m;
            if (tgt < 0) tgt += m;
        }
    }
    mod_normalize(f);
    mod_normalize(quo);
    return {std::move(quo), std::move(f)};
}

// One quadratic Hensel step: from f = g h (mod q) with s g + t h = 1 (mod q)
// to the same data mod q^2. h and its lift stay monic.
struct HenselPair {
    ModPoly g, h, s, t;
};

HenselPair hensel_step(const IntPoly& f, const HenselPair& in, const Int& q) {
    Int q2 = q * q;
    ModPoly fq = mod_reduce(f, q2);
    ModPoly e = mod_sub(fq, mod_mul(in.g, in.h, q2), q2);
    auto [qq, rr] = mod_divrem_monic(mod_mul(in.s, e, q2), in.h, q2);
    ModPoly g2 = mod_add(mod_add(in.g, mod_mul(in.t, e, q2), q2), mod_mul(qq, in.g, q2), q2);
    ModPoly h2 = mod_add(in.h, rr, q2);
    ModPoly one{Int(1)};
    ModPoly b = mod_sub(mod_add(mod_mul(in.s, g2, q2), mod_mul(in.t, h2, q2), q2), one, q2);
    auto [cc, dd] = mod_divrem_monic(mod_mul(in.s, b, q2), h2, q2);
    ModPoly s2 = mod_sub(in.s, dd, q2);
    ModPoly t2 = mod_sub(mod_sub(in.t, mod_mul(in.t, b, q2), q2), mod_mul(cc, g2, q2), q2);
    return {std::move(g2), std::move(h2), std::move(s2), std::move(t2)};
}

ModPoly from_fp(const FpPoly& f) {
    ModPoly r(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) r[i] = Int(static_cast<unsigned long>(f[i]));
    return r;
}

// extended euclid over F_p, returns (s, t) with s a + t b = 1 (a, b coprime)
std::pair<FpPoly, FpPoly> fp_ext_gcd(const FpPoly& a, const FpPoly& b, u64 p) {
    FpPoly r0 = a, r1 = b;
    FpPoly s0 = {1}, s1 = {};
    FpPoly t0 = {}, t1 = {1};
    while (!r1.empty()) {
        // quotient of r0 by r1
        FpPoly quo, rem = r0;
        int d1 = fp_degree(r1);
        u64 inv = fp_inv(r1.back(), p);
        quo.assign(rem.size() > r1.size() ? rem.size() - r1.size() + 1 : 1, 0);
        while (fp_degree(rem) >= d1) {
            int dr = fp_degree(rem);
            u64 c = rem.back() * inv % p;
            quo[static_cast<std::size_t>(dr - d1)] = c;
            for (int j = 0; j <= d1; ++j)
                rem[static_cast<std::size_t>(dr - d1 + j)] =
                    (rem[static_cast<std::size_t>(dr - d1 + j)] + p -
                     c * r1[static_cast<std::size_t>(j)] % p) %
                    p;
            fp_normalize(rem);
            if (rem.empty()) break;
        }
        fp_normalize(quo);
        FpPoly s2 = fp_sub(s0, fp_mul(quo, s1, p), p);
        FpPoly t2 = fp_sub(t0, fp_mul(quo, t1, p), p);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (fp_degree(r0) != 0) throw consistency_error("fp_ext_gcd: inputs not coprime");
    u64 inv = fp_inv(r0[0], p);
    for (u64& v : s0) v = v * inv % p;
    for (u64& v : t0) v = v * inv % p;
    return {s0, t0};
}

// Lift the factorization f = prod(facs) (mod p) to mod p^2^k >= bound, f monic.
std::vector<ModPoly> hensel_lift_tree(const IntPoly& f, const std::vector<FpPoly>& facs, u64 p,
                                      const Int& bound, Int& modulus_out) {
    Int q(static_cast<unsigned long>(p));
    while (q < bound) q = q * q;
    modulus_out = q;
    struct Rec {
        static std::vector<ModPoly> lift(const IntPoly& f, const std::vector<FpPoly>& facs, u64 p,
                                         const Int& target) {
            if (facs.size() == 1) return {mod_reduce(f, target)};
            std::size_t half = facs.size() / 2;
            std::vector<FpPoly> left(facs.begin(), facs.begin() + static_cast<long>(half));
            std::vector<FpPoly> right(facs.begin() + static_cast<long>(half), facs.end());
            FpPoly g0 = {1}, h0 = {1};
            for (const FpPoly& x : left) g0 = fp_mul(g0, x, p);
            for (const FpPoly& x : right) h0 = fp_mul(h0, x, p);
            auto [s0, t0] = fp_ext_gcd(g0, h0, p);
            HenselPair cur{from_fp(g0), from_fp(h0), from_fp(s0), from_fp(t0)};
            Int q(static_cast<unsigned long>(p));
            while (q < target) {
                cur = hensel_step(f, cur, q);
                q = q * q;
            }
            // recurse on the two halves as integer polynomials mod target
            IntPoly gz(std::vector<Int>(cur.g.begin(), cur.g.end()));
            IntPoly hz(std::vector<Int>(cur.h.begin(), cur.h.end()));
            std::vector<ModPoly> l = lift(gz, left, p, target);
            std::vector<ModPoly> r = lift(hz, right, p, target);
            l.insert(l.end(), r.begin(), r.end());
            return l;
        }
    };
    return Rec::lift(f, facs, p, q);
}

// ---------------------------------------------------------------------------
// Zassenhaus driver
// ---------------------------------------------------------------------------

Int sqrt_norm2_bound(const IntPoly& f) {
    Int s(0);
    for (const Int& c : f.coeffs()) s += c * c;
    Int r;
    mpz_sqrt(r.get_mpz_t(), s.get_mpz_t());
    return r + 1;
}

Int symmetric(const Int& v, const Int& m) {
    Int r = v % m;
    if (r < 0) r += m;
    if (2 * r > m) r -= m;
    return r;
}

IntPoly symmetric_poly(const ModPoly& f, const Int& m) {
    std::vector<Int> c(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) c[i] = symmetric(f[i], m);
    return IntPoly(std::move(c));
}

// exact division test over Z; returns quotient if g | f
bool int_divides(const IntPoly& f, const IntPoly& g, IntPoly& quotient) {
    RatPoly q, r;
    std::tie(q, r) = divrem(f.to_rat(), g.to_rat());
    if (!r.is_zero()) return false;
    std::vector<Int> qc(q.coeffs().size());
    for (std::size_t i = 0; i < qc.size(); ++i) {
        if (!is_integer(q.coeffs()[i])) return false;
        qc[i] = num(q.coeffs()[i]);
    }
    quotient = IntPoly(std::move(qc));
    return true;
}

// fixed, documented prime schedule for modular factorization
constexpr u64 kPrimeSchedule[] = {3,  5,  7,  11, 13, 17, 19, 23, 29,  31,  37,  41,  43,
                                  47, 53, 59, 61, 67, 71, 73, 79, 83,  89,  97,  101, 103,
                                  107, 109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173};

// factor a monic squarefree integer polynomial into monic integer irreducibles
std::vector<IntPoly> factor_monic_squarefree(const IntPoly& G) {
    const int n = G.degree();
    if (n <= 1) return {G};
    // choose the usable prime with the fewest modular factors among the first
    // five candidates (ties to the smaller prime)
    u64 best_p = 0;
    std::vector<FpPoly> best_facs;
    int tried = 0;
    for (u64 p : kPrimeSchedule) {
        if (mpz_fdiv_ui(G.lc().get_mpz_t(), p) == 0) continue;
        FpPoly fp(G.coeffs().size());
        for (std::size_t i = 0; i < fp.size(); ++i)
            fp[i] = mpz_fdiv_ui(G.coeffs()[i].get_mpz_t(), p);
        fp_normalize(fp);
        FpPoly d = fp_gcd(fp, fp_derivative(fp, p), p);
        if (fp_degree(d) != 0) continue; // not squarefree mod p
        std::vector<FpPoly> facs = berlekamp_factor(fp_monic(fp, p), p);
        if (best_p == 0 || facs.size() < best_facs.size()) {
            best_p = p;
            best_facs = std::move(facs);
        }
        if (++tried >= 5 || best_facs.size() == 1) break;
    }
    if (best_p == 0) throw consistency_error("factor: no usable prime in schedule");
    if (best_facs.size() == 1) return {G};

    // Mignotte-style bound on coefficients of any monic factor
    Int bound = (pow_int(Int(2), static_cast<unsigned long>(n) + 1) * sqrt_norm2_bound(G)) * 2 + 1;
    Int modulus;
    std::vector<ModPoly> lifted = hensel_lift_tree(G, best_facs, best_p, bound, modulus);

    // subset recombination, smallest cardinality first
    std::vector<IntPoly> out;
    std::vector<ModPoly> pool = lifted;
    IntPoly rest = G;
    std::size_t max_card = pool.size();
    for (std::size_t card = 1; card <= max_card && pool.size() > 0; ++card) {
        if (card > pool.size()) break;
        // iterate over index subsets of the current pool of size card
        std::vector<std::size_t> idx(card);
        std::iota(idx.begin(), idx.end(), 0);
        bool advanced = true;
        while (advanced) {
            // candidate product
            ModPoly prod{Int(1)};
            for (std::size_t i : idx) prod = mod_mul(prod, pool[i], modulus);
            IntPoly cand = symmetric_poly(prod, modulus);
            IntPoly quot;
            // quick filter on the constant term before the full division
            bool plausible = !cand.is_zero() && cand.coeff(0) != 0 &&
                             (rest.coeff(0) == 0 || mpz_divisible_p(rest.coeff(0).get_mpz_t(),
                                                                    cand.coeff(0).get_mpz_t()));
            if (plausible && int_divides(rest, cand, quot)) {
                out.push_back(cand);
                rest = quot;
                // remove used modular factors, restart this cardinality
                std::vector<ModPoly> next_pool;
                for (std::size_t i = 0; i < pool.size(); ++i)
                    if (std::find(idx.begin(), idx.end(), i) == idx.end())
                        next_pool.push_back(pool[i]);
                pool = std::move(next_pool);
                if (static_cast<std::size_t>(2 * card) > pool.size()) {
                    advanced = false; // cardinality loop will finish with rest
                    break;
                }
                std::iota(idx.begin(), idx.end(), 0);
                if (card > pool.size()) {
                    advanced = false;
                    break;
                }
                continue;
            }
            // next subset (lexicographic)
            advanced = false;
            for (std::size_t i = card; i-- > 0;) {
                if (idx[i] + (card - i) < pool.size()) {
                    ++idx[i];
                    for (std::size_t j = i + 1; j < card; ++j) idx[j] = idx[j - 1] + 1;
                    advanced = true;
                    break;
                }
            }
        }
    }
    if (rest.degree() > 0) out.push_back(rest);
    return out;
}

// factor a primitive squarefree integer polynomial (positive lc)
std::vector<IntPoly> factor_primitive_squarefree(const IntPoly& F) {
    if (F.degree() <= 1) return {F};
    if (F.lc() == 1) return factor_monic_squarefree(F);
    // monic transform: G(x) = lc^(n-1) F(x/lc)
    const Int& l = F.lc();
    const int n = F.degree();
    // coeff_i(G) = coeff_i(F) * lc^(n-1-i), G monic
    std::vector<Int> g(F.coeffs());
    for (int i = 0; i < n; ++i)
        g[static_cast<std::size_t>(i)] *= pow_int(l, static_cast<unsigned long>(n - 1 - i));
    g[static_cast<std::size_t>(n)] = 1;
    std::vector<IntPoly> monic_factors = factor_monic_squarefree(IntPoly(std::move(g)));
    std::vector<IntPoly> out;
    for (const IntPoly& h : monic_factors) {
        // map back: primitive part of h(lc x)
        std::vector<Int> c(h.coeffs());
        Int q(1);
        for (std::size_t i = 1; i < c.size(); ++i) {
            q *= l;
            c[i] *= q;
        }
        IntPoly mapped((std::vector<Int>(c)));
        Int cont = mapped.content();
        if (mapped.lc() < 0) cont = -cont;
        std::vector<Int> cc(mapped.coeffs());
        for (Int& v : cc) v /= cont;
        out.push_back(IntPoly(std::move(cc)));
    }
    return out;
}

} // namespace

RatPoly Factorization::expand() const {
    RatPoly acc(lead);
    for (const auto& [g, m] : factors)
        for (unsigned i = 0; i < m; ++i) acc = acc * g;
    return acc;
}

Factorization factor_rational(const RatPoly& f) {
    if (f.is_zero()) throw domain_error("factor_rational: zero polynomial");
    Factorization out;
    out.lead = f.is_constant() ? f.coeff(0) : f.lc();
    if (f.is_constant()) return out;
    for (const auto& [sf, mult] : squarefree_decomposition(f)) {
        auto [prim, scale] = sf.to_integer_scaled();
        (void)scale; // sf monic, scale only renormalizes
        for (const IntPoly& g : factor_primitive_squarefree(prim))
            out.factors.emplace_back(g.to_rat().monic(), mult);
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    if (out.expand() != f) throw consistency_error("factor_rational: product check failed");
    return out;
}

bool is_irreducible(const RatPoly& f) {
    if (f.is_zero() || f.is_constant()) return false;
    Factorization fac = factor_rational(f);
    return fac.factors.size() == 1 && fac.factors[0].second == 1;
}

} // namespace lw
