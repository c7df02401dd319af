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

#include "lw/roots.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>

#include "lw/error.hpp"

namespace lw {

namespace {

constexpr mpfr_prec_t kStartPrec = 128;
constexpr mpfr_prec_t kMaxPrec = 8192;

Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

// ---------------------------------------------------------------------------
// plain complex points (midpoints only) for the Aberth iteration
// ---------------------------------------------------------------------------

struct CPoint {
    MpFloat re, im;
    explicit CPoint(mpfr_prec_t prec) : re(prec), im(prec) {}
};

CPoint cadd(const CPoint& a, const CPoint& b, mpfr_prec_t prec) {
    CPoint r(prec);
    mpfr_add(r.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
    mpfr_add(r.im.get(), a.im.get(), b.im.get(), MPFR_RNDN);
    return r;
}

CPoint csub(const CPoint& a, const CPoint& b, mpfr_prec_t prec) {
    CPoint r(prec);
    mpfr_sub(r.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
    mpfr_sub(r.im.get(), a.im.get(), b.im.get(), MPFR_RNDN);
    return r;
}

CPoint cmul(const CPoint& a, const CPoint& b, mpfr_prec_t prec) {
    CPoint r(prec);
    MpFloat t1(prec), t2(prec);
    mpfr_mul(t1.get(), a.re.get(), b.re.get(), MPFR_RNDN);
    mpfr_mul(t2.get(), a.im.get(), b.im.get(), MPFR_RNDN);
    mpfr_sub(r.re.get(), t1.get(), t2.get(), MPFR_RNDN);
    mpfr_mul(t1.get(), a.re.get(), b.im.get(), MPFR_RNDN);
    mpfr_mul(t2.get(), a.im.get(), b.re.get(), MPFR_RNDN);
    mpfr_add(r.im.get(), t1.get(), t2.get(), MPFR_RNDN);
    return r;
}

CPoint cdiv(const CPoint& a, const CPoint& b, mpfr_prec_t prec) {
    CPoint r(prec);
    MpFloat den(prec), t1(prec), t2(prec);
    mpfr_mul(t1.get(), b.re.get(), b.re.get(), MPFR_RNDN);
    mpfr_mul(t2.get(), b.im.get(), b.im.get(), MPFR_RNDN);
    mpfr_add(den.get(), t1.get(), t2.get(), MPFR_RNDN);
    mpfr_mul(t1.get(), a.re.get(), b.re.get(), MPFR_RNDN);
    mpfr_mul(t2.get(), a.im.get(), b.im.get(), MPFR_RNDN);
    mpfr_add(r.re.get(), t1.get(), t2.get(), MPFR_RNDN);
    mpfr_div(r.re.get(), r.re.get(), den.get(), MPFR_RNDN);
    mpfr_mul(t1.get(), a.im.get(), b.re.get(), MPFR_RNDN);
    mpfr_mul(t2.get(), a.re.get(), b.im.get(), MPFR_RNDN);
    mpfr_sub(r.im.get(), t1.get(), t2.get(), MPFR_RNDN);
    mpfr_div(r.im.get(), r.im.get(), den.get(), MPFR_RNDN);
    return r;
}

MpFloat cabs(const CPoint& a) {
    MpFloat r(64);
    mpfr_hypot(r.get(), a.re.get(), a.im.get(), MPFR_RNDN);
    return r;
}

std::vector<CPoint> to_points(const RatPoly& f, mpfr_prec_t prec) {
    std::vector<CPoint> c;
    c.reserve(f.coeffs().size());
    for (const Rat& q : f.coeffs()) {
        CPoint p(prec);
        mpfr_set_q(p.re.get(), q.get_mpq_t(), MPFR_RNDN);
        c.push_back(std::move(p));
    }
    return c;
}

CPoint eval_point(const std::vector<CPoint>& coeffs, const CPoint& z, mpfr_prec_t prec) {
    CPoint acc(prec);
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        acc = cmul(acc, z, prec);
        mpfr_add(acc.re.get(), acc.re.get(), coeffs[i].re.get(), MPFR_RNDN);
        mpfr_add(acc.im.get(), acc.im.get(), coeffs[i].im.get(), MPFR_RNDN);
    }
    return acc;
}

// Aberth-Ehrlich simultaneous iteration; empty result = no convergence at
// this precision. Deterministic (fixed start configuration, fixed nudges).
std::vector<CPoint> aberth(const RatPoly& f, mpfr_prec_t prec) {
    const int n = f.degree();
    std::vector<CPoint> coeffs = to_points(f, prec);
    std::vector<CPoint> dcoeffs = to_points(f.derivative(), prec);

    MpFloat r0(prec);
    mpfr_set_ui(r0.get(), 0, MPFR_RNDN);
    for (int i = 0; i < n; ++i) {
        Rat ratio = f.coeffs()[static_cast<std::size_t>(i)] / f.lc();
        MpFloat t(prec);
        mpfr_set_q(t.get(), ratio.get_mpq_t(), MPFR_RNDN);
        mpfr_abs(t.get(), t.get(), MPFR_RNDN);
        if (mpfr_cmp(t.get(), r0.get()) > 0) r0 = t;
    }
    mpfr_add_ui(r0.get(), r0.get(), 1, MPFR_RNDN);
    mpfr_mul_d(r0.get(), r0.get(), 0.8, MPFR_RNDN);

    std::vector<CPoint> z;
    z.reserve(static_cast<std::size_t>(n));
    MpFloat pi(prec);
    mpfr_const_pi(pi.get(), MPFR_RNDN);
    for (int k = 0; k < n; ++k) {
        CPoint p(prec);
        MpFloat ang(prec);
        mpfr_set_d(ang.get(), static_cast<double>(k) + 0.3541, MPFR_RNDN);
        mpfr_mul(ang.get(), ang.get(), pi.get(), MPFR_RNDN);
        mpfr_mul_ui(ang.get(), ang.get(), 2, MPFR_RNDN);
        mpfr_div_ui(ang.get(), ang.get(), static_cast<unsigned long>(n), MPFR_RNDN);
        mpfr_cos(p.re.get(), ang.get(), MPFR_RNDN);
        mpfr_sin(p.im.get(), ang.get(), MPFR_RNDN);
        mpfr_mul(p.re.get(), p.re.get(), r0.get(), MPFR_RNDN);
        mpfr_mul(p.im.get(), p.im.get(), r0.get(), MPFR_RNDN);
        z.push_back(std::move(p));
    }

    MpFloat tol(64);
    mpfr_set_ui_2exp(tol.get(), 1, -(static_cast<long>(prec) / 2), MPFR_RNDN);

    const int max_iter = 60 + 12 * n;
    for (int iter = 0; iter < max_iter; ++iter) {
        MpFloat worst(64);
        mpfr_set_ui(worst.get(), 0, MPFR_RNDN);
        for (int k = 0; k < n; ++k) {
            CPoint& zk = z[static_cast<std::size_t>(k)];
            CPoint fz = eval_point(coeffs, zk, prec);
            CPoint dz = eval_point(dcoeffs, zk, prec);
            if (mpfr_zero_p(dz.re.get()) && mpfr_zero_p(dz.im.get())) {
                mpfr_add_d(zk.re.get(), zk.re.get(), 0.0009765625, MPFR_RNDN);
                continue;
            }
            CPoint w = cdiv(fz, dz, prec);
            CPoint s(prec);
            for (int j = 0; j < n; ++j) {
                if (j == k) continue;
                CPoint diff = csub(zk, z[static_cast<std::size_t>(j)], prec);
                if (mpfr_zero_p(diff.re.get()) && mpfr_zero_p(diff.im.get())) {
                    mpfr_add_d(zk.re.get(), zk.re.get(), 0.001953125, MPFR_RNDN);
                    diff = csub(zk, z[static_cast<std::size_t>(j)], prec);
                }
                CPoint one(prec);
                mpfr_set_ui(one.re.get(), 1, MPFR_RNDN);
                s = cadd(s, cdiv(one, diff, prec), prec);
            }
            CPoint one(prec);
            mpfr_set_ui(one.re.get(), 1, MPFR_RNDN);
            CPoint denom = csub(one, cmul(w, s, prec), prec);
            CPoint corr = (mpfr_zero_p(denom.re.get()) && mpfr_zero_p(denom.im.get()))
                              ? w
                              : cdiv(w, denom, prec);
            zk = csub(zk, corr, prec);
            MpFloat ca = cabs(corr);
            MpFloat za = cabs(zk);
            mpfr_add_ui(za.get(), za.get(), 1, MPFR_RNDN);
            mpfr_div(ca.get(), ca.get(), za.get(), MPFR_RNDN);
            if (mpfr_cmp(ca.get(), worst.get()) > 0) worst = ca;
        }
        if (mpfr_cmp(worst.get(), tol.get()) < 0) return z;
    }
    return {};
}

// ---------------------------------------------------------------------------
// Exact disk certification by a Rouche argument on the shifted polynomial
// ---------------------------------------------------------------------------

struct CRat {
    Rat re, im;
};

CRat cr_add(const CRat& a, const CRat& b) { return {a.re + b.re, a.im + b.im}; }
CRat cr_mul(const CRat& a, const CRat& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

Rat cr_abs_upper(const CRat& z) { return rat_abs(z.re) + rat_abs(z.im); }
Rat cr_abs_lower(const CRat& z) { return std::max(rat_abs(z.re), rat_abs(z.im)); }

// Exact Taylor coefficients of f at a complex rational center.
std::vector<CRat> taylor_at(const RatPoly& f, const Rat& cre, const Rat& cim) {
    const int n = f.degree();
    std::vector<CRat> work(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i)
        work[static_cast<std::size_t>(i)] = {f.coeff(static_cast<std::size_t>(i)), Rat(0)};
    CRat c{cre, cim};
    std::vector<CRat> out;
    out.reserve(work.size());
    while (!work.empty()) {
        for (std::size_t i = work.size() - 1; i-- > 0;)
            work[i] = cr_add(work[i], cr_mul(c, work[i + 1]));
        out.push_back(work.front());
        work.erase(work.begin());
    }
    return out;
}

struct Disk {
    Rat cre, cim, rho;
};

IsolatingBox disk_to_box(const Disk& d) {
    return IsolatingBox{d.cre - d.rho, d.cre + d.rho, d.cim - d.rho, d.cim + d.rho};
}

Disk disk_of_box(const IsolatingBox& b) {
    auto [cre, cim] = b.center();
    return Disk{cre, cim, std::max(Rat(b.re_hi - b.re_lo), Rat(b.im_hi - b.im_lo)) / 2};
}

// Rouche: |t1| rho > |t0| + sum_{j>=2} |t_j| rho^j certifies exactly one
// simple root in the open disk. On success returns a tight enclosure from
// the first-order root w* = -t0/t1 with rigorous error eps.
std::optional<Disk> certify_disk(const RatPoly& f, const Rat& cre, const Rat& cim,
                                 const Rat& rho) {
    std::vector<CRat> t = taylor_at(f, cre, cim);
    if (t.size() < 2) return std::nullopt;
    Rat t1_lo = cr_abs_lower(t[1]);
    if (t1_lo == 0) return std::nullopt;
    Rat tail(0);
    Rat rp = rho;
    for (std::size_t j = 2; j < t.size(); ++j) {
        rp *= rho;
        tail += cr_abs_upper(t[j]) * rp;
    }
    if (!(t1_lo * rho > cr_abs_upper(t[0]) + tail)) return std::nullopt;
    // w* = -t0 / t1 exactly; |root - w*| <= tail / |t1|
    Rat den = t[1].re * t[1].re + t[1].im * t[1].im;
    Rat wre = (-t[0].re * t[1].re - t[0].im * t[1].im) / den;
    Rat wim = (-t[0].im * t[1].re + t[0].re * t[1].im) / den;
    Rat eps = tail / t1_lo;
    if (eps > rho) eps = rho;
    return Disk{cre + wre, cim + wim, eps};
}

bool disk_isolates_one_root(const RatPoly& f, const Rat& cre, const Rat& cim, const Rat& rho) {
    return certify_disk(f, cre, cim, rho).has_value();
}

// ---------------------------------------------------------------------------
// isolation and refinement of a squarefree polynomial
// ---------------------------------------------------------------------------

std::vector<Disk> isolate_squarefree(const RatPoly& g) {
    const int n = g.degree();
    if (n == 1) {
        Rat root = -g.coeff(0) / g.coeff(1);
        return {Disk{root, Rat(0), Rat(0)}};
    }
    for (mpfr_prec_t prec = kStartPrec; prec <= kMaxPrec; prec *= 2) {
        std::vector<CPoint> approx = aberth(g, prec);
        if (approx.empty()) continue;
        std::vector<std::pair<Rat, Rat>> centers;
        centers.reserve(approx.size());
        for (const CPoint& p : approx)
            centers.emplace_back(p.re.to_rat_exact(), p.im.to_rat_exact());
        Rat dmin(0);
        bool first = true;
        for (std::size_t i = 0; i < centers.size(); ++i)
            for (std::size_t j = i + 1; j < centers.size(); ++j) {
                Rat d = std::max(rat_abs(centers[i].first - centers[j].first),
                                 rat_abs(centers[i].second - centers[j].second));
                if (first || d < dmin) {
                    dmin = d;
                    first = false;
                }
            }
        Rat rho = first ? Rat(1) : dmin / 8;
        if (rho > 1) rho = Rat(1);
        if (rho == 0) continue;
        std::vector<Disk> disks;
        bool ok = true;
        for (const auto& [cre, cim] : centers) {
            std::optional<Disk> d = certify_disk(g, cre, cim, rho);
            if (!d) {
                ok = false;
                break;
            }
            // keep the budget radius for separation bookkeeping
            Rat floor_rho = rho / 64;
            if (d->rho < floor_rho) d->rho = floor_rho;
            disks.push_back(*d);
        }
        if (ok) return disks;
    }
    throw precision_error("isolate_squarefree: precision ceiling reached");
}

// Shrink a certified disk around its root. The same-root guarantee comes from
// re-certifying a covering disk around both the old and the new enclosure.
Disk refine_disk(const RatPoly& g, Disk d, const Rat& target) {
    if (d.rho <= target) return d;
    if (g.degree() == 1) return d; // exact point already
    RatPoly dg = g.derivative();
    mpfr_prec_t prec = kStartPrec;
    {
        Rat t = target;
        long bits = 96;
        while (t < 1) {
            t *= 65536;
            bits += 16;
        }
        while (prec < bits && prec < kMaxPrec) prec *= 2;
    }
    for (; prec <= kMaxPrec; prec *= 2) {
        CPoint z(prec);
        mpfr_set_q(z.re.get(), d.cre.get_mpq_t(), MPFR_RNDN);
        mpfr_set_q(z.im.get(), d.cim.get_mpq_t(), MPFR_RNDN);
        std::vector<CPoint> coeffs = to_points(g, prec);
        std::vector<CPoint> dcoeffs = to_points(dg, prec);
        for (int it = 0; it < 96; ++it) {
            CPoint fz = eval_point(coeffs, z, prec);
            CPoint dz = eval_point(dcoeffs, z, prec);
            if (mpfr_zero_p(dz.re.get()) && mpfr_zero_p(dz.im.get())) break;
            CPoint w = cdiv(fz, dz, prec);
            z = csub(z, w, prec);
            MpFloat wa = cabs(w);
            MpFloat stop(64);
            mpfr_set_ui_2exp(stop.get(), 1, -static_cast<long>(prec) + 8, MPFR_RNDN);
            if (mpfr_cmp(wa.get(), stop.get()) < 0) break;
        }
        Rat cre = z.re.to_rat_exact();
        Rat cim = z.im.to_rat_exact();
        std::optional<Disk> tight = certify_disk(g, cre, cim, target / 2);
        if (!tight) continue;
        if (tight->rho > target / 2) continue;
        // covering disk: contains the old disk and the new enclosure
        Rat dist = rat_abs(cre - d.cre) + rat_abs(cim - d.cim);
        Rat cover = dist + d.rho + tight->rho;
        if (!disk_isolates_one_root(g, cre, cim, cover)) {
            // geometry too tight; take a shallower step first
            std::optional<Disk> mid = certify_disk(g, cre, cim, d.rho / 2);
            if (mid && disk_isolates_one_root(g, cre, cim, dist + d.rho + mid->rho)) {
                d = *mid;
                if (d.rho <= target) return d;
                continue;
            }
            continue;
        }
        return *tight;
    }
    throw precision_error("refine_disk: precision ceiling reached");
}

void enforce_disjoint(std::vector<std::pair<Disk, const RatPoly*>>& items) {
    bool changed = true;
    int rounds = 0;
    while (changed) {
        changed = false;
        if (++rounds > 64) throw precision_error("enforce_disjoint: no separation");
        for (std::size_t i = 0; i < items.size(); ++i)
            for (std::size_t j = i + 1; j < items.size(); ++j) {
                IsolatingBox a = disk_to_box(items[i].first);
                IsolatingBox b = disk_to_box(items[j].first);
                if (a.intersects(b)) {
                    Rat t1 = items[i].first.rho / 4;
                    Rat t2 = items[j].first.rho / 4;
                    if (t1 == 0) t1 = Rat(1, 1048576);
                    if (t2 == 0) t2 = Rat(1, 1048576);
                    items[i].first = refine_disk(*items[i].second, items[i].first, t1);
                    items[j].first = refine_disk(*items[j].second, items[j].first, t2);
                    changed = true;
                }
            }
    }
}

} // namespace

// ---------------------------------------------------------------------------
// IsolatingBox
// ---------------------------------------------------------------------------

Rat IsolatingBox::width() const {
    return std::max(Rat(re_hi - re_lo), Rat(im_hi - im_lo));
}

std::pair<Rat, Rat> IsolatingBox::center() const {
    return {(re_lo + re_hi) / 2, (im_lo + im_hi) / 2};
}

bool IsolatingBox::intersects(const IsolatingBox& o) const {
    return !(re_hi < o.re_lo || o.re_hi < re_lo || im_hi < o.im_lo || o.im_hi < im_lo);
}

bool IsolatingBox::contains_box(const IsolatingBox& o) const {
    return re_lo <= o.re_lo && o.re_hi <= re_hi && im_lo <= o.im_lo && o.im_hi <= im_hi;
}

bool IsolatingBox::contains_point(const Rat& re, const Rat& im) const {
    return re_lo <= re && re <= re_hi && im_lo <= im && im <= im_hi;
}

ComplexBall IsolatingBox::to_ball(mpfr_prec_t prec) const {
    auto [cre, cim] = center();
    // half diagonal, loose majorant
    Rat half = (Rat(re_hi - re_lo) + Rat(im_hi - im_lo)) / 2;
    return ComplexBall::with_radius(cre, cim, half, prec);
}

IsolatingBox IsolatingBox::point(const Rat& re, const Rat& im) {
    return IsolatingBox{re, re, im, im};
}

IsolatingBox IsolatingBox::conjugate() const {
    return IsolatingBox{re_lo, re_hi, -im_hi, -im_lo};
}

IsolatingBox IsolatingBox::negate() const {
    return IsolatingBox{-re_hi, -re_lo, -im_hi, -im_lo};
}

IsolatingBox IsolatingBox::scale(const Rat& q) const {
    if (q >= 0) return IsolatingBox{re_lo * q, re_hi * q, im_lo * q, im_hi * q};
    return IsolatingBox{re_hi * q, re_lo * q, im_hi * q, im_lo * q};
}

IsolatingBox IsolatingBox::shift(const Rat& q) const {
    return IsolatingBox{re_lo + q, re_hi + q, im_lo, im_hi};
}

bool operator<(const IsolatingBox& a, const IsolatingBox& b) {
    if (a.re_lo != b.re_lo) return a.re_lo < b.re_lo;
    if (a.im_lo != b.im_lo) return a.im_lo < b.im_lo;
    if (a.re_hi != b.re_hi) return a.re_hi < b.re_hi;
    return a.im_hi < b.im_hi;
}

bool operator==(const IsolatingBox& a, const IsolatingBox& b) {
    return a.re_lo == b.re_lo && a.re_hi == b.re_hi && a.im_lo == b.im_lo && a.im_hi == b.im_hi;
}

// ---------------------------------------------------------------------------
// public isolation API
// ---------------------------------------------------------------------------

const Rat& default_isolation_radius() {
    static const Rat r(1, 65536);
    return r;
}

std::vector<std::pair<IsolatingBox, unsigned>> isolate_complex_roots(const RatPoly& f,
                                                                     const Rat& target_radius) {
    if (target_radius <= 0) throw domain_error("isolate_complex_roots: target radius <= 0");
    if (f.is_zero() || f.is_constant())
        throw domain_error("isolate_complex_roots: constant input");
    auto decomposition = squarefree_decomposition(f);
    std::vector<RatPoly> polys;
    polys.reserve(decomposition.size());
    for (auto& [g, m] : decomposition) {
        (void)m;
        polys.push_back(g);
    }
    std::vector<std::pair<Disk, const RatPoly*>> items;
    std::vector<unsigned> mults;
    for (std::size_t idx = 0; idx < polys.size(); ++idx) {
        for (Disk& d : isolate_squarefree(polys[idx])) {
            items.emplace_back(std::move(d), &polys[idx]);
            mults.push_back(decomposition[idx].second);
        }
    }
    enforce_disjoint(items);
    std::vector<std::pair<IsolatingBox, unsigned>> out;
    Rat half_target = target_radius / 2;
    for (std::size_t i = 0; i < items.size(); ++i) {
        Disk d = items[i].first;
        if (d.rho * 2 > target_radius) d = refine_disk(*items[i].second, d, half_target);
        out.emplace_back(disk_to_box(d), mults[i]);
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    unsigned total = 0;
    for (const auto& [box, m] : out) {
        (void)box;
        total += m;
    }
    if (total != static_cast<unsigned>(f.degree()))
        throw consistency_error("isolate_complex_roots: root count mismatch");
    return out;
}

// ---------------------------------------------------------------------------
// canonical roots, matching, refinement
// ---------------------------------------------------------------------------

namespace {

using RootCache = std::map<std::vector<Rat>, std::shared_ptr<const CanonicalRoots>,
                           bool (*)(const std::vector<Rat>&, const std::vector<Rat>&)>;

bool coeff_less(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
        int c = mpq_cmp(a[i].get_mpq_t(), b[i].get_mpq_t());
        if (c != 0) return c < 0;
    }
    return false;
}

std::mutex g_cache_mutex;
RootCache& cache_instance() {
    static RootCache cache(coeff_less);
    return cache;
}

} // namespace

std::shared_ptr<const CanonicalRoots> canonical_roots(const RatPoly& f) {
    if (f.is_zero() || f.is_constant()) throw domain_error("canonical_roots: constant input");
    RatPoly sf = squarefree_part(f);
    {
        std::lock_guard<std::mutex> lock(g_cache_mutex);
        auto it = cache_instance().find(sf.coeffs());
        if (it != cache_instance().end()) return it->second;
    }
    auto result = std::make_shared<CanonicalRoots>();
    result->squarefree = sf;
    for (const auto& [box, mult] : isolate_complex_roots(sf, default_isolation_radius())) {
        (void)mult;
        result->boxes.push_back(box);
    }
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    auto [it, inserted] = cache_instance().emplace(sf.coeffs(), result);
    (void)inserted;
    return it->second;
}

namespace {

IsolatingBox refine_canonical(const RatPoly& sf, const IsolatingBox& start, const Rat& target) {
    Disk d = disk_of_box(start);
    if (d.rho <= target / 2) return start;
    return disk_to_box(refine_disk(sf, d, target / 2));
}

// Decide membership of each canonical root in `box`; returns the indices of
// roots inside. Roots on the boundary raise ambiguity after a refinement cap.
std::vector<std::size_t> roots_inside(const RatPoly& sf,
                                      const std::shared_ptr<const CanonicalRoots>& canon,
                                      const IsolatingBox& box) {
    std::vector<std::size_t> inside;
    if (box.width() == 0) {
        // exact point: it selects a root iff it is one; enclosures are
        // pairwise disjoint, so at most one can contain it
        auto [pre, pim] = box.center();
        std::vector<CRat> t = taylor_at(sf, pre, pim);
        if (!(t[0].re == 0 && t[0].im == 0)) return inside;
        for (std::size_t i = 0; i < canon->boxes.size(); ++i)
            if (canon->boxes[i].contains_point(pre, pim)) {
                inside.push_back(i);
                break;
            }
        return inside;
    }
    for (std::size_t i = 0; i < canon->boxes.size(); ++i) {
        IsolatingBox cur = canon->boxes[i];
        int guard = 0;
        while (cur.intersects(box) && !box.contains_box(cur)) {
            if (++guard > 48)
                throw ambiguity_error("root isolation: box boundary cannot be separated");
            Rat w = cur.width();
            if (w == 0) break; // exact root point on the box boundary: inside
            cur = refine_canonical(sf, cur, w / 8);
        }
        if (cur.intersects(box)) inside.push_back(i);
    }
    return inside;
}

} // namespace

IsolatingBox refine_box(const RatPoly& f, const IsolatingBox& box, const Rat& target_radius) {
    if (target_radius <= 0) throw domain_error("refine_box: target radius <= 0");
    if (f.is_zero() || f.is_constant()) throw domain_error("refine_box: constant polynomial");
    RatPoly sf = squarefree_part(f);
    auto canon = canonical_roots(sf);
    std::vector<std::size_t> inside = roots_inside(sf, canon, box);
    if (inside.empty()) throw domain_error("refine_box: box contains no root of f");
    if (inside.size() > 1) throw domain_error("refine_box: box contains more than one root");
    IsolatingBox refined = refine_canonical(sf, canon->boxes[inside[0]], target_radius);
    IsolatingBox clipped{std::max(refined.re_lo, box.re_lo), std::min(refined.re_hi, box.re_hi),
                         std::max(refined.im_lo, box.im_lo), std::min(refined.im_hi, box.im_hi)};
    if (clipped.re_lo > clipped.re_hi || clipped.im_lo > clipped.im_hi)
        throw consistency_error("refine_box: refined enclosure escaped the input box");
    return clipped;
}

std::size_t canonical_root_index(const RatPoly& f, const IsolatingBox& box) {
    RatPoly sf = squarefree_part(f);
    auto canon = canonical_roots(sf);
    std::vector<std::size_t> inside = roots_inside(sf, canon, box);
    if (inside.size() != 1)
        throw ambiguity_error("canonical_root_index: box does not isolate a single root");
    return inside[0];
}

ComplexBall refined_root_ball(const RatPoly& f, const IsolatingBox& box,
                              const Rat& target_radius) {
    IsolatingBox refined = refine_box(f, box, target_radius);
    // precision from the target
    long bits = 96;
    Rat t = target_radius;
    while (t < 1) {
        t *= 65536;
        bits += 16;
    }
    mpfr_prec_t prec = 128;
    while (prec < bits && prec < kMaxPrec) prec *= 2;
    return refined.to_ball(prec);
}

} // namespace lw
