// Unit tests for the exact polynomial layer: arithmetic, gcd/Bezout,
// resultants, squarefree decomposition, Newton power sums and the text syntax.

#include <doctest.h>

#include <random>

#include "lw/error.hpp"
#include "lw/poly.hpp"
#include "lw/poly_text.hpp"

using namespace lw;

namespace {

RatPoly P(const std::string& s) { return parse_poly(s); }

RatPoly random_poly(std::mt19937& rng, int max_deg, int coeff_range) {
    std::uniform_int_distribution<int> deg_dist(0, max_deg);
    std::uniform_int_distribution<int> coeff_dist(-coeff_range, coeff_range);
    int d = deg_dist(rng);
    std::vector<Rat> c(static_cast<std::size_t>(d) + 1);
    for (auto& v : c) v = Rat(coeff_dist(rng));
    return RatPoly(std::move(c));
}

// Sylvester-matrix resultant by fraction-free Gaussian elimination,
// independent oracle for small degrees.
Rat sylvester_resultant(const RatPoly& f, const RatPoly& g) {
    int m = f.degree(), n = g.degree();
    if (m == 0 && n == 0) return Rat(1);
    if (m == 0) return pow_rat(f.coeff(0), n);
    if (n == 0) return pow_rat(g.coeff(0), m);
    int size = m + n;
    std::vector<std::vector<Rat>> a(static_cast<std::size_t>(size),
                                    std::vector<Rat>(static_cast<std::size_t>(size), Rat(0)));
    for (int r = 0; r < n; ++r)
        for (int j = 0; j <= m; ++j) a[r][r + j] = f.coeff(static_cast<std::size_t>(m - j));
    for (int r = 0; r < m; ++r)
        for (int j = 0; j <= n; ++j) a[n + r][r + j] = g.coeff(static_cast<std::size_t>(n - j));
    Rat det(1);
    for (int col = 0; col < size; ++col) {
        int piv = -1;
        for (int r = col; r < size; ++r)
            if (a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return Rat(0);
        if (piv != col) {
            std::swap(a[static_cast<std::size_t>(piv)], a[static_cast<std::size_t>(col)]);
            det = -det;
        }
        Rat pval = a[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
        det *= pval;
        for (int r = col + 1; r < size; ++r) {
            Rat factor = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] / pval;
            if (factor == 0) continue;
            for (int j = col; j < size; ++j)
                a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] -=
                    factor * a[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)];
        }
    }
    return det;
}

} // namespace

TEST_CASE("polynomial normalization and basic arithmetic") {
    RatPoly z;
    CHECK(z.is_zero());
    CHECK(z.degree() == RatPoly::kZeroDegree);
    RatPoly a = P("x^2 + 3/2*x + 5/4");
    CHECK(a.degree() == 2);
    CHECK(a.coeff(1) == Rat(3) / 2);
    CHECK(P("x^2-1") * P("x^2+1") == P("x^4-1"));
    CHECK(P("x^3") - P("x^3") == RatPoly());
    CHECK(P("x-1")(Rat(1)) == 0);
    RatPoly trailing({Rat(1), Rat(2), Rat(0), Rat(0)});
    CHECK(trailing.degree() == 1);
}

TEST_CASE("poly text round trip") {
    for (const char* s : {"x^4 - 4", "x^2 + 3/2*x + 5/4", "x", "0", "-x^3 + 2*x - 7", "5/3"}) {
        RatPoly p = parse_poly(s);
        CHECK(parse_poly(format_poly(p)) == p);
    }
    CHECK(format_poly(P("x^2-6")) == "x^2 - 6");
    CHECK(format_poly(P("x^2 + 3/2 * x + 5/4")) == "x^2 + 3/2*x + 5/4");
    CHECK_THROWS_AS(parse_poly("x^2 ++ 1"), domain_error);
    CHECK_THROWS_AS(parse_poly(""), domain_error);
    CHECK_THROWS_AS(parse_poly("x^"), domain_error);
    CHECK_THROWS_AS(parse_poly("3/0"), domain_error);
}

TEST_CASE("divrem and exact division") {
    RatPoly f = P("x^5 - 1");
    RatPoly g = P("x - 1");
    auto [q, r] = divrem(f, g);
    CHECK(r.is_zero());
    CHECK(q == P("x^4 + x^3 + x^2 + x + 1"));
    CHECK_THROWS_AS(divrem(f, RatPoly()), domain_error);
    CHECK_THROWS_AS(exact_div(P("x^2+1"), P("x-1")), consistency_error);
}

TEST_CASE("ext_gcd_poly identity cases") {
    // (f, 0) -> (f/lc, 1/lc, 0)
    RatPoly f = P("2*x^2 - 4");
    auto r = ext_gcd_poly(f, RatPoly());
    CHECK(r.d == P("x^2 - 2"));
    CHECK(r.u == RatPoly(Rat(1) / 2));
    CHECK(r.v.is_zero());

    // equal inputs
    auto r2 = ext_gcd_poly(P("x-1"), P("x-1"));
    CHECK(r2.d == P("x-1"));
    CHECK(r2.u * P("x-1") + r2.v * P("x-1") == r2.d);

    // (x^2-2, x): d = 1, u = -1/2, v = x/2
    auto r3 = ext_gcd_poly(P("x^2-2"), P("x"));
    CHECK(r3.d == P("1"));
    CHECK(r3.u == RatPoly(Rat(-1) / 2));
    CHECK(r3.v == P("1/2*x"));
}

TEST_CASE("ext_gcd_poly random identity and degree bounds") {
    std::mt19937 rng(12345);
    int done = 0;
    while (done < 200) {
        RatPoly f = random_poly(rng, 6, 9);
        RatPoly g = random_poly(rng, 6, 9);
        if (f.is_zero() && g.is_zero()) continue;
        auto r = ext_gcd_poly(f, g);
        CHECK(r.u * f + r.v * g == r.d);
        CHECK(r.d.is_monic());
        if (!f.is_zero()) CHECK(divrem(f, r.d).second.is_zero());
        if (!g.is_zero()) CHECK(divrem(g, r.d).second.is_zero());
        if (f.degree() > 0 && g.degree() > 0 && !r.u.is_zero() && !r.v.is_zero()) {
            CHECK(r.u.degree() < g.degree() - r.d.degree());
            CHECK(r.v.degree() < f.degree() - r.d.degree());
        }
        ++done;
    }
}

TEST_CASE("resultant examples") {
    // linear case: res(x - a, g) = g(a)
    RatPoly g = P("x^3 - 2*x + 5");
    for (long a : {-3L, 0L, 2L, 7L})
        CHECK(resultant(RatPoly{Rat(-a), Rat(1)}, g) == g(Rat(a)));
    // constant g
    CHECK(resultant(P("x^4 - 4"), P("1")) == 1);
    // shared-root detection
    CHECK(resultant(P("x^2-1"), P("x-1")) == 0);
    // res(x^2-2, x^2-3) = 1
    CHECK(resultant(P("x^2-2"), P("x^2-3")) == 1);
    CHECK_THROWS_AS(resultant(RatPoly(), P("x")), domain_error);
}

TEST_CASE("resultant against Sylvester oracle and symmetry") {
    std::mt19937 rng(777);
    int done = 0;
    while (done < 120) {
        RatPoly f = random_poly(rng, 4, 6);
        RatPoly g = random_poly(rng, 4, 6);
        if (f.is_zero() || g.is_zero()) continue;
        Rat r1 = resultant(f, g);
        CHECK(r1 == sylvester_resultant(f, g));
        Rat r2 = resultant(g, f);
        Rat sign = (f.degree() * g.degree()) % 2 == 0 ? Rat(1) : Rat(-1);
        CHECK(r1 == sign * r2);
        ++done;
    }
}

TEST_CASE("squarefree decomposition") {
    RatPoly f = P("x-1") * P("x-1") * P("x") * P("x^2+1");
    auto dec = squarefree_decomposition(f);
    REQUIRE(dec.size() == 2);
    CHECK(dec[0].first == P("x") * P("x^2+1"));
    CHECK(dec[0].second == 1);
    CHECK(dec[1].first == P("x-1"));
    CHECK(dec[1].second == 2);
    CHECK(squarefree_part(f) == P("x-1") * P("x") * P("x^2+1"));
}

TEST_CASE("power sums") {
    // all roots zero
    auto p = power_sums(P("x^4"), 5);
    CHECK(p[0] == 4);
    for (int s = 1; s <= 5; ++s) CHECK(p[static_cast<std::size_t>(s)] == 0);
    // roots 1 and 2
    auto q = power_sums(P("x^2-3*x+2"), 2);
    CHECK(q[1] == 3);
    CHECK(q[2] == 5);
    // roots +-i
    auto r = power_sums(P("x^2+1"), 4);
    CHECK(r[1] == 0);
    CHECK(r[2] == -2);
    CHECK(r[3] == 0);
    CHECK(r[4] == 2);
    CHECK_THROWS_AS(power_sums(P("2*x+1"), 3), domain_error);
}

TEST_CASE("sum over roots") {
    CHECK(sum_over_roots(P("1"), P("x^3-7*x+2")) == 3);
    CHECK(sum_over_roots(P("x"), P("x^2-3*x+2")) == 3);
    CHECK(sum_over_roots(P("x^2"), P("x^2+1")) == -2);
}

TEST_CASE("root transforms") {
    RatPoly f = P("x^2 - 2");
    CHECK(f.scale_roots(Rat(2)) == P("x^2 - 8"));
    CHECK(f.negate_roots() == P("x^2 - 2"));
    CHECK(P("x-3").negate_roots() == P("x+3"));
    CHECK(f.shift(Rat(1)) == P("x^2 + 2*x - 1"));
    CHECK(P("x^2-2").reverse() == P("-2*x^2 + 1"));
}

TEST_CASE("composed sum") {
    // roots {1} + roots {2} = {3}
    CHECK(composed_sum(P("x-1"), P("x-2")) == P("x-3"));
    // {sqrt2, -sqrt2} + {sqrt2, -sqrt2} = {2sqrt2, 0, 0, -2sqrt2}
    RatPoly s = composed_sum(P("x^2-2"), P("x^2-2"));
    CHECK(s == P("x^2-8") * P("x^2"));
}

TEST_CASE("poly kth root") {
    RatPoly b = P("x^2 + 3*x + 1");
    CHECK(poly_kth_root(b * b, 2) == b);
    CHECK(poly_kth_root(b * b * b, 3) == b);
    CHECK_THROWS_AS(poly_kth_root(P("x^2+1"), 2), consistency_error);
}

TEST_CASE("interpolation") {
    std::vector<Rat> nodes{Rat(0), Rat(1), Rat(-1), Rat(2)};
    RatPoly f = P("x^3 - 1/2*x + 3");
    std::vector<Rat> values;
    for (const Rat& x : nodes) values.push_back(f(x));
    CHECK(interpolate(nodes, values) == f);
}
