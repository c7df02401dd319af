// Factorization tests: the spec examples, reconstruction bit-exactness and a
// rational-root oracle for the low-degree factors.

#include <doctest.h>

#include <random>

#include "lw/error.hpp"
#include "lw/factor.hpp"
#include "lw/poly_text.hpp"

using namespace lw;

namespace {

RatPoly P(const std::string& s) { return parse_poly(s); }

// Exhaustive rational-root search over Mignotte-bounded candidates p/q with
// p | constant, q | lc of the primitive part. Independent of the factor code.
bool has_rational_root(const RatPoly& f) {
    auto [prim, scale] = f.to_integer_scaled();
    (void)scale;
    if (prim.coeff(0) == 0) return true;
    std::vector<Int> ps = divisors(prim.coeff(0));
    std::vector<Int> qs = divisors(prim.lc());
    for (const Int& p : ps)
        for (const Int& q : qs) {
            Rat cand = make_rat(p, q);
            if (f(cand) == 0 || f(-cand) == 0) return true;
        }
    return false;
}

RatPoly random_poly(std::mt19937& rng, int deg, int coeff_range) {
    std::uniform_int_distribution<int> coeff_dist(-coeff_range, coeff_range);
    std::vector<Rat> c(static_cast<std::size_t>(deg) + 1);
    for (auto& v : c) v = Rat(coeff_dist(rng));
    c.back() = Rat(1);
    return RatPoly(std::move(c));
}

} // namespace

TEST_CASE("factor examples") {
    auto f1 = factor_rational(P("x^2-1"));
    CHECK(f1.lead == 1);
    REQUIRE(f1.factors.size() == 2);
    CHECK(f1.factors[0].first == P("x-1"));
    CHECK(f1.factors[1].first == P("x+1"));

    auto f2 = factor_rational(P("x^2+1"));
    REQUIRE(f2.factors.size() == 1);
    CHECK(f2.factors[0].first == P("x^2+1"));
    CHECK(!has_rational_root(P("x^2+1")));

    auto f3 = factor_rational(P("x^4-4"));
    REQUIRE(f3.factors.size() == 2);
    CHECK(f3.factors[0].first == P("x^2-2"));
    CHECK(f3.factors[1].first == P("x^2+2"));
}

TEST_CASE("factor with multiplicities and leading constant") {
    RatPoly f = Rat(6) * P("x-1") * P("x-1") * P("x^2+x+1") * P("x");
    auto fac = factor_rational(f);
    CHECK(fac.lead == 6);
    CHECK(fac.expand() == f);
    unsigned total = 0;
    for (const auto& [g, m] : fac.factors) total += m * static_cast<unsigned>(g.degree());
    CHECK(total == static_cast<unsigned>(f.degree()));
}

TEST_CASE("factor larger cyclotomic-like inputs") {
    // x^12 - 1 factors into the six cyclotomic polynomials dividing 12
    auto fac = factor_rational(P("x^12 - 1"));
    CHECK(fac.factors.size() == 6);
    CHECK(fac.expand() == P("x^12 - 1"));

    // swinnerton-dyer style: minimal polynomial of sqrt2 + sqrt3 is irreducible
    CHECK(is_irreducible(P("x^4 - 10*x^2 + 1")));
    CHECK(is_irreducible(P("x^3 - 2")));
    CHECK(!is_irreducible(P("x^4 + 4"))); // = (x^2-2x+2)(x^2+2x+2)
}

TEST_CASE("non-monic and rational coefficients") {
    RatPoly f = P("6*x^2 - 5*x + 1"); // = 6(x-1/2)(x-1/3)
    auto fac = factor_rational(f);
    CHECK(fac.lead == 6);
    REQUIRE(fac.factors.size() == 2);
    CHECK(fac.expand() == f);

    RatPoly g = P("x^2 + 3/2*x + 5/4");
    auto fg = factor_rational(g);
    CHECK(fg.expand() == g);
    REQUIRE(fg.factors.size() == 1);
}

TEST_CASE("random reconstruction and low-degree irreducibility oracle") {
    std::mt19937 rng(4242);
    for (int iter = 0; iter < 60; ++iter) {
        RatPoly f = random_poly(rng, 3 + iter % 6, 9);
        if (f.degree() < 1) continue;
        auto fac = factor_rational(f);
        CHECK(fac.expand() == f);
        for (const auto& [g, m] : fac.factors) {
            (void)m;
            if (g.degree() >= 2 && g.degree() <= 3) CHECK(!has_rational_root(g));
        }
    }
}

TEST_CASE("zero input rejected") {
    CHECK_THROWS_AS(factor_rational(RatPoly()), domain_error);
}
