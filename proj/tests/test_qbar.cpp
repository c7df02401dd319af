// Exact algebraic-number arithmetic: construction, the four operations via
// resultants with numeric matching, conjugates, integrality and divisibility.

#include <doctest.h>

#include <random>

#include "lw/error.hpp"
#include "lw/poly_text.hpp"
#include "lw/qbar.hpp"

using namespace lw;

namespace {

RatPoly P(const std::string& s) { return parse_poly(s); }

AlgebraicNumber root_near(const std::string& poly, double re, double im) {
    Rat r = rat_from_string(std::to_string(re));
    Rat i = rat_from_string(std::to_string(im));
    IsolatingBox box{r - Rat(1, 8), r + Rat(1, 8), i - Rat(1, 8), i + Rat(1, 8)};
    return algebraic_from_poly(P(poly), box);
}

AlgebraicNumber sqrt2() { return root_near("x^2-2", 1.414, 0.0); }
AlgebraicNumber sqrt3() { return root_near("x^2-3", 1.732, 0.0); }
AlgebraicNumber imag_unit() { return root_near("x^2+1", 0.0, 1.0); }

} // namespace

TEST_CASE("construction from a reducible polynomial picks the right factor") {
    // (x^4 - 4) = (x^2-2)(x^2+2); box around 1.414 selects sqrt2
    AlgebraicNumber a = root_near("x^4-4", 1.414, 0.0);
    CHECK(a.minpoly() == P("x^2-2"));
    // rational root
    AlgebraicNumber three = root_near("x-3", 3.0, 0.0);
    CHECK(three.is_rational());
    CHECK(three.rational_value() == 3);
    // i from x^2+1
    AlgebraicNumber i = imag_unit();
    CHECK(i.minpoly() == P("x^2+1"));
    CHECK(i.box().im_lo > 0);
}

TEST_CASE("construction validation") {
    IsolatingBox far_box{Rat(50), Rat(51), Rat(0), Rat(1)};
    CHECK_THROWS_AS(algebraic_from_poly(P("x^2-2"), far_box), domain_error);
    IsolatingBox wide{Rat(-10), Rat(10), Rat(-10), Rat(10)};
    CHECK_THROWS_AS(algebraic_from_poly(P("x^2-2"), wide), ambiguity_error);
    CHECK_THROWS_AS(algebraic_from_poly(P("3"), wide), domain_error);
}

TEST_CASE("additive identity is bit-identical") {
    AlgebraicNumber a = sqrt2();
    AlgebraicNumber r = qbar_add(a, AlgebraicNumber::from_rational(Rat(0)));
    CHECK(r.minpoly() == a.minpoly());
    CHECK(r == a);
}

TEST_CASE("worked examples: sqrt2+sqrt2, sqrt2*sqrt3, 1/sqrt2") {
    AlgebraicNumber s2 = sqrt2(), s3 = sqrt3();
    CHECK(qbar_add(s2, s2).minpoly() == P("x^2-8"));
    CHECK(qbar_mul(s2, s3).minpoly() == P("x^2-6"));
    CHECK(qbar_inverse(s2).minpoly() == P("x^2-1/2"));
    // sqrt2 + sqrt3 has the classical quartic minimal polynomial
    CHECK(qbar_add(s2, s3).minpoly() == P("x^4-10*x^2+1"));
    // sqrt2 * sqrt2 = 2 exactly
    AlgebraicNumber four = qbar_mul(s2, s2);
    CHECK(four.is_rational());
    CHECK(four.rational_value() == 2);
}

TEST_CASE("division and field axioms at the representation level") {
    AlgebraicNumber s2 = sqrt2(), s3 = sqrt3(), i = imag_unit();
    AlgebraicNumber prod = qbar_mul(s2, s3);
    CHECK(qbar_div(prod, s3) == s2);
    CHECK(qbar_sub(qbar_add(s2, i), i) == s2);
    CHECK_THROWS_AS(qbar_div(s2, AlgebraicNumber::from_rational(Rat(0))), domain_error);
    CHECK_THROWS_AS(qbar_inverse(AlgebraicNumber::from_rational(Rat(0))), domain_error);
}

TEST_CASE("conjugates") {
    auto cr = conjugates(AlgebraicNumber::from_rational(Rat(5, 2)));
    REQUIRE(cr.size() == 1);
    CHECK(cr[0].rational_value() == Rat(5, 2));

    auto c2 = conjugates(sqrt2());
    REQUIRE(c2.size() == 2);
    CHECK(c2[0] != c2[1]);
    bool found_self = false;
    for (const auto& c : c2) found_self = found_self || c == sqrt2();
    CHECK(found_self);

    AlgebraicNumber cbrt2 = root_near("x^3-2", 1.2599, 0.0);
    auto c3 = conjugates(cbrt2);
    REQUIRE(c3.size() == 3);
    int real_count = 0, complex_count = 0;
    for (const auto& c : c3) {
        ComplexBall v = c.value_ball(Rat(1, 1000));
        auto [ilo, ihi] = v.imag_interval();
        if (ilo > 0 || ihi < 0)
            ++complex_count;
        else
            ++real_count;
    }
    CHECK(real_count == 1);
    CHECK(complex_count == 2);
}

TEST_CASE("algebraic integer predicate") {
    CHECK(is_algebraic_integer(AlgebraicNumber::from_rational(Rat(7))));
    CHECK(!is_algebraic_integer(AlgebraicNumber::from_rational(Rat(1, 2))));
    CHECK(is_algebraic_integer(sqrt2()));
    // golden ratio (1+sqrt5)/2 built through arithmetic
    AlgebraicNumber s5 = root_near("x^2-5", 2.236, 0.0);
    AlgebraicNumber golden =
        qbar_div(qbar_add(AlgebraicNumber::from_rational(Rat(1)), s5),
                 AlgebraicNumber::from_rational(Rat(2)));
    CHECK(golden.minpoly() == P("x^2-x-1"));
    CHECK(is_algebraic_integer(golden));
}

TEST_CASE("integer multiplier") {
    auto m1 = integer_multiplier(sqrt2());
    CHECK(m1.d == 1);
    auto m2 = integer_multiplier(AlgebraicNumber::from_rational(Rat(1, 3)));
    CHECK(m2.d == 3);
    CHECK(m2.proof.to_rat() == P("x-1"));
    // root of x^2 + 3/2 x + 5/4: the least multiplier is 2 (minpoly x^2+3x+5)
    AlgebraicNumber a = root_near("x^2 + 3/2*x + 5/4", -0.75, 0.829);
    auto m3 = integer_multiplier(a);
    CHECK(m3.d == 2);
    CHECK(m3.proof.to_rat() == P("x^2+3*x+5"));
    // minimality: no proper divisor works
    for (const Int& div : divisors(m3.d)) {
        if (div == m3.d) continue;
        RatPoly scaled = a.minpoly().scale_roots(Rat(div));
        bool integral = true;
        for (const Rat& c : scaled.coeffs()) integral = integral && is_integer(c);
        CHECK(!integral);
    }
}

TEST_CASE("divisibility by integers") {
    CHECK(divisible_by_integer(AlgebraicNumber::from_rational(Rat(2)), Int(2)));
    CHECK(!divisible_by_integer(sqrt2(), Int(2)));
    AlgebraicNumber two_sqrt2 = qbar_mul(AlgebraicNumber::from_rational(Rat(2)), sqrt2());
    CHECK(divisible_by_integer(two_sqrt2, Int(2)));
    CHECK_THROWS_AS(divisible_by_integer(AlgebraicNumber::from_rational(Rat(1, 2)), Int(2)),
                    domain_error);
}

TEST_CASE("prime divisor sets") {
    auto p6 = prime_divisor_set(AlgebraicNumber::from_rational(Rat(6)));
    REQUIRE(p6.size() == 2);
    CHECK(p6[0] == 2);
    CHECK(p6[1] == 3);
    CHECK(prime_divisor_set(sqrt2()).empty());
    // 2 + 2i: (2+2i)/2 = 1+i is integral, so {2}
    AlgebraicNumber two_plus_2i = root_near("x^2 - 4*x + 8", 2.0, 2.0);
    auto p = prime_divisor_set(two_plus_2i);
    REQUIRE(p.size() == 1);
    CHECK(p[0] == 2);
    CHECK_THROWS_AS(prime_divisor_set(AlgebraicNumber::from_rational(Rat(0))), domain_error);
}

TEST_CASE("lexicographic comparison") {
    AlgebraicNumber i = imag_unit();
    AlgebraicNumber minus_i = i.conj();
    CHECK(compare_lex(i, minus_i) == 1);       // equal real parts, Im decides
    CHECK(compare_lex(minus_i, i) == -1);
    CHECK(compare_lex(i, i) == 0);
    CHECK(compare_lex(sqrt2(), qbar_neg(sqrt2())) == 1);
    CHECK(compare_lex(AlgebraicNumber::from_rational(Rat(1)), sqrt2()) == -1);
}

TEST_CASE("random numeric consistency and degree bound") {
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<int> coeff(-5, 5);
    std::uniform_int_distribution<int> deg(1, 3);
    std::uniform_int_distribution<int> opsel(0, 3);
    const Rat tol = pow2_rat(-83); // ~1e-25
    int done = 0;
    while (done < 40) {
        std::vector<Rat> ca(static_cast<std::size_t>(deg(rng)) + 1);
        std::vector<Rat> cb(static_cast<std::size_t>(deg(rng)) + 1);
        for (auto& v : ca) v = Rat(coeff(rng));
        for (auto& v : cb) v = Rat(coeff(rng));
        ca.back() = Rat(1);
        cb.back() = Rat(1);
        RatPoly fa(ca), fb(cb);
        if (fa.degree() < 1 || fb.degree() < 1) continue;
        auto boxes_a = isolate_complex_roots(fa, Rat(1, 1024));
        auto boxes_b = isolate_complex_roots(fb, Rat(1, 1024));
        AlgebraicNumber a = algebraic_from_poly(fa, boxes_a[done % boxes_a.size()].first);
        AlgebraicNumber b = algebraic_from_poly(fb, boxes_b[done % boxes_b.size()].first);
        QbarOp op = static_cast<QbarOp>(opsel(rng));
        if (op == QbarOp::div && b.is_zero()) continue;
        AlgebraicNumber c = qbar_arith(op, a, b);
        // numeric check at ~1e-30 operand precision
        Rat t = pow2_rat(-110);
        ComplexBall va = a.value_ball(t), vb = b.value_ball(t);
        ComplexBall expect = op == QbarOp::add   ? va + vb
                             : op == QbarOp::sub ? va - vb
                             : op == QbarOp::mul ? va * vb
                                                 : va / vb;
        ComplexBall got = c.value_ball(tol / 4);
        CHECK(got.intersects(expect));
        // degree divisibility (compositum bound)
        int prod = a.degree() * b.degree();
        CHECK(prod % c.degree() == 0);
        ++done;
    }
}
