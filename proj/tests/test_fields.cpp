// Number fields: primitive element construction, inversion, embeddings,
// norms (three routes), the fixed-element rationality test and the
// symmetric-set bridge.

#include <doctest.h>

#include <random>

#include "lw/error.hpp"
#include "lw/fields.hpp"
#include "lw/poly_text.hpp"

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

TEST_CASE("single generator gives the field of that element") {
    GeneratedField g = field_generate({sqrt2()});
    CHECK(g.field->degree() == 2);
    CHECK(g.field->h() == P("x^2-2"));
    REQUIRE(g.reps.size() == 1);
    CHECK(g.reps[0].rep() == P("x"));
}

TEST_CASE("sqrt2 and sqrt3 generate the degree-4 biquadratic field") {
    GeneratedField g = field_generate({sqrt2(), sqrt3()});
    CHECK(g.field->degree() == 4);
    CHECK(g.field->h() == P("x^4 - 10*x^2 + 1"));
    // sqrt2 -> (theta^3 - 9 theta)/2
    CHECK(g.reps[0].rep() == P("1/2*x^3 - 9/2*x"));
    // the representations square to 2 and 3
    CHECK((g.reps[0] * g.reps[0]).rep() == P("2"));
    CHECK((g.reps[1] * g.reps[1]).rep() == P("3"));
}

TEST_CASE("second generator already representable") {
    AlgebraicNumber i = imag_unit();
    GeneratedField g = field_generate({i, i.conj()});
    CHECK(g.field->degree() == 2);
    // both representations are valid: rep^2 = -1 and they are negatives
    CHECK((g.reps[0] * g.reps[0]).rep() == P("-1"));
    CHECK((g.reps[0] + g.reps[1]).is_zero());
}

TEST_CASE("rational generators collapse to Q") {
    GeneratedField g = field_generate({AlgebraicNumber::from_rational(Rat(2, 3))});
    CHECK(g.field->degree() == 1);
    CHECK(*fixed_rational(g.reps[0]) == Rat(2, 3));
    CHECK(g.field->embeddings().size() == 1);
    CHECK(g.field->embeddings()[0].is_identity());
}

TEST_CASE("element inversion") {
    GeneratedField g = field_generate({sqrt2()});
    FieldElement theta = g.field->theta();
    FieldElement inv = element_inverse(theta);
    CHECK(inv.rep() == P("1/2*x"));
    CHECK((theta * inv).rep() == P("1"));
    CHECK(element_inverse(g.field->one()).rep() == P("1"));
    CHECK_THROWS_AS(element_inverse(g.field->zero()), domain_error);

    // (1+i)^-1 = (1-i)/2 in Q(i)
    GeneratedField gi = field_generate({imag_unit()});
    FieldElement one_plus_i = gi.field->one() + gi.field->theta();
    FieldElement inv2 = element_inverse(one_plus_i);
    CHECK((one_plus_i * inv2).rep() == P("1"));
    CHECK(inv2.rep() == P("-1/2*x + 1/2"));
}

TEST_CASE("embedding counts match degrees") {
    CHECK(field_generate({sqrt2()}).field->embeddings().size() == 2);
    CHECK(field_generate({imag_unit()}).field->embeddings().size() == 2);
    CHECK(field_generate({root_near("x^3-2", 1.2599, 0.0)}).field->embeddings().size() == 3);
    CHECK(field_generate({sqrt2(), sqrt3()}).field->embeddings().size() == 4);
}

TEST_CASE("applying embeddings") {
    GeneratedField g = field_generate({sqrt2()});
    const auto& embs = g.field->embeddings();
    REQUIRE(embs.size() == 2);
    CHECK(embs[0].is_identity());
    FieldElement theta = g.field->theta();
    ComplexBall id_val = apply_embedding(embs[0], theta, Rat(1, 1 << 20));
    auto [lo1, hi1] = id_val.real_interval();
    CHECK(lo1 > 1);
    ComplexBall other = apply_embedding(embs[1], theta, Rat(1, 1 << 20));
    auto [lo2, hi2] = other.real_interval();
    CHECK(hi2 < -1);
    // theta^2 maps to 2 under every embedding
    FieldElement theta2 = theta * theta;
    for (const auto& e : embs) {
        ComplexBall v = apply_embedding(e, theta2, Rat(1, 1 << 20));
        CHECK(v.contains_point(Rat(2), Rat(0)));
    }
    // exact image of theta under the conjugate embedding is -sqrt2
    AlgebraicNumber img = exact_image(embs[1], theta);
    CHECK(img.minpoly() == P("x^2-2"));
    CHECK(img == qbar_neg(sqrt2()));
    // owner mismatch
    GeneratedField g2 = field_generate({sqrt3()});
    CHECK_THROWS_AS(apply_embedding(embs[0], g2.field->theta(), Rat(1, 16)), domain_error);
}

TEST_CASE("norms: resultant route, closed form, scalar rule") {
    GeneratedField g = field_generate({sqrt2()});
    FieldElement theta = g.field->theta();
    CHECK(field_norm(theta) == -2);
    CHECK(field_norm_via_minpoly(theta) == -2);
    // rational element in a degree-n field: q^n
    CHECK(field_norm(g.field->constant(Rat(5, 3))) == Rat(25, 9));

    GeneratedField gi = field_generate({imag_unit()});
    FieldElement one_plus_i = gi.field->one() + gi.field->theta();
    CHECK(field_norm(one_plus_i) == 2);
    CHECK(field_norm_via_minpoly(one_plus_i) == 2);

    // multiplicativity and the scalar rule on random elements
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> coeff(-6, 6);
    GeneratedField g4 = field_generate({sqrt2(), sqrt3()});
    for (int iter = 0; iter < 25; ++iter) {
        std::vector<Rat> ca(4), cb(4);
        for (auto& v : ca) v = Rat(coeff(rng));
        for (auto& v : cb) v = Rat(coeff(rng));
        FieldElement a = g4.field->element(RatPoly(ca));
        FieldElement b = g4.field->element(RatPoly(cb));
        CHECK(field_norm(a * b) == field_norm(a) * field_norm(b));
        Rat q(coeff(rng));
        if (q != 0)
            CHECK(field_norm(g4.field->constant(q) * a) == pow_rat(q, 4) * field_norm(a));
        if (!a.is_zero()) CHECK(field_norm(a) == field_norm_via_minpoly(a));
    }
}

TEST_CASE("fixed_rational and the embedding witness") {
    GeneratedField g = field_generate({sqrt2()});
    CHECK(*fixed_rational(g.field->constant(Rat(3, 2))) == Rat(3, 2));
    CHECK(!fixed_rational(g.field->theta()).has_value());
    FieldElement theta2 = g.field->theta() * g.field->theta();
    CHECK(*fixed_rational(theta2) == 2);
    // witness: embeddings agree exactly on constants, separate on theta
    const auto& embs = g.field->embeddings();
    ComplexBall v0 = apply_embedding(embs[0], g.field->theta(), Rat(1, 1024));
    ComplexBall v1 = apply_embedding(embs[1], g.field->theta(), Rat(1, 1024));
    CHECK(!v0.intersects(v1));
}

TEST_CASE("symmetric set polynomial") {
    // {0} -> x
    auto r0 = symmetric_set_polynomial({AlgebraicNumber::from_rational(Rat(0))});
    REQUIRE(r0.poly.has_value());
    CHECK(*r0.poly == P("x"));
    // {i, -i} -> x^2 + 1
    AlgebraicNumber i = imag_unit();
    auto r1 = symmetric_set_polynomial({i, i.conj()});
    REQUIRE(r1.poly.has_value());
    CHECK(*r1.poly == P("x^2+1"));
    // {sqrt2} -> closure error at the constant coefficient
    auto r2 = symmetric_set_polynomial({sqrt2()});
    CHECK(!r2.poly.has_value());
    REQUIRE(r2.violating_index.has_value());
    CHECK(*r2.violating_index == 0);
    // conjugate set of a cubic reproduces the minimal polynomial
    AlgebraicNumber cbrt2 = root_near("x^3-2", 1.2599, 0.0);
    auto r3 = symmetric_set_polynomial(conjugates(cbrt2));
    REQUIRE(r3.poly.has_value());
    CHECK(*r3.poly == P("x^3-2"));
    // multiset with repetition: {sqrt2, sqrt2, -sqrt2} fails closure
    auto c2 = conjugates(sqrt2());
    auto r4 = symmetric_set_polynomial({c2[0], c2[0], c2[1]});
    CHECK(!r4.poly.has_value());
    // but {sqrt2, -sqrt2, sqrt2, -sqrt2} = (x^2-2)^2 closes
    auto r5 = symmetric_set_polynomial({c2[0], c2[1], c2[0], c2[1]});
    REQUIRE(r5.poly.has_value());
    CHECK(*r5.poly == P("x^2-2") * P("x^2-2"));
}

TEST_CASE("element integrality") {
    GeneratedField g = field_generate({sqrt2()});
    CHECK(element_is_algebraic_integer(g.field->theta()));
    CHECK(!element_is_algebraic_integer(Rat(1, 2) * g.field->theta()));
    CHECK(element_divisible_by_integer(Rat(2) * g.field->theta(), Int(2)));
    CHECK(!element_divisible_by_integer(g.field->theta(), Int(2)));
}

TEST_CASE("char poly and element minpoly") {
    GeneratedField g = field_generate({sqrt2(), sqrt3()});
    // sqrt2 as an element of the quartic field: char = (x^2-2)^2
    RatPoly cp = char_poly(g.reps[0]);
    CHECK(cp == P("x^2-2") * P("x^2-2"));
    CHECK(element_minpoly(g.reps[0]) == P("x^2-2"));
    AlgebraicNumber back = element_to_algebraic(g.reps[0]);
    CHECK(back == sqrt2());
}
