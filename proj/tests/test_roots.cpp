// Certified root isolation: count conservation, disjointness, refinement
// containment and the spec examples.

#include <doctest.h>

#include "lw/error.hpp"
#include "lw/poly_text.hpp"
#include "lw/roots.hpp"

using namespace lw;

namespace {

RatPoly P(const std::string& s) { return parse_poly(s); }

bool any_box_contains(const std::vector<std::pair<IsolatingBox, unsigned>>& boxes, double re,
                      double im, unsigned expect_mult) {
    for (const auto& [b, m] : boxes) {
        if (b.contains_point(rat_from_string(std::to_string(re)),
                             rat_from_string(std::to_string(im))))
            return m == expect_mult;
    }
    return false;
}

} // namespace

TEST_CASE("single root at origin") {
    auto boxes = isolate_complex_roots(P("x"), Rat(1, 100));
    REQUIRE(boxes.size() == 1);
    CHECK(boxes[0].second == 1);
    CHECK(boxes[0].first.contains_point(Rat(0), Rat(0)));
}

TEST_CASE("two imaginary roots") {
    auto boxes = isolate_complex_roots(P("x^2+1"), Rat(1, 1000));
    REQUIRE(boxes.size() == 2);
    CHECK(any_box_contains(boxes, 0.0, 1.0, 1));
    CHECK(any_box_contains(boxes, 0.0, -1.0, 1));
    CHECK(!boxes[0].first.intersects(boxes[1].first));
    for (const auto& [b, m] : boxes) {
        (void)m;
        CHECK(b.width() <= Rat(1, 1000));
    }
}

TEST_CASE("multiplicities from the squarefree decomposition") {
    // (x-1)^2 x: boxes around 1 (mult 2) and 0 (mult 1)
    RatPoly f = P("x-1") * P("x-1") * P("x");
    auto boxes = isolate_complex_roots(f, Rat(1, 100));
    REQUIRE(boxes.size() == 2);
    unsigned total = 0;
    for (const auto& [b, m] : boxes) {
        (void)b;
        total += m;
    }
    CHECK(total == 3);
    CHECK(any_box_contains(boxes, 1.0, 0.0, 2));
    CHECK(any_box_contains(boxes, 0.0, 0.0, 1));
}

TEST_CASE("root count conservation on a mixed polynomial") {
    RatPoly f = P("x^2-2") * P("x^2+1") * P("x-3");
    auto boxes = isolate_complex_roots(f, Rat(1, 4096));
    unsigned total = 0;
    for (const auto& [b, m] : boxes) {
        (void)b;
        total += m;
    }
    CHECK(total == 5);
    CHECK(boxes.size() == 5);
    for (std::size_t i = 0; i < boxes.size(); ++i)
        for (std::size_t j = i + 1; j < boxes.size(); ++j)
            CHECK(!boxes[i].first.intersects(boxes[j].first));
}

TEST_CASE("refine box shrinks around sqrt2 and stays inside") {
    RatPoly f = P("x^2-2");
    IsolatingBox start{Rat(13, 10), Rat(15, 10), Rat(-1, 10), Rat(1, 10)};
    Rat target = pow2_rat(-100);
    IsolatingBox tight = refine_box(f, start, target);
    CHECK(tight.width() <= target);
    CHECK(start.contains_box(tight));
    // sqrt2 = 1.41421356237309504880168872420969807856967187537694...
    // the refined box must contain the 30-digit truncation within target
    Rat approx = rat_from_string("1.414213562373095048801688724209");
    CHECK(tight.re_lo <= approx + target);
    CHECK(tight.re_hi >= approx - target);

    // iterating the refinement keeps monotone containment
    IsolatingBox tighter = refine_box(f, tight, target / 1024);
    CHECK(tight.contains_box(tighter));
}

TEST_CASE("refine box on the trivial polynomial x") {
    IsolatingBox around_zero{Rat(-1, 2), Rat(1, 3), Rat(-1, 4), Rat(1, 5)};
    IsolatingBox r = refine_box(P("x"), around_zero, Rat(1, 100));
    CHECK(r.contains_point(Rat(0), Rat(0)));
    CHECK(r.width() <= Rat(1, 100));
}

TEST_CASE("refine box rejects boxes with no root or two roots") {
    RatPoly f = P("x^2-2");
    IsolatingBox empty_box{Rat(3), Rat(4), Rat(-1, 2), Rat(1, 2)};
    CHECK_THROWS_AS(refine_box(f, empty_box, Rat(1, 100)), domain_error);
    IsolatingBox both{Rat(-2), Rat(2), Rat(-1), Rat(1)};
    CHECK_THROWS_AS(refine_box(f, both, Rat(1, 100)), domain_error);
    CHECK_THROWS_AS(refine_box(f, empty_box, Rat(0)), domain_error);
}

TEST_CASE("upper imaginary root of x^2+1 refined to 2^-170") {
    RatPoly f = P("x^2+1");
    IsolatingBox start{Rat(-1, 2), Rat(1, 2), Rat(1, 2), Rat(3, 2)};
    IsolatingBox tight = refine_box(f, start, pow2_rat(-170));
    CHECK(tight.width() <= pow2_rat(-170));
    CHECK(tight.im_lo > Rat(99, 100));
    CHECK(tight.im_hi < Rat(101, 100));
    CHECK(tight.re_lo < Rat(1, 1000000));
    CHECK(tight.re_hi > Rat(-1, 1000000));
}

TEST_CASE("canonical root index is stable and distinguishes conjugates") {
    RatPoly f = P("x^2+1");
    auto canon = canonical_roots(f);
    REQUIRE(canon->boxes.size() == 2);
    std::size_t lower = canonical_root_index(f, IsolatingBox{Rat(-1), Rat(1), Rat(-2), Rat(0)});
    std::size_t upper = canonical_root_index(f, IsolatingBox{Rat(-1), Rat(1), Rat(0), Rat(2)});
    CHECK(lower != upper);
    CHECK(canonical_root_index(f, canon->boxes[0]) == 0);
    CHECK(canonical_root_index(f, canon->boxes[1]) == 1);
}

TEST_CASE("refined root ball encloses the root tightly") {
    RatPoly f = P("x^2-2");
    auto canon = canonical_roots(f);
    // the canonical order puts -sqrt2 first
    ComplexBall neg = refined_root_ball(f, canon->boxes[0], pow2_rat(-80));
    CHECK(neg.real_interval().second < 0);
    ComplexBall pos = refined_root_ball(f, canon->boxes[1], pow2_rat(-80));
    CHECK(pos.real_interval().first > 0);
    CHECK(pos.radius_upper() <= pow2_rat(-78));
}

TEST_CASE("isolation input validation") {
    CHECK_THROWS_AS(isolate_complex_roots(P("5"), Rat(1, 10)), domain_error);
    CHECK_THROWS_AS(isolate_complex_roots(P("x"), Rat(0)), domain_error);
    CHECK_THROWS_AS(isolate_complex_roots(P("x"), Rat(-1)), domain_error);
}

TEST_CASE("higher degree stress: roots of x^8 - 1 and a random-ish sextic") {
    auto boxes = isolate_complex_roots(P("x^8-1"), Rat(1, 65536));
    CHECK(boxes.size() == 8);
    auto boxes2 = isolate_complex_roots(P("x^6 - 3*x^4 + x - 7"), Rat(1, 65536));
    unsigned total = 0;
    for (const auto& [b, m] : boxes2) {
        (void)b;
        total += m;
    }
    CHECK(total == 6);
}
