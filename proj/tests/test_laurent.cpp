#include <doctest.h>

#include <random>

#include "knot/laurent.hpp"

using namespace knot;

namespace {

LaurentPoly P(const std::string& s) { return parse_poly(s); }

LaurentPoly random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> nterms(0, 6), exp(-4, 4), coef(-5, 5);
    LaurentPoly p;
    int k = nterms(rng);
    for (int i = 0; i < k; ++i) p.add_term(exp(rng), coef(rng));
    return p;
}

}  // namespace

TEST_CASE("ring arithmetic") {
    LaurentPoly tm1 = P("-1 + t");
    CHECK(tm1 * tm1 == P("1 - 2*t + t^2"));
    CHECK(P("1 - t") + P("-1 + t") == LaurentPoly());
    CHECK(P("3 - 3*t") * P("1 - t") - P("-1 + 2*t") * P("-2 + t") == P("1 - t + t^2"));
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937 rng(5);
    for (int i = 0; i < 200; ++i) {
        LaurentPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
    }
}

TEST_CASE("evaluation") {
    CHECK(poly_eval_int(P("1 - t + t^2"), -1) == 3);
    CHECK(poly_eval_int(P("7 - 13*t + 7*t^2"), -1) == 27);
    CHECK(poly_eval_int(P("7 - 13*t + 7*t^2"), 1) == 1);
    LaurentPoly neg = LaurentPoly::term(1, -2);  // t^-2
    CHECK(poly_eval(neg, 2) == mpq_class(1, 4));
    CHECK_THROWS(poly_eval(neg, 0));
}

TEST_CASE("canonical up to units") {
    CHECK(canonical_up_to_units(P("-t + t^2 - t^3")) == P("1 - t + t^2"));
    CHECK(canonical_up_to_units(LaurentPoly()) == LaurentPoly());
    LaurentPoly p = LaurentPoly::term(1, -2) - LaurentPoly(1);  // t^-2 - 1
    CHECK(canonical_up_to_units(p) == P("1 - t^2"));
    // idempotent
    std::mt19937 rng(11);
    for (int i = 0; i < 100; ++i) {
        LaurentPoly q = canonical_up_to_units(random_poly(rng));
        CHECK(canonical_up_to_units(q) == q);
    }
}

TEST_CASE("equal up to units") {
    CHECK(equal_up_to_units(P("1 - t + t^2"), P("-t + t^2 - t^3")));
    CHECK_FALSE(equal_up_to_units(P("1 - t + t^2"), P("1 + t + t^2")));
    CHECK(equal_up_to_units(LaurentPoly(), LaurentPoly()));
}

TEST_CASE("determinants of polynomial matrices") {
    PolyMatrix m(2);
    m.at(0, 0) = P("1 - t");
    m.at(0, 1) = -LaurentPoly(1);
    m.at(1, 0) = LaurentPoly::t();
    m.at(1, 1) = P("1 - t");
    CHECK(det_poly(m) == P("1 - t + t^2"));
    CHECK(det_poly(m, DetAlgo::cofactor) == P("1 - t + t^2"));

    CHECK(det_poly(PolyMatrix::identity(4)) == LaurentPoly(1));

    PolyMatrix b(2);
    b.at(0, 0) = P("3 - 3*t");
    b.at(0, 1) = P("-2 + t");
    b.at(1, 0) = P("-1 + 2*t");
    b.at(1, 1) = P("1 - t");
    CHECK(det_poly(b) == det_poly(b, DetAlgo::cofactor));
}

TEST_CASE("bareiss and cofactor determinants agree on random matrices") {
    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> dim(1, 5), coef(-3, 3), exp(0, 2);
    for (int iter = 0; iter < 110; ++iter) {
        PolyMatrix m(static_cast<std::size_t>(dim(rng)));
        for (std::size_t i = 0; i < m.n; ++i)
            for (std::size_t j = 0; j < m.n; ++j) {
                LaurentPoly p;
                p.add_term(exp(rng), coef(rng));
                p.add_term(exp(rng), coef(rng));
                m.at(i, j) = p;
            }
        CHECK(det_poly(m, DetAlgo::bareiss) == det_poly(m, DetAlgo::cofactor));
    }
}

TEST_CASE("polynomial gcd") {
    CHECK(poly_gcd(P("-1 + t^2"), P("-1 + t")) == canonical_up_to_units(P("-1 + t")));
    CHECK(poly_gcd(P("-2 + 2*t"), P("-4 + 4*t")) == canonical_up_to_units(P("-2 + 2*t")));
    CHECK(poly_gcd(P("1 - t + t^2"), LaurentPoly()) == P("1 - t + t^2"));
    // gcd divides both
    std::mt19937 rng(77);
    for (int i = 0; i < 60; ++i) {
        LaurentPoly a = random_poly(rng), b = random_poly(rng);
        LaurentPoly g = poly_gcd(a, b);
        if (!g.is_zero()) {
            if (!a.is_zero()) CHECK_NOTHROW(poly_divexact(a, g));
            if (!b.is_zero()) CHECK_NOTHROW(poly_divexact(b, g));
        }
    }
}

TEST_CASE("text grammar round trips") {
    CHECK(to_string(P("2 + 192*t + 972*t^2 - 12289*t^3")) == "2 + 192*t + 972*t^2 - 12289*t^3");
    CHECK(to_string(LaurentPoly()) == "0");
    CHECK(to_string(P("-1 + t")) == "-1 + t");
    CHECK(parse_poly("t^2-t+1") == P("1 - t + t^2"));
    CHECK_THROWS(parse_poly(""));
    CHECK_THROWS(parse_poly("t +"));
    std::mt19937 rng(123);
    for (int i = 0; i < 100; ++i) {
        LaurentPoly p = random_poly(rng);
        CHECK(parse_poly(to_string(p)) == p);
    }
}
