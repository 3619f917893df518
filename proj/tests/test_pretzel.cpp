#include <doctest.h>

#include "knot/pretzel.hpp"

using namespace knot;

TEST_CASE("spec parsing") {
    CHECK(parse_pretzel("P(1,1,1)").twists == std::vector<long>{1, 1, 1});
    CHECK(parse_pretzel(" P( 5, 3 , 7,4 ) ").twists == std::vector<long>{5, 3, 7, 4});
    CHECK(parse_pretzel("P(-2,3,5)").twists == std::vector<long>{-2, 3, 5});
    CHECK_THROWS(parse_pretzel("P(1,0,1)"));
    CHECK_THROWS(parse_pretzel("P(1,1,1"));
    CHECK_THROWS(parse_pretzel("Q(1,1,1)"));
}

TEST_CASE("closed-form coloring matrix") {
    PretzelSpec p{{1, 1, 1}};
    IntMatrix m = pretzel_coloring_matrix(p);
    CHECK(m == IntMatrix::from_rows({{-1, 2, -1}, {-1, -1, 2}, {2, -1, -1}}));
    PretzelSpec q{{2, 4, 6}};
    IntMatrix mq = pretzel_coloring_matrix(q);
    // row 0 encodes -n1 a1 + (n1+n2) a2 - n2 a3
    CHECK(mq.at(0, 0) == -2);
    CHECK(mq.at(0, 1) == 6);
    CHECK(mq.at(0, 2) == -4);
    for (std::size_t i = 0; i < 3; ++i) {
        Int rs = 0, cs = 0;
        for (std::size_t j = 0; j < 3; ++j) {
            rs += mq.at(i, j);
            cs += mq.at(j, i);
        }
        CHECK(rs == 0);
        CHECK(cs == 0);
    }
    CHECK_THROWS(pretzel_coloring_matrix(PretzelSpec{{1, 1}}));
}

TEST_CASE("delta sequence") {
    CHECK(pretzel_delta(PretzelSpec{{3, 5, 7}}, 2) == 71);
    CHECK(pretzel_delta(PretzelSpec{{2, 4, 6}}, 1) == 2);
    CHECK(pretzel_delta(PretzelSpec{{5, 3, 7, 4}}, 3) == 389);
    CHECK(pretzel_delta(PretzelSpec{{1, 1, 1}}, 3) == 0);
    CHECK_THROWS(pretzel_delta(PretzelSpec{{1, 1, 1}}, 0));
    CHECK_THROWS(pretzel_delta(PretzelSpec{{1, 1, 1}}, 4));
}

TEST_CASE("smith diagonal closed form") {
    CHECK(pretzel_diagonal(PretzelSpec{{1, 1, 1}}) == std::vector<Int>{1, 3, 0});
    CHECK(pretzel_diagonal(PretzelSpec{{2, 4, 6}}) == std::vector<Int>{2, 22, 0});
    CHECK(pretzel_diagonal(PretzelSpec{{1, 1, 1, 1}}) == std::vector<Int>{1, 1, 4, 0});
}

TEST_CASE("pretzel determinant") {
    CHECK(pretzel_determinant(PretzelSpec{{1, 1, 1}}) == 3);
    CHECK(pretzel_determinant(PretzelSpec{{3, 5, 7}}) == 71);
    CHECK(pretzel_determinant(PretzelSpec{{5, 3, 7, 4}}) == 389);
}

TEST_CASE("delta profile of the closed-form matrix matches the minors oracle") {
    for (const auto& twists : std::vector<std::vector<long>>{
             {1, 1, 1}, {2, 4, 6}, {3, 5, 7}, {1, 2, 3, 4}, {2, 2, 3, 5, 2}}) {
        PretzelSpec p{twists};
        IntMatrix m = pretzel_coloring_matrix(p);
        DeltaProfile prof = minors_gcd_profile(m, p.tassels());
        CHECK(prof.deltas == pretzel_delta(p));
    }
}
