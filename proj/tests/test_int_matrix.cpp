#include <doctest.h>

#include <algorithm>
#include <random>

#include "knot/int_matrix.hpp"

using namespace knot;

namespace {

IntMatrix random_matrix(std::mt19937& rng, std::size_t maxdim) {
    std::uniform_int_distribution<std::size_t> dim(1, maxdim);
    std::uniform_int_distribution<int> entry(-9, 9);
    IntMatrix m(dim(rng), dim(rng));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = entry(rng);
    return m;
}

}  // namespace

TEST_CASE("smith normal form on small oracles") {
    CHECK(smith_normal_form(IntMatrix::from_rows({{2, 0}, {0, 3}})).diag ==
          std::vector<Int>{1, 6});
    CHECK(smith_normal_form(IntMatrix(3, 3)).diag == std::vector<Int>{0, 0, 0});
    // trefoil coloring matrix
    IntMatrix tref = IntMatrix::from_rows({{1, 1, -2}, {-2, 1, 1}, {1, -2, 1}});
    CHECK(smith_normal_form(tref).diag == std::vector<Int>{1, 3, 0});
}

TEST_CASE("minors gcd profile") {
    IntMatrix m = IntMatrix::from_rows({{-1, 2}, {3, -4}});
    DeltaProfile p = minors_gcd_profile(m, 2);
    CHECK(p.deltas == std::vector<Int>{1, 2});
    DeltaProfile id2 = minors_gcd_profile(IntMatrix::identity(2), 2);
    CHECK(id2.deltas == std::vector<Int>{1, 1});
    CHECK_THROWS(minors_gcd_profile(IntMatrix(9, 9), 9));
}

TEST_CASE("invariant factors from minors") {
    CHECK(invariant_factors_from_minors(DeltaProfile{{1, 6}}) == std::vector<Int>{1, 6});
    CHECK(invariant_factors_from_minors(DeltaProfile{{2, 44}}) == std::vector<Int>{2, 22});
    CHECK(invariant_factors_from_minors(DeltaProfile{{1, 3, 0}}) == std::vector<Int>{1, 3, 0});
}

TEST_CASE("normal form strips units") {
    CHECK(normal_form(SmithForm{{1, 3, 0}, 3, 3}) == std::vector<Int>{3, 0});
    CHECK(normal_form(SmithForm{{1, 1}, 2, 2}) == std::vector<Int>{1});
    CHECK(normal_form(SmithForm{{2, 22, 0}, 3, 3}) == std::vector<Int>{2, 22, 0});
}

TEST_CASE("determinants") {
    CHECK(det_exact(IntMatrix::identity(4)) == 1);
    CHECK(det_exact(IntMatrix::from_rows({{-1, 0}, {1, -1}})) == 1);
    CHECK(det_exact(IntMatrix(0, 0)) == 1);
    CHECK_THROWS(det_exact(IntMatrix(2, 3)));
}

TEST_CASE("smith equals gcd-of-minors on random matrices") {
    std::mt19937 rng(20260826);
    for (int iter = 0; iter < 220; ++iter) {
        IntMatrix m = random_matrix(rng, 6);
        SmithForm s = smith_normal_form(m);
        DeltaProfile p = minors_gcd_profile(m, std::min(m.rows(), m.cols()));
        CHECK(s.diag == invariant_factors_from_minors(p));
        // divisibility chain
        for (std::size_t i = 0; i + 1 < s.diag.size(); ++i) {
            if (s.diag[i] == 0)
                CHECK(s.diag[i + 1] == 0);
            else
                CHECK(s.diag[i + 1] % s.diag[i] == 0);
        }
    }
}

TEST_CASE("smith invariant under elementary transformations") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coef(-3, 3);
    for (int iter = 0; iter < 60; ++iter) {
        IntMatrix m = random_matrix(rng, 5);
        SmithForm base = smith_normal_form(m);
        if (m.rows() >= 2) {
            CHECK(smith_normal_form(swap_rows(m, 0, m.rows() - 1)).diag == base.diag);
            CHECK(smith_normal_form(add_row_multiple(m, 0, m.rows() - 1, coef(rng))).diag ==
                  base.diag);
        }
        if (m.cols() >= 2) {
            CHECK(smith_normal_form(swap_cols(m, 0, m.cols() - 1)).diag == base.diag);
            CHECK(smith_normal_form(add_col_multiple(m, 0, m.cols() - 1, coef(rng))).diag ==
                  base.diag);
        }
        SmithForm aug = smith_normal_form(augment_unit(m));
        std::vector<Int> expect = base.diag;
        expect.insert(expect.begin(), 1);
        // augment adds a unit factor; zeros still trail
        std::sort(expect.begin(), expect.end());
        std::vector<Int> got = aug.diag;
        std::sort(got.begin(), got.end());
        // compare multisets modulo ordering; canonical chain ordering is
        // checked elsewhere via the divisibility assertions
        CHECK(got == expect);
    }
}

TEST_CASE("determinant equals product of invariant factors up to sign") {
    std::mt19937 rng(99);
    for (int iter = 0; iter < 80; ++iter) {
        IntMatrix m = random_matrix(rng, 5);
        if (!m.is_square()) continue;
        Int d = det_exact(m);
        Int prod = 1;
        for (const Int& x : smith_normal_form(m).diag) prod *= x;
        CHECK(abs(d) == abs(prod));
    }
}

TEST_CASE("matrix json round trip") {
    IntMatrix m = IntMatrix::from_rows({{1, -2}, {0, 5}});
    CHECK(matrix_from_json(matrix_to_json(m)) == m);
    CHECK_THROWS(matrix_from_json("not json"));
    CHECK_THROWS(matrix_from_json("{\"rows\":1,\"cols\":2,\"entries\":[[\"1\"]]}"));
}
