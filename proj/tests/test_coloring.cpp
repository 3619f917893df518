#include <doctest.h>

#include "knot/coloring.hpp"
#include "knot/pretzel.hpp"

using namespace knot;

namespace {

KnotDiagram trefoil() {
    return KnotDiagram{3, {{2, 0, 1}, {0, 1, 2}, {1, 2, 0}}};
}

}  // namespace

TEST_CASE("coloring matrix structure") {
    IntMatrix m = coloring_matrix(trefoil());
    REQUIRE(m.rows() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
        Int row_sum = 0, col_sum = 0;
        for (std::size_t j = 0; j < 3; ++j) {
            row_sum += m.at(i, j);
            col_sum += m.at(j, i);
        }
        CHECK(row_sum == 0);
        CHECK(col_sum == 0);
    }
    CHECK(det_exact(m) == 0);
    // kink row carries +1 and -1 only
    KnotDiagram kinked = reidemeister_one_insert(trefoil(), 0);
    IntMatrix km = coloring_matrix(kinked);
    CHECK(km.at(3, 0) == 1);
    CHECK(km.at(3, 3) == -1);
}

TEST_CASE("reduced matrix determinant independent of struck row and column") {
    IntMatrix m = coloring_matrix(trefoil());
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(abs(det_exact(reduced_coloring_matrix(m, i, j))) == 3);
    CHECK_THROWS(reduced_coloring_matrix(IntMatrix(1, 1), 0, 0));
}

TEST_CASE("knot determinants") {
    CHECK(knot_determinant(trefoil()) == 3);
    CHECK(knot_determinant(pretzel_diagram({3, 5, 7})) == 71);
    CHECK(knot_determinant(pretzel_diagram({5, 3, 7, 4})) == 389);
    CHECK(knot_determinant(KnotDiagram{}) == 1);
}

TEST_CASE("coloring counts against brute force") {
    CHECK(count_colorings(trefoil(), 3) == 9);
    CHECK(count_colorings(trefoil(), 5) == 5);
    CHECK(count_colorings(trefoil(), 6) == 18);
    CHECK(brute_force_count(trefoil(), 3) == 9);
    CHECK(brute_force_count(trefoil(), 5) == 5);
    CHECK(brute_force_count(trefoil(), 6) == 18);
    CHECK_THROWS(count_colorings(trefoil(), 1));
    CHECK_THROWS(brute_force_count(trefoil(), 3, 2));  // guard
}

TEST_CASE("nontrivial colorings iff modulus shares a factor with the determinant") {
    CHECK(has_nontrivial_colorings(trefoil(), 3));
    CHECK_FALSE(has_nontrivial_colorings(trefoil(), 5));
    KnotDiagram p357 = pretzel_diagram({3, 5, 7});
    CHECK(has_nontrivial_colorings(p357, 71));
}

TEST_CASE("coloring report is internally consistent") {
    ColoringReport rep = coloring_report(trefoil());
    CHECK(rep.determinant == 3);
    CHECK(rep.smith.diag == std::vector<Int>{1, 3, 0});
    bool has_zero = false;
    for (const Int& d : rep.smith.diag) has_zero = has_zero || d == 0;
    CHECK(has_zero);
}
