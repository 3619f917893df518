#include <doctest.h>

#include <nlohmann/json.hpp>

#include "knot/coloring.hpp"
#include "knot/diagram.hpp"

using namespace knot;

namespace {

KnotDiagram trefoil() {
    return KnotDiagram{3, {{2, 0, 1}, {0, 1, 2}, {1, 2, 0}}};
}

}  // namespace

TEST_CASE("validate accepts good diagrams and rejects bad ones") {
    CHECK_NOTHROW(validate(trefoil()));
    CHECK_NOTHROW(validate(KnotDiagram{}));  // crossingless unknot
    KnotDiagram bad = trefoil();
    bad.crossings[1].under_out = 1;  // arc 1 now stems from two crossings
    CHECK_THROWS(validate(bad));
    KnotDiagram oob = trefoil();
    oob.crossings[0].over = 7;
    CHECK_THROWS(validate(oob));
}

TEST_CASE("twist propagation") {
    CHECK(twist_propagate(0, 1, 3) == std::vector<long>{2, 3, 4});
    CHECK(twist_propagate(5, 5, 4) == std::vector<long>{5, 5, 5, 5});
    CHECK(twist_propagate(0, 1, 5) == std::vector<long>{2, 3, 4, 5, 6});
}

TEST_CASE("pretzel diagram generator") {
    KnotDiagram p111 = pretzel_diagram({1, 1, 1});
    CHECK(p111.n == 3);
    CHECK(normal_form(smith_normal_form(coloring_matrix(p111))) == std::vector<Int>{3, 0});

    KnotDiagram p357 = pretzel_diagram({3, 5, 7});
    CHECK(p357.n == 15);
    CHECK(knot_determinant(p357) == 71);

    CHECK_NOTHROW(validate(pretzel_diagram({1, 1})));
    CHECK_THROWS(pretzel_diagram({1, 0, 1}));
    CHECK_THROWS(pretzel_diagram({3}));
}

TEST_CASE("reidemeister one preserves the coloring normal form") {
    KnotDiagram d = trefoil();
    KnotDiagram once = reidemeister_one_insert(d, 0);
    CHECK(once.n == 4);
    CHECK(normal_form(smith_normal_form(coloring_matrix(once))) == std::vector<Int>{3, 0});
    KnotDiagram twice = reidemeister_one_insert(once, 0);
    CHECK(twice.n == 5);
    CHECK(normal_form(smith_normal_form(coloring_matrix(twice))) == std::vector<Int>{3, 0});
    CHECK_THROWS(reidemeister_one_insert(KnotDiagram{}, 0));
}

TEST_CASE("reidemeister two preserves counts and normal form") {
    KnotDiagram d = reidemeister_two_insert(trefoil(), 0, 1);
    CHECK(d.n == 5);
    CHECK(d.crossings.size() == 5);
    CHECK(normal_form(smith_normal_form(coloring_matrix(d))) == std::vector<Int>{3, 0});
    CHECK(brute_force_count(d, 3) == 9);
    CHECK_THROWS(reidemeister_two_insert(trefoil(), 0, 9));
}

TEST_CASE("diagram json round trip") {
    KnotDiagram d = trefoil();
    CHECK(diagram_from_json(diagram_to_json(d)) == d);
    CHECK_THROWS(diagram_from_json(nlohmann::json::object()));
}
