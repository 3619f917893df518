#pragma once

#include "knot/diagram.hpp"
#include "knot/int_matrix.hpp"

namespace knot {

// One row per crossing: +1 at under_in, +1 at under_out, -2 at over
// (entries summed when arcs coincide).  Every row and column sums to
// zero, so the determinant vanishes.
IntMatrix coloring_matrix(const KnotDiagram& d);

// Coloring matrix with one row and one column struck out; its absolute
// determinant is the knot determinant (independent of the choice).
IntMatrix reduced_coloring_matrix(const IntMatrix& m, std::size_t row, std::size_t col);
IntMatrix reduced_coloring_matrix(const KnotDiagram& d);

Int knot_determinant(const KnotDiagram& d);

// Number of Fox r-colorings (including the r trivial ones).  Computed
// from the Smith normal form: each invariant factor d contributes
// gcd(d, r), with d = 0 contributing r.
Int count_colorings(const KnotDiagram& d, const Int& r);

bool has_nontrivial_colorings(const KnotDiagram& d, const Int& r);

inline constexpr unsigned long kDefaultGuardLimit = 10'000'000;

// Direct enumeration check: counts colorings by fixing the first arc's
// color to 0 and multiplying by r (valid because the all-equal colorings
// are always solutions and adding a constant maps solutions to
// solutions).  Throws std::runtime_error when r^(n-1) exceeds `guard`.
Int brute_force_count(const KnotDiagram& d, unsigned long r,
                      unsigned long guard = kDefaultGuardLimit);

struct ColoringReport {
    IntMatrix matrix;
    SmithForm smith;
    Int determinant;
};

ColoringReport coloring_report(const KnotDiagram& d);

}  // namespace knot
