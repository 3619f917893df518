#pragma once

#include <string>
#include <vector>

#include "knot/int_matrix.hpp"

namespace knot {

struct PretzelSpec {
    std::vector<long> twists;

    std::size_t tassels() const { return twists.size(); }
};

// Accepts "P(n1,n2,...,nN)" with nonzero integer twist counts.
PretzelSpec parse_pretzel(const std::string& text);

// The N x N coloring matrix of P(n1,...,nN) in closed form: row k has
// -n_k at column k, n_k + n_{k+1} at column k+1 and -n_{k+1} at column
// k+2 (indices cyclic).  Requires N >= 3 so the three columns are
// distinct.
IntMatrix pretzel_coloring_matrix(const PretzelSpec& p);

// Delta_i = gcd of all i x i minors, in closed form: for i <= N-2 the
// gcd over i-subsets of |n_{k1} ... n_{ki}|, for i = N-1 the full sum
// of (N-1)-fold products, and Delta_N = 0.
std::vector<Int> pretzel_delta(const PretzelSpec& p);

// Single order i in [1, N].
Int pretzel_delta(const PretzelSpec& p, std::size_t i);

// Smith diagonal (Delta_1, Delta_2/Delta_1, ..., Delta_{N-1}/Delta_{N-2}, 0).
std::vector<Int> pretzel_diagonal(const PretzelSpec& p);

// |sum over (N-1)-subsets of twist products|.
Int pretzel_determinant(const PretzelSpec& p);

}  // namespace knot
