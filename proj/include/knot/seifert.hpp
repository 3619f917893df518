#pragma once

#include <string>
#include <vector>

#include "knot/int_matrix.hpp"
#include "knot/laurent.hpp"

namespace knot {

// l_ij = lk(l_i, l_j+); square, not symmetric in general.
using SeifertMatrix = IntMatrix;

// P(2i_1+1, ..., 2i_N+1): every tassel odd, i_k >= 0, N >= 3.
struct OddPretzelSpec {
    std::vector<long> half_twists;

    std::size_t tassels() const { return half_twists.size(); }
};

// P(2i_1+1, ..., 2i_{N-1}+1, 2i_N): exactly the last tassel even,
// N even, odd i_k >= 1 (so every block is nonempty), i_N >= 1.
struct OneEvenPretzelSpec {
    std::vector<long> odd_half_twists;
    long even_half = 1;

    std::size_t tassels() const { return odd_half_twists.size() + 1; }
};

// "Podd(i1,...,iN)"
OddPretzelSpec parse_odd_pretzel(const std::string& text);
// "Peven(i1,...,i{N-1};iN)"
OneEvenPretzelSpec parse_one_even_pretzel(const std::string& text);

// 1 component if N is odd, 2 if N is even.
int component_count(const OddPretzelSpec& spec);

// (N-1)x(N-1), entry (j,k) = i_N+1 if j<k; i_j+i_N+1 if j=k; i_N if j>k.
SeifertMatrix seifert_odd_pretzel(const OddPretzelSpec& spec);

// tS - S^T.
PolyMatrix alexander_presentation(const SeifertMatrix& s);

// canonical det(tS - S^T).
LaurentPoly alexander_polynomial(const SeifertMatrix& s);

struct ClosedFormReport {
    LaurentPoly closed_form;        // canonical
    LaurentPoly determinant_route;  // canonical
    bool agrees = false;
};

// Closed-form Alexander polynomial of the odd-pretzel knot (N odd).
LaurentPoly alexander_odd_closed_form(const OddPretzelSpec& spec);
ClosedFormReport alexander_odd_report(const OddPretzelSpec& spec);

// Block Seifert matrix of size sum 2i_k (odd tassels) + 2i_N.
SeifertMatrix seifert_one_even(const OneEvenPretzelSpec& spec);

// The presentation M1 + M2 built from the tridiagonal blocks B_k and
// the even block B_N, with the -1 / t couplings at the block boundaries.
PolyMatrix one_even_presentation(const OneEvenPretzelSpec& spec);

// Explicit blocks, exposed so the closed-form determinants can be
// checked against det_poly of the real thing.
PolyMatrix block_b(long ik);                 // 2i_k x 2i_k tridiagonal
PolyMatrix block_b_prime(long ik);           // last column -> (0,...,0,t)
PolyMatrix block_bn(long in, long big_i);    // 2i_N x 2i_N even block
PolyMatrix block_bn_prime(long in, long big_i);   // drop last row, next-to-last column
PolyMatrix block_bn_dprime(long in, long big_i);  // drop last row and column

struct BlockDets {
    std::vector<LaurentPoly> b;        // det B_k, k = 1..N-1
    std::vector<LaurentPoly> b_prime;  // det B'_k
    LaurentPoly bn_prime;              // det B'_N, closed form
    LaurentPoly bn_dprime;             // det B''_N, closed form
};

BlockDets block_det_closed_forms(const OneEvenPretzelSpec& spec);

// det B''_N * sum_j det B'_j * prod_{l!=j} det B_l
//   - t * det B'_N * prod det B_l + (I - I*t) * det B''_N * prod det B_l.
LaurentPoly alexander_one_even_closed_form(const OneEvenPretzelSpec& spec);
ClosedFormReport alexander_one_even_report(const OneEvenPretzelSpec& spec);

inline constexpr std::size_t kIdealGuard = 6;

// All (m-r+1)-minors of an m x m presentation matrix.
std::vector<LaurentPoly> elementary_ideal_generators(const PolyMatrix& p, std::size_t r,
                                                     std::size_t guard = kIdealGuard);

// gcd of the generators, canonical.
LaurentPoly alexander_polynomial_r(const PolyMatrix& p, std::size_t r,
                                   std::size_t guard = kIdealGuard);

// The P(5,3,7,4) Alexander polynomial as displayed in the literature
// fixture shipped with this repository.
LaurentPoly p5374_fixture_polynomial();

}  // namespace knot
