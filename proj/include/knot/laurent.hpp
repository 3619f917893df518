#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace knot {

using Int = mpz_class;

/// Integer Laurent polynomial in one indeterminate t. The zero
/// polynomial is the empty term map; stored coefficients are nonzero.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(long constant) { add_term(0, Int(constant)); }
    LaurentPoly(const Int& constant) { add_term(0, constant); }
    static LaurentPoly term(const Int& coeff, int exp);
    /// The monomial t.
    static LaurentPoly t() { return term(1, 1); }

    bool is_zero() const { return terms_.empty(); }
    int min_exp() const;
    int max_exp() const;
    Int coeff(int exp) const;
    const std::map<int, Int>& terms() const { return terms_; }

    void add_term(int exp, const Int& coeff);

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

    bool operator==(const LaurentPoly&) const = default;

private:
    std::map<int, Int> terms_;
};

/// Shift so the minimum exponent is 0, then flip sign if the constant
/// coefficient is negative. Zero stays zero.
LaurentPoly canonical_up_to_units(const LaurentPoly& p);
bool equal_up_to_units(const LaurentPoly& a, const LaurentPoly& b);

/// Exact evaluation at a nonzero integer; rational when p has negative
/// exponents.
mpq_class poly_eval(const LaurentPoly& p, const Int& t0);
/// Evaluation for polynomials with min exponent >= 0 (integer result).
Int poly_eval_int(const LaurentPoly& p, const Int& t0);

/// Exact quotient a / b; throws std::logic_error if b does not divide a.
LaurentPoly poly_divexact(const LaurentPoly& a, const LaurentPoly& b);

/// gcd in Z[t, 1/t] (content times primitive part, primitive PRS),
/// returned canonical up to units.
LaurentPoly poly_gcd(const std::vector<LaurentPoly>& ps);
LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

/// Ascending-exponent rendering, e.g. "2 + 192*t - 12289*t^3".
std::string to_string(const LaurentPoly& p);
/// Parses the same grammar (whitespace-insensitive).
LaurentPoly parse_poly(const std::string& text);

/// Square matrix of Laurent polynomials.
struct PolyMatrix {
    std::size_t n = 0;
    std::vector<LaurentPoly> entries;

    PolyMatrix() = default;
    explicit PolyMatrix(std::size_t size) : n(size), entries(size * size) {}
    static PolyMatrix identity(std::size_t size);

    const LaurentPoly& at(std::size_t i, std::size_t j) const { return entries[i * n + j]; }
    LaurentPoly& at(std::size_t i, std::size_t j) { return entries[i * n + j]; }
    PolyMatrix submatrix_without(std::size_t row, std::size_t col) const;
};

enum class DetAlgo { bareiss, cofactor };

/// Exact determinant over Z[t, 1/t]. Both algorithm routes are kept as
/// independent cross-checks of each other.
LaurentPoly det_poly(const PolyMatrix& m, DetAlgo algo = DetAlgo::bareiss);

}  // namespace knot
