#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace knot {

using Int = mpz_class;

/// Dense row-major matrix over the integers. All arithmetic in this
/// library is exact; entries are arbitrary-precision.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}
    IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries);

    static IntMatrix identity(std::size_t n);
    /// Convenience constructor from literal rows, e.g. {{1,2},{3,4}}.
    static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    const Int& at(std::size_t i, std::size_t j) const;
    Int& at(std::size_t i, std::size_t j);

    IntMatrix transposed() const;
    IntMatrix submatrix_without(std::size_t row, std::size_t col) const;

    bool operator==(const IntMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> entries_;
};

/// Invariant factors d1 | d2 | ... of an integer matrix, canonical:
/// nonnegative, divisibility chain, zeros last.
struct SmithForm {
    std::vector<Int> diag;
    std::size_t original_rows = 0;
    std::size_t original_cols = 0;
};

/// deltas[i-1] is the gcd of all i-by-i minors (0 if they all vanish).
struct DeltaProfile {
    std::vector<Int> deltas;
};

// Elementary transformations (each returns a new matrix).
IntMatrix swap_rows(const IntMatrix& m, std::size_t i, std::size_t j);
IntMatrix swap_cols(const IntMatrix& m, std::size_t i, std::size_t j);
IntMatrix add_row_multiple(const IntMatrix& m, std::size_t src, std::size_t dst, const Int& c);
IntMatrix add_col_multiple(const IntMatrix& m, std::size_t src, std::size_t dst, const Int& c);
/// Appends one row and one column, zero except a 1 in the new corner.
IntMatrix augment_unit(const IntMatrix& m);
/// Inverse of augment_unit; requires the last row and column to be zero
/// except a +-1 in the corner.
IntMatrix drop_unit(const IntMatrix& m);

SmithForm smith_normal_form(const IntMatrix& m);

/// Exact determinant by fraction-free (Bareiss) elimination.
Int det_exact(const IntMatrix& m);

/// Oracle path: gcd of i-rowed minors by combinatorial enumeration.
/// Refuses matrices with min(rows, cols) > size_guard.
DeltaProfile minors_gcd_profile(const IntMatrix& m, std::size_t max_order,
                                std::size_t size_guard = 8);

/// d1 = delta1, di = delta_i / delta_{i-1}; zeros propagate.
std::vector<Int> invariant_factors_from_minors(const DeltaProfile& p);

/// Strips the unit entries from a Smith diagonal. An all-unit diagonal
/// collapses to the single-entry sequence (1).
std::vector<Int> normal_form(const SmithForm& s);

Int gcd_nonneg(const Int& a, const Int& b);

// JSON I/O: {"rows": R, "cols": C, "entries": [["1","-2"],...]} with
// entries as decimal strings.
IntMatrix matrix_from_json(const std::string& text);
std::string matrix_to_json(const IntMatrix& m);

}  // namespace knot
