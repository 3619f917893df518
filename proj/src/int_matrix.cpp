#include "knot/int_matrix.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace knot {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_)
        throw std::invalid_argument("IntMatrix: entry count does not match dimensions");
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c)
            throw std::invalid_argument("IntMatrix::from_rows: ragged rows");
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

const Int& IntMatrix::at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw std::out_of_range("IntMatrix::at");
    return entries_[i * cols_ + j];
}

Int& IntMatrix::at(std::size_t i, std::size_t j) {
    if (i >= rows_ || j >= cols_) throw std::out_of_range("IntMatrix::at");
    return entries_[i * cols_ + j];
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntMatrix IntMatrix::submatrix_without(std::size_t row, std::size_t col) const {
    if (row >= rows_ || col >= cols_)
        throw std::out_of_range("IntMatrix::submatrix_without");
    IntMatrix s(rows_ - 1, cols_ - 1);
    for (std::size_t i = 0, si = 0; i < rows_; ++i) {
        if (i == row) continue;
        for (std::size_t j = 0, sj = 0; j < cols_; ++j) {
            if (j == col) continue;
            s.at(si, sj++) = at(i, j);
        }
        ++si;
    }
    return s;
}

Int gcd_nonneg(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

IntMatrix swap_rows(const IntMatrix& m, std::size_t i, std::size_t j) {
    IntMatrix r = m;
    for (std::size_t c = 0; c < m.cols(); ++c) std::swap(r.at(i, c), r.at(j, c));
    return r;
}

IntMatrix swap_cols(const IntMatrix& m, std::size_t i, std::size_t j) {
    IntMatrix r = m;
    for (std::size_t c = 0; c < m.rows(); ++c) std::swap(r.at(c, i), r.at(c, j));
    return r;
}

IntMatrix add_row_multiple(const IntMatrix& m, std::size_t src, std::size_t dst, const Int& c) {
    if (src >= m.rows() || dst >= m.rows())
        throw std::out_of_range("add_row_multiple: row index");
    IntMatrix r = m;
    for (std::size_t j = 0; j < m.cols(); ++j) r.at(dst, j) += c * m.at(src, j);
    return r;
}

IntMatrix add_col_multiple(const IntMatrix& m, std::size_t src, std::size_t dst, const Int& c) {
    if (src >= m.cols() || dst >= m.cols())
        throw std::out_of_range("add_col_multiple: column index");
    IntMatrix r = m;
    for (std::size_t i = 0; i < m.rows(); ++i) r.at(i, dst) += c * m.at(i, src);
    return r;
}

IntMatrix augment_unit(const IntMatrix& m) {
    IntMatrix r(m.rows() + 1, m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r.at(i, j) = m.at(i, j);
    r.at(m.rows(), m.cols()) = 1;
    return r;
}

IntMatrix drop_unit(const IntMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0)
        throw std::invalid_argument("drop_unit: empty matrix");
    const std::size_t lr = m.rows() - 1, lc = m.cols() - 1;
    const Int& corner = m.at(lr, lc);
    if (corner != 1 && corner != -1)
        throw std::invalid_argument("drop_unit: corner entry is not a unit");
    for (std::size_t j = 0; j < lc; ++j)
        if (m.at(lr, j) != 0) throw std::invalid_argument("drop_unit: last row not zero");
    for (std::size_t i = 0; i < lr; ++i)
        if (m.at(i, lc) != 0) throw std::invalid_argument("drop_unit: last column not zero");
    IntMatrix r(lr, lc);
    for (std::size_t i = 0; i < lr; ++i)
        for (std::size_t j = 0; j < lc; ++j) r.at(i, j) = m.at(i, j);
    return r;
}

namespace {

// Locate the nonzero entry of minimal absolute value in the working
// submatrix A[s.., s..]. Returns false if the submatrix is zero.
bool find_pivot(const IntMatrix& a, std::size_t s, std::size_t& pi, std::size_t& pj) {
    bool found = false;
    Int best;
    for (std::size_t i = s; i < a.rows(); ++i) {
        for (std::size_t j = s; j < a.cols(); ++j) {
            if (a.at(i, j) == 0) continue;
            Int v = abs(a.at(i, j));
            if (!found || v < best) {
                found = true;
                best = v;
                pi = i;
                pj = j;
            }
        }
    }
    return found;
}

void swap_rows_inplace(IntMatrix& a, std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a.at(i, c), a.at(j, c));
}

void swap_cols_inplace(IntMatrix& a, std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a.at(r, i), a.at(r, j));
}

// Quotient rounded to the nearest integer, so |a - q*b| <= |b| / 2.
// Keeping remainders minimal is what stops intermediate entries from
// blowing up during the elimination below.
Int nearest_quotient(const Int& a, const Int& b) {
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    // Floor division leaves r with the sign of b; moving one step up
    // (q + 1) replaces r by r - b, which is the smaller representative
    // whenever |r| exceeds |b| / 2.
    if (2 * abs(r) > abs(b)) q += 1;
    return q;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
    IntMatrix a = m;
    const std::size_t lim = std::min(a.rows(), a.cols());
    SmithForm out;
    out.original_rows = m.rows();
    out.original_cols = m.cols();
    out.diag.assign(lim, Int(0));

    std::size_t s = 0;
    while (s < lim) {
        std::size_t pi = s, pj = s;
        if (!find_pivot(a, s, pi, pj)) break;
        swap_rows_inplace(a, s, pi);
        swap_cols_inplace(a, s, pj);

        // One Euclidean pass over column s and row s using nearest
        // quotients. Any leftover remainder has absolute value at most
        // half the pivot, so restarting with a fresh global minimum
        // pivot both terminates quickly and keeps entries small.
        bool clean = true;
        for (std::size_t i = s + 1; i < a.rows(); ++i) {
            if (a.at(i, s) == 0) continue;
            Int q = nearest_quotient(a.at(i, s), a.at(s, s));
            if (q != 0)
                for (std::size_t j = s; j < a.cols(); ++j) a.at(i, j) -= q * a.at(s, j);
            if (a.at(i, s) != 0) clean = false;
        }
        for (std::size_t j = s + 1; j < a.cols(); ++j) {
            if (a.at(s, j) == 0) continue;
            Int q = nearest_quotient(a.at(s, j), a.at(s, s));
            if (q != 0)
                for (std::size_t i = s; i < a.rows(); ++i) a.at(i, j) -= q * a.at(i, s);
            if (a.at(s, j) != 0) clean = false;
        }
        if (!clean) continue;

        // Divisibility repair: the pivot must divide the rest of the
        // working submatrix; otherwise fold the offending row in and
        // redo this step (the pivot strictly shrinks, so this ends).
        bool divides_all = true;
        for (std::size_t i = s + 1; i < a.rows() && divides_all; ++i) {
            for (std::size_t j = s + 1; j < a.cols(); ++j) {
                if (a.at(i, j) % a.at(s, s) != 0) {
                    for (std::size_t c = 0; c < a.cols(); ++c) a.at(s, c) += a.at(i, c);
                    divides_all = false;
                    break;
                }
            }
        }
        if (!divides_all) continue;

        out.diag[s] = abs(a.at(s, s));
        ++s;
    }
    return out;
}

Int det_exact(const IntMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("det_exact: non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a.at(p, k) == 0) ++p;
            if (p == n) return 0;
            swap_rows_inplace(a, k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int num = a.at(k, k) * a.at(i, j) - a.at(i, k) * a.at(k, j);
                mpz_divexact(a.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            a.at(i, k) = 0;
        }
        prev = a.at(k, k);
    }
    return sign > 0 ? a.at(n - 1, n - 1) : Int(-a.at(n - 1, n - 1));
}

namespace {

// All k-subsets of [0, n), in lexicographic order.
bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
    const std::size_t k = c.size();
    for (std::size_t i = k; i-- > 0;) {
        if (c[i] + (k - i) < n) {
            ++c[i];
            for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

std::vector<std::size_t> first_combination(std::size_t k) {
    std::vector<std::size_t> c(k);
    for (std::size_t i = 0; i < k; ++i) c[i] = i;
    return c;
}

}  // namespace

DeltaProfile minors_gcd_profile(const IntMatrix& m, std::size_t max_order,
                                std::size_t size_guard) {
    const std::size_t lim = std::min(m.rows(), m.cols());
    if (lim > size_guard)
        throw std::invalid_argument(
            "minors_gcd_profile: matrix exceeds the size guard; use smith_normal_form");
    if (max_order > lim)
        throw std::invalid_argument("minors_gcd_profile: order exceeds min(rows, cols)");

    DeltaProfile out;
    for (std::size_t order = 1; order <= max_order; ++order) {
        Int g = 0;
        auto rows = first_combination(order);
        do {
            auto cols = first_combination(order);
            do {
                IntMatrix sub(order, order);
                for (std::size_t i = 0; i < order; ++i)
                    for (std::size_t j = 0; j < order; ++j)
                        sub.at(i, j) = m.at(rows[i], cols[j]);
                g = gcd_nonneg(g, det_exact(sub));
                if (g == 1) goto done;
            } while (next_combination(cols, m.cols()));
        } while (next_combination(rows, m.rows()));
    done:
        out.deltas.push_back(g);
    }
    return out;
}

std::vector<Int> invariant_factors_from_minors(const DeltaProfile& p) {
    std::vector<Int> d;
    Int prev = 1;
    for (const Int& delta : p.deltas) {
        if (prev == 0 || delta == 0) {
            d.emplace_back(0);
        } else {
            if (delta % prev != 0)
                throw std::logic_error("invariant_factors_from_minors: delta chain broken");
            d.push_back(delta / prev);
        }
        prev = delta;
    }
    return d;
}

std::vector<Int> normal_form(const SmithForm& s) {
    std::vector<Int> out;
    for (const Int& d : s.diag)
        if (d != 1) out.push_back(d);
    if (out.empty()) out.emplace_back(1);
    return out;
}

IntMatrix matrix_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    const std::size_t rows = j.at("rows").get<std::size_t>();
    const std::size_t cols = j.at("cols").get<std::size_t>();
    const auto& entries = j.at("entries");
    if (entries.size() != rows)
        throw std::invalid_argument("matrix_from_json: row count mismatch");
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (entries[i].size() != cols)
            throw std::invalid_argument("matrix_from_json: column count mismatch");
        for (std::size_t jx = 0; jx < cols; ++jx)
            m.at(i, jx) = Int(entries[i][jx].get<std::string>());
    }
    return m;
}

std::string matrix_to_json(const IntMatrix& m) {
    nlohmann::json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    auto rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        auto row = nlohmann::json::array();
        for (std::size_t jx = 0; jx < m.cols(); ++jx)
            row.push_back(m.at(i, jx).get_str());
        rows.push_back(std::move(row));
    }
    j["entries"] = std::move(rows);
    return j.dump();
}

}  // namespace knot
