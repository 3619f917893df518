#include "knot/coloring.hpp"

#include <algorithm>
#include <stdexcept>

namespace knot {

IntMatrix coloring_matrix(const KnotDiagram& d) {
    validate(d);
    IntMatrix m(d.crossings.size(), d.n);
    for (std::size_t i = 0; i < d.crossings.size(); ++i) {
        const Crossing& c = d.crossings[i];
        m.at(i, c.under_in) += 1;
        m.at(i, c.under_out) += 1;
        m.at(i, c.over) -= 2;
    }
    return m;
}

IntMatrix reduced_coloring_matrix(const IntMatrix& m, std::size_t row, std::size_t col) {
    if (m.rows() < 2 || m.cols() < 2)
        throw std::invalid_argument("reduced_coloring_matrix: nothing left after reduction");
    return m.submatrix_without(row, col);
}

IntMatrix reduced_coloring_matrix(const KnotDiagram& d) {
    IntMatrix m = coloring_matrix(d);
    return reduced_coloring_matrix(m, m.rows() - 1, m.cols() - 1);
}

Int knot_determinant(const KnotDiagram& d) {
    if (d.n <= 1) return 1;  // unknot (possibly with a single kink)
    Int det = det_exact(reduced_coloring_matrix(d));
    return abs(det);
}

Int count_colorings(const KnotDiagram& d, const Int& r) {
    if (r < 2) throw std::invalid_argument("count_colorings: r must be at least 2");
    SmithForm s = smith_normal_form(coloring_matrix(d));
    Int count = 1;
    for (const Int& di : s.diag) count *= di == 0 ? r : gcd_nonneg(di, r);
    // Columns beyond the rank contribute free variables mod r.
    for (std::size_t k = s.diag.size(); k < s.original_cols; ++k) count *= r;
    return count;
}

bool has_nontrivial_colorings(const KnotDiagram& d, const Int& r) {
    return count_colorings(d, r) > r;
}

Int brute_force_count(const KnotDiagram& d, unsigned long r, unsigned long guard) {
    if (r < 2) throw std::invalid_argument("brute_force_count: r must be at least 2");
    validate(d);
    if (d.n == 0) return r;
    Int space = 1;
    for (std::size_t k = 0; k + 1 < d.n; ++k) space *= r;
    if (space > guard)
        throw std::runtime_error("brute_force_count: search space exceeds guard limit");

    // Depth-first search over arc colors with arc 0 pinned to 0; a
    // crossing equation is checked as soon as its last arc is colored,
    // pruning the rest of that subtree.  Exhaustive, but far quicker
    // than the full odometer on constrained systems.
    std::vector<std::vector<Crossing>> ready(d.n + 1);
    for (const Crossing& c : d.crossings) {
        std::size_t last = std::max({c.over, c.under_in, c.under_out});
        ready[last].push_back(c);
    }
    std::vector<unsigned long> color(d.n, 0);
    const auto ok = [&](const Crossing& c) {
        return (color[c.under_in] + color[c.under_out] + 2 * (r - color[c.over])) % r == 0;
    };
    unsigned long satisfied = 0;
    const auto dfs = [&](auto&& self, std::size_t arc) -> void {
        for (const Crossing& c : ready[arc - 1])
            if (!ok(c)) return;
        if (arc == d.n) {
            ++satisfied;
            return;
        }
        for (unsigned long v = 0; v < r; ++v) {
            color[arc] = v;
            self(self, arc + 1);
        }
    };
    dfs(dfs, 1);
    return Int(satisfied) * r;
}

ColoringReport coloring_report(const KnotDiagram& d) {
    ColoringReport rep{coloring_matrix(d), {}, knot_determinant(d)};
    rep.smith = smith_normal_form(rep.matrix);
    return rep;
}

}  // namespace knot
