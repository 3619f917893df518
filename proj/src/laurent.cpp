#include "knot/laurent.hpp"

#include "knot/int_matrix.hpp"

#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <utility>

namespace knot {

LaurentPoly LaurentPoly::term(const Int& coeff, int exp) {
    LaurentPoly p;
    p.add_term(exp, coeff);
    return p;
}

int LaurentPoly::min_exp() const {
    if (terms_.empty()) throw std::logic_error("min_exp of zero polynomial");
    return terms_.begin()->first;
}

int LaurentPoly::max_exp() const {
    if (terms_.empty()) throw std::logic_error("max_exp of zero polynomial");
    return terms_.rbegin()->first;
}

Int LaurentPoly::coeff(int exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Int(0) : it->second;
}

void LaurentPoly::add_term(int exp, const Int& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(exp, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
}

LaurentPoly canonical_up_to_units(const LaurentPoly& p) {
    if (p.is_zero()) return p;
    const int shift = -p.min_exp();
    const bool flip = p.terms().begin()->second < 0;
    LaurentPoly r;
    for (const auto& [e, c] : p.terms()) r.add_term(e + shift, flip ? Int(-c) : c);
    return r;
}

bool equal_up_to_units(const LaurentPoly& a, const LaurentPoly& b) {
    return canonical_up_to_units(a) == canonical_up_to_units(b);
}

mpq_class poly_eval(const LaurentPoly& p, const Int& t0) {
    if (t0 == 0) throw std::invalid_argument("poly_eval: t0 must be nonzero");
    if (p.is_zero()) return mpq_class(0);
    const int m = p.min_exp();
    // Horner on the shifted polynomial, then restore the t^m factor.
    Int v = 0;
    int prev_exp = p.max_exp();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        for (int k = it->first; k < prev_exp; ++k) v *= t0;
        v += it->second;
        prev_exp = it->first;
    }
    Int scale = 1;
    for (int k = 0; k < (m < 0 ? -m : m); ++k) scale *= t0;
    mpq_class r = m >= 0 ? mpq_class(v * scale) : mpq_class(v, scale);
    r.canonicalize();
    return r;
}

Int poly_eval_int(const LaurentPoly& p, const Int& t0) {
    mpq_class v = poly_eval(p, t0);
    if (v.get_den() != 1) throw std::logic_error("poly_eval_int: non-integer value");
    return v.get_num();
}

LaurentPoly poly_divexact(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw std::logic_error("poly_divexact: division by zero");
    if (a.is_zero()) return a;
    // Work with both operands shifted to minimum exponent 0; the net
    // shift is restored on the quotient.
    const int shift = a.min_exp() - b.min_exp();
    LaurentPoly rem;
    for (const auto& [e, c] : a.terms()) rem.add_term(e - a.min_exp(), c);
    LaurentPoly div;
    for (const auto& [e, c] : b.terms()) div.add_term(e - b.min_exp(), c);

    const Int& lead = div.terms().rbegin()->second;
    const int ddeg = div.max_exp();
    LaurentPoly q;
    while (!rem.is_zero() && rem.max_exp() >= ddeg) {
        const Int& rc = rem.terms().rbegin()->second;
        if (rc % lead != 0) throw std::logic_error("poly_divexact: inexact division");
        Int qc = rc / lead;
        const int qe = rem.max_exp() - ddeg;
        q.add_term(qe + shift, qc);
        rem -= LaurentPoly::term(qc, qe) * div;
    }
    if (!rem.is_zero()) throw std::logic_error("poly_divexact: nonzero remainder");
    return q;
}

namespace {

Int content(const LaurentPoly& p) {
    Int g = 0;
    for (const auto& [e, c] : p.terms()) {
        Int ac = abs(c);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ac.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

// Primitive part with min exponent 0 and positive leading coefficient.
LaurentPoly primitive_part(const LaurentPoly& p) {
    if (p.is_zero()) return p;
    Int c = content(p);
    if (p.terms().rbegin()->second < 0) c = -c;
    const int m = p.min_exp();
    LaurentPoly r;
    for (const auto& [e, coeff] : p.terms()) r.add_term(e - m, coeff / c);
    return r;
}

// prem(u, v): pseudo-remainder lc(v)^(du-dv+1) * u mod v, u and v with
// min exponent 0 and deg u >= deg v.
LaurentPoly pseudo_rem(LaurentPoly u, const LaurentPoly& v) {
    const Int lead = v.terms().rbegin()->second;
    const int dv = v.max_exp();
    int steps = u.max_exp() - dv + 1;
    while (!u.is_zero() && u.max_exp() >= dv) {
        const Int uc = u.terms().rbegin()->second;
        const int ue = u.max_exp();
        LaurentPoly scaled;
        for (const auto& [e, c] : u.terms()) scaled.add_term(e, c * lead);
        u = scaled - LaurentPoly::term(uc, ue - dv) * v;
        --steps;
    }
    // Keep the pseudo-remainder scaling consistent even when the degree
    // drops by more than one per step.
    for (; steps > 0; --steps) {
        LaurentPoly scaled;
        for (const auto& [e, c] : u.terms()) scaled.add_term(e, c * lead);
        u = scaled;
    }
    return u;
}

}  // namespace

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero()) return canonical_up_to_units(b);
    if (b.is_zero()) return canonical_up_to_units(a);
    Int cont = gcd_nonneg(content(a), content(b));
    LaurentPoly u = primitive_part(a);
    LaurentPoly v = primitive_part(b);
    if (u.max_exp() < v.max_exp()) std::swap(u, v);
    while (!v.is_zero()) {
        LaurentPoly r = primitive_part(pseudo_rem(u, v));
        u = std::move(v);
        v = std::move(r);
    }
    return canonical_up_to_units(LaurentPoly::term(cont, 0) * u);
}

LaurentPoly poly_gcd(const std::vector<LaurentPoly>& ps) {
    if (ps.empty()) throw std::invalid_argument("poly_gcd: empty input");
    LaurentPoly g = canonical_up_to_units(ps.front());
    for (std::size_t i = 1; i < ps.size(); ++i) {
        g = poly_gcd(g, ps[i]);
        if (g == LaurentPoly(1)) break;
    }
    return g;
}

std::string to_string(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        Int a = abs(c);
        if (first) {
            if (c < 0) out += "-";
            first = false;
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (e == 0) {
            out += a.get_str();
        } else {
            if (a != 1) out += a.get_str() + "*";
            out += "t";
            if (e != 1) out += "^" + std::to_string(e);
        }
    }
    return out;
}

LaurentPoly parse_poly(const std::string& text) {
    LaurentPoly p;
    std::size_t i = 0;
    const auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    const auto parse_int = [&]() -> long {
        std::size_t start = i;
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start]))))
            throw std::invalid_argument("parse_poly: expected integer at position " + std::to_string(start));
        return std::stol(text.substr(start, i - start));
    };

    skip_ws();
    bool any = false;
    while (i < text.size()) {
        int sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            if (text[i] == '-') sign = -1;
            ++i;
            skip_ws();
        } else if (any) {
            throw std::invalid_argument("parse_poly: expected '+' or '-' between terms");
        }
        Int coeff = 1;
        bool have_coeff = false;
        if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            std::size_t start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            coeff = Int(text.substr(start, i - start));
            have_coeff = true;
            skip_ws();
            if (i < text.size() && text[i] == '*') {
                ++i;
                skip_ws();
            }
        }
        int exp = 0;
        if (i < text.size() && text[i] == 't') {
            ++i;
            exp = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                exp = static_cast<int>(parse_int());
            }
        } else if (!have_coeff) {
            throw std::invalid_argument("parse_poly: expected term at position " + std::to_string(i));
        }
        p.add_term(exp, sign < 0 ? Int(-coeff) : coeff);
        any = true;
        skip_ws();
    }
    if (!any) throw std::invalid_argument("parse_poly: empty input");
    return p;
}

PolyMatrix PolyMatrix::identity(std::size_t size) {
    PolyMatrix m(size);
    for (std::size_t i = 0; i < size; ++i) m.at(i, i) = LaurentPoly(1);
    return m;
}

PolyMatrix PolyMatrix::submatrix_without(std::size_t row, std::size_t col) const {
    PolyMatrix s(n - 1);
    for (std::size_t i = 0, si = 0; i < n; ++i) {
        if (i == row) continue;
        for (std::size_t j = 0, sj = 0; j < n; ++j) {
            if (j == col) continue;
            s.at(si, sj++) = at(i, j);
        }
        ++si;
    }
    return s;
}

namespace {

LaurentPoly det_bareiss(PolyMatrix a) {
    const std::size_t n = a.n;
    if (n == 0) return LaurentPoly(1);
    int sign = 1;
    LaurentPoly prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k).is_zero()) {
            std::size_t p = k + 1;
            while (p < n && a.at(p, k).is_zero()) ++p;
            if (p == n) return {};
            for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                LaurentPoly num = a.at(k, k) * a.at(i, j) - a.at(i, k) * a.at(k, j);
                a.at(i, j) = poly_divexact(num, prev);
            }
            a.at(i, k) = {};
        }
        prev = a.at(k, k);
    }
    return sign > 0 ? a.at(n - 1, n - 1) : -a.at(n - 1, n - 1);
}

// Expansion by minors, memoized on the set of still-available columns.
// Zero entries are skipped, which keeps the structured matrices of this
// library tractable well beyond toy sizes.
class CofactorDet {
public:
    explicit CofactorDet(const PolyMatrix& m) : m_(m) {}

    LaurentPoly run() {
        if (m_.n == 0) return LaurentPoly(1);
        if (m_.n > 24) throw std::invalid_argument("det_poly(cofactor): matrix too large");
        return minor_det((std::uint32_t(1) << m_.n) - 1, 0);
    }

private:
    LaurentPoly minor_det(std::uint32_t cols, std::size_t row) {
        if (row == m_.n) return LaurentPoly(1);
        auto it = memo_.find(cols);
        if (it != memo_.end()) return it->second;
        LaurentPoly acc;
        int sign = 1;
        for (std::size_t j = 0; j < m_.n; ++j) {
            if (!(cols & (std::uint32_t(1) << j))) continue;
            if (!m_.at(row, j).is_zero()) {
                LaurentPoly sub = minor_det(cols & ~(std::uint32_t(1) << j), row + 1);
                LaurentPoly term = m_.at(row, j) * sub;
                acc += sign > 0 ? term : -term;
            }
            sign = -sign;
        }
        memo_.emplace(cols, acc);
        return acc;
    }

    const PolyMatrix& m_;
    std::unordered_map<std::uint32_t, LaurentPoly> memo_;
};

}  // namespace

LaurentPoly det_poly(const PolyMatrix& m, DetAlgo algo) {
    switch (algo) {
        case DetAlgo::bareiss:
            return det_bareiss(m);
        case DetAlgo::cofactor:
            return CofactorDet(m).run();
    }
    throw std::logic_error("det_poly: unknown algorithm");
}

}  // namespace knot
