#include "knot/seifert.hpp"

#include <cctype>
#include <stdexcept>

namespace knot {

namespace {

// "NAME(a1,...,ak)" or "NAME(a1,...,ak;b)" when semi is non-null.
std::vector<long> parse_spec_list(const std::string& text, const std::string& name,
                                  long* semi) {
    std::size_t i = 0;
    const auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    const auto fail = [&](const std::string& why) {
        throw std::invalid_argument(name + " spec: " + why);
    };
    const auto read_long = [&]() -> long {
        skip_ws();
        std::size_t start = i;
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start || !std::isdigit(static_cast<unsigned char>(text[i - 1])))
            fail("expected integer");
        return std::stol(text.substr(start, i - start));
    };

    skip_ws();
    for (char c : name) {
        if (i >= text.size() || text[i] != c) fail("expected '" + name + "(...)'");
        ++i;
    }
    skip_ws();
    if (i >= text.size() || text[i] != '(') fail("expected '('");
    ++i;
    std::vector<long> out;
    out.push_back(read_long());
    skip_ws();
    while (i < text.size() && text[i] == ',') {
        ++i;
        out.push_back(read_long());
        skip_ws();
    }
    if (semi) {
        if (i >= text.size() || text[i] != ';') fail("expected ';' before the even half-twist count");
        ++i;
        *semi = read_long();
        skip_ws();
    }
    if (i >= text.size() || text[i] != ')') fail("expected ')'");
    ++i;
    skip_ws();
    if (i != text.size()) fail("trailing input");
    return out;
}

}  // namespace

OddPretzelSpec parse_odd_pretzel(const std::string& text) {
    OddPretzelSpec spec{parse_spec_list(text, "Podd", nullptr)};
    if (spec.tassels() < 3)
        throw std::invalid_argument("Podd spec: need at least 3 tassels");
    for (long v : spec.half_twists)
        if (v < 0) throw std::invalid_argument("Podd spec: half-twist counts must be nonnegative");
    return spec;
}

OneEvenPretzelSpec parse_one_even_pretzel(const std::string& text) {
    OneEvenPretzelSpec spec;
    spec.odd_half_twists = parse_spec_list(text, "Peven", &spec.even_half);
    if (spec.tassels() % 2 != 0)
        throw std::invalid_argument("Peven spec: total tassel count must be even");
    if (spec.tassels() < 4)
        throw std::invalid_argument("Peven spec: need at least 4 tassels");
    for (long v : spec.odd_half_twists)
        if (v < 1)
            throw std::invalid_argument("Peven spec: odd-tassel half-twist counts must be >= 1 "
                                        "(degenerate one-crossing tassels give empty blocks)");
    if (spec.even_half < 1)
        throw std::invalid_argument("Peven spec: even half-twist count must be >= 1");
    return spec;
}

int component_count(const OddPretzelSpec& spec) {
    return spec.tassels() % 2 == 1 ? 1 : 2;
}

SeifertMatrix seifert_odd_pretzel(const OddPretzelSpec& spec) {
    const std::size_t N = spec.tassels();
    const long in = spec.half_twists[N - 1];
    SeifertMatrix s(N - 1, N - 1);
    for (std::size_t j = 0; j < N - 1; ++j)
        for (std::size_t k = 0; k < N - 1; ++k) {
            if (j < k)
                s.at(j, k) = Int(in + 1);
            else if (j == k)
                s.at(j, k) = Int(spec.half_twists[j] + in + 1);
            else
                s.at(j, k) = Int(in);
        }
    return s;
}

PolyMatrix alexander_presentation(const SeifertMatrix& s) {
    if (s.rows() != s.cols())
        throw std::invalid_argument("alexander_presentation: Seifert matrix must be square");
    PolyMatrix p(s.rows());
    for (std::size_t i = 0; i < s.rows(); ++i)
        for (std::size_t j = 0; j < s.cols(); ++j) {
            p.at(i, j) = LaurentPoly::term(s.at(i, j), 1) - LaurentPoly(s.at(j, i));
        }
    return p;
}

LaurentPoly alexander_polynomial(const SeifertMatrix& s) {
    return canonical_up_to_units(det_poly(alexander_presentation(s)));
}

LaurentPoly alexander_odd_closed_form(const OddPretzelSpec& spec) {
    const std::size_t N = spec.tassels();
    if (N % 2 != 1)
        throw std::invalid_argument("alexander_odd_closed_form: N must be odd (knot case)");
    const auto& iv = spec.half_twists;
    const long in = iv[N - 1];
    // Factors: f_j = i_j t - (i_j+1) and g_j = i_j - (i_j+1) t.
    const auto f = [&](std::size_t j) {
        return LaurentPoly::term(Int(iv[j]), 1) - LaurentPoly(Int(iv[j] + 1));
    };
    const auto g = [&](std::size_t j) {
        return LaurentPoly(Int(iv[j])) - LaurentPoly::term(Int(iv[j] + 1), 1);
    };
    const LaurentPoly alpha = LaurentPoly::term(Int(in + 1), 1) - LaurentPoly(Int(in));

    LaurentPoly total;
    for (std::size_t k = 1; k + 1 < N; ++k) {
        LaurentPoly term = alpha;
        for (std::size_t j = 1; j < k; ++j) term = term * f(j - 1);
        for (std::size_t j = k + 1; j < N; ++j) term = term * g(j - 1);
        total += (k % 2 == 1) ? -term : term;
    }
    LaurentPoly corr =
        LaurentPoly(Int(iv[N - 2] + in + 1)) * (LaurentPoly::t() - LaurentPoly(1));
    for (std::size_t k = 1; k + 1 < N; ++k) corr = corr * f(k - 1);
    // (-1)^{N-1} = +1 for N odd.
    total += corr;
    return canonical_up_to_units(total);
}

ClosedFormReport alexander_odd_report(const OddPretzelSpec& spec) {
    ClosedFormReport rep;
    rep.closed_form = alexander_odd_closed_form(spec);
    rep.determinant_route = alexander_polynomial(seifert_odd_pretzel(spec));
    rep.agrees = rep.closed_form == rep.determinant_route;
    return rep;
}

SeifertMatrix seifert_one_even(const OneEvenPretzelSpec& spec) {
    const std::size_t odd = spec.odd_half_twists.size();
    std::vector<std::size_t> off(odd + 1, 0);
    for (std::size_t k = 0; k < odd; ++k)
        off[k + 1] = off[k] + 2 * static_cast<std::size_t>(spec.odd_half_twists[k]);
    const std::size_t even_off = off[odd];
    const std::size_t m = 2 * static_cast<std::size_t>(spec.even_half);
    const std::size_t g = even_off + m;

    SeifertMatrix s(g, g);
    for (std::size_t k = 0; k < odd; ++k)
        for (std::size_t r = off[k]; r < off[k + 1]; ++r) {
            s.at(r, r) = -1;
            for (std::size_t c = off[k]; c < r; ++c) s.at(r, c) = 1;
            for (std::size_t c = even_off; c < g; ++c) s.at(r, c) = 1;
        }
    for (std::size_t r = even_off; r < g; ++r)
        for (std::size_t c = even_off; c < g; ++c) s.at(r, c) = r <= c ? -2 : -1;
    return s;
}

PolyMatrix block_b(long ik) {
    if (ik < 1) throw std::invalid_argument("block_b: half-twist count must be >= 1");
    const std::size_t m = 2 * static_cast<std::size_t>(ik);
    const LaurentPoly t = LaurentPoly::t();
    PolyMatrix b(m);
    for (std::size_t r = 0; r < m; ++r) b.at(r, r) = LaurentPoly(3) - LaurentPoly(3) * t;
    b.at(m - 1, m - 1) = LaurentPoly(1) - t;
    for (std::size_t r = 0; r + 1 < m; ++r) {
        b.at(r, r + 1) = t - LaurentPoly(2);
        b.at(r + 1, r) = LaurentPoly(2) * t - LaurentPoly(1);
    }
    return b;
}

PolyMatrix block_b_prime(long ik) {
    PolyMatrix b = block_b(ik);
    const std::size_t m = b.n;
    for (std::size_t r = 0; r + 1 < m; ++r) b.at(r, m - 1) = {};
    b.at(m - 1, m - 1) = LaurentPoly::t();
    return b;
}

PolyMatrix block_bn(long in, long big_i) {
    if (in < 1) throw std::invalid_argument("block_bn: even half-twist count must be >= 1");
    const std::size_t m = 2 * static_cast<std::size_t>(in);
    const LaurentPoly t = LaurentPoly::t();
    const LaurentPoly corner = LaurentPoly(Int(big_i)) - LaurentPoly(Int(big_i)) * t;
    PolyMatrix b(m);
    for (std::size_t r = 0; r < m; ++r) b.at(r, r) = LaurentPoly(1);
    for (std::size_t r = 0; r + 1 < m; ++r) b.at(r + 1, r) = t;
    for (std::size_t r = 0; r + 2 < m; ++r) b.at(r, m - 2) = -t;
    b.at(m - 2, m - 2) = LaurentPoly(1) - t;
    b.at(m - 1, m - 2) = t;
    for (std::size_t r = 0; r + 1 < m; ++r) b.at(r, m - 1) = LaurentPoly(-1);
    b.at(m - 1, m - 1) = corner;
    return b;
}

PolyMatrix block_bn_prime(long in, long big_i) {
    PolyMatrix b = block_bn(in, big_i);
    return b.submatrix_without(b.n - 1, b.n - 2);
}

PolyMatrix block_bn_dprime(long in, long big_i) {
    PolyMatrix b = block_bn(in, big_i);
    return b.submatrix_without(b.n - 1, b.n - 1);
}

PolyMatrix one_even_presentation(const OneEvenPretzelSpec& spec) {
    const std::size_t odd = spec.odd_half_twists.size();
    std::vector<std::size_t> off(odd + 1, 0);
    for (std::size_t k = 0; k < odd; ++k)
        off[k + 1] = off[k] + 2 * static_cast<std::size_t>(spec.odd_half_twists[k]);
    const std::size_t even_off = off[odd];
    const std::size_t g = even_off + 2 * static_cast<std::size_t>(spec.even_half);

    PolyMatrix p(g);
    for (std::size_t k = 0; k < odd; ++k) {
        PolyMatrix b = block_b(spec.odd_half_twists[k]);
        for (std::size_t r = 0; r < b.n; ++r)
            for (std::size_t c = 0; c < b.n; ++c) p.at(off[k] + r, off[k] + c) = b.at(r, c);
    }
    {
        PolyMatrix b = block_bn(spec.even_half, static_cast<long>(spec.tassels() / 2));
        for (std::size_t r = 0; r < b.n; ++r)
            for (std::size_t c = 0; c < b.n; ++c) p.at(even_off + r, even_off + c) = b.at(r, c);
    }
    // M1: couplings at the last row/column of each odd block.
    for (std::size_t k = 1; k <= odd; ++k) {
        p.at(g - 1, off[k] - 1) += LaurentPoly(-1);
        p.at(off[k] - 1, g - 1) += LaurentPoly::t();
    }
    return p;
}

BlockDets block_det_closed_forms(const OneEvenPretzelSpec& spec) {
    BlockDets out;
    for (long ik : spec.odd_half_twists) {
        out.b.push_back(det_poly(block_b(ik)));
        out.b_prime.push_back(det_poly(block_b_prime(ik)));
    }
    const long m = 2 * spec.even_half;
    for (long j = 1; j <= m - 1; ++j)
        out.bn_prime.add_term(static_cast<int>(m - 1 - j), (j % 2 == 1) ? Int(-1) : Int(1));
    for (long j = 1; j <= m - 2; ++j)
        out.bn_dprime.add_term(static_cast<int>(m - j), (j % 2 == 1) ? Int(-1) : Int(1));
    out.bn_dprime += LaurentPoly(1) - LaurentPoly::t();
    return out;
}

LaurentPoly alexander_one_even_closed_form(const OneEvenPretzelSpec& spec) {
    const BlockDets d = block_det_closed_forms(spec);
    const std::size_t odd = d.b.size();
    const LaurentPoly t = LaurentPoly::t();
    const long big_i = static_cast<long>(spec.tassels() / 2);

    LaurentPoly prod_all(1);
    for (const LaurentPoly& bd : d.b) prod_all = prod_all * bd;

    LaurentPoly sum;
    for (std::size_t j = 0; j < odd; ++j) {
        LaurentPoly term = d.b_prime[j];
        for (std::size_t l = 0; l < odd; ++l)
            if (l != j) term = term * d.b[l];
        sum += term;
    }

    const LaurentPoly corner = LaurentPoly(Int(big_i)) - LaurentPoly(Int(big_i)) * t;
    LaurentPoly total = d.bn_dprime * sum - t * d.bn_prime * prod_all + corner * d.bn_dprime * prod_all;
    return canonical_up_to_units(total);
}

ClosedFormReport alexander_one_even_report(const OneEvenPretzelSpec& spec) {
    ClosedFormReport rep;
    rep.closed_form = alexander_one_even_closed_form(spec);
    rep.determinant_route = canonical_up_to_units(det_poly(one_even_presentation(spec)));
    rep.agrees = rep.closed_form == rep.determinant_route;
    return rep;
}

std::vector<LaurentPoly> elementary_ideal_generators(const PolyMatrix& p, std::size_t r,
                                                     std::size_t guard) {
    const std::size_t m = p.n;
    if (m > guard)
        throw std::runtime_error("elementary_ideal_generators: matrix size exceeds minor guard");
    if (r < 1 || r > m)
        throw std::invalid_argument("elementary_ideal_generators: index out of range");
    const std::size_t k = m - r + 1;

    std::vector<std::vector<std::size_t>> subsets;
    std::vector<std::size_t> idx(k);
    for (std::size_t j = 0; j < k; ++j) idx[j] = j;
    for (;;) {
        subsets.push_back(idx);
        std::size_t i = k;
        bool more = false;
        while (i-- > 0) {
            if (idx[i] + (k - i) < m) {
                ++idx[i];
                for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
                more = true;
                break;
            }
        }
        if (!more) break;
    }

    std::vector<LaurentPoly> gens;
    for (const auto& rows : subsets)
        for (const auto& cols : subsets) {
            PolyMatrix sub(k);
            for (std::size_t a = 0; a < k; ++a)
                for (std::size_t b = 0; b < k; ++b) sub.at(a, b) = p.at(rows[a], cols[b]);
            gens.push_back(det_poly(sub));
        }
    return gens;
}

LaurentPoly alexander_polynomial_r(const PolyMatrix& p, std::size_t r, std::size_t guard) {
    return poly_gcd(elementary_ideal_generators(p, r, guard));
}

LaurentPoly p5374_fixture_polynomial() {
    return parse_poly(
        "2 + 192*t + 972*t^2 - 12289*t^3 + 49274*t^4 - 120582*t^5 + 213765*t^6 - 295426*t^7 "
        "+ 328185*t^8 - 295426*t^9 + 213765*t^10 - 120582*t^11 + 49274*t^12 - 12289*t^13 "
        "+ 972*t^14 + 192*t^15 + 2*t^16");
}

}  // namespace knot
