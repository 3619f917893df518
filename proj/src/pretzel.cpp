#include "knot/pretzel.hpp"

#include <cctype>
#include <stdexcept>

namespace knot {

namespace {

std::vector<long> parse_twist_list(const std::string& text, const std::string& prefix,
                                   const char* what) {
    std::size_t i = 0;
    const auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    skip_ws();
    for (char c : prefix) {
        if (i >= text.size() || text[i] != c)
            throw std::invalid_argument(std::string(what) + ": expected '" + prefix + "(...)'");
        ++i;
    }
    skip_ws();
    if (i >= text.size() || text[i] != '(')
        throw std::invalid_argument(std::string(what) + ": expected '('");
    ++i;
    std::vector<long> out;
    for (;;) {
        skip_ws();
        std::size_t start = i;
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start || !std::isdigit(static_cast<unsigned char>(text[i - 1])))
            throw std::invalid_argument(std::string(what) + ": expected integer");
        out.push_back(std::stol(text.substr(start, i - start)));
        skip_ws();
        if (i < text.size() && text[i] == ',') {
            ++i;
            continue;
        }
        break;
    }
    if (i >= text.size() || text[i] != ')')
        throw std::invalid_argument(std::string(what) + ": expected ')'");
    ++i;
    skip_ws();
    if (i != text.size())
        throw std::invalid_argument(std::string(what) + ": trailing input");
    return out;
}

// Enumerate k-subsets of {0..n-1} in lexicographic order.
bool next_subset(std::vector<std::size_t>& idx, std::size_t n) {
    const std::size_t k = idx.size();
    std::size_t i = k;
    while (i-- > 0) {
        if (idx[i] + (k - i) < n) {
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace

PretzelSpec parse_pretzel(const std::string& text) {
    PretzelSpec p{parse_twist_list(text, "P", "parse_pretzel")};
    for (long t : p.twists)
        if (t == 0) throw std::invalid_argument("parse_pretzel: zero twist count");
    return p;
}

IntMatrix pretzel_coloring_matrix(const PretzelSpec& p) {
    const std::size_t N = p.tassels();
    if (N < 3) throw std::invalid_argument("pretzel_coloring_matrix: need at least 3 tassels");
    IntMatrix m(N, N);
    for (std::size_t k = 0; k < N; ++k) {
        const long nk = p.twists[k];
        const long nk1 = p.twists[(k + 1) % N];
        m.at(k, k) += Int(-nk);
        m.at(k, (k + 1) % N) += Int(nk + nk1);
        m.at(k, (k + 2) % N) += Int(-nk1);
    }
    return m;
}

std::vector<Int> pretzel_delta(const PretzelSpec& p) {
    const std::size_t N = p.tassels();
    if (N < 3) throw std::invalid_argument("pretzel_delta: need at least 3 tassels");
    std::vector<Int> delta(N, Int(0));
    for (std::size_t i = 1; i + 1 < N; ++i) {
        Int g = 0;
        std::vector<std::size_t> idx(i);
        for (std::size_t j = 0; j < i; ++j) idx[j] = j;
        do {
            Int prod = 1;
            for (std::size_t j : idx) prod *= Int(p.twists[j]);
            g = gcd_nonneg(g, prod);
        } while (g != 1 && next_subset(idx, N));
        delta[i - 1] = g;
    }
    {
        // Delta_{N-1}: sum over (N-1)-subsets, i.e. elementary symmetric
        // polynomial e_{N-1}(n_1,...,n_N).
        Int sum = 0;
        Int full = 1;
        for (long t : p.twists) full *= Int(t);
        for (std::size_t k = 0; k < N; ++k) sum += full / Int(p.twists[k]);
        delta[N - 2] = abs(sum);
    }
    delta[N - 1] = 0;
    return delta;
}

Int pretzel_delta(const PretzelSpec& p, std::size_t i) {
    if (i < 1 || i > p.tassels())
        throw std::invalid_argument("pretzel_delta: order out of range");
    return pretzel_delta(p)[i - 1];
}

std::vector<Int> pretzel_diagonal(const PretzelSpec& p) {
    std::vector<Int> delta = pretzel_delta(p);
    std::vector<Int> diag(delta.size());
    Int prev = 1;
    for (std::size_t i = 0; i + 1 < delta.size(); ++i) {
        if (prev == 0 || delta[i] % prev != 0)
            throw std::logic_error("pretzel_diagonal: broken divisibility chain");
        diag[i] = delta[i] / prev;
        prev = delta[i];
    }
    diag.back() = 0;
    return diag;
}

Int pretzel_determinant(const PretzelSpec& p) {
    return pretzel_delta(p)[p.tassels() - 2];
}

}  // namespace knot
