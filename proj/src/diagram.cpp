#include "knot/diagram.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace knot {

std::vector<long> twist_propagate(long a, long b, std::size_t n) {
    std::vector<long> out(n);
    for (std::size_t i = 1; i <= n; ++i) out[i - 1] = b + static_cast<long>(i) * (b - a);
    return out;
}

void validate(const KnotDiagram& d) {
    if (d.n == 0) {
        if (!d.crossings.empty())
            throw std::invalid_argument("diagram: crossings present but no arcs");
        return;  // unknot with no crossings
    }
    std::vector<int> starts(d.n, 0), ends(d.n, 0);
    for (const Crossing& c : d.crossings) {
        if (c.over >= d.n || c.under_in >= d.n || c.under_out >= d.n)
            throw std::invalid_argument("diagram: arc label out of range");
        ++ends[c.under_in];
        ++starts[c.under_out];
    }
    if (d.crossings.size() != d.n)
        throw std::invalid_argument("diagram: expected one crossing per arc");
    for (std::size_t a = 0; a < d.n; ++a) {
        if (starts[a] != 1 || ends[a] != 1)
            throw std::invalid_argument("diagram: arc " + std::to_string(a) +
                                        " must start and end at exactly one crossing");
    }
}

KnotDiagram diagram_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("crossings"))
        throw std::invalid_argument("diagram json: expected object with n and crossings");
    KnotDiagram d;
    d.n = j.at("n").get<std::size_t>();
    for (const auto& cj : j.at("crossings")) {
        Crossing c;
        c.over = cj.at("over").get<std::size_t>();
        c.under_in = cj.at("under_in").get<std::size_t>();
        c.under_out = cj.at("under_out").get<std::size_t>();
        d.crossings.push_back(c);
    }
    validate(d);
    return d;
}

nlohmann::json diagram_to_json(const KnotDiagram& d) {
    nlohmann::json j;
    j["n"] = d.n;
    j["crossings"] = nlohmann::json::array();
    for (const Crossing& c : d.crossings)
        j["crossings"].push_back({{"over", c.over}, {"under_in", c.under_in}, {"under_out", c.under_out}});
    return j;
}

namespace {

struct UnionFind {
    std::vector<std::size_t> parent;

    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }

    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

KnotDiagram pretzel_diagram(const std::vector<long>& twists) {
    const std::size_t N = twists.size();
    if (N < 2) throw std::invalid_argument("pretzel_diagram: need at least 2 tassels");
    for (long t : twists)
        if (t == 0) throw std::invalid_argument("pretzel_diagram: zero twist count");

    // Local strand labels (k, j) for j in [-1 .. n_k]: label j is the
    // strand below crossing j within tassel k (j = -1 and 0 are the two
    // strands entering from the top).  Crossing j of tassel k takes
    // strand j-1 over while j-2 passes under and exits as strand j.
    std::vector<std::size_t> base(N + 1, 0);
    std::vector<std::size_t> n(N);
    for (std::size_t k = 0; k < N; ++k) {
        n[k] = static_cast<std::size_t>(twists[k] < 0 ? -twists[k] : twists[k]);
        base[k + 1] = base[k] + n[k] + 2;
    }
    const auto label = [&](std::size_t k, long j) {
        return base[k] + static_cast<std::size_t>(j + 1);
    };

    UnionFind uf(base[N]);
    for (std::size_t k = 0; k < N; ++k) {
        const std::size_t next = (k + 1) % N;
        uf.unite(label(k, 0), label(next, -1));
        uf.unite(label(k, static_cast<long>(n[k])), label(next, static_cast<long>(n[next]) - 1));
    }

    std::map<std::size_t, std::size_t> arc_id;
    const auto arc = [&](std::size_t k, long j) {
        const std::size_t root = uf.find(label(k, j));
        auto [it, inserted] = arc_id.emplace(root, arc_id.size());
        return it->second;
    };

    // Raw crossings carry the over arc plus the two under-slot arcs
    // (above and below within the tassel); which slot is the incoming
    // arc depends on the direction the strand traverses the tassel, so
    // the roles are fixed afterwards by walking each component.
    struct RawCrossing {
        std::size_t over, slot[2];
    };
    std::vector<RawCrossing> raw;
    for (std::size_t k = 0; k < N; ++k)
        for (long j = 1; j <= static_cast<long>(n[k]); ++j)
            raw.push_back({arc(k, j - 1), {arc(k, j - 2), arc(k, j)}});

    const std::size_t arcs = arc_id.size();
    // occurrences[a]: the (crossing, slot) pairs where arc a dives under
    std::vector<std::vector<std::pair<std::size_t, int>>> occ(arcs);
    for (std::size_t c = 0; c < raw.size(); ++c) {
        occ[raw[c].slot[0]].push_back({c, 0});
        occ[raw[c].slot[1]].push_back({c, 1});
    }
    for (std::size_t a = 0; a < arcs; ++a)
        if (occ[a].size() != 2)
            throw std::logic_error("pretzel_diagram: inconsistent strand gluing");

    KnotDiagram d;
    d.n = arcs;
    d.crossings.resize(raw.size());
    std::vector<bool> visited(raw.size(), false);
    for (std::size_t start = 0; start < raw.size(); ++start) {
        if (visited[start]) continue;
        std::size_t c = start;
        int in_slot = 0;
        while (!visited[c]) {
            visited[c] = true;
            const int out_slot = 1 - in_slot;
            const std::size_t out_arc = raw[c].slot[out_slot];
            d.crossings[c] = {raw[c].over, raw[c].slot[in_slot], out_arc};
            // continue at the other underpass of the outgoing arc
            const auto& pair0 = occ[out_arc][0];
            const auto& next = (pair0.first == c && pair0.second == out_slot) ? occ[out_arc][1]
                                                                             : pair0;
            c = next.first;
            in_slot = next.second;
        }
    }

    // relabel so that arc i emerges from crossing i
    std::vector<std::size_t> stem(arcs);
    for (std::size_t c = 0; c < d.crossings.size(); ++c) stem[d.crossings[c].under_out] = c;
    for (Crossing& c : d.crossings) {
        c.over = stem[c.over];
        c.under_in = stem[c.under_in];
        c.under_out = stem[c.under_out];
    }
    validate(d);
    return d;
}

KnotDiagram reidemeister_one_insert(const KnotDiagram& d, std::size_t arc) {
    validate(d);
    if (arc >= d.n) throw std::invalid_argument("reidemeister_one_insert: arc out of range");
    KnotDiagram r = d;
    const std::size_t fresh = r.n++;
    // The kink splits the tail of `arc`; whatever used to consume `arc`
    // now consumes the fresh arc instead.
    for (Crossing& c : r.crossings)
        if (c.under_in == arc) c.under_in = fresh;
    r.crossings.push_back({fresh, arc, fresh});
    validate(r);
    return r;
}

KnotDiagram reidemeister_two_insert(const KnotDiagram& d, std::size_t arc, std::size_t over) {
    validate(d);
    if (arc >= d.n || over >= d.n)
        throw std::invalid_argument("reidemeister_two_insert: arc out of range");
    KnotDiagram r = d;
    const std::size_t mid = r.n++;
    const std::size_t tail = r.n++;
    for (Crossing& c : r.crossings)
        if (c.under_in == arc) c.under_in = tail;
    r.crossings.push_back({over, arc, mid});
    r.crossings.push_back({over, mid, tail});
    validate(r);
    return r;
}

}  // namespace knot
