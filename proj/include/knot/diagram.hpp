#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace knot {

struct Crossing {
    std::size_t over = 0;
    std::size_t under_in = 0;
    std::size_t under_out = 0;

    bool operator==(const Crossing&) const = default;
};

// A knot diagram given combinatorially: n arcs labelled 0..n-1 and one
// crossing per arc end.  For a classical knot diagram the number of
// crossings equals the number of arcs.
struct KnotDiagram {
    std::size_t n = 0;
    std::vector<Crossing> crossings;

    bool operator==(const KnotDiagram&) const = default;
};

// Colors emerging from the crossings of an n-twist whose incoming
// strands carry a and b: the i-th is b + i*(b - a).
std::vector<long> twist_propagate(long a, long b, std::size_t n);

// Throws std::invalid_argument when arc labels are out of range or the
// under-arc structure is inconsistent (each arc must end exactly once,
// i.e. be some crossing's under_in, and start exactly once).
void validate(const KnotDiagram& d);

KnotDiagram diagram_from_json(const nlohmann::json& j);
nlohmann::json diagram_to_json(const KnotDiagram& d);

// The standard diagram of the pretzel link P(n1,...,nN); requires every
// n_k nonzero.  Arcs are relabelled so that arc i is crossing i's
// under_out.
KnotDiagram pretzel_diagram(const std::vector<long>& twists);

// Insert a kink (Reidemeister I) at the end of arc `arc`.  Returns the
// new diagram with one extra arc and crossing.
KnotDiagram reidemeister_one_insert(const KnotDiagram& d, std::size_t arc);

// Slide arc `arc` under arc `over` and back (Reidemeister II).  Returns
// the new diagram with two extra arcs and crossings.
KnotDiagram reidemeister_two_insert(const KnotDiagram& d, std::size_t arc, std::size_t over);

}  // namespace knot
