#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "mapforge/constellation.hpp"

namespace mapforge {

struct QuiverVertex {
    int id = 0;   // edge id of the underlying map
    Dart d1 = 0;  // dart pair of the edge, d1 < d2
    Dart d2 = 0;
};

struct QuiverArrow {
    Dart dart = 0;  // arrows are identified with darts
    int tail = 0;   // vertex ids
    int head = 0;
};

/// The directed medial quiver of a map: one vertex per edge, one arrow per
/// dart d going edge(d) → edge(σ(d)), bound by the length-2 zero relations
/// (d, α(σ(d))). The relation list is the generator set of the gentle
/// ideal; successor maps are derived from it.
struct MedialQuiver {
    std::vector<QuiverVertex> vertices;
    std::vector<QuiverArrow> arrows;                // indexed by dart - 1
    std::vector<std::pair<Dart, Dart>> relations;   // (first arrow, then second) is zero

    int arrow_count() const { return static_cast<int>(arrows.size()); }
    int vertex_count() const { return static_cast<int>(vertices.size()); }

    const QuiverArrow& arrow(Dart d) const { return arrows[static_cast<std::size_t>(d - 1)]; }

    /// The unique zero continuation of d. Gentle quivers only.
    Dart relation_successor(Dart d) const;

    /// The unique nonzero continuation of d (the other arrow out of head(d)).
    /// Gentle quivers only.
    Dart sigma_successor(Dart d) const;
};

/// Builds the medial quiver of a valid map-mode constellation.
MedialQuiver build_medial_quiver(const Constellation& c);

/// Assembles a quiver from abstract data: arrows listed as (tail, head)
/// vertex-id pairs get synthesized darts 1.. in input order, and relations
/// are (first, second) dart pairs. Used when no constellation is around.
MedialQuiver quiver_from_abstract(int n_vertices,
                                  const std::vector<std::pair<int, int>>& arrows,
                                  const std::vector<std::pair<Dart, Dart>>& relations);

struct GentleReport {
    struct Entry {
        int condition;  // 1..4 of the gentle axioms, 0 for connectivity
        std::string detail;
    };
    std::vector<Entry> violations;
    bool ok() const { return violations.empty(); }
};

/// Checks the gentle axioms: every vertex has in- and out-degree exactly 2;
/// every arrow has exactly one zero and one nonzero continuation and is
/// itself the zero/nonzero continuation of exactly one arrow; relations have
/// length 2 (structural); the underlying quiver is connected.
GentleReport check_gentle(const MedialQuiver& q);

struct ArrowPartitions {
    std::vector<std::vector<Dart>> sigma_cycles;  // orbits of sigma_successor
    std::vector<std::vector<Dart>> phi_cycles;    // orbits of relation_successor
};

/// Partitions the arrows into nonzero cycles and relation cycles. The cycle
/// length multisets equal the σ and φ cycle types of the source
/// constellation. Requires a gentle quiver.
ArrowPartitions arrow_partitions(const MedialQuiver& q);

/// Inverts the construction: σ from nonzero continuations, α from the dart
/// pair at each vertex, φ completed. Throws NotGentleError when check_gentle
/// reports violations. Round-trips with build_medial_quiver up to
/// simultaneous conjugacy (exactly, when darts are carried).
Constellation quiver_to_constellation(const MedialQuiver& q);

/// Deterministic DOT digraph; arrows in the same relation cycle share a
/// style attribute.
std::string export_dot(const MedialQuiver& q);

/// JSON format: vertices (edge id → dart pair), arrows (dart → {tail,
/// head}), relations (list of dart pairs).
nlohmann::json quiver_to_json(const MedialQuiver& q);
MedialQuiver quiver_from_json(const nlohmann::json& j);

}  // namespace mapforge
