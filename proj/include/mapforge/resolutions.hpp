#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "mapforge/constellation.hpp"

namespace mapforge {

/// The m-th term of a resolution: the single projective P(e) at m = 0, and
/// the pair P(edge(φᵐ d₁)) ⊕ P(edge(φᵐ d₂)) for m ≥ 1, with the arm of the
/// smaller dart of e listed first.
struct ResolutionTerm {
    int index = 0;
    std::vector<int> summands;  // edge ids; one at m = 0, two for m ≥ 1

    friend bool operator==(const ResolutionTerm&, const ResolutionTerm&) = default;
};

/// Dart pair labeling the diagonal differential at step m ≥ 1:
/// (φᵐ(d₁), φᵐ(d₂)).
struct Differential {
    int index = 0;
    Dart d1 = 0;
    Dart d2 = 0;

    friend bool operator==(const Differential&, const Differential&) = default;
};

/// Periodic projective resolution of the simple module at an edge. Terms are
/// materialized up to max(horizon, period) so the period is always certified
/// by explicit repetition in the stream, never only by the lcm formula.
struct ProjectiveResolution {
    Edge simple;
    int period = 0;  // lcm of the φ-orbit sizes of the two darts of `simple`
    std::vector<ResolutionTerm> terms;       // m = 0 .. horizon
    std::vector<Differential> differentials; // m = 1 .. horizon
};

/// The two uniserial radical arms of P(e): the σ-successors of e's darts.
struct UniserialPair {
    Dart first = 0;   // σ(d₁)
    Dart second = 0;  // σ(d₂)
};

UniserialPair radical_decomposition(const Constellation& c, const Edge& e);

/// The m-th syzygy: uniserials at (φᵐ(d₁), φᵐ(d₂)), m ≥ 1.
struct Syzygy {
    int index = 0;
    Dart d1 = 0;
    Dart d2 = 0;
};

Syzygy syzygy(const Constellation& c, const Edge& e, int m);

ProjectiveResolution resolve_simple(const Constellation& c, const Edge& e, int horizon);

/// Resolutions of every simple, in edge-id order.
std::vector<ProjectiveResolution> resolve_all_simples(const Constellation& c, int horizon);

/// Rebuilds the constellation from resolution data alone: φ from the two
/// differential dart streams, α from the edge pairings, σ = α∘φ⁻¹. The
/// result is the source map up to relabeling; extra terms beyond one period
/// are validated against periodicity. Throws InconsistentDataError when the
/// streams disagree, violate periodicity, or the σ cycle type does not
/// match normalization_type.
Constellation reconstruct_constellation(const std::vector<ProjectiveResolution>& resolutions,
                                        const std::vector<int>& normalization_type);

/// Two-column table in the style used throughout: one row per m.
std::string resolution_to_text(const ProjectiveResolution& r);

nlohmann::json resolution_to_json(const ProjectiveResolution& r);
ProjectiveResolution resolution_from_json(const nlohmann::json& j);

/// Bundle of all simple resolutions plus the normalization type, the full
/// input of reconstruct_constellation.
nlohmann::json resolution_bundle_to_json(const std::vector<ProjectiveResolution>& rs,
                                         const std::vector<int>& normalization_type);
std::pair<std::vector<ProjectiveResolution>, std::vector<int>> resolution_bundle_from_json(
    const nlohmann::json& j);

}  // namespace mapforge
