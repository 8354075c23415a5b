#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mapforge/permutation.hpp"

namespace mapforge {

enum class MapMode { map, hypermap };

/// A validated-on-demand triple [σ, α, φ] acting on {1..n_darts}. In map
/// mode α is a fixed-point-free involution and the triple describes a graph
/// cellularly embedded in a closed orientable surface; hypermap mode allows
/// arbitrary α. The composite law reads "apply σ, then α, then φ is the
/// identity": φ(α(σ(d))) = d for every dart d, equivalently φ = σ⁻¹∘α when
/// α is an involution.
struct Constellation {
    int n_darts = 0;
    Permutation sigma;
    Permutation alpha;
    Permutation phi;
    MapMode mode = MapMode::map;
};

/// The unique φ making (σ, α, φ) satisfy the composite law:
/// φ(d) = σ⁻¹(α(d)). Throws DegreeMismatchError.
Permutation complete_phi(const Permutation& sigma, const Permutation& alpha);

/// Assembles a constellation, completing φ when absent. No validation.
Constellation make_constellation(Permutation sigma, Permutation alpha,
                                 std::optional<Permutation> phi = std::nullopt,
                                 MapMode mode = MapMode::map);

enum class Violation {
    degree_mismatch,
    not_transitive,
    product_not_identity,
    alpha_not_involution,
};

std::string violation_name(Violation v);

struct ValidationReport {
    struct Entry {
        Violation code;
        std::string detail;
    };
    std::vector<Entry> violations;
    bool ok() const { return violations.empty(); }
};

/// Checks every constellation invariant for the declared mode.
ValidationReport validate(const Constellation& c);

/// Throws InvalidConstellationError when validate(c) reports violations.
void require_valid(const Constellation& c);

struct EulerData {
    int chi;
    int genus;
};

/// χ = #cycles(φ) − #cycles(α) + #cycles(σ) and genus = (2 − χ)/2.
/// Map mode only (HypermapModeError otherwise); a validated map always has
/// even χ and genus ≥ 0.
EulerData euler_and_genus(const Constellation& c);

/// One polygon boundary word per φ-cycle, in canonical cycle order. The
/// multiset of word lengths is the φ cycle type.
std::vector<std::vector<Dart>> face_words(const Constellation& c);

/// An α-2-cycle. Edge ids are 1-based, assigned in increasing order of the
/// smaller dart.
struct Edge {
    int id = 0;
    Dart d1 = 0;  // d1 < d2
    Dart d2 = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Edge list of a map together with the dart → edge lookup.
class EdgeTable {
public:
    /// Map mode with α a fixed-point-free involution required.
    explicit EdgeTable(const Constellation& c);

    const std::vector<Edge>& edges() const { return edges_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const Edge& edge_of(Dart d) const { return edges_[static_cast<std::size_t>(of_[static_cast<std::size_t>(d - 1)])]; }
    const Edge& by_id(int id) const;

    /// Looks up the edge {a, b}; throws UnknownEdgeError when α does not
    /// pair a with b.
    const Edge& by_darts(Dart a, Dart b) const;

private:
    std::vector<Edge> edges_;
    std::vector<int> of_;  // dart-1 -> index into edges_
};

struct Passport {
    int degree = 0;
    std::vector<int> sigma_type;
    std::vector<int> alpha_type;
    std::vector<int> phi_type;
    int genus = 0;
    std::optional<std::uint64_t> monodromy_order;

    friend bool operator==(const Passport&, const Passport&) = default;
};

/// Cycle types plus genus. Hypermap genus is defined through edge
/// subdivision. monodromy_order is left unset; see monodromy_order().
Passport passport(const Constellation& c);

struct MonodromyOrder {
    std::uint64_t order = 0;  // exact when !exceeded, else the limit passed
    bool exceeded = false;
};

inline constexpr std::uint64_t kDefaultGroupLimit = 10'000'000;

/// Exact order of ⟨σ, α⟩ by breadth-first closure over products; reports
/// exceeded once the closure passes `limit` elements.
MonodromyOrder monodromy_order(const Constellation& c, std::uint64_t limit = kDefaultGroupLimit);

/// Relabels darts by g: each of σ, α, φ becomes g∘·∘g⁻¹.
Constellation conjugate(const Constellation& c, const Permutation& g);

struct CanonicalForm {
    Constellation constellation;
    Permutation relabeling;  // canonical = conjugate(input, relabeling)
};

/// Lexicographically least relabeling over all root darts, each root labeled
/// by breadth-first first-visit order under the generator order (σ, α, φ).
/// Two constellations are simultaneously conjugate iff their canonical
/// constellations are identical.
CanonicalForm canonical_form(const Constellation& c);

/// Canonical-form equality.
bool isomorphic(const Constellation& a, const Constellation& b);

/// Subdivides every edge, turning a hypermap into a bipartite map on
/// 2·n_darts darts: black vertices keep the σ-rotations, white vertices get
/// the α-cycles, and the new α pairs each dart with its white copy. Map
/// inputs pass through as maps of the same genus.
Constellation subdivide_hypermap(const Constellation& c);

}  // namespace mapforge
