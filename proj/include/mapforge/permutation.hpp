#pragma once

#include <compare>
#include <string>
#include <vector>

namespace mapforge {

/// A dart (half-edge) label. Darts are 1-based everywhere in the public API.
using Dart = int;

/// A bijection of {1..n}, stored as its image sequence. Permutations act on
/// the left: p(d) is the image of dart d, and compose(p, q) applies q first.
class Permutation {
public:
    Permutation() = default;

    /// Identity on {1..degree}.
    explicit Permutation(int degree);

    /// Builds from a 1-based image sequence; rejects non-bijections.
    static Permutation from_images(std::vector<Dart> images);

    /// Builds from disjoint cycles over {1..degree}; omitted darts are fixed.
    static Permutation from_cycles(int degree, const std::vector<std::vector<Dart>>& cycles);

    int degree() const { return static_cast<int>(img_.size()); }

    Dart operator()(Dart d) const { return img_[static_cast<std::size_t>(d - 1)]; }

    Permutation inverse() const;

    bool is_identity() const;

    /// True when every cycle is a 2-cycle (no fixed points).
    bool is_fixed_point_free_involution() const;

    /// Disjoint cycle decomposition, fixed points included. Each cycle starts
    /// at its minimum and the cycles are sorted by that minimum, so the
    /// result is canonical and diffable.
    std::vector<std::vector<Dart>> cycles() const;

    /// Weakly decreasing cycle lengths (a partition of the degree).
    std::vector<int> cycle_type() const;

    int cycle_count() const;

    /// The cycle through d, starting at d.
    std::vector<Dart> orbit(Dart d) const;
    int orbit_size(Dart d) const;

    const std::vector<Dart>& images() const { return img_; }

    /// "(1,2,3)(4,5,6)" with fixed points written as 1-cycles.
    std::string to_cycle_string() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend std::strong_ordering operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<Dart> img_;
};

/// Left-action composition: result(d) = p(q(d)). Throws DegreeMismatchError.
Permutation compose(const Permutation& p, const Permutation& q);

/// Relabeling: g ∘ p ∘ g⁻¹. Throws DegreeMismatchError.
Permutation conjugated(const Permutation& p, const Permutation& g);

}  // namespace mapforge
