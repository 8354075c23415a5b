#pragma once

// Independent brute-force oracles. Everything here recomputes results from
// first principles and deliberately avoids the library code paths it is used
// to check.

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "mapforge/constellation.hpp"
#include "mapforge/permutation.hpp"

namespace oracle {

using mapforge::Constellation;
using mapforge::Dart;
using mapforge::Permutation;

// Genus by explicit polygon-boundary tracing: faces are the orbits of
// d -> alpha(sigma(d)), vertices the orbits of sigma, edges n/2. Does not
// touch phi, complete_phi or euler_and_genus.
inline int face_trace_genus(const Constellation& c) {
    const int n = c.n_darts;
    auto orbit_count = [&](auto&& step) {
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        int count = 0;
        for (Dart d = 1; d <= n; ++d) {
            if (seen[static_cast<std::size_t>(d - 1)]) continue;
            ++count;
            Dart x = d;
            while (!seen[static_cast<std::size_t>(x - 1)]) {
                seen[static_cast<std::size_t>(x - 1)] = 1;
                x = step(x);
            }
        }
        return count;
    };
    const int faces = orbit_count([&](Dart d) { return c.alpha(c.sigma(d)); });
    const int vertices = orbit_count([&](Dart d) { return c.sigma(d); });
    const int chi = faces - n / 2 + vertices;
    return (2 - chi) / 2;
}

// Plain breadth-first closure over products of the generators. Returns
// nullopt once the closure grows past `limit`.
inline std::optional<std::uint64_t> bfs_group_order(const std::vector<Permutation>& gens,
                                                    std::uint64_t limit = 1u << 22) {
    if (gens.empty()) return std::nullopt;
    const int n = gens.front().degree();
    auto key = [n](const Permutation& p) {
        std::string k;
        for (Dart d = 1; d <= n; ++d) k += std::to_string(p(d)) + ",";
        return k;
    };
    std::unordered_set<std::string> seen;
    std::vector<Permutation> frontier{Permutation(n)};
    seen.insert(key(frontier.front()));
    while (!frontier.empty()) {
        std::vector<Permutation> next;
        for (const auto& g : frontier) {
            for (const auto& h : gens) {
                Permutation prod = mapforge::compose(h, g);
                if (seen.insert(key(prod)).second) {
                    if (seen.size() > limit) return std::nullopt;
                    next.push_back(std::move(prod));
                }
            }
        }
        frontier = std::move(next);
    }
    return seen.size();
}

// Simultaneous-conjugacy test by exhausting all n! relabelings. Usable for
// n <= 8.
inline bool conjugate_by_some_relabeling(const Constellation& a, const Constellation& b) {
    if (a.n_darts != b.n_darts) return false;
    const int n = a.n_darts;
    std::vector<Dart> img(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = i + 1;
    do {
        Permutation g = Permutation::from_images(img);
        Constellation ca = mapforge::conjugate(a, g);
        if (ca.sigma == b.sigma && ca.alpha == b.alpha && ca.phi == b.phi) return true;
    } while (std::next_permutation(img.begin(), img.end()));
    return false;
}

// One materialized resolution step: summand edges plus differential darts.
struct ResolutionStep {
    std::pair<Dart, Dart> edge1;
    std::pair<Dart, Dart> edge2;
    Dart diff1;
    Dart diff2;
    friend bool operator==(const ResolutionStep&, const ResolutionStep&) = default;
};

// Materializes the stream for m = 1..steps directly from (phi, alpha).
inline std::vector<ResolutionStep> materialize_stream(const Constellation& c, Dart d1, Dart d2,
                                                      int steps) {
    std::vector<ResolutionStep> out;
    Dart x1 = d1, x2 = d2;
    auto edge = [&](Dart d) {
        Dart e = c.alpha(d);
        return std::make_pair(std::min(d, e), std::max(d, e));
    };
    for (int m = 1; m <= steps; ++m) {
        x1 = c.phi(x1);
        x2 = c.phi(x2);
        out.push_back({edge(x1), edge(x2), x1, x2});
    }
    return out;
}

// Smallest p >= 1 with stream[m + p] == stream[m] for every m in range.
// The stream must cover at least two candidate periods.
inline int first_repeat_period(const std::vector<ResolutionStep>& stream) {
    const int len = static_cast<int>(stream.size());
    for (int p = 1; p <= len / 2; ++p) {
        bool repeats = true;
        for (int m = 0; m + p < len; ++m) {
            if (!(stream[static_cast<std::size_t>(m)] == stream[static_cast<std::size_t>(m + p)])) {
                repeats = false;
                break;
            }
        }
        if (repeats) return p;
    }
    return len;
}

}  // namespace oracle
