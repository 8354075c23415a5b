#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "mapforge/constellation.hpp"

namespace mapforge {

/// Symbolic entry of a vertex order pattern: the base ring R or its maximal
/// ideal m.
enum class OrderSymbol { R, m };

/// The lower-triangular hereditary pattern attached to one σ-cycle: an
/// nᵢ×nᵢ matrix with R on and below the diagonal and m above it. Slot k
/// corresponds to the k-th dart of the cycle, stored starting at the
/// cycle's minimal dart.
struct VertexOrderBlock {
    int cycle_id = 0;
    int size = 0;
    std::vector<Dart> slot_darts;

    OrderSymbol entry(int row, int col) const {
        return row >= col ? OrderSymbol::R : OrderSymbol::m;
    }

    /// Slot holding dart d, or 0 when d is not on this cycle.
    int slot_of(Dart d) const;
};

struct GluingEndpoint {
    int block = 0;  // block index, 1-based
    int slot = 0;   // 1..block size
    friend bool operator==(const GluingEndpoint&, const GluingEndpoint&) = default;
};

/// One diagonal identification per edge: the (k,k) entry of one block is
/// glued to the (l,l) entry of another (possibly the same) block.
struct Gluing {
    int edge_id = 0;
    GluingEndpoint a;
    GluingEndpoint b;
};

struct SurfaceOrderDescriptor {
    std::vector<VertexOrderBlock> blocks;
    std::vector<Gluing> gluings;
    int center_rank = 0;                  // one central generator per block
    std::vector<int> normalization_type;  // block sizes, weakly decreasing
};

/// Builds the symbolic surface-order descriptor of a valid map: one
/// triangular block per σ-cycle, one diagonal gluing per edge.
SurfaceOrderDescriptor build_surface_order(const Constellation& c);

/// Column pattern of the k-th indecomposable projective of a block:
/// k−1 leading m entries, R from position k down. Throws SlotOutOfRangeError.
std::vector<OrderSymbol> projective_column(const VertexOrderBlock& block, int k);

struct SlotStep {
    int slot = 0;
    bool twisted = false;  // wrapped around the cycle, picking up an m-twist
};

/// The companion automorphism advances projective columns cyclically:
/// P_{i,k} → P_{i,k+1}, with an m-twist on the wrap back to slot 1.
SlotStep apply_sigma_companion(const VertexOrderBlock& block, int k);

/// Symbolic companion matrix: sub-diagonal 1s, m in the top-right corner.
struct SigmaCompanion {
    int block_id = 0;
    int size = 0;

    enum class Entry { zero, one, ideal };
    Entry entry(int row, int col) const {
        if (row == 1 && col == size) return Entry::ideal;
        if (row == col + 1) return Entry::one;
        return Entry::zero;
    }
};

SigmaCompanion sigma_companion(const VertexOrderBlock& block);

enum class DiagramFormat { json, text, dot };

/// Parses "json" | "text" | "dot"; throws UnsupportedFormatError.
DiagramFormat diagram_format_from_string(const std::string& name);

/// Deterministic serialization of blocks and gluing chords. The DOT form
/// renders blocks as clusters and gluings as chords between slots.
std::string export_gluing_diagram(const SurfaceOrderDescriptor& d, DiagramFormat format);

nlohmann::json surface_order_to_json(const SurfaceOrderDescriptor& d);

}  // namespace mapforge
