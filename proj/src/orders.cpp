#include "mapforge/orders.hpp"

#include <algorithm>

#include "mapforge/errors.hpp"

namespace mapforge {

int VertexOrderBlock::slot_of(Dart d) const {
    for (int k = 1; k <= size; ++k)
        if (slot_darts[static_cast<std::size_t>(k - 1)] == d) return k;
    return 0;
}

SurfaceOrderDescriptor build_surface_order(const Constellation& c) {
    ValidationReport report = validate(c);
    if (!report.ok() || c.mode != MapMode::map)
        throw InvalidConstellationError("surface order requires a valid map");

    SurfaceOrderDescriptor d;
    std::vector<int> block_of(static_cast<std::size_t>(c.n_darts + 1), 0);
    std::vector<int> slot_of(static_cast<std::size_t>(c.n_darts + 1), 0);
    int id = 0;
    for (const auto& cyc : c.sigma.cycles()) {
        VertexOrderBlock block;
        block.cycle_id = ++id;
        block.size = static_cast<int>(cyc.size());
        block.slot_darts = cyc;  // cycles() already rotates each cycle to its minimum
        for (int k = 1; k <= block.size; ++k) {
            block_of[static_cast<std::size_t>(cyc[static_cast<std::size_t>(k - 1)])] = id;
            slot_of[static_cast<std::size_t>(cyc[static_cast<std::size_t>(k - 1)])] = k;
        }
        d.blocks.push_back(std::move(block));
    }

    EdgeTable table(c);
    for (const Edge& e : table.edges()) {
        Gluing g;
        g.edge_id = e.id;
        g.a = {block_of[static_cast<std::size_t>(e.d1)], slot_of[static_cast<std::size_t>(e.d1)]};
        g.b = {block_of[static_cast<std::size_t>(e.d2)], slot_of[static_cast<std::size_t>(e.d2)]};
        d.gluings.push_back(g);
    }

    d.center_rank = static_cast<int>(d.blocks.size());
    for (const auto& b : d.blocks) d.normalization_type.push_back(b.size);
    std::sort(d.normalization_type.begin(), d.normalization_type.end(), std::greater<>());
    return d;
}

std::vector<OrderSymbol> projective_column(const VertexOrderBlock& block, int k) {
    if (k < 1 || k > block.size) throw SlotOutOfRangeError(k, block.size);
    std::vector<OrderSymbol> col(static_cast<std::size_t>(block.size), OrderSymbol::R);
    for (int r = 1; r < k; ++r) col[static_cast<std::size_t>(r - 1)] = OrderSymbol::m;
    return col;
}

SlotStep apply_sigma_companion(const VertexOrderBlock& block, int k) {
    if (k < 1 || k > block.size) throw SlotOutOfRangeError(k, block.size);
    if (k == block.size) return {1, true};
    return {k + 1, false};
}

SigmaCompanion sigma_companion(const VertexOrderBlock& block) {
    return {block.cycle_id, block.size};
}

DiagramFormat diagram_format_from_string(const std::string& name) {
    if (name == "json") return DiagramFormat::json;
    if (name == "text") return DiagramFormat::text;
    if (name == "dot") return DiagramFormat::dot;
    throw UnsupportedFormatError(name);
}

nlohmann::json surface_order_to_json(const SurfaceOrderDescriptor& d) {
    nlohmann::json j;
    j["blocks"] = nlohmann::json::array();
    for (const auto& b : d.blocks)
        j["blocks"].push_back({{"id", b.cycle_id}, {"size", b.size}, {"slot_darts", b.slot_darts}});
    j["gluings"] = nlohmann::json::array();
    for (const auto& g : d.gluings)
        j["gluings"].push_back({{"edge", g.edge_id},
                                {"endpoints",
                                 {{g.a.block, g.a.slot}, {g.b.block, g.b.slot}}}});
    j["center_rank"] = d.center_rank;
    j["normalization_type"] = d.normalization_type;
    return j;
}

namespace {

std::string text_diagram(const SurfaceOrderDescriptor& d) {
    std::string out;
    for (const auto& b : d.blocks) {
        out += "block " + std::to_string(b.cycle_id) + ": size " + std::to_string(b.size) +
               ", darts (";
        for (int k = 1; k <= b.size; ++k) {
            if (k > 1) out += ",";
            out += std::to_string(b.slot_darts[static_cast<std::size_t>(k - 1)]);
        }
        out += ")\n";
        for (int r = 1; r <= b.size; ++r) {
            out += "  [";
            for (int c = 1; c <= b.size; ++c)
                out += b.entry(r, c) == OrderSymbol::R ? " R" : " m";
            out += " ]\n";
        }
    }
    out += "gluings:\n";
    for (const auto& g : d.gluings)
        out += "  edge " + std::to_string(g.edge_id) + ": (block " + std::to_string(g.a.block) +
               ", slot " + std::to_string(g.a.slot) + ") ~ (block " + std::to_string(g.b.block) +
               ", slot " + std::to_string(g.b.slot) + ")\n";
    out += "center rank: " + std::to_string(d.center_rank) + "\n";
    return out;
}

std::string dot_diagram(const SurfaceOrderDescriptor& d) {
    std::string out = "graph surface_order {\n";
    for (const auto& b : d.blocks) {
        out += "  subgraph cluster_" + std::to_string(b.cycle_id) + " {\n";
        out += "    label=\"block " + std::to_string(b.cycle_id) + "\";\n";
        for (int k = 1; k <= b.size; ++k)
            out += "    s" + std::to_string(b.cycle_id) + "_" + std::to_string(k) +
                   " [label=\"dart " +
                   std::to_string(b.slot_darts[static_cast<std::size_t>(k - 1)]) + "\"];\n";
        out += "  }\n";
    }
    for (const auto& g : d.gluings)
        out += "  s" + std::to_string(g.a.block) + "_" + std::to_string(g.a.slot) + " -- s" +
               std::to_string(g.b.block) + "_" + std::to_string(g.b.slot) + " [label=\"e" +
               std::to_string(g.edge_id) + "\"];\n";
    out += "}\n";
    return out;
}

}  // namespace

std::string export_gluing_diagram(const SurfaceOrderDescriptor& d, DiagramFormat format) {
    switch (format) {
        case DiagramFormat::json: return surface_order_to_json(d).dump(2) + "\n";
        case DiagramFormat::text: return text_diagram(d);
        case DiagramFormat::dot: return dot_diagram(d);
    }
    throw UnsupportedFormatError("unknown");
}

}  // namespace mapforge
