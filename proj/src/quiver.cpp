#include "mapforge/quiver.hpp"

#include <algorithm>
#include <map>

#include "mapforge/errors.hpp"

namespace mapforge {

namespace {

// out-arrows per vertex id, in dart order
std::vector<std::vector<Dart>> out_arrows(const MedialQuiver& q) {
    std::vector<std::vector<Dart>> out(static_cast<std::size_t>(q.vertex_count() + 1));
    for (const QuiverArrow& a : q.arrows) {
        if (a.tail >= 1 && a.tail <= q.vertex_count())
            out[static_cast<std::size_t>(a.tail)].push_back(a.dart);
    }
    return out;
}

std::vector<std::vector<Dart>> in_arrows(const MedialQuiver& q) {
    std::vector<std::vector<Dart>> in(static_cast<std::size_t>(q.vertex_count() + 1));
    for (const QuiverArrow& a : q.arrows) {
        if (a.head >= 1 && a.head <= q.vertex_count())
            in[static_cast<std::size_t>(a.head)].push_back(a.dart);
    }
    return in;
}

}  // namespace

Dart MedialQuiver::relation_successor(Dart d) const {
    for (const auto& [first, second] : relations)
        if (first == d) return second;
    throw NotGentleError("arrow " + std::to_string(d) + " has no zero continuation");
}

Dart MedialQuiver::sigma_successor(Dart d) const {
    const Dart zero = relation_successor(d);
    const int at = arrow(d).head;
    for (const QuiverArrow& b : arrows)
        if (b.tail == at && b.dart != zero) return b.dart;
    throw NotGentleError("arrow " + std::to_string(d) + " has no nonzero continuation");
}

MedialQuiver build_medial_quiver(const Constellation& c) {
    ValidationReport report = validate(c);
    if (!report.ok() || c.mode != MapMode::map)
        throw InvalidConstellationError("medial quiver requires a valid map");
    EdgeTable table(c);
    MedialQuiver q;
    for (const Edge& e : table.edges()) q.vertices.push_back({e.id, e.d1, e.d2});
    for (Dart d = 1; d <= c.n_darts; ++d) {
        q.arrows.push_back({d, table.edge_of(d).id, table.edge_of(c.sigma(d)).id});
        q.relations.emplace_back(d, c.alpha(c.sigma(d)));
    }
    return q;
}

MedialQuiver quiver_from_abstract(int n_vertices,
                                  const std::vector<std::pair<int, int>>& arrows,
                                  const std::vector<std::pair<Dart, Dart>>& relations) {
    MedialQuiver q;
    for (int v = 1; v <= n_vertices; ++v) q.vertices.push_back({v, 0, 0});
    Dart d = 1;
    for (const auto& [tail, head] : arrows) q.arrows.push_back({d++, tail, head});
    q.relations = relations;
    // synthesized darts: pair the two out-arrows at each vertex
    auto out = out_arrows(q);
    for (auto& vert : q.vertices) {
        const auto& darts = out[static_cast<std::size_t>(vert.id)];
        if (darts.size() == 2) {
            vert.d1 = std::min(darts[0], darts[1]);
            vert.d2 = std::max(darts[0], darts[1]);
        }
    }
    return q;
}

GentleReport check_gentle(const MedialQuiver& q) {
    GentleReport report;
    auto add = [&](int cond, std::string detail) {
        report.violations.push_back({cond, std::move(detail)});
    };

    const int nv = q.vertex_count();
    const int na = q.arrow_count();
    for (const QuiverArrow& a : q.arrows) {
        if (a.tail < 1 || a.tail > nv || a.head < 1 || a.head > nv)
            add(1, "arrow " + std::to_string(a.dart) + " has an endpoint outside the vertex set");
    }
    if (!report.ok()) return report;

    auto out = out_arrows(q);
    auto in = in_arrows(q);
    for (const QuiverVertex& v : q.vertices) {
        if (out[static_cast<std::size_t>(v.id)].size() != 2)
            add(1, "vertex " + std::to_string(v.id) + " has out-degree " +
                       std::to_string(out[static_cast<std::size_t>(v.id)].size()));
        if (in[static_cast<std::size_t>(v.id)].size() != 2)
            add(1, "vertex " + std::to_string(v.id) + " has in-degree " +
                       std::to_string(in[static_cast<std::size_t>(v.id)].size()));
    }

    // each arrow: exactly one zero continuation, and is the zero
    // continuation of exactly one arrow
    std::vector<int> zero_out(static_cast<std::size_t>(na + 1), 0);
    std::vector<int> zero_in(static_cast<std::size_t>(na + 1), 0);
    for (const auto& [first, second] : q.relations) {
        if (first < 1 || first > na || second < 1 || second > na) {
            add(4, "relation refers to a missing arrow");
            continue;
        }
        if (q.arrow(second).tail != q.arrow(first).head)
            add(4, "relation (" + std::to_string(first) + "," + std::to_string(second) +
                       ") is not a composable path");
        ++zero_out[static_cast<std::size_t>(first)];
        ++zero_in[static_cast<std::size_t>(second)];
    }
    for (const QuiverArrow& a : q.arrows) {
        if (zero_out[static_cast<std::size_t>(a.dart)] != 1)
            add(2, "arrow " + std::to_string(a.dart) + " has " +
                       std::to_string(zero_out[static_cast<std::size_t>(a.dart)]) +
                       " zero continuations");
        if (zero_in[static_cast<std::size_t>(a.dart)] != 1)
            add(2, "arrow " + std::to_string(a.dart) + " is the zero continuation of " +
                       std::to_string(zero_in[static_cast<std::size_t>(a.dart)]) + " arrows");
    }
    if (!report.ok()) return report;

    // nonzero continuations: the other out-arrow at the head must differ
    // from the zero one, both ways around
    std::vector<int> nonzero_in(static_cast<std::size_t>(na + 1), 0);
    for (const QuiverArrow& a : q.arrows) {
        const Dart zero = q.relation_successor(a.dart);
        const auto& candidates = out[static_cast<std::size_t>(a.head)];
        int nonzero_count = 0;
        Dart nonzero = 0;
        for (Dart b : candidates)
            if (b != zero) {
                ++nonzero_count;
                nonzero = b;
            }
        if (nonzero_count != 1)
            add(3, "arrow " + std::to_string(a.dart) + " has " + std::to_string(nonzero_count) +
                       " nonzero continuations");
        else
            ++nonzero_in[static_cast<std::size_t>(nonzero)];
    }
    for (const QuiverArrow& a : q.arrows)
        if (report.ok() && nonzero_in[static_cast<std::size_t>(a.dart)] != 1)
            add(3, "arrow " + std::to_string(a.dart) + " is the nonzero continuation of " +
                       std::to_string(nonzero_in[static_cast<std::size_t>(a.dart)]) + " arrows");

    // connectivity of the underlying graph
    if (nv > 0) {
        std::vector<char> seen(static_cast<std::size_t>(nv + 1), 0);
        std::vector<int> stack{q.vertices.front().id};
        seen[static_cast<std::size_t>(q.vertices.front().id)] = 1;
        int count = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (const QuiverArrow& a : q.arrows) {
                int other = a.tail == v ? a.head : (a.head == v ? a.tail : 0);
                if (other && !seen[static_cast<std::size_t>(other)]) {
                    seen[static_cast<std::size_t>(other)] = 1;
                    ++count;
                    stack.push_back(other);
                }
            }
        }
        if (count != nv) add(0, "quiver is not connected");
    }
    return report;
}

namespace {

std::vector<std::vector<Dart>> successor_orbits(const MedialQuiver& q, bool nonzero) {
    std::vector<std::vector<Dart>> out;
    std::vector<char> seen(static_cast<std::size_t>(q.arrow_count() + 1), 0);
    for (Dart d = 1; d <= q.arrow_count(); ++d) {
        if (seen[static_cast<std::size_t>(d)]) continue;
        std::vector<Dart> cyc;
        Dart x = d;
        while (!seen[static_cast<std::size_t>(x)]) {
            seen[static_cast<std::size_t>(x)] = 1;
            cyc.push_back(x);
            x = nonzero ? q.sigma_successor(x) : q.relation_successor(x);
        }
        out.push_back(std::move(cyc));
    }
    return out;
}

}  // namespace

ArrowPartitions arrow_partitions(const MedialQuiver& q) {
    return {successor_orbits(q, true), successor_orbits(q, false)};
}

Constellation quiver_to_constellation(const MedialQuiver& q) {
    GentleReport report = check_gentle(q);
    if (!report.ok()) {
        std::string msg = "quiver is not gentle:";
        for (const auto& v : report.violations) msg += " [" + v.detail + "]";
        throw NotGentleError(msg);
    }
    const int n = q.arrow_count();
    std::vector<Dart> sigma_img(static_cast<std::size_t>(n));
    for (Dart d = 1; d <= n; ++d)
        sigma_img[static_cast<std::size_t>(d - 1)] = q.sigma_successor(d);
    std::vector<Dart> alpha_img(static_cast<std::size_t>(n), 0);
    auto out = out_arrows(q);
    for (const QuiverVertex& v : q.vertices) {
        const auto& darts = out[static_cast<std::size_t>(v.id)];
        alpha_img[static_cast<std::size_t>(darts[0] - 1)] = darts[1];
        alpha_img[static_cast<std::size_t>(darts[1] - 1)] = darts[0];
    }
    Constellation c = make_constellation(Permutation::from_images(std::move(sigma_img)),
                                         Permutation::from_images(std::move(alpha_img)));
    require_valid(c);
    return c;
}

std::string export_dot(const MedialQuiver& q) {
    static const char* styles[] = {"solid", "dashed", "dotted", "bold"};
    std::vector<int> style_of(static_cast<std::size_t>(q.arrow_count() + 1), 0);
    GentleReport gentle = check_gentle(q);
    if (gentle.ok()) {
        const auto parts = arrow_partitions(q);
        for (std::size_t i = 0; i < parts.phi_cycles.size(); ++i)
            for (Dart d : parts.phi_cycles[i])
                style_of[static_cast<std::size_t>(d)] = static_cast<int>(i % 4);
    }
    std::string dot = "digraph medial {\n";
    for (const QuiverVertex& v : q.vertices) {
        dot += "  v" + std::to_string(v.id) + " [label=\"(" + std::to_string(v.d1) + "," +
               std::to_string(v.d2) + ")\"];\n";
    }
    for (const QuiverArrow& a : q.arrows) {
        dot += "  v" + std::to_string(a.tail) + " -> v" + std::to_string(a.head) +
               " [label=\"" + std::to_string(a.dart) + "\", style=" +
               styles[style_of[static_cast<std::size_t>(a.dart)]] + "];\n";
    }
    dot += "}\n";
    return dot;
}

nlohmann::json quiver_to_json(const MedialQuiver& q) {
    nlohmann::json j;
    nlohmann::json vertices = nlohmann::json::object();
    for (const QuiverVertex& v : q.vertices)
        vertices[std::to_string(v.id)] = {v.d1, v.d2};
    nlohmann::json arrows = nlohmann::json::object();
    for (const QuiverArrow& a : q.arrows)
        arrows[std::to_string(a.dart)] = {{"tail", a.tail}, {"head", a.head}};
    nlohmann::json relations = nlohmann::json::array();
    for (const auto& [first, second] : q.relations) relations.push_back({first, second});
    j["vertices"] = std::move(vertices);
    j["arrows"] = std::move(arrows);
    j["relations"] = std::move(relations);
    return j;
}

MedialQuiver quiver_from_json(const nlohmann::json& j) {
    try {
        MedialQuiver q;
        std::map<int, std::pair<Dart, Dart>> vertex_map;
        for (const auto& [key, val] : j.at("vertices").items())
            vertex_map[std::stoi(key)] = {val.at(0).get<Dart>(), val.at(1).get<Dart>()};
        for (const auto& [id, darts] : vertex_map)
            q.vertices.push_back({id, darts.first, darts.second});
        std::map<Dart, std::pair<int, int>> arrow_map;
        for (const auto& [key, val] : j.at("arrows").items())
            arrow_map[std::stoi(key)] = {val.at("tail").get<int>(), val.at("head").get<int>()};
        for (const auto& [dart, ends] : arrow_map)
            q.arrows.push_back({dart, ends.first, ends.second});
        for (const auto& rel : j.at("relations"))
            q.relations.emplace_back(rel.at(0).get<Dart>(), rel.at(1).get<Dart>());
        // vertex ids and darts must be dense 1..k: both are used as indices
        for (int i = 0; i < q.vertex_count(); ++i)
            if (q.vertices[static_cast<std::size_t>(i)].id != i + 1)
                throw ParseError(1, 1, "vertex ids must be 1..V");
        for (int i = 0; i < q.arrow_count(); ++i)
            if (q.arrows[static_cast<std::size_t>(i)].dart != i + 1)
                throw ParseError(1, 1, "arrow darts must be 1..A");
        return q;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(1, 1, std::string("bad quiver json: ") + e.what());
    }
}

}  // namespace mapforge
