#include "mapforge/resolutions.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <set>

#include "mapforge/errors.hpp"

namespace mapforge {

namespace {

void check_edge(const Constellation& c, const Edge& e) {
    if (e.d1 < 1 || e.d2 < 1 || e.d1 > c.n_darts || e.d2 > c.n_darts ||
        c.alpha(e.d1) != e.d2 || c.alpha(e.d2) != e.d1 || e.d1 >= e.d2)
        throw UnknownEdgeError("(" + std::to_string(e.d1) + "," + std::to_string(e.d2) +
                               ") is not an edge of the map");
}

}  // namespace

UniserialPair radical_decomposition(const Constellation& c, const Edge& e) {
    check_edge(c, e);
    return {c.sigma(e.d1), c.sigma(e.d2)};
}

Syzygy syzygy(const Constellation& c, const Edge& e, int m) {
    check_edge(c, e);
    if (m < 1) throw std::invalid_argument("syzygy index must be >= 1");
    Dart x1 = e.d1, x2 = e.d2;
    for (int i = 0; i < m; ++i) {
        x1 = c.phi(x1);
        x2 = c.phi(x2);
    }
    return {m, x1, x2};
}

ProjectiveResolution resolve_simple(const Constellation& c, const Edge& e, int horizon) {
    check_edge(c, e);
    if (horizon < 1) throw std::invalid_argument("horizon must be >= 1");
    EdgeTable table(c);

    ProjectiveResolution r;
    r.simple = table.by_darts(e.d1, e.d2);
    r.period = std::lcm(c.phi.orbit_size(e.d1), c.phi.orbit_size(e.d2));
    const int steps = std::max(horizon, r.period);

    r.terms.push_back({0, {r.simple.id}});
    Dart x1 = e.d1, x2 = e.d2;
    for (int m = 1; m <= steps; ++m) {
        x1 = c.phi(x1);
        x2 = c.phi(x2);
        r.terms.push_back({m, {table.edge_of(x1).id, table.edge_of(x2).id}});
        r.differentials.push_back({m, x1, x2});
    }
    return r;
}

std::vector<ProjectiveResolution> resolve_all_simples(const Constellation& c, int horizon) {
    EdgeTable table(c);
    std::vector<ProjectiveResolution> out;
    out.reserve(static_cast<std::size_t>(table.edge_count()));
    for (const Edge& e : table.edges()) out.push_back(resolve_simple(c, e, horizon));
    return out;
}

Constellation reconstruct_constellation(const std::vector<ProjectiveResolution>& resolutions,
                                        const std::vector<int>& normalization_type) {
    if (resolutions.empty()) throw InconsistentDataError("no resolutions given");

    // the edge pairings recover alpha and the dart universe
    int n = 0;
    for (const auto& r : resolutions) n = std::max({n, r.simple.d1, r.simple.d2});
    std::vector<Dart> alpha_img(static_cast<std::size_t>(n), 0);
    std::vector<int> edge_id_of(static_cast<std::size_t>(n + 1), 0);
    std::set<int> edge_ids;
    for (const auto& r : resolutions) {
        const Edge& e = r.simple;
        if (e.d1 < 1 || e.d2 < 1 || e.d1 >= e.d2)
            throw InconsistentDataError("malformed simple edge");
        if (!edge_ids.insert(e.id).second)
            throw InconsistentDataError("two resolutions share edge id " + std::to_string(e.id));
        if (alpha_img[static_cast<std::size_t>(e.d1 - 1)] != 0 ||
            alpha_img[static_cast<std::size_t>(e.d2 - 1)] != 0)
            throw InconsistentDataError("dart appears in two simples");
        alpha_img[static_cast<std::size_t>(e.d1 - 1)] = e.d2;
        alpha_img[static_cast<std::size_t>(e.d2 - 1)] = e.d1;
        edge_id_of[static_cast<std::size_t>(e.d1)] = e.id;
        edge_id_of[static_cast<std::size_t>(e.d2)] = e.id;
    }
    for (Dart d = 1; d <= n; ++d)
        if (alpha_img[static_cast<std::size_t>(d - 1)] == 0)
            throw InconsistentDataError("dart " + std::to_string(d) + " not covered by any simple");

    // phi from the first differential of each resolution; later steps and
    // periodicity cross-check the streams
    std::vector<Dart> phi_img(static_cast<std::size_t>(n), 0);
    auto assign_phi = [&](Dart from, Dart to) {
        if (from < 1 || from > n || to < 1 || to > n)
            throw InconsistentDataError("differential dart out of range");
        Dart& cell = phi_img[static_cast<std::size_t>(from - 1)];
        if (cell == 0)
            cell = to;
        else if (cell != to)
            throw InconsistentDataError("differential dart streams disagree on phi(" +
                                        std::to_string(from) + ")");
    };

    for (const auto& r : resolutions) {
        const Edge& e = r.simple;
        if (r.period < 1) throw InconsistentDataError("resolution has no period");
        if (static_cast<int>(r.differentials.size()) < r.period)
            throw InconsistentDataError("resolution horizon is shorter than its period");
        Dart prev1 = e.d1, prev2 = e.d2;
        for (const Differential& diff : r.differentials) {
            assign_phi(prev1, diff.d1);
            assign_phi(prev2, diff.d2);
            prev1 = diff.d1;
            prev2 = diff.d2;
        }
        // terms must name the edges of the differential darts
        if (r.terms.size() != r.differentials.size() + 1 ||
            r.terms.front().summands != std::vector<int>{e.id})
            throw InconsistentDataError("terms do not start at the simple's projective cover");
        for (std::size_t i = 0; i < r.differentials.size(); ++i) {
            const Differential& diff = r.differentials[i];
            std::vector<int> expected{edge_id_of[static_cast<std::size_t>(diff.d1)],
                                      edge_id_of[static_cast<std::size_t>(diff.d2)]};
            if (r.terms[i + 1].summands != expected)
                throw InconsistentDataError("term " + std::to_string(i + 1) +
                                            " disagrees with its differential");
        }
        // extra steps beyond one period must repeat with period r.period
        for (std::size_t i = static_cast<std::size_t>(r.period); i < r.differentials.size(); ++i) {
            const Differential& a = r.differentials[i];
            const Differential& b = r.differentials[i - static_cast<std::size_t>(r.period)];
            if (a.d1 != b.d1 || a.d2 != b.d2)
                throw InconsistentDataError("differential stream breaks periodicity");
        }
    }

    for (Dart d = 1; d <= n; ++d)
        if (phi_img[static_cast<std::size_t>(d - 1)] == 0)
            throw InconsistentDataError("phi(" + std::to_string(d) + ") undetermined");

    Permutation phi;
    Permutation alpha;
    try {
        phi = Permutation::from_images(std::move(phi_img));
        alpha = Permutation::from_images(std::move(alpha_img));
    } catch (const std::invalid_argument& e) {
        throw InconsistentDataError(std::string("recovered maps are not bijections: ") + e.what());
    }
    const Permutation sigma = compose(alpha, phi.inverse());

    std::vector<int> sigma_type = sigma.cycle_type();
    std::vector<int> wanted = normalization_type;
    std::sort(wanted.begin(), wanted.end(), std::greater<>());
    if (sigma_type != wanted)
        throw InconsistentDataError("recovered sigma cycle type does not match normalization");

    Constellation c = make_constellation(sigma, alpha, phi);
    ValidationReport report = validate(c);
    if (!report.ok()) throw InconsistentDataError("recovered constellation is invalid");
    return c;
}

std::string resolution_to_text(const ProjectiveResolution& r) {
    std::string out;
    out += "simple: S(" + std::to_string(r.simple.d1) + "," + std::to_string(r.simple.d2) +
           ")  [edge " + std::to_string(r.simple.id) + "]\n";
    out += "period: " + std::to_string(r.period) + "\n";
    out += "   m | term\n";
    for (std::size_t i = 0; i < r.terms.size(); ++i) {
        const auto& t = r.terms[i];
        char buf[16];
        std::snprintf(buf, sizeof(buf), "%4d | ", t.index);
        out += buf;
        for (std::size_t s = 0; s < t.summands.size(); ++s) {
            if (s) out += " (+) ";
            out += "P(edge " + std::to_string(t.summands[s]) + ")";
        }
        if (i > 0) {
            const Differential& diff = r.differentials[i - 1];
            out += "   d = diag(" + std::to_string(diff.d1) + "," + std::to_string(diff.d2) + ")";
        }
        out += "\n";
    }
    return out;
}

nlohmann::json resolution_to_json(const ProjectiveResolution& r) {
    nlohmann::json j;
    j["simple"] = {{"edge", r.simple.id}, {"darts", {r.simple.d1, r.simple.d2}}};
    j["period"] = r.period;
    j["terms"] = nlohmann::json::array();
    for (const auto& t : r.terms) j["terms"].push_back(t.summands);
    j["differentials"] = nlohmann::json::array();
    for (const auto& d : r.differentials) j["differentials"].push_back({d.d1, d.d2});
    return j;
}

ProjectiveResolution resolution_from_json(const nlohmann::json& j) {
    try {
        ProjectiveResolution r;
        r.simple.id = j.at("simple").at("edge").get<int>();
        r.simple.d1 = j.at("simple").at("darts").at(0).get<Dart>();
        r.simple.d2 = j.at("simple").at("darts").at(1).get<Dart>();
        r.period = j.at("period").get<int>();
        int m = 0;
        for (const auto& t : j.at("terms"))
            r.terms.push_back({m++, t.get<std::vector<int>>()});
        m = 1;
        for (const auto& d : j.at("differentials"))
            r.differentials.push_back({m++, d.at(0).get<Dart>(), d.at(1).get<Dart>()});
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(1, 1, std::string("bad resolution json: ") + e.what());
    }
}

nlohmann::json resolution_bundle_to_json(const std::vector<ProjectiveResolution>& rs,
                                         const std::vector<int>& normalization_type) {
    nlohmann::json j;
    j["resolutions"] = nlohmann::json::array();
    for (const auto& r : rs) j["resolutions"].push_back(resolution_to_json(r));
    j["normalization_type"] = normalization_type;
    return j;
}

std::pair<std::vector<ProjectiveResolution>, std::vector<int>> resolution_bundle_from_json(
    const nlohmann::json& j) {
    try {
        std::vector<ProjectiveResolution> rs;
        for (const auto& r : j.at("resolutions")) rs.push_back(resolution_from_json(r));
        return {std::move(rs), j.at("normalization_type").get<std::vector<int>>()};
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(1, 1, std::string("bad resolution bundle json: ") + e.what());
    }
}

}  // namespace mapforge
