#include "mapforge/constellation.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "mapforge/errors.hpp"

namespace mapforge {

Permutation complete_phi(const Permutation& sigma, const Permutation& alpha) {
    // the unique solution of phi(alpha(sigma(d))) = d; for an involution
    // alpha this is sigma^-1 composed with alpha
    return compose(sigma.inverse(), alpha.inverse());
}

Constellation make_constellation(Permutation sigma, Permutation alpha,
                                 std::optional<Permutation> phi, MapMode mode) {
    Constellation c;
    c.n_darts = sigma.degree();
    c.phi = phi ? std::move(*phi) : complete_phi(sigma, alpha);
    c.sigma = std::move(sigma);
    c.alpha = std::move(alpha);
    c.mode = mode;
    return c;
}

std::string violation_name(Violation v) {
    switch (v) {
        case Violation::degree_mismatch: return "DegreeMismatch";
        case Violation::not_transitive: return "NotTransitive";
        case Violation::product_not_identity: return "ProductNotIdentity";
        case Violation::alpha_not_involution: return "AlphaNotInvolution";
    }
    return "Unknown";
}

namespace {

bool transitive_under(const Constellation& c) {
    if (c.n_darts <= 0) return false;
    // orbit of dart 1 under sigma, alpha and their inverses
    const Permutation sig_inv = c.sigma.inverse();
    const Permutation alp_inv = c.alpha.inverse();
    std::vector<char> seen(static_cast<std::size_t>(c.n_darts), 0);
    std::vector<Dart> stack{1};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        Dart d = stack.back();
        stack.pop_back();
        for (const Permutation* g : {&c.sigma, &c.alpha, &sig_inv, &alp_inv}) {
            Dart e = (*g)(d);
            if (!seen[static_cast<std::size_t>(e - 1)]) {
                seen[static_cast<std::size_t>(e - 1)] = 1;
                ++count;
                stack.push_back(e);
            }
        }
    }
    return count == c.n_darts;
}

}  // namespace

ValidationReport validate(const Constellation& c) {
    ValidationReport report;
    auto add = [&](Violation v, std::string detail) {
        report.violations.push_back({v, std::move(detail)});
    };

    if (c.sigma.degree() != c.n_darts || c.alpha.degree() != c.n_darts ||
        c.phi.degree() != c.n_darts) {
        add(Violation::degree_mismatch,
            "sigma/alpha/phi degrees " + std::to_string(c.sigma.degree()) + "/" +
                std::to_string(c.alpha.degree()) + "/" + std::to_string(c.phi.degree()) +
                " vs n = " + std::to_string(c.n_darts));
        return report;  // the remaining checks assume consistent degrees
    }

    for (Dart d = 1; d <= c.n_darts; ++d) {
        if (c.phi(c.alpha(c.sigma(d))) != d) {
            add(Violation::product_not_identity,
                "phi(alpha(sigma(" + std::to_string(d) + "))) != " + std::to_string(d));
            break;
        }
    }

    if (!transitive_under(c))
        add(Violation::not_transitive, "<sigma, alpha> has more than one orbit");

    if (c.mode == MapMode::map && !c.alpha.is_fixed_point_free_involution())
        add(Violation::alpha_not_involution, "alpha is not a fixed-point-free involution");

    return report;
}

void require_valid(const Constellation& c) {
    ValidationReport report = validate(c);
    if (report.ok()) return;
    std::string msg = "invalid constellation:";
    for (const auto& v : report.violations) msg += " " + violation_name(v.code);
    throw InvalidConstellationError(msg);
}

EulerData euler_and_genus(const Constellation& c) {
    if (c.mode == MapMode::hypermap) throw HypermapModeError();
    const int chi = c.phi.cycle_count() - c.alpha.cycle_count() + c.sigma.cycle_count();
    if ((2 - chi) % 2 != 0 || chi > 2)
        throw std::logic_error("non-integral or negative genus from chi = " + std::to_string(chi));
    return {chi, (2 - chi) / 2};
}

std::vector<std::vector<Dart>> face_words(const Constellation& c) {
    return c.phi.cycles();
}

EdgeTable::EdgeTable(const Constellation& c) : of_(static_cast<std::size_t>(c.n_darts), -1) {
    if (!c.alpha.is_fixed_point_free_involution())
        throw InvalidConstellationError("edges require alpha to be a fixed-point-free involution");
    for (Dart d = 1; d <= c.n_darts; ++d) {
        Dart e = c.alpha(d);
        if (d < e) {
            Edge edge{static_cast<int>(edges_.size()) + 1, d, e};
            of_[static_cast<std::size_t>(d - 1)] = edge.id - 1;
            of_[static_cast<std::size_t>(e - 1)] = edge.id - 1;
            edges_.push_back(edge);
        }
    }
}

const Edge& EdgeTable::by_id(int id) const {
    if (id < 1 || id > edge_count())
        throw UnknownEdgeError("no edge with id " + std::to_string(id));
    return edges_[static_cast<std::size_t>(id - 1)];
}

const Edge& EdgeTable::by_darts(Dart a, Dart b) const {
    const int n = static_cast<int>(of_.size());
    if (a < 1 || a > n || b < 1 || b > n)
        throw UnknownEdgeError("dart out of range in edge (" + std::to_string(a) + "," +
                               std::to_string(b) + ")");
    const Edge& e = edges_[static_cast<std::size_t>(of_[static_cast<std::size_t>(a - 1)])];
    if ((e.d1 == std::min(a, b) && e.d2 == std::max(a, b))) return e;
    throw UnknownEdgeError("(" + std::to_string(a) + "," + std::to_string(b) +
                           ") is not a 2-cycle of alpha");
}

Passport passport(const Constellation& c) {
    Passport p;
    p.degree = c.n_darts;
    p.sigma_type = c.sigma.cycle_type();
    p.alpha_type = c.alpha.cycle_type();
    p.phi_type = c.phi.cycle_type();
    if (c.mode == MapMode::map) {
        p.genus = euler_and_genus(c).genus;
    } else {
        p.genus = euler_and_genus(subdivide_hypermap(c)).genus;
    }
    return p;
}

MonodromyOrder monodromy_order(const Constellation& c, std::uint64_t limit) {
    const Permutation identity(c.n_darts);
    std::unordered_set<std::string> seen;
    const bool wide = c.n_darts > 255;
    auto key = [&](const Permutation& p) {
        std::string k;
        k.reserve(static_cast<std::size_t>(p.degree()) * (wide ? 2 : 1));
        for (Dart v : p.images()) {
            if (wide) k.push_back(static_cast<char>(v >> 8));
            k.push_back(static_cast<char>(v & 0xff));
        }
        return k;
    };
    seen.insert(key(identity));
    std::vector<Permutation> frontier{identity};
    while (!frontier.empty()) {
        std::vector<Permutation> next;
        for (const Permutation& g : frontier) {
            for (const Permutation* gen : {&c.sigma, &c.alpha}) {
                Permutation prod = compose(*gen, g);
                if (seen.insert(key(prod)).second) {
                    if (seen.size() > limit) return {limit, true};
                    next.push_back(std::move(prod));
                }
            }
        }
        frontier = std::move(next);
    }
    return {seen.size(), false};
}

Constellation conjugate(const Constellation& c, const Permutation& g) {
    if (g.degree() != c.n_darts) throw DegreeMismatchError(g.degree(), c.n_darts);
    Constellation out;
    out.n_darts = c.n_darts;
    out.sigma = conjugated(c.sigma, g);
    out.alpha = conjugated(c.alpha, g);
    out.phi = conjugated(c.phi, g);
    out.mode = c.mode;
    return out;
}

CanonicalForm canonical_form(const Constellation& c) {
    require_valid(c);
    const int n = c.n_darts;
    std::optional<Permutation> best_relabel;
    std::vector<Dart> label(static_cast<std::size_t>(n));
    std::vector<Dart> order;
    order.reserve(static_cast<std::size_t>(n));

    auto better = [](const Constellation& a, const Constellation& b) {
        if (auto cmp = a.sigma <=> b.sigma; cmp != 0) return cmp < 0;
        if (auto cmp = a.alpha <=> b.alpha; cmp != 0) return cmp < 0;
        return a.phi < b.phi;
    };

    Constellation best;
    for (Dart root = 1; root <= n; ++root) {
        std::fill(label.begin(), label.end(), 0);
        order.clear();
        label[static_cast<std::size_t>(root - 1)] = 1;
        order.push_back(root);
        for (std::size_t i = 0; i < order.size(); ++i) {
            Dart d = order[i];
            for (const Permutation* g : {&c.sigma, &c.alpha, &c.phi}) {
                Dart e = (*g)(d);
                if (label[static_cast<std::size_t>(e - 1)] == 0) {
                    label[static_cast<std::size_t>(e - 1)] = static_cast<Dart>(order.size()) + 1;
                    order.push_back(e);
                }
            }
        }
        Permutation relabel = Permutation::from_images(label);
        Constellation candidate = conjugate(c, relabel);
        if (!best_relabel || better(candidate, best)) {
            best = std::move(candidate);
            best_relabel = std::move(relabel);
        }
    }
    return {std::move(best), std::move(*best_relabel)};
}

bool isomorphic(const Constellation& a, const Constellation& b) {
    if (a.n_darts != b.n_darts || a.mode != b.mode) return false;
    const Constellation ca = canonical_form(a).constellation;
    const Constellation cb = canonical_form(b).constellation;
    return ca.sigma == cb.sigma && ca.alpha == cb.alpha && ca.phi == cb.phi;
}

Constellation subdivide_hypermap(const Constellation& c) {
    require_valid(c);
    const int n = c.n_darts;
    const Permutation alpha_inv = c.alpha.inverse();
    std::vector<Dart> sigma2(static_cast<std::size_t>(2 * n));
    std::vector<Dart> alpha2(static_cast<std::size_t>(2 * n));
    for (Dart d = 1; d <= n; ++d) {
        sigma2[static_cast<std::size_t>(d - 1)] = c.sigma(d);          // black rotation
        sigma2[static_cast<std::size_t>(n + d - 1)] = alpha_inv(d) + n;  // white rotation
        alpha2[static_cast<std::size_t>(d - 1)] = d + n;
        alpha2[static_cast<std::size_t>(n + d - 1)] = d;
    }
    return make_constellation(Permutation::from_images(std::move(sigma2)),
                              Permutation::from_images(std::move(alpha2)), std::nullopt,
                              MapMode::map);
}

}  // namespace mapforge
