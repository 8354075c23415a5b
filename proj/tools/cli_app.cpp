#include "cli_app.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "mapforge/constellation.hpp"
#include "mapforge/errors.hpp"
#include "mapforge/galois.hpp"
#include "mapforge/io.hpp"
#include "mapforge/orders.hpp"
#include "mapforge/quiver.hpp"
#include "mapforge/resolutions.hpp"

namespace mapforge::cli {

namespace {

struct ExitWith {
    int code;
    std::string message;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ExitWith{2, "cannot open " + path};
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Constellation load(const std::string& path) {
    const std::string text = slurp(path);
    // files ending in .json use the JSON mirror
    if (path.size() > 5 && path.substr(path.size() - 5) == ".json")
        return constellation_from_json(nlohmann::json::parse(text));
    return parse_constellation(text);
}

std::uint64_t group_limit() {
    if (const char* env = std::getenv("MAPFORGE_GROUP_LIMIT")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end == env || *end != '\0' || v == 0)
            throw ExitWith{2, "MAPFORGE_GROUP_LIMIT must be a positive integer"};
        return v;
    }
    return kDefaultGroupLimit;
}

std::string format_type(const std::vector<int>& type) {
    std::string out = "[";
    for (std::size_t i = 0; i < type.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(type[i]);
    }
    return out + "]";
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

nlohmann::json validation_json(const ValidationReport& report) {
    nlohmann::json v = nlohmann::json::array();
    for (const auto& entry : report.violations)
        v.push_back({{"code", violation_name(entry.code)}, {"detail", entry.detail}});
    return {{"ok", report.ok()}, {"violations", v}};
}

// throws ExitWith{1} when the constellation is invalid
void ensure_valid(const Constellation& c, const std::string& format) {
    ValidationReport report = validate(c);
    if (report.ok()) return;
    std::string payload;
    if (format == "json") {
        payload = dump(validation_json(report));
    } else {
        payload = "invalid\n";
        for (const auto& v : report.violations)
            payload += violation_name(v.code) + ": " + v.detail + "\n";
    }
    throw ExitWith{1, payload};
}

nlohmann::json passport_json(const Passport& p) {
    nlohmann::json j;
    j["degree"] = p.degree;
    j["sigma_type"] = p.sigma_type;
    j["alpha_type"] = p.alpha_type;
    j["phi_type"] = p.phi_type;
    j["genus"] = p.genus;
    if (p.monodromy_order) j["monodromy_order"] = *p.monodromy_order;
    return j;
}

std::string signature_text(const InvariantSignature& s) {
    std::string out;
    out += "degree: " + std::to_string(s.degree) + "\n";
    out += "sigma_type: " + format_type(s.sigma_type) + "\n";
    out += "alpha_type: " + format_type(s.alpha_type) + "\n";
    out += "phi_type: " + format_type(s.phi_type) + "\n";
    out += "genus: " + std::to_string(s.genus) + "\n";
    out += "center_rank: " + std::to_string(s.center_rank) + "\n";
    out += "normalization_type: " + format_type(s.normalization_type) + "\n";
    if (s.monodromy_order)
        out += "monodromy_order: " + std::to_string(*s.monodromy_order) + "\n";
    return out;
}

int genus_of(const Constellation& c) {
    return c.mode == MapMode::map ? euler_and_genus(c).genus
                                  : euler_and_genus(subdivide_hypermap(c)).genus;
}

struct Options {
    std::string format = "text";
    std::string output;
};

void emit(const Options& opt, std::ostream& out, const std::string& payload) {
    if (opt.output.empty()) {
        out << payload;
        return;
    }
    std::ofstream file(opt.output, std::ios::binary);
    if (!file) throw ExitWith{2, "cannot write " + opt.output};
    file << payload;
}

std::pair<Dart, Dart> parse_edge_flag(const std::string& text) {
    std::size_t comma = text.find(',');
    if (comma == std::string::npos)
        throw ExitWith{2, "--edge expects two darts as d1,d2"};
    try {
        int a = std::stoi(text.substr(0, comma));
        int b = std::stoi(text.substr(comma + 1));
        return {a, b};
    } catch (const std::exception&) {
        throw ExitWith{2, "--edge expects two darts as d1,d2"};
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"constellation and surface-algebra toolkit"};
    app.require_subcommand(1);

    std::string input, input_b, bundle_path;
    std::vector<std::string> inputs;
    std::string edge_flag;
    int horizon = 1;
    bool with_monodromy = false;
    Options opt;

    auto add_common = [&](CLI::App* cmd, std::vector<std::string> formats) {
        cmd->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember(formats))
            ->capture_default_str();
        cmd->add_option("--output,-o", opt.output, "write output to a file instead of stdout");
    };

    CLI::App* validate_cmd = app.add_subcommand("validate", "check constellation invariants");
    validate_cmd->add_option("file", input)->required();
    add_common(validate_cmd, {"text", "json"});

    CLI::App* analyze_cmd =
        app.add_subcommand("analyze", "validate, passport and invariant signature in one pass");
    analyze_cmd->add_option("file", input)->required();
    analyze_cmd->add_flag("--monodromy", with_monodromy, "include the monodromy group order");
    add_common(analyze_cmd, {"text", "json"});

    CLI::App* quiver_cmd = app.add_subcommand("quiver", "medial quiver with gentle relations");
    quiver_cmd->add_option("file", input)->required();
    add_common(quiver_cmd, {"text", "json", "dot"});

    CLI::App* order_cmd = app.add_subcommand("order", "surface order blocks and gluings");
    order_cmd->add_option("file", input)->required();
    add_common(order_cmd, {"text", "json", "dot"});

    CLI::App* resolve_cmd =
        app.add_subcommand("resolve", "periodic projective resolution of a simple module");
    resolve_cmd->add_option("file", input)->required();
    resolve_cmd->add_option("--edge", edge_flag, "edge as d1,d2 (defaults to all simples)");
    resolve_cmd->add_option("--horizon", horizon, "materialize at least this many steps")
        ->capture_default_str();
    add_common(resolve_cmd, {"text", "json"});

    CLI::App* invariants_cmd = app.add_subcommand("invariants", "Galois-orbit invariant signature");
    invariants_cmd->add_option("file", input)->required();
    invariants_cmd->add_flag("--monodromy", with_monodromy, "include the monodromy group order");
    add_common(invariants_cmd, {"text", "json"});

    CLI::App* compare_cmd = app.add_subcommand("compare", "compare two constellations");
    compare_cmd->add_option("a", input)->required();
    compare_cmd->add_option("b", input_b)->required();
    add_common(compare_cmd, {"text", "json"});

    CLI::App* classify_cmd =
        app.add_subcommand("classify", "bucket constellations by signature, refine by isomorphism");
    classify_cmd->add_option("files", inputs)->required()->expected(-1);
    add_common(classify_cmd, {"text", "json"});

    CLI::App* reconstruct_cmd =
        app.add_subcommand("reconstruct", "rebuild the constellation from a resolution bundle");
    reconstruct_cmd->add_option("bundle", bundle_path)->required();
    add_common(reconstruct_cmd, {"text", "json"});

    CLI::App* subdivide_cmd =
        app.add_subcommand("subdivide", "subdivide a hypermap into a bipartite map");
    subdivide_cmd->add_option("file", input)->required();
    add_common(subdivide_cmd, {"text", "json"});

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*validate_cmd) {
            Constellation c = load(input);
            ensure_valid(c, opt.format);
            ValidationReport report = validate(c);
            if (opt.format == "json") {
                nlohmann::json j = validation_json(report);
                j["genus"] = genus_of(c);
                j["mode"] = c.mode == MapMode::map ? "map" : "hypermap";
                emit(opt, out, dump(j));
            } else {
                std::string payload = c.mode == MapMode::map
                                          ? "ok, genus " + std::to_string(genus_of(c))
                                          : "ok (hypermap), genus " + std::to_string(genus_of(c));
                emit(opt, out, payload + "\n");
            }
        } else if (*analyze_cmd) {
            Constellation c = load(input);
            ensure_valid(c, opt.format);
            Passport p = passport(c);
            std::optional<InvariantSignature> sig;
            if (c.mode == MapMode::map) {
                sig = with_monodromy ? signature_with_monodromy(c, group_limit()) : signature(c);
                if (sig->monodromy_order) p.monodromy_order = sig->monodromy_order;
            } else if (with_monodromy) {
                MonodromyOrder mono = monodromy_order(c, group_limit());
                if (!mono.exceeded) p.monodromy_order = mono.order;
            }
            if (opt.format == "json") {
                nlohmann::json j;
                j["validation"] = validation_json(validate(c));
                j["mode"] = c.mode == MapMode::map ? "map" : "hypermap";
                j["passport"] = passport_json(p);
                if (sig) j["signature"] = signature_to_json(*sig);
                emit(opt, out, dump(j));
            } else {
                std::string payload = "ok, genus " + std::to_string(p.genus) + "\n";
                if (sig) {
                    payload += signature_text(*sig);
                } else {
                    payload += "degree: " + std::to_string(p.degree) + "\n";
                    payload += "sigma_type: " + format_type(p.sigma_type) + "\n";
                    payload += "alpha_type: " + format_type(p.alpha_type) + "\n";
                    payload += "phi_type: " + format_type(p.phi_type) + "\n";
                    if (p.monodromy_order)
                        payload += "monodromy_order: " + std::to_string(*p.monodromy_order) + "\n";
                }
                emit(opt, out, payload);
            }
        } else if (*quiver_cmd) {
            Constellation c = load(input);
            ensure_valid(c, opt.format);
            if (c.mode != MapMode::map)
                throw ExitWith{1, "medial quiver requires map mode; subdivide first\n"};
            MedialQuiver q = build_medial_quiver(c);
            if (opt.format == "dot") {
                emit(opt, out, export_dot(q));
            } else if (opt.format == "json") {
                emit(opt, out, dump(quiver_to_json(q)));
            } else {
                std::string payload;
                payload += "vertices: " + std::to_string(q.vertex_count()) + "\n";
                for (const auto& v : q.vertices)
                    payload += "  v" + std::to_string(v.id) + " = (" + std::to_string(v.d1) + "," +
                               std::to_string(v.d2) + ")\n";
                payload += "arrows: " + std::to_string(q.arrow_count()) + "\n";
                for (const auto& a : q.arrows)
                    payload += "  " + std::to_string(a.dart) + ": v" + std::to_string(a.tail) +
                               " -> v" + std::to_string(a.head) + "\n";
                payload += "relations:\n";
                for (const auto& [first, second] : q.relations)
                    payload += "  (" + std::to_string(first) + "," + std::to_string(second) + ")\n";
                emit(opt, out, payload);
            }
        } else if (*order_cmd) {
            Constellation c = load(input);
            ensure_valid(c, opt.format);
            if (c.mode != MapMode::map)
                throw ExitWith{1, "surface order requires map mode; subdivide first\n"};
            SurfaceOrderDescriptor d = build_surface_order(c);
            emit(opt, out, export_gluing_diagram(d, diagram_format_from_string(opt.format)));
        } else if (*resolve_cmd) {
            Constellation c = load(input);
            ensure_valid(c, opt.format);
            if (c.mode != MapMode::map)
                throw ExitWith{1, "resolutions require map mode; subdivide first\n"};
            if (horizon < 1) throw ExitWith{2, "--horizon must be >= 1"};
            if (!edge_flag.empty()) {
                auto [a, b] = parse_edge_flag(edge_flag);
                EdgeTable table(c);
                ProjectiveResolution r = resolve_simple(c, table.by_darts(a, b), horizon);
                emit(opt, out,
                     opt.format == "json" ? dump(resolution_to_json(r)) : resolution_to_text(r));
            } else {
                auto rs = resolve_all_simples(c, horizon);
                if (opt.format == "json") {
                    emit(opt, out, dump(resolution_bundle_to_json(rs, c.sigma.cycle_type())));
                } else {
                    std::string payload;
                    for (const auto& r : rs) payload += resolution_to_text(r) + "\n";
                    emit(opt, out, payload);
                }
            }
        } else if (*invariants_cmd) {
            Constellation c = load(input);
            ensure_valid(c, opt.format);
            if (c.mode != MapMode::map)
                throw ExitWith{1, "signature requires map mode; subdivide first\n"};
            InvariantSignature s =
                with_monodromy ? signature_with_monodromy(c, group_limit()) : signature(c);
            emit(opt, out, opt.format == "json" ? dump(signature_to_json(s)) : signature_text(s));
        } else if (*compare_cmd) {
            Constellation a = load(input);
            Constellation b = load(input_b);
            ensure_valid(a, opt.format);
            ensure_valid(b, opt.format);
            if (a.mode != MapMode::map || b.mode != MapMode::map)
                throw ExitWith{1, "compare requires map mode; subdivide first\n"};
            CompareResult r = compare(a, b);
            if (opt.format == "json") {
                emit(opt, out, dump(compare_to_json(r)));
            } else if (r.verdict == OrbitVerdict::different_orbits) {
                emit(opt, out, "different orbits (signatures differ)\n");
            } else {
                emit(opt, out, std::string("invariant-equivalent, ") +
                                   (r.isomorphic ? "isomorphic\n" : "not isomorphic\n"));
            }
        } else if (*classify_cmd) {
            std::vector<Constellation> cs;
            for (const auto& path : inputs) {
                cs.push_back(load(path));
                ensure_valid(cs.back(), opt.format);
                if (cs.back().mode != MapMode::map)
                    throw ExitWith{1, "classify requires map mode; subdivide " + path + " first\n"};
            }
            ClassificationReport report = classify_batch(cs);
            if (opt.format == "json") {
                nlohmann::json j = classification_to_json(report);
                j["inputs"] = inputs;
                emit(opt, out, dump(j));
            } else {
                std::string payload;
                int bucket_no = 0;
                for (const auto& bucket : report.buckets) {
                    payload += "bucket " + std::to_string(++bucket_no) + ": " +
                               bucket.signature.key() + "\n";
                    int class_no = 0;
                    for (const auto& cls : bucket.classes) {
                        payload += "  class " + std::to_string(++class_no) + " [" +
                                   cls.canonical_hash + "]:";
                        for (int m : cls.members)
                            payload += " " + inputs[static_cast<std::size_t>(m)];
                        payload += "\n";
                    }
                }
                emit(opt, out, payload);
            }
        } else if (*reconstruct_cmd) {
            nlohmann::json j = nlohmann::json::parse(slurp(bundle_path), nullptr, false);
            if (j.is_discarded()) throw ExitWith{2, "bundle is not valid json"};
            auto [rs, normalization] = resolution_bundle_from_json(j);
            Constellation c = reconstruct_constellation(rs, normalization);
            emit(opt, out,
                 opt.format == "json" ? dump(constellation_to_json(c)) : print_constellation(c));
        } else if (*subdivide_cmd) {
            Constellation c = load(input);
            ensure_valid(c, opt.format);
            Constellation m = subdivide_hypermap(c);
            emit(opt, out,
                 opt.format == "json" ? dump(constellation_to_json(m)) : print_constellation(m));
        }
        return 0;
    } catch (const ExitWith& e) {
        (e.code == 1 ? out : err) << e.message << (e.message.ends_with('\n') ? "" : "\n");
        return e.code;
    } catch (const ParseError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const InconsistentDataError& e) {
        out << "inconsistent resolution data: " << e.what() << "\n";
        return 1;
    } catch (const nlohmann::json::exception& e) {
        err << "json error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace mapforge::cli
