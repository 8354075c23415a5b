#include "mapforge/io.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "mapforge/errors.hpp"

namespace mapforge {

namespace {

struct Cursor {
    const std::string& text;
    std::size_t pos = 0;
    int line;
    int col;

    bool done() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }
    void advance() {
        ++col;
        ++pos;
    }
    void skip_space() {
        while (!done() && (peek() == ' ' || peek() == '\t')) advance();
    }
};

int parse_int(Cursor& cur) {
    cur.skip_space();
    if (cur.done() || !std::isdigit(static_cast<unsigned char>(cur.peek())))
        throw ParseError(cur.line, cur.col, "expected an integer");
    long value = 0;
    while (!cur.done() && std::isdigit(static_cast<unsigned char>(cur.peek()))) {
        value = value * 10 + (cur.peek() - '0');
        if (value > 1'000'000) throw ParseError(cur.line, cur.col, "integer too large");
        cur.advance();
    }
    return static_cast<int>(value);
}

}  // namespace

std::vector<std::vector<Dart>> parse_cycle_list(const std::string& text, int degree,
                                                int line, int column_offset) {
    Cursor cur{text, 0, line, column_offset};
    std::vector<std::vector<Dart>> cycles;
    std::vector<char> used(static_cast<std::size_t>(degree), 0);
    cur.skip_space();
    while (!cur.done()) {
        if (cur.peek() != '(')
            throw ParseError(cur.line, cur.col, std::string("expected '(' but found '") + cur.peek() + "'");
        cur.advance();
        std::vector<Dart> cycle;
        cur.skip_space();
        while (!cur.done() && cur.peek() != ')') {
            int d = parse_int(cur);
            if (d < 1 || d > degree)
                throw ParseError(cur.line, cur.col,
                                 "dart " + std::to_string(d) + " outside 1.." + std::to_string(degree));
            if (used[static_cast<std::size_t>(d - 1)])
                throw ParseError(cur.line, cur.col, "dart " + std::to_string(d) + " repeated");
            used[static_cast<std::size_t>(d - 1)] = 1;
            cycle.push_back(d);
            cur.skip_space();
            if (!cur.done() && cur.peek() == ',') {
                cur.advance();
                cur.skip_space();
                if (cur.done() || cur.peek() == ')')
                    throw ParseError(cur.line, cur.col, "expected a dart after ','");
            } else {
                break;
            }
        }
        if (cur.done() || cur.peek() != ')')
            throw ParseError(cur.line, cur.col, "unclosed cycle");
        cur.advance();
        if (!cycle.empty()) cycles.push_back(std::move(cycle));
        cur.skip_space();
    }
    return cycles;
}

Constellation parse_constellation(const std::string& text) {
    std::map<std::string, std::pair<std::string, int>> fields;  // key -> (value, line)
    std::map<std::string, int> value_cols;
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::size_t first = raw.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;  // blank line
        std::size_t colon = raw.find(':');
        if (colon == std::string::npos)
            throw ParseError(line_no, static_cast<int>(first) + 1, "expected 'key: value'");
        std::string key = raw.substr(first, colon - first);
        while (!key.empty() && (key.back() == ' ' || key.back() == '\t')) key.pop_back();
        if (key != "n" && key != "sigma" && key != "alpha" && key != "phi" && key != "mode")
            throw ParseError(line_no, static_cast<int>(first) + 1, "unknown key '" + key + "'");
        if (fields.count(key)) throw DuplicateKeyError(line_no, static_cast<int>(first) + 1, key);
        std::string value = raw.substr(colon + 1);
        while (!value.empty() && (value.back() == ' ' || value.back() == '\t' || value.back() == '\r'))
            value.pop_back();
        fields[key] = {value, line_no};
        value_cols[key] = static_cast<int>(colon) + 2;
    }

    if (!fields.count("n")) throw ParseError(line_no ? line_no : 1, 1, "missing 'n:' line");
    Cursor ncur{fields["n"].first, 0, fields["n"].second, value_cols["n"]};
    int n = parse_int(ncur);
    ncur.skip_space();
    if (!ncur.done()) throw ParseError(ncur.line, ncur.col, "trailing text after n");
    if (n < 1) throw ParseError(fields["n"].second, value_cols["n"], "n must be positive");

    auto get_perm = [&](const std::string& key) {
        const auto& [value, ln] = fields[key];
        auto cycles = parse_cycle_list(value, n, ln, value_cols[key]);
        return Permutation::from_cycles(n, cycles);
    };

    if (!fields.count("sigma")) throw ParseError(line_no ? line_no : 1, 1, "missing 'sigma:' line");
    if (!fields.count("alpha")) throw ParseError(line_no ? line_no : 1, 1, "missing 'alpha:' line");
    Permutation sigma = get_perm("sigma");
    Permutation alpha = get_perm("alpha");
    std::optional<Permutation> phi;
    if (fields.count("phi")) phi = get_perm("phi");

    MapMode mode = MapMode::map;
    if (fields.count("mode")) {
        std::string m = fields["mode"].first;
        m.erase(std::remove_if(m.begin(), m.end(),
                               [](unsigned char ch) { return std::isspace(ch); }),
                m.end());
        if (m == "map")
            mode = MapMode::map;
        else if (m == "hypermap")
            mode = MapMode::hypermap;
        else
            throw ParseError(fields["mode"].second, value_cols["mode"],
                             "mode must be 'map' or 'hypermap'");
    }
    return make_constellation(std::move(sigma), std::move(alpha), std::move(phi), mode);
}

std::string print_constellation(const Constellation& c) {
    std::string out;
    out += "n: " + std::to_string(c.n_darts) + "\n";
    out += "sigma: " + c.sigma.to_cycle_string() + "\n";
    out += "alpha: " + c.alpha.to_cycle_string() + "\n";
    out += "phi: " + c.phi.to_cycle_string() + "\n";
    out += std::string("mode: ") + (c.mode == MapMode::map ? "map" : "hypermap") + "\n";
    return out;
}

nlohmann::json constellation_to_json(const Constellation& c) {
    nlohmann::json j;
    j["n"] = c.n_darts;
    j["sigma"] = c.sigma.images();
    j["alpha"] = c.alpha.images();
    j["phi"] = c.phi.images();
    j["mode"] = c.mode == MapMode::map ? "map" : "hypermap";
    return j;
}

Constellation constellation_from_json(const nlohmann::json& j) {
    try {
        int n = j.at("n").get<int>();
        auto perm = [&](const char* key) {
            auto images = j.at(key).get<std::vector<Dart>>();
            if (static_cast<int>(images.size()) != n)
                throw ParseError(1, 1, std::string(key) + " has wrong length");
            return Permutation::from_images(std::move(images));
        };
        Permutation sigma = perm("sigma");
        Permutation alpha = perm("alpha");
        std::optional<Permutation> phi;
        if (j.contains("phi")) phi = perm("phi");
        MapMode mode = MapMode::map;
        if (j.contains("mode")) {
            std::string m = j.at("mode").get<std::string>();
            if (m == "hypermap")
                mode = MapMode::hypermap;
            else if (m != "map")
                throw ParseError(1, 1, "mode must be 'map' or 'hypermap'");
        }
        return make_constellation(std::move(sigma), std::move(alpha), std::move(phi), mode);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(1, 1, std::string("bad constellation json: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ParseError(1, 1, std::string("bad permutation: ") + e.what());
    }
}

}  // namespace mapforge
