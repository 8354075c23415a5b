#pragma once

#include <string>

#include "json.hpp"
#include "mapforge/constellation.hpp"

namespace mapforge {

/// Parses the constellation text format:
///
///   n: 6
///   sigma: (1,2,3)(4,5,6)
///   alpha: (1,4)(2,5)(3,6)
///   phi: (1,6,2,4,3,5)        # optional, completed when absent
///   mode: map                 # optional, map|hypermap, default map
///
/// Whitespace-insensitive; fixed points may be omitted from cycles;
/// duplicate keys are rejected. Throws ParseError / DuplicateKeyError with a
/// 1-based location.
Constellation parse_constellation(const std::string& text);

/// Prints the text format back; fixed points are written as 1-cycles so the
/// output is canonical. parse(print(c)) == c.
std::string print_constellation(const Constellation& c);

/// JSON mirror: {"n": int, "sigma": [images], "alpha": [...], "phi": [...],
/// "mode": "map"|"hypermap"}; phi and mode optional on input.
nlohmann::json constellation_to_json(const Constellation& c);
Constellation constellation_from_json(const nlohmann::json& j);

/// Cycle-notation helpers shared by parser and printers.
std::vector<std::vector<Dart>> parse_cycle_list(const std::string& text, int degree,
                                                int line, int column_offset);

}  // namespace mapforge
