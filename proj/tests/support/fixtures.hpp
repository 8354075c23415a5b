#pragma once

// The recurring worked examples, built directly from their cycle data.

#include "mapforge/constellation.hpp"

namespace fixtures {

using mapforge::Constellation;
using mapforge::MapMode;
using mapforge::Permutation;

inline Constellation atilde1() {
    return mapforge::make_constellation(Permutation::from_cycles(2, {{1, 2}}),
                                        Permutation::from_cycles(2, {{1, 2}}));
}

inline Constellation atilde2() {
    return mapforge::make_constellation(Permutation::from_cycles(4, {{1, 4}, {2, 3}}),
                                        Permutation::from_cycles(4, {{1, 3}, {2, 4}}));
}

inline Constellation atilde3() {
    return mapforge::make_constellation(Permutation::from_cycles(6, {{1, 6, 2, 4, 3, 5}}),
                                        Permutation::from_cycles(6, {{1, 4}, {2, 5}, {3, 6}}));
}

inline Constellation atilde4() {
    return mapforge::make_constellation(
        Permutation::from_cycles(8, {{1, 8, 3, 6}, {2, 5, 4, 7}}),
        Permutation::from_cycles(8, {{1, 5}, {2, 6}, {3, 7}, {4, 8}}));
}

inline Constellation torus() {
    return mapforge::make_constellation(Permutation::from_cycles(6, {{1, 2, 3}, {4, 5, 6}}),
                                        Permutation::from_cycles(6, {{1, 4}, {2, 5}, {3, 6}}));
}

inline Constellation path_graph() {
    return mapforge::make_constellation(Permutation::from_cycles(6, {{2, 3}, {4, 5}}),
                                        Permutation::from_cycles(6, {{1, 2}, {3, 4}, {5, 6}}));
}

inline Permutation c_sigma() {
    return Permutation::from_cycles(14, {{2, 3}, {4, 5}, {6, 7, 8, 9}, {12, 13}});
}

inline Constellation c1() {
    return mapforge::make_constellation(
        c_sigma(),
        Permutation::from_cycles(14, {{1, 2}, {3, 4}, {5, 6}, {7, 10}, {8, 11}, {9, 12}, {13, 14}}));
}

inline Constellation c2() {
    return mapforge::make_constellation(
        c_sigma(),
        Permutation::from_cycles(14, {{1, 2}, {3, 4}, {5, 6}, {7, 12}, {8, 11}, {13, 14}, {9, 10}}));
}

inline Constellation c3() {
    return mapforge::make_constellation(
        c_sigma(),
        Permutation::from_cycles(14, {{1, 2}, {3, 4}, {5, 12}, {7, 10}, {8, 11}, {9, 14}, {6, 13}}));
}

inline Constellation c4() {
    return mapforge::make_constellation(
        c_sigma(),
        Permutation::from_cycles(14, {{1, 2}, {3, 4}, {5, 6}, {7, 10}, {8, 12}, {9, 11}, {13, 14}}));
}

inline Constellation triangle_hypermap() {
    return mapforge::make_constellation(Permutation::from_cycles(3, {{1, 2, 3}}),
                                        Permutation::from_cycles(3, {{1, 2, 3}}), std::nullopt,
                                        MapMode::hypermap);
}

}  // namespace fixtures
