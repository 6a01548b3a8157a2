#pragma once

// Built-in Seifert matrix table.

#include "seifert.hpp"

#include <map>
#include <string>

namespace dslice {

struct NamedMatrix {
    std::string name;
    SeifertMatrix matrix;
};

inline const std::map<std::string, SeifertMatrix>& builtin_matrices() {
    static const std::map<std::string, SeifertMatrix> table{
        // Slice knot 8_20.
        {"8_20", SeifertMatrix(IntMatrix{{-1, -1, -1, -1}, {0, 0, -1, -1}, {0, -1, 0, -1}, {0, 0, -1, 0}}, -1)},
        // Symmetric (epsilon = +1) metabolic but non-hyperbolic example.
        {"evenq_example", SeifertMatrix(IntMatrix{{0, 0, 0, -1}, {0, 0, 1, -1}, {1, 0, 1, 0}, {0, 1, 0, 1}}, 1)},
        {"trefoil", SeifertMatrix(IntMatrix{{-1, 1}, {0, -1}}, -1)},
        {"unknot", SeifertMatrix(IntMatrix(0, 0), -1)},
    };
    return table;
}

inline const SeifertMatrix& builtin_matrix(const std::string& name) {
    const auto& table = builtin_matrices();
    auto it = table.find(name);
    if (it == table.end()) throw Error("unknown built-in matrix '" + name + "'");
    return it->second;
}

}  // namespace dslice
