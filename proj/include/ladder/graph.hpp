#pragma once

#include <string>
#include <vector>

#include "ladder/crystal.hpp"
#include "ladder/io.hpp"

namespace ladder {

struct CrystalEdge {
    Partition source;
    Partition target;
    Residue residue;

    friend auto operator<=>(const CrystalEdge&, const CrystalEdge&) = default;
    friend bool operator==(const CrystalEdge&, const CrystalEdge&) = default;
};

// Leveled graph reachable from the empty partition; nodes and edges sorted.
struct CrystalGraph {
    CrystalModel model = CrystalModel::Classical;
    int ell = 3;
    std::vector<std::vector<Partition>> levels;
    std::vector<CrystalEdge> edges;

    std::size_t node_count() const;
};

CrystalGraph build_crystal(Modulus m, int depth, CrystalModel model);

// The i-string through lambda, from its head (e applied until absent) to its tail.
std::vector<Partition> string_graph(const Partition& lambda, Residue i, Modulus m, CrystalModel model);

std::string export_dot(const CrystalGraph& graph);

const char* to_string(CrystalModel model) noexcept;

} // namespace ladder
