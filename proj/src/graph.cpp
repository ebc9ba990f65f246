#include "ladder/graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace ladder {

std::size_t CrystalGraph::node_count() const
{
    std::size_t n = 0;
    for (const auto& level : levels) {
        n += level.size();
    }
    return n;
}

const char* to_string(CrystalModel model) noexcept
{
    return model == CrystalModel::Classical ? "classical" : "ladder";
}

CrystalGraph build_crystal(Modulus m, int depth, CrystalModel model)
{
    if (depth < 0) {
        throw error(errc::invalid_partition, "depth must be non-negative");
    }
    CrystalGraph g;
    g.model = model;
    g.ell = m.ell();
    g.levels.push_back({Partition{}});
    for (int n = 1; n <= depth; ++n) {
        std::set<Partition> next;
        for (const auto& lambda : g.levels.back()) {
            for (int i = 0; i < m.ell(); ++i) {
                if (auto mu = apply_f(lambda, Residue{i}, m, model)) {
                    next.insert(*mu);
                    g.edges.push_back({lambda, *mu, Residue{i}});
                }
            }
        }
        g.levels.emplace_back(next.begin(), next.end());
    }
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

std::vector<Partition> string_graph(const Partition& lambda, Residue i, Modulus m, CrystalModel model)
{
    Partition head = lambda;
    while (auto up = apply_e(head, i, m, model)) {
        head = *up;
    }
    std::vector<Partition> out{head};
    while (auto down = apply_f(out.back(), i, m, model)) {
        out.push_back(*down);
    }
    return out;
}

std::string export_dot(const CrystalGraph& graph)
{
    std::ostringstream os;
    os << "digraph crystal {\n";
    os << "  // model=" << to_string(graph.model) << " ell=" << graph.ell << "\n";
    for (const auto& level : graph.levels) {
        for (const auto& p : level) {
            os << "  \"" << to_string(p) << "\";\n";
        }
    }
    for (const auto& e : graph.edges) {
        os << "  \"" << to_string(e.source) << "\" -> \"" << to_string(e.target) << "\" [label=" << e.residue.value
           << "];\n";
    }
    for (const auto& level : graph.levels) {
        os << "  {rank=same;";
        for (const auto& p : level) {
            os << " \"" << to_string(p) << "\";";
        }
        os << "}\n";
    }
    os << "}\n";
    return os.str();
}

} // namespace ladder
