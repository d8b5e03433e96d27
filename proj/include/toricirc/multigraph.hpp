#pragma once

#include "toricirc/classify.hpp"
#include "toricirc/configuration.hpp"

#include <string>
#include <utility>
#include <vector>

namespace toricirc {

// Vertices are 1..n. Edges are unordered pairs, loops allowed (i == i),
// parallel duplicates allowed. Edge order fixes the variable indices.
struct Multigraph {
    std::size_t vertex_count = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges;

    bool is_loop(std::size_t e) const { return edges[e].first == edges[e].second; }
};

// Text format: optional '#' comments, "vertices n", then one "i j" line per
// edge; a repeated line is a parallel edge, "i i" is a loop.
Multigraph parse_multigraph(const std::string& text);
Multigraph load_multigraph(const std::string& path);

// Column k is e_i + e_j for edge k = {i, j}, and 2 e_i for a loop at i.
Configuration incidence_configuration(const Multigraph& g);

enum class GraphCircuitKind { EvenCycle, OddPairSharedVertex, OddPairJoinedByPath };
enum class CircuitClass { SquareFreeTerm, BalancedMaxTwo };

// A circuit sub-multigraph realized as a closed even walk (edge index list).
struct GraphCircuit {
    GraphCircuitKind kind;
    std::vector<std::size_t> walk; // edge indices, consecutive edges chained
    Binomial binomial;             // walk binomial, module-wide orientation
};

// All circuits of the three shapes: even cycles (parallel pairs count as
// 2-cycles), odd cycle pairs sharing exactly one vertex (loops are odd
// 1-cycles), and vertex-disjoint odd cycle pairs joined by each simple path.
// The binomial multiset agrees with the matrix-side circuits of the incidence
// configuration.
std::vector<GraphCircuit> enumerate_graph_circuits(const Multigraph& g);

// Odd-position edge product minus even-position edge product of a closed even
// walk, exponents accumulated on repeats. Positional orientation.
Binomial walk_binomial(const Multigraph& g, const std::vector<std::size_t>& walk);

// Square-free circuits: even cycles, shared-vertex pairs, and path-joined
// pairs whose bridge is a single edge. Longer bridges give balanced circuits
// with both maximal exponents 2.
CircuitClass classify_graph_circuit(const GraphCircuit& gc);

struct EdgeRingReport {
    NormalityResult normal_oracle;
    bool odd_cycle_heuristic = false; // every two vertex-disjoint odd cycles joined by an edge
    bool generated_by_sqfree_circuits = false;
    bool consistent_with_theorem_3_2 = false;
};

// Normality oracle on the incidence configuration versus generation by
// square-free-term circuits, plus the odd-cycle link heuristic. The oracle
// verdict, not the heuristic, is the reference.
EdgeRingReport verify_edge_ring_theorem(const Multigraph& g, const Int& bound);

bool odd_cycles_linked(const Multigraph& g);

} // namespace toricirc
