#pragma once

// Named inputs shared across the test suites.

#include "toricirc/configuration.hpp"
#include "toricirc/multigraph.hpp"

#include <string>
#include <vector>

namespace corpus {

using toricirc::Configuration;
using toricirc::IntMatrix;
using toricirc::Multigraph;

inline Multigraph make_graph(std::size_t n,
                             std::initializer_list<std::pair<std::size_t, std::size_t>> edges) {
    Multigraph g;
    g.vertex_count = n;
    for (auto [a, b] : edges) g.edges.emplace_back(a < b ? a : b, a < b ? b : a);
    return g;
}

// 4-cycle, edges {1,2},{2,3},{3,4},{1,4}
inline Multigraph c4() {
    return make_graph(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
}

// hexagon
inline Multigraph c6() {
    return make_graph(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 6}});
}

inline Multigraph k4() {
    return make_graph(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
}

// triangle on {1,2,3} plus a loop at vertex 1; loop is the last variable
inline Multigraph triangle_loop() {
    return make_graph(3, {{1, 2}, {2, 3}, {1, 3}, {1, 1}});
}

// two triangles {1,2,3} and {5,6,7} joined by the path 3-4-5;
// edge order a1,a2,a3,b1,b2,c1,c2,c3
inline Multigraph bridge2() {
    return make_graph(7, {{1, 2}, {2, 3}, {1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {5, 7}});
}

// two triangles sharing vertex 1
inline Multigraph bowtie() {
    return make_graph(5, {{1, 2}, {2, 3}, {1, 3}, {1, 4}, {4, 5}, {1, 5}});
}

// two triangles joined by the single edge {3,4}
inline Multigraph tri_edge_tri() {
    return make_graph(6, {{1, 2}, {2, 3}, {1, 3}, {3, 4}, {4, 5}, {5, 6}, {4, 6}});
}

inline Multigraph parallel_pair() {
    return make_graph(2, {{1, 2}, {1, 2}});
}

inline Multigraph two_loops_same_vertex() {
    return make_graph(1, {{1, 1}, {1, 1}});
}

// loop at 1, edge {1,2}, loop at 2
inline Multigraph dumbbell() {
    return make_graph(2, {{1, 1}, {1, 2}, {2, 2}});
}

inline Configuration twisted_cubic() {
    IntMatrix m(2, 4);
    const int rows[2][4] = {{3, 2, 1, 0}, {0, 1, 2, 3}};
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 4; ++j) m.at(i, j) = rows[i][j];
    return Configuration(std::move(m));
}

struct NamedConfig {
    std::string name;
    Configuration config;
};

// the named configuration corpus: incidence configurations plus the twisted cubic
inline std::vector<NamedConfig> matrix_corpus() {
    using toricirc::incidence_configuration;
    return {
        {"c4", incidence_configuration(c4())},
        {"c6", incidence_configuration(c6())},
        {"k4", incidence_configuration(k4())},
        {"triangle_loop", incidence_configuration(triangle_loop())},
        {"twisted_cubic", twisted_cubic()},
        {"bridge2", incidence_configuration(bridge2())},
    };
}

struct NamedGraph {
    std::string name;
    Multigraph graph;
};

inline std::vector<NamedGraph> graph_corpus() {
    return {
        {"c4", c4()},
        {"c6", c6()},
        {"k4", k4()},
        {"triangle_loop", triangle_loop()},
        {"bridge2", bridge2()},
        {"bowtie", bowtie()},
        {"tri_edge_tri", tri_edge_tri()},
        {"parallel_pair", parallel_pair()},
        {"two_loops_same_vertex", two_loops_same_vertex()},
        {"dumbbell", dumbbell()},
    };
}

} // namespace corpus
