#ifndef STARFACTOR_TEST_FIXTURES_HPP
#define STARFACTOR_TEST_FIXTURES_HPP

#include "starfactor/graph.hpp"

namespace fixtures {

using starfactor::Edge;
using starfactor::Graph;

inline Graph path(int n) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.push_back(Edge(i, i + 1));
    return Graph::from_edges(n, e);
}

inline Graph cycle(int n) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) e.push_back(Edge(i, (i + 1) % n));
    return Graph::from_edges(n, e);
}

inline Graph star(int leaves) {
    std::vector<Edge> e;
    for (int i = 1; i <= leaves; ++i) e.push_back(Edge(0, i));
    return Graph::from_edges(leaves + 1, e);
}

inline Graph complete(int n) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.push_back(Edge(i, j));
    return Graph::from_edges(n, e);
}

// triangle 0,1,2 with pendant 3 attached at 0
inline Graph paw() { return Graph::from_edges(4, {Edge(0, 1), Edge(0, 2), Edge(1, 2), Edge(0, 3)}); }

// outer cycle 0..4, inner pentagram 5..9, spokes i - i+5
inline Graph petersen() {
    std::vector<Edge> e;
    for (int i = 0; i < 5; ++i) {
        e.push_back(Edge(i, (i + 1) % 5));
        e.push_back(Edge(i, i + 5));
        e.push_back(Edge(5 + i, 5 + (i + 2) % 5));
    }
    return Graph::from_edges(10, e);
}

// centers u=0, v=1 joined by an edge; u holds leaves 2,3 and v holds leaves 4,5
inline Graph double_star6() {
    return Graph::from_edges(6, {Edge(0, 1), Edge(0, 2), Edge(0, 3), Edge(1, 4), Edge(1, 5)});
}

// u=0 with leaves 2,3; v=1 with leaf 4; edge uv
inline Graph tight5() { return Graph::from_edges(5, {Edge(0, 1), Edge(0, 2), Edge(0, 3), Edge(1, 4)}); }

// v1=0 (leaves 6,7) - d=1 - u=2 - v=3 - g=4 - v2=5 (leaves 8,9)
inline Graph tight10() {
    return Graph::from_edges(10, {Edge(0, 6), Edge(0, 7), Edge(0, 1), Edge(1, 2), Edge(2, 3), Edge(3, 4),
                                  Edge(4, 5), Edge(5, 8), Edge(5, 9)});
}

// two triangles 0,1,2 and 3,4,5 joined by the edge 2-3
inline Graph dumbbell() {
    return Graph::from_edges(6, {Edge(0, 1), Edge(0, 2), Edge(1, 2), Edge(3, 4), Edge(3, 5), Edge(4, 5), Edge(2, 3)});
}

}  // namespace fixtures

#endif
