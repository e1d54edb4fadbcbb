#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gausscode/gf2.hpp"
#include "gausscode/word.hpp"

namespace gausscode {

// Loopless undirected graph with a symmetric zero-diagonal GF(2) adjacency
// matrix. Vertex names are display-only.
struct SimpleGraph {
    Gf2Matrix adjacency;
    std::vector<std::string> names;

    int vertex_count() const { return adjacency.dim(); }
    bool adjacent(int u, int v) const { return adjacency.get(u, v); }
    int degree(int v) const { return adjacency.row_weight(v); }
    std::string name(int v) const;

    static SimpleGraph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;
};

// True iff exactly one occurrence of y lies strictly between the two
// occurrences of x; equivalently the chords of x and y cross on the circle.
// Throws InvalidInput when x or y is not a symbol of w or x == y.
bool interlaced(const DoubleOccurrenceWord& w, int x, int y);

// The graph on the symbols of w whose edges are the interlaced pairs; its
// adjacency matrix is the word's interlacement matrix.
SimpleGraph interlacement_graph(const DoubleOccurrenceWord& w);

std::string to_dot(const SimpleGraph& g);

}  // namespace gausscode
