#include "gausscode/interlace.hpp"

namespace gausscode {

std::string SimpleGraph::name(int v) const {
    if (v < static_cast<int>(names.size())) return names[v];
    return "v" + std::to_string(v);
}

SimpleGraph SimpleGraph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    SimpleGraph g{Gf2Matrix(n), default_names(n)};
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n || u == v)
            throw InvalidInput("bad edge");
        g.adjacency.set(u, v, true);
        g.adjacency.set(v, u, true);
    }
    return g;
}

bool interlaced(const DoubleOccurrenceWord& w, int x, int y) {
    int n = w.symbol_count();
    if (x < 0 || y < 0 || x >= n || y >= n || x == y)
        throw InvalidInput("interlaced: unknown or equal symbols");
    int p1 = -1, p2 = -1;
    for (int i = 0; i < w.length(); ++i)
        if (w.letters[i] == x) (p1 < 0 ? p1 : p2) = i;
    int between = 0;
    for (int i = p1 + 1; i < p2; ++i)
        if (w.letters[i] == y) ++between;
    return between == 1;
}

SimpleGraph interlacement_graph(const DoubleOccurrenceWord& w) {
    int n = w.symbol_count();
    SimpleGraph g{Gf2Matrix(n), w.names};
    // first/second occurrence positions per symbol
    std::vector<int> p1(n, -1), p2(n, -1);
    for (int i = 0; i < w.length(); ++i) {
        int s = w.letters[i];
        (p1[s] < 0 ? p1[s] : p2[s]) = i;
    }
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            // chords (p1[x],p2[x]) and (p1[y],p2[y]) cross iff exactly one
            // endpoint of y lies inside the interval of x
            bool in1 = p1[x] < p1[y] && p1[y] < p2[x];
            bool in2 = p1[x] < p2[y] && p2[y] < p2[x];
            if (in1 != in2) {
                g.adjacency.set(x, y, true);
                g.adjacency.set(y, x, true);
            }
        }
    return g;
}

std::string to_dot(const SimpleGraph& g) {
    std::string s = "graph interlacement {\n";
    for (int v = 0; v < g.vertex_count(); ++v)
        s += "  \"" + g.name(v) + "\";\n";
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = u + 1; v < g.vertex_count(); ++v)
            if (g.adjacent(u, v))
                s += "  \"" + g.name(u) + "\" -- \"" + g.name(v) + "\";\n";
    s += "}\n";
    return s;
}

}  // namespace gausscode
