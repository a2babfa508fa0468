#include "harmonet/graphs.hpp"

#include <array>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace harmonet {

namespace {

void add_edge(Matrix& a, int i, int j) {
    if (i == j) throw std::logic_error("self loop in edge table");
    a(i, j) = 1.0;
    a(j, i) = 1.0;
}

Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g;
    g.n = n;
    g.adjacency = Matrix(n, n);
    for (auto [i, j] : edges) add_edge(g.adjacency, i, j);
    return g;
}

// Hardwired edge tables for the two larger solids. The small three are
// generated. Labelings are chosen so vertex 0 and vertex 1 share an edge.
//
// Dodecahedron: outer 10-cycle 0..9 plus inner vertices 10..19, where inner
// vertex 10+i links to outer i and to inner neighbours two steps away. This
// is the standard generalized Petersen GP(10, 2) presentation.
std::vector<std::pair<int, int>> dodecahedron_edges() {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 10; ++i) {
        e.emplace_back(i, (i + 1) % 10);
        e.emplace_back(i, 10 + i);
        e.emplace_back(10 + i, 10 + (i + 2) % 10);
    }
    return e;
}

// Icosahedron: apex 0 over an upper pentagon 1..5, lower pentagon 6..10,
// bottom apex 11. Each upper vertex k sees the apex, its pentagon
// neighbours, and two lower vertices (k+5 and the cyclic successor).
std::vector<std::pair<int, int>> icosahedron_edges() {
    std::vector<std::pair<int, int>> e;
    for (int k = 1; k <= 5; ++k) {
        int next = k % 5 + 1;  // cyclic successor within 1..5
        e.emplace_back(0, k);
        e.emplace_back(k, next);
        e.emplace_back(11, k + 5);
        e.emplace_back(k + 5, next + 5);
        e.emplace_back(k, k + 5);
        e.emplace_back(k, next + 5);
    }
    return e;
}

// Degree regularity and count sanity for the literal edge tables; cheap
// enough to run on every construction.
void check_regular(const Graph& g, int expect_n, int expect_degree) {
    if (g.n != expect_n) throw std::logic_error("solid has wrong vertex count");
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) != expect_degree) throw std::logic_error("solid is not regular");
}

}  // namespace

bool Graph::adjacent(int i, int j) const { return adjacency(i, j) != 0.0; }

int Graph::degree(int v) const {
    int d = 0;
    for (int j = 0; j < n; ++j)
        if (adjacency(v, j) != 0.0) ++d;
    return d;
}

int Graph::edge_count() const {
    int total = 0;
    for (int v = 0; v < n; ++v) total += degree(v);
    return total / 2;
}

Graph make_path(int n) {
    if (n < 2) throw std::invalid_argument("path graph needs at least 2 vertices");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    Graph g = from_edges(n, edges);
    g.family = GraphFamily::Path;
    g.name = "path:" + std::to_string(n);
    return g;
}

Graph make_ring(int n) {
    if (n < 3) throw std::invalid_argument("ring graph needs at least 3 vertices");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    Graph g = from_edges(n, edges);
    g.family = GraphFamily::Ring;
    g.name = "ring:" + std::to_string(n);
    return g;
}

Graph make_complete(int n) {
    if (n < 2) throw std::invalid_argument("complete graph needs at least 2 vertices");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    Graph g = from_edges(n, edges);
    g.family = GraphFamily::Complete;
    g.name = "complete:" + std::to_string(n);
    return g;
}

Graph make_lattice(int dim, int side) {
    if (dim < 1 || dim > 3) throw std::invalid_argument("lattice dimension must be 1, 2 or 3");
    if (side < 3) throw std::invalid_argument("lattice side must be at least 3");

    // Vertices are mixed-radix tuples (x_1..x_d) flattened with x_1 fastest,
    // so vertex 1 differs from vertex 0 by one step along the first axis.
    int n = 1;
    for (int k = 0; k < dim; ++k) n *= side;

    std::vector<std::pair<int, int>> edges;
    int stride = 1;
    for (int axis = 0; axis < dim; ++axis) {
        for (int v = 0; v < n; ++v) {
            int coord = (v / stride) % side;
            int next = v + ((coord + 1) % side - coord) * stride;  // wrap along this axis
            edges.emplace_back(v, next);
        }
        stride *= side;
    }

    Graph g = from_edges(n, edges);
    g.family = GraphFamily::Lattice;
    g.lattice_dim = dim;
    g.lattice_side = side;
    g.name = "lattice:" + std::to_string(dim) + ":" + std::to_string(side);
    return g;
}

Graph make_platonic(PlatonicSolid solid) {
    Graph g;
    switch (solid) {
        case PlatonicSolid::Tetrahedron:
            g = make_complete(4);
            check_regular(g, 4, 3);
            break;
        case PlatonicSolid::Cube: {
            // Vertices are 3-bit strings, edges flip one bit.
            std::vector<std::pair<int, int>> edges;
            for (int v = 0; v < 8; ++v)
                for (int b = 0; b < 3; ++b)
                    if (v < (v ^ (1 << b))) edges.emplace_back(v, v ^ (1 << b));
            g = from_edges(8, edges);
            check_regular(g, 8, 3);
            break;
        }
        case PlatonicSolid::Octahedron: {
            // Complete graph on 6 minus a perfect matching (i, i+3).
            std::vector<std::pair<int, int>> edges;
            for (int i = 0; i < 6; ++i)
                for (int j = i + 1; j < 6; ++j)
                    if (j - i != 3) edges.emplace_back(i, j);
            g = from_edges(6, edges);
            check_regular(g, 6, 4);
            break;
        }
        case PlatonicSolid::Dodecahedron:
            g = from_edges(20, dodecahedron_edges());
            check_regular(g, 20, 3);
            break;
        case PlatonicSolid::Icosahedron:
            g = from_edges(12, icosahedron_edges());
            check_regular(g, 12, 5);
            break;
        default:
            throw std::invalid_argument("unknown platonic solid");
    }
    g.family = GraphFamily::Platonic;
    g.solid = solid;
    g.name = solid_name(solid);
    return g;
}

int graph_distance(const Graph& g, int i, int j) {
    if (i < 0 || i >= g.n || j < 0 || j >= g.n)
        throw std::invalid_argument("vertex index out of range");
    if (i == j) return 0;

    std::vector<int> dist(g.n, -1);
    std::queue<int> frontier;
    dist[i] = 0;
    frontier.push(i);
    while (!frontier.empty()) {
        int v = frontier.front();
        frontier.pop();
        for (int w = 0; w < g.n; ++w) {
            if (g.adjacency(v, w) != 0.0 && dist[w] < 0) {
                dist[w] = dist[v] + 1;
                if (w == j) return dist[w];
                frontier.push(w);
            }
        }
    }
    throw std::logic_error("graph is not connected");  // factories never produce this
}

const char* solid_name(PlatonicSolid solid) {
    switch (solid) {
        case PlatonicSolid::Tetrahedron: return "tetrahedron";
        case PlatonicSolid::Cube: return "cube";
        case PlatonicSolid::Octahedron: return "octahedron";
        case PlatonicSolid::Dodecahedron: return "dodecahedron";
        case PlatonicSolid::Icosahedron: return "icosahedron";
    }
    return "?";
}

Graph parse_graph_spec(const std::string& spec) {
    static const std::array<std::pair<const char*, PlatonicSolid>, 5> solids = {{
        {"tetrahedron", PlatonicSolid::Tetrahedron},
        {"cube", PlatonicSolid::Cube},
        {"octahedron", PlatonicSolid::Octahedron},
        {"dodecahedron", PlatonicSolid::Dodecahedron},
        {"icosahedron", PlatonicSolid::Icosahedron},
    }};
    for (auto& [name, solid] : solids)
        if (spec == name) return make_platonic(solid);

    std::vector<std::string> parts;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);

    auto parse_int = [&](const std::string& s) {
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(s, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad integer '" + s + "' in graph spec '" + spec + "'");
        }
        if (used != s.size())
            throw std::invalid_argument("bad integer '" + s + "' in graph spec '" + spec + "'");
        return value;
    };

    if (parts.size() == 2) {
        int n = parse_int(parts[1]);
        if (parts[0] == "path") return make_path(n);
        if (parts[0] == "ring") return make_ring(n);
        if (parts[0] == "complete") return make_complete(n);
    } else if (parts.size() == 3 && parts[0] == "lattice") {
        return make_lattice(parse_int(parts[1]), parse_int(parts[2]));
    }
    throw std::invalid_argument("unrecognized graph spec '" + spec + "'");
}

}  // namespace harmonet
