#pragma once

#include <string>

#include "harmonet/matrix.hpp"

namespace harmonet {

enum class GraphFamily { Path, Ring, Complete, Lattice, Platonic };

enum class PlatonicSolid { Tetrahedron, Cube, Octahedron, Dodecahedron, Icosahedron };

// Simple undirected graph, carried around as its 0/1 adjacency matrix plus
// enough family metadata to label output rows.
struct Graph {
    int n = 0;
    Matrix adjacency;  // n x n, symmetric, zero diagonal, entries exactly 0 or 1
    GraphFamily family = GraphFamily::Path;
    std::string name;  // canonical spec string, e.g. "ring:11" or "cube"

    // Family parameters; meaningful only for the matching family tag.
    int lattice_dim = 0;
    int lattice_side = 0;
    PlatonicSolid solid = PlatonicSolid::Tetrahedron;

    bool adjacent(int i, int j) const;
    int degree(int v) const;
    int edge_count() const;
};

// Factories. Vertex labelings are fixed so that (0, 1) is an edge in every
// family, which keeps "--pair 0,1" meaning "an adjacent pair" everywhere.
Graph make_path(int n);          // n >= 2 vertices in a line
Graph make_ring(int n);          // n >= 3 vertices in a cycle
Graph make_complete(int n);      // n >= 2, all pairs joined
Graph make_lattice(int dim, int side);  // periodic hypercubic torus, dim in {1,2,3}, side >= 3
Graph make_platonic(PlatonicSolid solid);

// Hop count between two vertices (BFS). Throws std::invalid_argument for
// out-of-range indices; connectedness is guaranteed by the factories.
int graph_distance(const Graph& g, int i, int j);

// Parse a command-line style graph spec: "path:N", "ring:N", "complete:N",
// "lattice:D:SIDE", or a solid name ("tetrahedron", "cube", "octahedron",
// "dodecahedron", "icosahedron"). Throws std::invalid_argument on anything else.
Graph parse_graph_spec(const std::string& spec);

const char* solid_name(PlatonicSolid solid);

}  // namespace harmonet
