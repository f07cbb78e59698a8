#pragma once

// Graph constructors and the fixed graph collections used by the property and
// certificate checks. Every random choice is seeded from the arguments.

#include "clawfree/graph.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace clawfree::corpus {

struct NamedGraph {
    std::string name;
    Graph graph;
};

Graph empty(int n);
Graph path(int n);
Graph cycle(int n);
Graph complete(int n);
Graph complete_bipartite(int a, int b);
Graph star(int leaves);
Graph wheel(int rim);                 // hub joined to a cycle on `rim` vertices
Graph diamond();                      // K4 minus an edge
Graph petersen();
Graph cube();                         // 3-cube
Graph icosahedron();
Graph line_graph(const Graph& h);     // vertices = edges of h, in h.edges() order

/// G(n, p) with the given engine.
Graph random_graph(int n, double p, std::mt19937_64& rng);

/// A uniformly random permutation of 0..n-1.
std::vector<int> random_permutation(int n, std::mt19937_64& rng);

/// One representative per isomorphism class of graphs on exactly n vertices (n <= 6).
std::vector<Graph> all_graphs(int n);

/// One representative per isomorphism class of connected graphs with
/// 1..max_edges edges and no isolated vertices.
std::vector<Graph> connected_graphs_by_edges(int max_edges);

/// Graphs with at most 8 vertices used for the partition-scheme and
/// obstruction checks: every graph on <= 5 vertices, named graphs, small line
/// graphs, and 20 random graphs on 6-8 vertices (seed 20250101).
std::vector<NamedGraph> small_corpus();

/// Claw-free graphs with max degree >= 3 and at most 12 vertices: line graphs of
/// every connected graph with <= 5 edges plus named claw-free graphs.
std::vector<NamedGraph> certificate_corpus();

}  // namespace clawfree::corpus
