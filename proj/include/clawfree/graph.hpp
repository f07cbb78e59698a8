#pragma once

// Finite simple graphs on vertices 0..n-1, the edge-list text format, and the
// induced-subgraph classification used to pick a zero-free bound.

#include <boost/rational.hpp>

#include <compare>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace clawfree {

using Vertex = int;
using Rational = boost::rational<std::int64_t>;

/// Unordered vertex pair, stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    Vertex other(Vertex x) const { return x == u ? v : u; }
    bool contains(Vertex x) const { return x == u || x == v; }

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable simple graph. Edges are kept sorted; neighbor lists are sorted.
class Graph {
public:
    Graph() = default;

    /// Edgeless graph on n vertices.
    explicit Graph(int n);

    /// Throws ContractViolation on self-loops or endpoints outside 0..n-1.
    /// Duplicate pairs are merged.
    Graph(int n, std::span<const Edge> edges);
    Graph(int n, std::initializer_list<Edge> edges)
        : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

    int vertex_count() const noexcept { return n_; }
    int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_.at(static_cast<std::size_t>(v)); }
    int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
    bool has_edge(Vertex a, Vertex b) const;

    /// Index of {a,b} in edges(), or -1.
    int edge_index(Vertex a, Vertex b) const;

    /// Subgraph induced by `vertices`; vertex vertices[k] becomes k.
    Graph induced(std::span<const Vertex> vertices) const;

    /// Relabeling with new_label[old] as the new name of each vertex.
    Graph relabeled(std::span<const Vertex> new_label) const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adj_;
};

struct ParsedGraph {
    Graph graph;
    int duplicate_edges = 0;  // repeated pairs merged during parsing
};

/// Parses the "n m" header followed by m "u v" lines; '#' lines and blank lines are skipped.
ParsedGraph parse_graph(std::string_view text);
ParsedGraph load_graph_file(const std::filesystem::path& path);

/// Renders g in the format parse_graph accepts.
std::string to_edge_list(const Graph& g);

int max_degree(const Graph& g);

bool is_claw_free(const Graph& g);
bool is_square_free(const Graph& g);
bool is_diamond_free(const Graph& g);

struct ClassMembership {
    bool claw_free = false;
    bool square_free = false;
    bool diamond_free = false;
    /// 1 for (claw, C4, diamond)-free, 0 for claw-free only, empty otherwise.
    std::optional<int> class_index;
};

ClassMembership classify(const Graph& g);

/// Non-adjacent pairs {w, w'} inside the neighborhood of v.
std::vector<std::pair<Vertex, Vertex>> non_edges_in_neighborhood(const Graph& g, Vertex v);

struct NeighborhoodStats {
    int delta = 0;
    std::vector<int> non_edge_counts;  // |I_v| per vertex
    int max_non_edges = 0;
};

NeighborhoodStats neighborhood_stats(const Graph& g);

/// max_v |I_v| / floor(delta^2/4), exact and unclamped.
/// Throws DegenerateDenominator when delta <= 1.
Rational pair_independence_ratio(const Graph& g);

}  // namespace clawfree
