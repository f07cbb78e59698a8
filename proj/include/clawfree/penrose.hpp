#pragma once

// The Penrose partition scheme: the closure map on rooted trees, enumeration
// of Penrose trees and forests, the forest polynomial F_G(z), and the
// chromatic polynomial it encodes through P_G(q) = q^|V| F_G(-1/q).
//
// A tree is always rooted at its least vertex under a fixed total order. Its
// closure adds every non-tree edge inside its vertex set that joins two
// vertices at the same depth, or joins x to a vertex y one level up with
// y ranked after the father of x. Penrose trees are the fixed points.

#include "clawfree/graph.hpp"
#include "clawfree/polynomial.hpp"

#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace clawfree {

/// Default ceiling on |V| for exponential enumeration; see enumeration_cap().
inline constexpr int kDefaultEnumerationCap = 12;
/// Hard ceiling: the enumeration works on 32-bit vertex masks with 64-bit counts.
inline constexpr int kMaxEnumerationCap = 16;

/// Enumeration cap in effect: CLAWFREE_MAX_ENUM if set and valid, else the default.
int enumeration_cap();

/// Total order on 0..n-1. Position 0 is the least vertex.
class VertexOrdering {
public:
    VertexOrdering() = default;

    /// `sequence[k]` is the vertex at position k. Throws ContractViolation if not a permutation.
    explicit VertexOrdering(std::vector<Vertex> sequence);

    static VertexOrdering natural(int n);

    /// u first, then the neighbors of u, then everything else; ties by label.
    static VertexOrdering anchored(const Graph& g, Vertex u);

    int size() const noexcept { return static_cast<int>(sequence_.size()); }
    int rank(Vertex v) const { return rank_.at(static_cast<std::size_t>(v)); }
    Vertex at(int position) const { return sequence_.at(static_cast<std::size_t>(position)); }
    const std::vector<Vertex>& sequence() const noexcept { return sequence_; }
    bool precedes(Vertex a, Vertex b) const { return rank(a) < rank(b); }

    /// The order restricted to `vertices`, relabeled as induced() relabels them.
    VertexOrdering restricted(std::span<const Vertex> vertices) const;

private:
    std::vector<Vertex> sequence_;
    std::vector<int> rank_;
};

/// A non-empty edge set forming a tree, rooted at its least vertex.
class RootedTreeView {
public:
    /// Throws ContractViolation unless `edges` is a non-empty tree of g.
    RootedTreeView(const Graph& g, const VertexOrdering& ord, std::span<const Edge> edges);

    Vertex root() const noexcept { return root_; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
    bool contains(Vertex v) const;
    /// -1 for vertices outside the tree.
    int depth(Vertex v) const;
    /// -1 for the root and for vertices outside the tree.
    Vertex father(Vertex v) const;

private:
    Vertex root_ = -1;
    std::vector<Edge> edges_;
    std::vector<Vertex> vertices_;
    std::vector<int> depth_;
    std::vector<Vertex> father_;
};

/// Vertex-disjoint union of trees. The empty forest is allowed.
class Forest {
public:
    Forest() = default;
    /// Throws ContractViolation if the edges contain a cycle or leave 0..n-1.
    Forest(int n, std::span<const Edge> edges);

    int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const std::vector<std::vector<Edge>>& components() const noexcept { return components_; }

private:
    std::vector<Edge> edges_;
    std::vector<std::vector<Edge>> components_;
};

/// tau together with the edges the Penrose map adds to it, sorted.
std::vector<Edge> penrose_closure(const Graph& g, const VertexOrdering& ord, const RootedTreeView& tree);

bool is_penrose_tree(const Graph& g, const VertexOrdering& ord, const RootedTreeView& tree);
bool is_penrose_tree(const Graph& g, const VertexOrdering& ord, std::span<const Edge> tree_edges);
bool is_penrose_forest(const Graph& g, const VertexOrdering& ord, const Forest& forest);

/// Calls `visit` once per Penrose forest (the empty forest included).
/// Throws CapExceeded when |V| exceeds `cap`.
void enumerate_penrose_forests(const Graph& g, const VertexOrdering& ord,
                               const std::function<void(const Forest&)>& visit,
                               int cap = enumeration_cap());

/// Calls `visit` with the edge set of every Penrose tree of g with at least one
/// edge, rooted at `root`, whose vertices all lie in `allowed` (indexed by vertex).
/// Vertices ranked before `root` are never used.
void enumerate_penrose_trees(const Graph& g, const VertexOrdering& ord, Vertex root,
                             const std::vector<bool>& allowed,
                             const std::function<void(const std::vector<Edge>&)>& visit,
                             int cap = enumeration_cap());

/// F_G(z): coefficient k counts Penrose forests with k edges.
SparsePolynomial penrose_polynomial(const Graph& g, const VertexOrdering& ord, int cap = enumeration_cap());
SparsePolynomial penrose_polynomial(const Graph& g, int cap = enumeration_cap());

/// Chromatic polynomial in q, read off the forest polynomial.
SparsePolynomial chromatic_via_penrose(const Graph& g, const VertexOrdering& ord, int cap = enumeration_cap());
SparsePolynomial chromatic_via_penrose(const Graph& g, int cap = enumeration_cap());

/// Forest polynomials F_U(z) of every induced subgraph G|U, indexed by the
/// vertex mask of U (bit v set iff v in U). Built once in O(3^n).
class ForestPolynomialTable {
public:
    explicit ForestPolynomialTable(const Graph& g, int cap = enumeration_cap());

    int vertex_count() const noexcept { return n_; }
    std::uint32_t full_mask() const noexcept { return full_; }
    const SparsePolynomial& of(std::uint32_t mask) const { return polys_.at(mask); }

    /// Number of Penrose trees spanning exactly the vertices of `mask`
    /// under the natural order (0 if G|mask is disconnected).
    std::uint64_t spanning_penrose_trees(std::uint32_t mask) const { return tree_counts_.at(mask); }

private:
    int n_ = 0;
    std::uint32_t full_ = 0;
    std::vector<std::uint64_t> tree_counts_;
    std::vector<SparsePolynomial> polys_;
};

/// Number of Penrose trees of g (under `ord`) that contain v, by edge count,
/// truncated after `max_edges`. Entry 0 is 1 for the empty tree.
std::vector<BigInt> penrose_tree_counts(const Graph& g, const VertexOrdering& ord, Vertex v, int max_edges,
                                        int cap = enumeration_cap());

/// Relative threshold below which a complex polynomial value is treated as zero.
inline constexpr double kDenominatorTolerance = 1e-9;

/// R^u_G(z) = F_V(z) / F_{V-u}(z) - 1 evaluated under the ordering anchored at u.
/// Throws ConditioningError when |F_{V-u}(z)| is below tolerance * sum_k |c_k| |z|^k.
std::complex<double> ratio_R(const Graph& g, Vertex u, std::complex<double> z, int cap = enumeration_cap());

/// Which cross-branch conditions make F + {u v1, u v2} fail to be a Penrose tree.
struct ObstructionResult {
    bool same_depth = false;      // (a) cross edge between equal depths
    bool father_order = false;    // (b) cross edge one level apart, lower endpoint ranked after the father
    bool child_of_first = false;  // (c) edge {v2, x} with x a child of v1
    bool penrose() const noexcept { return !(same_depth || father_order || child_of_first); }
};

/// Classifies tau1 + tau2 + {u v1, u v2}. Preconditions (ContractViolation otherwise):
/// u, v1, v2 are the first three vertices of `ord`; {v1, v2} is an independent pair in
/// the neighborhood of u; each tau_i is empty or a Penrose tree containing v_i and not u;
/// the two trees are vertex-disjoint.
ObstructionResult obstruction_check(const Graph& g, const VertexOrdering& ord, Vertex u, Vertex v1, Vertex v2,
                                    std::span<const Edge> tau1, std::span<const Edge> tau2);

}  // namespace clawfree
