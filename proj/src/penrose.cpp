#include "clawfree/penrose.hpp"

#include "clawfree/errors.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <numeric>
#include <unordered_map>

namespace clawfree {

int enumeration_cap() {
    const char* env = std::getenv("CLAWFREE_MAX_ENUM");
    if (env == nullptr) return kDefaultEnumerationCap;
    int value = 0;
    const char* end = env + std::strlen(env);
    auto [ptr, ec] = std::from_chars(env, end, value);
    if (ec != std::errc() || ptr != end || value < 1 || value > kMaxEnumerationCap) return kDefaultEnumerationCap;
    return value;
}

// ---------------------------------------------------------------------------
// VertexOrdering

VertexOrdering::VertexOrdering(std::vector<Vertex> sequence) : sequence_(std::move(sequence)) {
    rank_.assign(sequence_.size(), -1);
    for (std::size_t k = 0; k < sequence_.size(); ++k) {
        Vertex v = sequence_[k];
        if (v < 0 || static_cast<std::size_t>(v) >= sequence_.size() || rank_[static_cast<std::size_t>(v)] != -1)
            throw ContractViolation("vertex ordering is not a permutation");
        rank_[static_cast<std::size_t>(v)] = static_cast<int>(k);
    }
}

VertexOrdering VertexOrdering::natural(int n) {
    std::vector<Vertex> seq(static_cast<std::size_t>(n));
    std::iota(seq.begin(), seq.end(), 0);
    return VertexOrdering(std::move(seq));
}

VertexOrdering VertexOrdering::anchored(const Graph& g, Vertex u) {
    if (u < 0 || u >= g.vertex_count()) throw ContractViolation("anchor vertex out of range");
    std::vector<Vertex> seq{u};
    for (Vertex w : g.neighbors(u)) seq.push_back(w);
    for (Vertex w = 0; w < g.vertex_count(); ++w)
        if (w != u && !g.has_edge(u, w)) seq.push_back(w);
    return VertexOrdering(std::move(seq));
}

VertexOrdering VertexOrdering::restricted(std::span<const Vertex> vertices) const {
    std::vector<std::pair<int, Vertex>> keyed;
    keyed.reserve(vertices.size());
    for (std::size_t k = 0; k < vertices.size(); ++k) keyed.emplace_back(rank(vertices[k]), static_cast<Vertex>(k));
    std::sort(keyed.begin(), keyed.end());
    std::vector<Vertex> seq;
    seq.reserve(keyed.size());
    for (const auto& [r, local] : keyed) seq.push_back(local);
    return VertexOrdering(std::move(seq));
}

// ---------------------------------------------------------------------------
// RootedTreeView

RootedTreeView::RootedTreeView(const Graph& g, const VertexOrdering& ord, std::span<const Edge> edges)
    : edges_(edges.begin(), edges.end()) {
    const int n = g.vertex_count();
    if (ord.size() != n) throw ContractViolation("ordering size does not match the graph");
    if (edges_.empty()) throw ContractViolation("a rooted tree needs at least one edge");
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw ContractViolation("tree has a repeated edge");

    std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n));
    for (const Edge& e : edges_) {
        if (!g.has_edge(e.u, e.v)) throw ContractViolation("tree edge is not an edge of the graph");
        adj[static_cast<std::size_t>(e.u)].push_back(e.v);
        adj[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    for (Vertex v = 0; v < n; ++v)
        if (!adj[static_cast<std::size_t>(v)].empty()) vertices_.push_back(v);
    if (vertices_.size() != edges_.size() + 1) throw ContractViolation("edge set is not a tree");

    root_ = *std::min_element(vertices_.begin(), vertices_.end(),
                              [&](Vertex a, Vertex b) { return ord.rank(a) < ord.rank(b); });
    depth_.assign(static_cast<std::size_t>(n), -1);
    father_.assign(static_cast<std::size_t>(n), -1);
    std::vector<Vertex> queue{root_};
    depth_[static_cast<std::size_t>(root_)] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        Vertex x = queue[head];
        for (Vertex y : adj[static_cast<std::size_t>(x)]) {
            if (depth_[static_cast<std::size_t>(y)] != -1) continue;
            depth_[static_cast<std::size_t>(y)] = depth_[static_cast<std::size_t>(x)] + 1;
            father_[static_cast<std::size_t>(y)] = x;
            queue.push_back(y);
        }
    }
    if (queue.size() != vertices_.size()) throw ContractViolation("edge set is not connected");
}

bool RootedTreeView::contains(Vertex v) const {
    return v >= 0 && static_cast<std::size_t>(v) < depth_.size() && depth_[static_cast<std::size_t>(v)] >= 0;
}

int RootedTreeView::depth(Vertex v) const { return contains(v) ? depth_[static_cast<std::size_t>(v)] : -1; }

Vertex RootedTreeView::father(Vertex v) const { return contains(v) ? father_[static_cast<std::size_t>(v)] : -1; }

// ---------------------------------------------------------------------------
// Forest

Forest::Forest(int n, std::span<const Edge> edges) : edges_(edges.begin(), edges.end()) {
    std::sort(edges_.begin(), edges_.end());
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    for (const Edge& e : edges_) {
        if (e.u < 0 || e.v >= n || e.u == e.v) throw ContractViolation("forest edge out of range");
        int a = find(e.u), b = find(e.v);
        if (a == b) throw ContractViolation("edge set contains a cycle");
        parent[static_cast<std::size_t>(a)] = b;
    }
    std::vector<int> slot(static_cast<std::size_t>(n), -1);
    for (const Edge& e : edges_) {
        int r = find(e.u);
        if (slot[static_cast<std::size_t>(r)] == -1) {
            slot[static_cast<std::size_t>(r)] = static_cast<int>(components_.size());
            components_.emplace_back();
        }
        components_[static_cast<std::size_t>(slot[static_cast<std::size_t>(r)])].push_back(e);
    }
}

// ---------------------------------------------------------------------------
// Closure

std::vector<Edge> penrose_closure(const Graph& g, const VertexOrdering& ord, const RootedTreeView& tree) {
    std::vector<Edge> out = tree.edges();
    for (Vertex x : tree.vertices()) {
        for (Vertex y : g.neighbors(x)) {
            if (y <= x || !tree.contains(y)) continue;
            const Edge e(x, y);
            if (std::binary_search(tree.edges().begin(), tree.edges().end(), e)) continue;
            const int dx = tree.depth(x), dy = tree.depth(y);
            bool added = dx == dy;
            if (dy == dx - 1 && ord.precedes(tree.father(x), y)) added = true;
            if (dx == dy - 1 && ord.precedes(tree.father(y), x)) added = true;
            if (added) out.push_back(e);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_penrose_tree(const Graph& g, const VertexOrdering& ord, const RootedTreeView& tree) {
    return penrose_closure(g, ord, tree).size() == tree.edges().size();
}

bool is_penrose_tree(const Graph& g, const VertexOrdering& ord, std::span<const Edge> tree_edges) {
    return is_penrose_tree(g, ord, RootedTreeView(g, ord, tree_edges));
}

bool is_penrose_forest(const Graph& g, const VertexOrdering& ord, const Forest& forest) {
    for (const auto& component : forest.components())
        if (!is_penrose_tree(g, ord, component)) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Enumeration
//
// Penrose trees rooted at r correspond one-to-one to sequences of non-empty
// vertex layers L0 = {r}, L1, L2, ... where every layer is independent and each
// vertex of L(k+1) has a neighbor in Lk. The father of such a vertex is its
// highest-ranked neighbor in Lk: any other neighbor there is ranked before the
// father, so the closure adds nothing between consecutive layers, nothing is
// added inside an independent layer, and edges spanning two or more layers are
// never added. Conversely the depth layers of a Penrose tree have exactly this
// shape. Everything below works on vertices renamed by rank.

namespace {

using Mask = std::uint32_t;

void check_cap(int n, int cap) {
    if (cap < 1 || cap > kMaxEnumerationCap)
        throw ContractViolation("enumeration cap must lie in 1.." + std::to_string(kMaxEnumerationCap));
    if (n > cap) throw CapExceeded("Penrose enumeration refused", static_cast<std::size_t>(n), static_cast<std::size_t>(cap));
}

int lowest(Mask m) { return std::countr_zero(m); }
int highest(Mask m) { return 31 - std::countl_zero(m); }

class RankGraph {
public:
    RankGraph(const Graph& g, const VertexOrdering& ord) : n_(g.vertex_count()), adj_(static_cast<std::size_t>(n_), 0) {
        if (ord.size() != n_) throw ContractViolation("ordering size does not match the graph");
        for (const Edge& e : g.edges()) {
            const int a = ord.rank(e.u), b = ord.rank(e.v);
            adj_[static_cast<std::size_t>(a)] |= Mask{1} << b;
            adj_[static_cast<std::size_t>(b)] |= Mask{1} << a;
        }
        vertex_at_ = ord.sequence();
    }

    int size() const { return n_; }
    Mask adj(int r) const { return adj_[static_cast<std::size_t>(r)]; }
    Vertex vertex(int r) const { return vertex_at_[static_cast<std::size_t>(r)]; }
    Mask full() const { return n_ == 32 ? ~Mask{0} : (Mask{1} << n_) - 1; }

    Mask neighborhood(Mask set) const {
        Mask out = 0;
        for (Mask s = set; s; s &= s - 1) out |= adj_[static_cast<std::size_t>(lowest(s))];
        return out;
    }

    bool independent(Mask set) const {
        for (Mask s = set; s; s &= s - 1)
            if (adj_[static_cast<std::size_t>(lowest(s))] & set) return false;
        return true;
    }

    Edge father_edge(int child, Mask previous_layer) const {
        return Edge(vertex(child), vertex(highest(adj(child) & previous_layer)));
    }

    /// Layerings of `rest` below `layer` that use every vertex of `rest`.
    std::uint64_t count_spanning(Mask layer, Mask rest) {
        if (rest == 0) return 1;
        const std::uint64_t key = (std::uint64_t{layer} << 32) | rest;
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        const Mask reach = neighborhood(layer) & rest;
        std::uint64_t total = 0;
        for (Mask next = reach; next; next = (next - 1) & reach)
            if (independent(next)) total += count_spanning(next, rest & ~next);
        memo_.emplace(key, total);
        return total;
    }

    /// Penrose trees spanning exactly `vertices`, rooted at its lowest rank.
    std::uint64_t spanning_trees(Mask vertices) {
        if (vertices == 0) return 0;
        const Mask root = vertices & (~vertices + 1);
        return count_spanning(root, vertices & ~root);
    }

    /// Every Penrose tree rooted at `root` with >= 1 edge using vertices of `avail`.
    template <class Visit>
    void each_tree(int root, Mask avail, Visit&& visit) {
        std::vector<Edge> edges;
        const Mask start = Mask{1} << root;
        grow(start, start, avail & ~start & ~((start << 1) - 1), edges, visit);
    }

private:
    template <class Visit>
    void grow(Mask used, Mask layer, Mask avail, std::vector<Edge>& edges, Visit& visit) {
        const Mask reach = neighborhood(layer) & avail;
        for (Mask next = reach; next; next = (next - 1) & reach) {
            if (!independent(next)) continue;
            const std::size_t mark = edges.size();
            for (Mask s = next; s; s &= s - 1) edges.push_back(father_edge(lowest(s), layer));
            visit(edges, used | next);
            grow(used | next, next, avail & ~next, edges, visit);
            edges.resize(mark);
        }
    }

    int n_;
    std::vector<Mask> adj_;
    std::vector<Vertex> vertex_at_;
    std::unordered_map<std::uint64_t, std::uint64_t> memo_;
};

// Forest polynomials of all induced subgraphs, by rank mask. Coefficients are
// bounded by the number of acyclic orientations (<= n!), so 64 bits suffice
// for n <= 16.
std::vector<std::vector<std::int64_t>> all_forest_polynomials(RankGraph& rg, std::vector<std::uint64_t>* tree_counts) {
    const int n = rg.size();
    const std::size_t subsets = std::size_t{1} << n;
    std::vector<std::uint64_t> t(subsets, 0);
    for (Mask m = 1; m < subsets; ++m)
        if (std::popcount(m) >= 2) t[m] = rg.spanning_trees(m);

    std::vector<std::vector<std::int64_t>> f(subsets);
    f[0] = {1};
    for (Mask u_set = 1; u_set < subsets; ++u_set) {
        const Mask least = u_set & (~u_set + 1);
        const Mask rest = u_set & ~least;
        std::vector<std::int64_t> acc = f[rest];
        acc.resize(static_cast<std::size_t>(std::popcount(u_set)), 0);
        for (Mask s = rest; s; s = (s - 1) & rest) {
            const std::uint64_t count = t[s | least];
            if (count == 0) continue;
            const std::size_t shift = static_cast<std::size_t>(std::popcount(s));
            const auto& tail = f[rest & ~s];
            for (std::size_t k = 0; k < tail.size(); ++k)
                acc[k + shift] += static_cast<std::int64_t>(count) * tail[k];
        }
        while (acc.size() > 1 && acc.back() == 0) acc.pop_back();
        f[u_set] = std::move(acc);
    }
    if (tree_counts) *tree_counts = std::move(t);
    return f;
}

SparsePolynomial to_polynomial(const std::vector<std::int64_t>& c) {
    std::vector<BigInt> big(c.begin(), c.end());
    return SparsePolynomial(std::move(big));
}

}  // namespace

void enumerate_penrose_forests(const Graph& g, const VertexOrdering& ord,
                               const std::function<void(const Forest&)>& visit, int cap) {
    check_cap(g.vertex_count(), cap);
    RankGraph rg(g, ord);
    const int n = g.vertex_count();
    std::vector<Edge> chosen;

    std::function<void(Mask)> recurse = [&](Mask remaining) {
        if (remaining == 0) {
            visit(Forest(n, chosen));
            return;
        }
        const int u = lowest(remaining);
        recurse(remaining & ~(Mask{1} << u));
        rg.each_tree(u, remaining, [&](const std::vector<Edge>& tree, Mask used) {
            const std::size_t mark = chosen.size();
            chosen.insert(chosen.end(), tree.begin(), tree.end());
            recurse(remaining & ~used);
            chosen.resize(mark);
        });
    };
    recurse(rg.full());
}

void enumerate_penrose_trees(const Graph& g, const VertexOrdering& ord, Vertex root, const std::vector<bool>& allowed,
                             const std::function<void(const std::vector<Edge>&)>& visit, int cap) {
    check_cap(g.vertex_count(), cap);
    if (root < 0 || root >= g.vertex_count()) throw ContractViolation("root out of range");
    if (static_cast<int>(allowed.size()) != g.vertex_count()) throw ContractViolation("allowed mask has the wrong size");
    RankGraph rg(g, ord);
    Mask avail = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (allowed[static_cast<std::size_t>(v)]) avail |= Mask{1} << ord.rank(v);
    rg.each_tree(ord.rank(root), avail, [&](const std::vector<Edge>& tree, Mask) {
        std::vector<Edge> sorted = tree;
        std::sort(sorted.begin(), sorted.end());
        visit(sorted);
    });
}

SparsePolynomial penrose_polynomial(const Graph& g, const VertexOrdering& ord, int cap) {
    check_cap(g.vertex_count(), cap);
    RankGraph rg(g, ord);
    return to_polynomial(all_forest_polynomials(rg, nullptr).back());
}

SparsePolynomial penrose_polynomial(const Graph& g, int cap) {
    return penrose_polynomial(g, VertexOrdering::natural(g.vertex_count()), cap);
}

SparsePolynomial chromatic_via_penrose(const Graph& g, const VertexOrdering& ord, int cap) {
    return substitute_negative_reciprocal(penrose_polynomial(g, ord, cap), g.vertex_count());
}

SparsePolynomial chromatic_via_penrose(const Graph& g, int cap) {
    return chromatic_via_penrose(g, VertexOrdering::natural(g.vertex_count()), cap);
}

ForestPolynomialTable::ForestPolynomialTable(const Graph& g, int cap) : n_(g.vertex_count()) {
    check_cap(n_, cap);
    RankGraph rg(g, VertexOrdering::natural(n_));
    full_ = rg.full();
    auto raw = all_forest_polynomials(rg, &tree_counts_);
    polys_.reserve(raw.size());
    for (const auto& c : raw) polys_.push_back(to_polynomial(c));
}

std::vector<BigInt> penrose_tree_counts(const Graph& g, const VertexOrdering& ord, Vertex v, int max_edges, int cap) {
    check_cap(g.vertex_count(), cap);
    if (v < 0 || v >= g.vertex_count()) throw ContractViolation("vertex out of range");
    if (max_edges < 0) throw ContractViolation("max_edges must be non-negative");
    RankGraph rg(g, ord);
    const Mask bit = Mask{1} << ord.rank(v);
    const Mask others = rg.full() & ~bit;
    std::vector<BigInt> out(static_cast<std::size_t>(max_edges) + 1, 0);
    out[0] = 1;
    for (Mask s = others; s; s = (s - 1) & others) {
        const int edges = std::popcount(s);
        if (edges > max_edges) continue;
        out[static_cast<std::size_t>(edges)] += rg.spanning_trees(s | bit);
    }
    while (out.size() > 1 && out.back() == 0) out.pop_back();
    return out;
}

std::complex<double> ratio_R(const Graph& g, Vertex u, std::complex<double> z, int cap) {
    const VertexOrdering ord = VertexOrdering::anchored(g, u);
    const SparsePolynomial whole = penrose_polynomial(g, ord, cap);
    std::vector<Vertex> rest;
    for (Vertex w = 0; w < g.vertex_count(); ++w)
        if (w != u) rest.push_back(w);
    const SparsePolynomial without =
        penrose_polynomial(g.induced(rest), ord.restricted(rest), cap);
    const std::complex<double> denom = without.evaluate(z);
    const double scale = without.magnitude_bound(std::abs(z));
    if (std::abs(denom) <= kDenominatorTolerance * scale)
        throw ConditioningError("F_{V-u}(z) is numerically zero", std::abs(denom));
    return whole.evaluate(z) / denom - 1.0;
}

// ---------------------------------------------------------------------------
// Obstructions for joining two Penrose branches below u

ObstructionResult obstruction_check(const Graph& g, const VertexOrdering& ord, Vertex u, Vertex v1, Vertex v2,
                                    std::span<const Edge> tau1, std::span<const Edge> tau2) {
    const int n = g.vertex_count();
    if (ord.size() != n) throw ContractViolation("ordering size does not match the graph");
    if (n < 3 || ord.at(0) != u || ord.at(1) != v1 || ord.at(2) != v2)
        throw ContractViolation("ordering must start with u, v1, v2");
    if (!g.has_edge(u, v1) || !g.has_edge(u, v2)) throw ContractViolation("v1 and v2 must be neighbors of u");
    if (g.has_edge(v1, v2)) throw ContractViolation("{v1, v2} must be independent");

    // depth in the joined tree and father, per vertex; branch 0 = outside
    std::vector<int> depth(static_cast<std::size_t>(n), -1);
    std::vector<Vertex> father(static_cast<std::size_t>(n), -1);
    std::vector<int> branch(static_cast<std::size_t>(n), 0);
    depth[static_cast<std::size_t>(u)] = 0;

    auto place = [&](std::span<const Edge> tau, Vertex vi, int which) {
        branch[static_cast<std::size_t>(vi)] = which;
        depth[static_cast<std::size_t>(vi)] = 1;
        father[static_cast<std::size_t>(vi)] = u;
        if (tau.empty()) return;
        RootedTreeView view(g, ord, tau);
        if (view.root() != vi) throw ContractViolation("branch tree must contain its v_i as least vertex");
        if (view.contains(u)) throw ContractViolation("branch tree must avoid u");
        if (!is_penrose_tree(g, ord, view)) throw ContractViolation("branch tree is not a Penrose tree");
        for (Vertex x : view.vertices()) {
            if (branch[static_cast<std::size_t>(x)] != 0 && x != vi)
                throw ContractViolation("branch trees must be vertex-disjoint");
            branch[static_cast<std::size_t>(x)] = which;
            depth[static_cast<std::size_t>(x)] = view.depth(x) + 1;
            if (x != vi) father[static_cast<std::size_t>(x)] = view.father(x);
        }
    };
    place(tau1, v1, 1);
    if (branch[static_cast<std::size_t>(v2)] != 0) throw ContractViolation("branch trees must be vertex-disjoint");
    place(tau2, v2, 2);

    ObstructionResult result;
    for (const Edge& e : g.edges()) {
        const int bu = branch[static_cast<std::size_t>(e.u)], bv = branch[static_cast<std::size_t>(e.v)];
        if (bu == 0 || bv == 0 || bu == bv) continue;
        const int du = depth[static_cast<std::size_t>(e.u)], dv = depth[static_cast<std::size_t>(e.v)];
        if (du == dv) result.same_depth = true;
        if (dv == du - 1 && ord.precedes(father[static_cast<std::size_t>(e.u)], e.v)) result.father_order = true;
        if (du == dv - 1 && ord.precedes(father[static_cast<std::size_t>(e.v)], e.u)) result.father_order = true;
    }
    for (const Edge& e : tau1) {
        const Vertex child = e.u == v1 ? e.v : (e.v == v1 ? e.u : -1);
        if (child >= 0 && g.has_edge(v2, child)) result.child_of_first = true;
    }
    return result;
}

}  // namespace clawfree
