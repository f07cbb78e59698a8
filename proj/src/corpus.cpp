#include "clawfree/corpus.hpp"

#include "clawfree/chromatic.hpp"
#include "clawfree/errors.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace clawfree::corpus {

Graph empty(int n) { return Graph(n); }

Graph path(int n) {
    std::vector<Edge> e;
    for (int k = 0; k + 1 < n; ++k) e.emplace_back(k, k + 1);
    return Graph(n, e);
}

Graph cycle(int n) {
    if (n < 3) throw ContractViolation("cycle needs n >= 3");
    std::vector<Edge> e;
    for (int k = 0; k < n; ++k) e.emplace_back(k, (k + 1) % n);
    return Graph(n, e);
}

Graph complete(int n) {
    std::vector<Edge> e;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) e.emplace_back(a, b);
    return Graph(n, e);
}

Graph complete_bipartite(int a, int b) {
    std::vector<Edge> e;
    for (int x = 0; x < a; ++x)
        for (int y = 0; y < b; ++y) e.emplace_back(x, a + y);
    return Graph(a + b, e);
}

Graph star(int leaves) { return complete_bipartite(1, leaves); }

Graph wheel(int rim) {
    std::vector<Edge> e;
    for (int k = 0; k < rim; ++k) {
        e.emplace_back(0, 1 + k);
        e.emplace_back(1 + k, 1 + (k + 1) % rim);
    }
    return Graph(rim + 1, e);
}

Graph diamond() { return Graph(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}}); }

Graph petersen() {
    std::vector<Edge> e;
    for (int k = 0; k < 5; ++k) {
        e.emplace_back(k, (k + 1) % 5);
        e.emplace_back(k, k + 5);
        e.emplace_back(5 + k, 5 + (k + 2) % 5);
    }
    return Graph(10, e);
}

Graph cube() {
    std::vector<Edge> e;
    for (int v = 0; v < 8; ++v)
        for (int bit = 1; bit < 8; bit <<= 1)
            if ((v & bit) == 0) e.emplace_back(v, v | bit);
    return Graph(8, e);
}

Graph icosahedron() {
    // top 0, upper ring 1..5, lower ring 6..10, bottom 11
    std::vector<Edge> e;
    for (int k = 0; k < 5; ++k) {
        const int up = 1 + k, up_next = 1 + (k + 1) % 5;
        const int lo = 6 + k, lo_next = 6 + (k + 1) % 5;
        e.emplace_back(0, up);
        e.emplace_back(up, up_next);
        e.emplace_back(up, lo);
        e.emplace_back(up, lo_next);
        e.emplace_back(lo, lo_next);
        e.emplace_back(lo, 11);
    }
    return Graph(12, e);
}

Graph line_graph(const Graph& h) {
    const auto& he = h.edges();
    std::vector<Edge> e;
    for (std::size_t a = 0; a < he.size(); ++a)
        for (std::size_t b = a + 1; b < he.size(); ++b)
            if (he[a].contains(he[b].u) || he[a].contains(he[b].v))
                e.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    return Graph(static_cast<int>(he.size()), e);
}

Graph random_graph(int n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> e;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (coin(rng)) e.emplace_back(a, b);
    return Graph(n, e);
}

std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

namespace {

// Keeps the first graph of each isomorphism class, in input order.
class IsoFilter {
public:
    bool insert(const Graph& g) {
        auto& bucket = buckets_[isomorphism_invariant(g)];
        for (const Graph& seen : bucket)
            if (are_isomorphic(seen, g)) return false;
        bucket.push_back(g);
        return true;
    }

private:
    std::unordered_map<std::uint64_t, std::vector<Graph>> buckets_;
};

std::vector<Edge> all_pairs(int n) {
    std::vector<Edge> pairs;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
    return pairs;
}

}  // namespace

std::vector<Graph> all_graphs(int n) {
    if (n < 0 || n > 6) throw ContractViolation("all_graphs supports 0 <= n <= 6");
    const std::vector<Edge> pairs = all_pairs(n);
    IsoFilter filter;
    std::vector<Graph> out;
    for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
        std::vector<Edge> e;
        for (std::size_t k = 0; k < pairs.size(); ++k)
            if (mask >> k & 1u) e.push_back(pairs[k]);
        Graph g(n, e);
        if (filter.insert(g)) out.push_back(std::move(g));
    }
    return out;
}

std::vector<Graph> connected_graphs_by_edges(int max_edges) {
    if (max_edges < 1 || max_edges > 6) throw ContractViolation("connected_graphs_by_edges supports 1..6 edges");
    IsoFilter filter;
    std::vector<Graph> out;
    for (int m = 1; m <= max_edges; ++m) {
        const int n_max = m + 1;
        const std::vector<Edge> pairs = all_pairs(n_max);
        // choose m of the pairs; keep graphs whose edges cover a prefix 0..k-1 and are connected
        std::vector<int> pick(static_cast<std::size_t>(m));
        std::iota(pick.begin(), pick.end(), 0);
        const int total = static_cast<int>(pairs.size());
        while (true) {
            std::vector<Edge> e;
            int top = -1;
            for (int k : pick) {
                e.push_back(pairs[static_cast<std::size_t>(k)]);
                top = std::max(top, pairs[static_cast<std::size_t>(k)].v);
            }
            Graph g(top + 1, e);
            bool ok = true;
            for (Vertex v = 0; v < g.vertex_count() && ok; ++v) ok = g.degree(v) > 0;
            if (ok) {
                std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
                std::vector<Vertex> stack{0};
                seen[0] = 1;
                int reached = 1;
                while (!stack.empty()) {
                    Vertex x = stack.back();
                    stack.pop_back();
                    for (Vertex y : g.neighbors(x))
                        if (!seen[static_cast<std::size_t>(y)]) {
                            seen[static_cast<std::size_t>(y)] = 1;
                            ++reached;
                            stack.push_back(y);
                        }
                }
                ok = reached == g.vertex_count();
            }
            if (ok && filter.insert(g)) out.push_back(std::move(g));
            int i = m - 1;
            while (i >= 0 && pick[static_cast<std::size_t>(i)] == total - m + i) --i;
            if (i < 0) break;
            ++pick[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < m; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return out;
}

std::vector<NamedGraph> small_corpus() {
    std::vector<NamedGraph> out;
    for (int n = 1; n <= 5; ++n) {
        int k = 0;
        for (Graph& g : all_graphs(n)) out.push_back({"all" + std::to_string(n) + "_" + std::to_string(k++), std::move(g)});
    }
    out.push_back({"C6", cycle(6)});
    out.push_back({"C7", cycle(7)});
    out.push_back({"C8", cycle(8)});
    out.push_back({"K6", complete(6)});
    out.push_back({"K7", complete(7)});
    out.push_back({"wheel5", wheel(5)});
    out.push_back({"wheel6", wheel(6)});
    out.push_back({"K33", complete_bipartite(3, 3)});
    out.push_back({"cube", cube()});
    out.push_back({"L(K4)", line_graph(complete(4))});
    out.push_back({"L(P7)", line_graph(path(7))});
    out.push_back({"L(K13+leaf)", line_graph(Graph(5, {{0, 1}, {0, 2}, {0, 3}, {3, 4}}))});
    out.push_back({"L(T7)", line_graph(Graph(8, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}, {2, 6}, {2, 7}}))});
    out.push_back({"L(K23)", line_graph(complete_bipartite(2, 3))});
    out.push_back({"L(C4+chord)", line_graph(Graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}}))});
    out.push_back({"L(bull)", line_graph(Graph(5, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}}))});
    std::mt19937_64 rng(20250101);
    std::uniform_int_distribution<int> size(6, 8);
    for (int k = 0; k < 20; ++k) {
        const int n = size(rng);
        out.push_back({"random" + std::to_string(k), random_graph(n, 0.5, rng)});
    }
    return out;
}

std::vector<NamedGraph> certificate_corpus() {
    std::vector<NamedGraph> out;
    int k = 0;
    for (const Graph& h : connected_graphs_by_edges(5)) {
        Graph l = line_graph(h);
        if (max_degree(l) >= 3) out.push_back({"L(H" + std::to_string(k) + ")", std::move(l)});
        ++k;
    }
    out.push_back({"K4", complete(4)});
    out.push_back({"K5", complete(5)});
    out.push_back({"K6", complete(6)});
    out.push_back({"wheel5", wheel(5)});
    out.push_back({"icosahedron", icosahedron()});
    out.push_back({"L(K4)", line_graph(complete(4))});
    out.push_back({"L(K5)", line_graph(complete(5))});
    out.push_back({"L(K33)", line_graph(complete_bipartite(3, 3))});
    out.push_back({"L(K23)", line_graph(complete_bipartite(2, 3))});
    out.push_back({"L(cube)", line_graph(cube())});
    out.push_back({"L(T7)", line_graph(Graph(8, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}, {2, 6}, {2, 7}}))});
    out.push_back({"L(T10)", line_graph(Graph(11, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}, {2, 6}, {2, 7}, {3, 8}, {3, 9}, {4, 10}}))});
    // triangles strung along a cycle: no induced C4 or diamond
    out.push_back({"triangle-ring5", Graph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 5}, {1, 6}, {2, 6},
                                                {2, 7}, {3, 7}, {3, 8}, {4, 8}, {4, 9}, {0, 9}})});
    return out;
}

}  // namespace clawfree::corpus
