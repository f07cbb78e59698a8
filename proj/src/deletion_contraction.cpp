#include "clawfree/chromatic.hpp"

#include "clawfree/errors.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <unordered_map>

namespace clawfree {

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

}  // namespace

std::vector<int> refined_colors(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> color(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) color[static_cast<std::size_t>(v)] = g.degree(v);

    for (int round = 0; round < n + 1; ++round) {
        // signature = (own color, sorted neighbor colors); renumber by sorted signature
        std::vector<std::pair<std::vector<int>, Vertex>> sig;
        sig.reserve(static_cast<std::size_t>(n));
        for (Vertex v = 0; v < n; ++v) {
            std::vector<int> s{color[static_cast<std::size_t>(v)]};
            for (Vertex w : g.neighbors(v)) s.push_back(color[static_cast<std::size_t>(w)]);
            std::sort(s.begin() + 1, s.end());
            sig.emplace_back(std::move(s), v);
        }
        std::sort(sig.begin(), sig.end());
        std::vector<int> next(static_cast<std::size_t>(n));
        int id = -1;
        for (std::size_t k = 0; k < sig.size(); ++k) {
            if (k == 0 || sig[k].first != sig[k - 1].first) ++id;
            next[static_cast<std::size_t>(sig[k].second)] = id;
        }
        const auto classes = [](const std::vector<int>& c) {
            return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
        };
        const bool stable = classes(next) == classes(color);
        color = std::move(next);
        if (stable && round > 0) break;
    }
    return color;
}

std::uint64_t isomorphism_invariant(const Graph& g) {
    const std::vector<int> color = refined_colors(g);
    std::vector<std::pair<int, std::vector<int>>> cells;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        std::vector<int> nb;
        for (Vertex w : g.neighbors(v)) nb.push_back(color[static_cast<std::size_t>(w)]);
        std::sort(nb.begin(), nb.end());
        cells.emplace_back(color[static_cast<std::size_t>(v)], std::move(nb));
    }
    std::sort(cells.begin(), cells.end());
    std::uint64_t h = mix(static_cast<std::uint64_t>(g.vertex_count()), static_cast<std::uint64_t>(g.edge_count()));
    for (const auto& [c, nb] : cells) {
        h = mix(h, static_cast<std::uint64_t>(c));
        for (int x : nb) h = mix(h, static_cast<std::uint64_t>(x) + 1000003ULL);
    }
    return h;
}

bool are_isomorphic(const Graph& a, const Graph& b) {
    const int n = a.vertex_count();
    if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    if (isomorphism_invariant(a) != isomorphism_invariant(b)) return false;

    // Colors are label-independent ids, so a color-preserving bijection is required.
    const std::vector<int> ca = refined_colors(a), cb = refined_colors(b);
    std::vector<Vertex> order(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
    // place vertices of rare colors first
    std::map<int, int> freq;
    for (int c : ca) ++freq[c];
    std::sort(order.begin(), order.end(), [&](Vertex x, Vertex y) {
        int fx = freq[ca[static_cast<std::size_t>(x)]], fy = freq[ca[static_cast<std::size_t>(y)]];
        return fx != fy ? fx < fy : x < y;
    });

    std::vector<Vertex> image(static_cast<std::size_t>(n), -1);
    std::vector<char> taken(static_cast<std::size_t>(n), 0);
    auto extend = [&](auto&& self, std::size_t k) -> bool {
        if (k == order.size()) return true;
        const Vertex x = order[k];
        for (Vertex y = 0; y < n; ++y) {
            if (taken[static_cast<std::size_t>(y)] || cb[static_cast<std::size_t>(y)] != ca[static_cast<std::size_t>(x)]) continue;
            bool ok = true;
            for (std::size_t j = 0; j < k && ok; ++j) {
                const Vertex px = order[j];
                ok = a.has_edge(x, px) == b.has_edge(y, image[static_cast<std::size_t>(px)]);
            }
            if (!ok) continue;
            image[static_cast<std::size_t>(x)] = y;
            taken[static_cast<std::size_t>(y)] = 1;
            if (self(self, k + 1)) return true;
            taken[static_cast<std::size_t>(y)] = 0;
        }
        return false;
    };
    return extend(extend, 0);
}

namespace {

SparsePolynomial falling_factorial(int n) {
    SparsePolynomial p{1};
    for (int k = 0; k < n; ++k) p = p * SparsePolynomial{-k, 1};
    return p;
}

SparsePolynomial power_of_q(int n) { return SparsePolynomial::monomial(1, n); }

class DeletionContraction {
public:
    SparsePolynomial solve(const Graph& g) {
        const int n = g.vertex_count();
        const int m = g.edge_count();
        if (m == 0) return power_of_q(n);
        if (2 * m == n * (n - 1)) return falling_factorial(n);

        // split into connected components
        std::vector<int> comp(static_cast<std::size_t>(n), -1);
        int count = 0;
        for (Vertex s = 0; s < n; ++s) {
            if (comp[static_cast<std::size_t>(s)] != -1) continue;
            std::vector<Vertex> stack{s};
            comp[static_cast<std::size_t>(s)] = count;
            while (!stack.empty()) {
                Vertex x = stack.back();
                stack.pop_back();
                for (Vertex y : g.neighbors(x))
                    if (comp[static_cast<std::size_t>(y)] == -1) {
                        comp[static_cast<std::size_t>(y)] = count;
                        stack.push_back(y);
                    }
            }
            ++count;
        }
        if (count > 1) {
            SparsePolynomial p{1};
            for (int c = 0; c < count; ++c) {
                std::vector<Vertex> part;
                for (Vertex v = 0; v < n; ++v)
                    if (comp[static_cast<std::size_t>(v)] == c) part.push_back(v);
                p = p * solve(g.induced(part));
            }
            return p;
        }
        if (m == n - 1) {  // connected tree: q (q - 1)^(n - 1)
            SparsePolynomial p = power_of_q(1);
            for (int k = 1; k < n; ++k) p = p * SparsePolynomial{-1, 1};
            return p;
        }

        const std::uint64_t key = isomorphism_invariant(g);
        auto& bucket = memo_[key];
        for (const auto& [seen, poly] : bucket)
            if (are_isomorphic(seen, g)) return poly;

        // branch on an edge at a vertex of maximum degree
        Vertex hub = 0;
        for (Vertex v = 1; v < n; ++v)
            if (g.degree(v) > g.degree(hub)) hub = v;
        const Vertex other = g.neighbors(hub).front();
        SparsePolynomial p = solve(without_edge(g, hub, other)) - solve(contracted(g, hub, other));
        memo_[key].emplace_back(g, p);
        return p;
    }

private:
    static Graph without_edge(const Graph& g, Vertex a, Vertex b) {
        std::vector<Edge> kept;
        const Edge drop(a, b);
        for (const Edge& e : g.edges())
            if (e != drop) kept.push_back(e);
        return Graph(g.vertex_count(), kept);
    }

    // Merges b into a; loops and parallel edges disappear.
    static Graph contracted(const Graph& g, Vertex a, Vertex b) {
        auto rename = [&](Vertex x) {
            if (x == b) x = a;
            return x > b ? x - 1 : x;
        };
        std::vector<Edge> kept;
        for (const Edge& e : g.edges()) {
            Vertex x = rename(e.u), y = rename(e.v);
            if (x != y) kept.emplace_back(x, y);
        }
        return Graph(g.vertex_count() - 1, kept);
    }

    std::unordered_map<std::uint64_t, std::vector<std::pair<Graph, SparsePolynomial>>> memo_;
};

}  // namespace

SparsePolynomial chromatic_deletion_contraction(const Graph& g) {
    if (g.vertex_count() > kDeletionContractionCap)
        throw CapExceeded("deletion-contraction refused", static_cast<std::size_t>(g.vertex_count()),
                          static_cast<std::size_t>(kDeletionContractionCap));
    DeletionContraction dc;
    return dc.solve(g);
}

}  // namespace clawfree
