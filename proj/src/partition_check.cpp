#include "clawfree/partition_scheme.hpp"

#include "clawfree/errors.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>

namespace clawfree {

namespace {

using EdgeMask = std::uint32_t;

struct LocalEdges {
    std::vector<Edge> edges;          // E|_R in original labels
    std::vector<int> a, b;            // endpoints as positions within R
    int vertices = 0;
};

// Union-find connectivity of an edge mask; reports whether it spans all vertices.
bool connected_spanning(const LocalEdges& le, EdgeMask mask) {
    const int n = le.vertices;
    int parent[32];
    std::iota(parent, parent + n, 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    int merges = 0;
    for (EdgeMask m = mask; m; m &= m - 1) {
        const int k = std::countr_zero(m);
        int x = find(le.a[static_cast<std::size_t>(k)]), y = find(le.b[static_cast<std::size_t>(k)]);
        if (x != y) {
            parent[x] = y;
            ++merges;
        }
    }
    return merges == n - 1;
}

std::vector<Edge> edges_of(const LocalEdges& le, EdgeMask mask) {
    std::vector<Edge> out;
    for (EdgeMask m = mask; m; m &= m - 1) out.push_back(le.edges[static_cast<std::size_t>(std::countr_zero(m))]);
    return out;
}

}  // namespace

PartitionSchemeReport verify_partition_scheme(const Graph& g, const VertexOrdering& ord, int r_max) {
    const int n = g.vertex_count();
    if (ord.size() != n) throw ContractViolation("ordering size does not match the graph");
    if (n > 30) throw CapExceeded("partition-scheme check refused", static_cast<std::size_t>(n), 30);
    PartitionSchemeReport report;
    r_max = std::min(r_max, n);

    std::vector<Vertex> subset;
    auto check_subset = [&]() -> bool {
        ++report.subsets_checked;
        LocalEdges le;
        le.vertices = static_cast<int>(subset.size());
        for (std::size_t i = 0; i < subset.size(); ++i)
            for (std::size_t j = i + 1; j < subset.size(); ++j)
                if (g.has_edge(subset[i], subset[j])) {
                    le.edges.emplace_back(subset[i], subset[j]);
                    le.a.push_back(static_cast<int>(i));
                    le.b.push_back(static_cast<int>(j));
                }
        const int k = static_cast<int>(le.edges.size());
        if (k > kPartitionCheckEdgeCap)
            throw CapExceeded("partition-scheme check refused", static_cast<std::size_t>(k),
                              static_cast<std::size_t>(kPartitionCheckEdgeCap));
        const EdgeMask all = k == 32 ? ~EdgeMask{0} : (EdgeMask{1} << k) - 1;
        const int tree_size = le.vertices - 1;

        std::vector<std::uint8_t> cover(std::size_t{1} << k, 0);
        std::vector<char> spanning(std::size_t{1} << k, 0);
        for (EdgeMask m = 0;; ++m) {
            spanning[m] = connected_spanning(le, m) ? 1 : 0;
            if (m == all) break;
        }
        for (EdgeMask tree = 0;; ++tree) {
            if (std::popcount(tree) == tree_size && spanning[tree]) {
                ++report.spanning_trees;
                const RootedTreeView view(g, ord, edges_of(le, tree));
                EdgeMask closure = 0;
                for (const Edge& e : penrose_closure(g, ord, view)) {
                    auto it = std::lower_bound(le.edges.begin(), le.edges.end(), e);
                    closure |= EdgeMask{1} << (it - le.edges.begin());
                }
                const EdgeMask extra = closure & ~tree;
                for (EdgeMask s = extra;; s = (s - 1) & extra) {
                    if (cover[tree | s] < 255) ++cover[tree | s];
                    if (s == 0) break;
                }
            }
            if (tree == all) break;
        }
        for (EdgeMask m = 0;; ++m) {
            const int want = spanning[m] ? 1 : 0;
            if (spanning[m]) ++report.connected_spanning_sets;
            if (cover[m] != want) {
                report.passed = false;
                report.counterexample = PartitionCounterexample{subset, edges_of(le, m), cover[m], spanning[m] != 0};
                return false;
            }
            if (m == all) break;
        }
        return true;
    };

    // R in increasing size, each size in lexicographic order
    for (int size = 2; size <= r_max; ++size) {
        std::vector<int> pick(static_cast<std::size_t>(size));
        std::iota(pick.begin(), pick.end(), 0);
        while (true) {
            subset.assign(pick.begin(), pick.end());
            // edges of E|_R are sorted because subset is increasing
            if (!check_subset()) return report;
            int i = size - 1;
            while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - size + i) --i;
            if (i < 0) break;
            ++pick[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < size; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return report;
}

}  // namespace clawfree
