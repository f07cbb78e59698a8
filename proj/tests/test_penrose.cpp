#include "clawfree/chromatic.hpp"
#include "clawfree/corpus.hpp"
#include "clawfree/errors.hpp"
#include "clawfree/penrose.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cstdlib>
#include <random>

using namespace clawfree;
namespace cp = clawfree::corpus;

namespace {

std::vector<std::vector<Edge>> all_trees(const Graph& g) {
    std::vector<std::vector<Edge>> out;
    const auto& e = g.edges();
    for (std::uint32_t mask = 1; mask < (1u << e.size()); ++mask) {
        std::vector<Edge> sub;
        for (std::size_t k = 0; k < e.size(); ++k)
            if (mask >> k & 1u) sub.push_back(e[k]);
        std::vector<std::vector<Edge>> comps;
        if (oracle::split_forest(g.vertex_count(), sub, comps) && comps.size() == 1) out.push_back(sub);
    }
    return out;
}

std::vector<Edge> sorted(std::set<Edge> s) { return {s.begin(), s.end()}; }

}  // namespace

TEST_SUITE("penrose") {

TEST_CASE("orderings") {
    const Graph g = cp::path(5);  // 0-1-2-3-4
    const auto a = VertexOrdering::anchored(g, 2);
    CHECK(a.sequence() == std::vector<Vertex>{2, 1, 3, 0, 4});
    CHECK(a.rank(2) == 0);
    CHECK(a.precedes(3, 0));
    CHECK_THROWS_AS(VertexOrdering({0, 0, 1}), ContractViolation);
    const std::vector<Vertex> keep{4, 1, 3};
    CHECK(a.restricted(keep).sequence() == std::vector<Vertex>{1, 2, 0});
}

TEST_CASE("rooted tree view") {
    const Graph g = cp::complete(4);
    const auto ord = VertexOrdering({2, 0, 1, 3});
    const std::vector<Edge> t{{0, 1}, {1, 2}, {2, 3}};
    RootedTreeView view(g, ord, t);
    CHECK(view.root() == 2);
    CHECK(view.depth(2) == 0);
    CHECK(view.depth(1) == 1);
    CHECK(view.depth(3) == 1);
    CHECK(view.depth(0) == 2);
    CHECK(view.father(0) == 1);
    CHECK(view.father(2) == -1);

    const std::vector<Edge> cyc{{0, 1}, {1, 2}, {0, 2}};
    CHECK_THROWS_AS(RootedTreeView(g, ord, cyc), ContractViolation);
    const std::vector<Edge> split{{0, 1}, {2, 3}};
    CHECK_THROWS_AS(RootedTreeView(g, ord, split), ContractViolation);
    const std::vector<Edge> missing{{0, 1}};
    CHECK_THROWS_AS(RootedTreeView(cp::path(3).induced(std::vector<Vertex>{0, 2, 1}), VertexOrdering::natural(3), missing),
                    ContractViolation);
}

TEST_CASE("closure examples on K3") {
    const Graph k3 = cp::complete(3);
    const auto ord = VertexOrdering::natural(3);
    const std::vector<Edge> star{{0, 1}, {0, 2}};
    const std::vector<Edge> path{{0, 1}, {1, 2}};
    CHECK(penrose_closure(k3, ord, RootedTreeView(k3, ord, star)) == k3.edges());
    CHECK(penrose_closure(k3, ord, RootedTreeView(k3, ord, path)) == path);
    CHECK_FALSE(is_penrose_tree(k3, ord, std::span<const Edge>(star)));
    CHECK(is_penrose_tree(k3, ord, std::span<const Edge>(path)));
    CHECK(is_penrose_forest(k3, ord, Forest()));
}

TEST_CASE("closure of a tree with no extra induced edges is itself") {
    const Graph g = cp::path(6);
    const auto ord = VertexOrdering({3, 1, 5, 0, 2, 4});
    const std::vector<Edge> t{{1, 2}, {2, 3}, {3, 4}};
    CHECK(penrose_closure(g, ord, RootedTreeView(g, ord, t)) == t);
}

TEST_CASE("closure matches the reference closure on every tree") {
    std::mt19937_64 rng(17);
    std::vector<Graph> graphs;
    for (int n = 2; n <= 5; ++n)
        for (const Graph& g : cp::all_graphs(n)) graphs.push_back(g);
    graphs.push_back(cp::wheel(5));
    graphs.push_back(cp::line_graph(cp::complete(4)));
    for (const Graph& g : graphs) {
        const VertexOrdering ord(cp::random_permutation(g.vertex_count(), rng));
        for (const auto& t : all_trees(g)) {
            const auto lib = penrose_closure(g, ord, RootedTreeView(g, ord, t));
            CHECK(lib == sorted(oracle::closure(g, ord, t)));
        }
    }
}

TEST_CASE("forest polynomial examples") {
    CHECK(penrose_polynomial(cp::complete(3)) == SparsePolynomial{1, 3, 2});
    CHECK(penrose_polynomial(cp::empty(1)) == SparsePolynomial{1});
    CHECK(penrose_polynomial(cp::path(2)) == SparsePolynomial{1, 1});
    CHECK(penrose_polynomial(cp::empty(0)) == SparsePolynomial{1});
}

TEST_CASE("chromatic via forests: examples") {
    CHECK(chromatic_via_penrose(cp::complete(3)) == SparsePolynomial{0, 2, -3, 1});
    CHECK(chromatic_via_penrose(cp::path(2)) == SparsePolynomial{0, -1, 1});
    CHECK(chromatic_via_penrose(cp::cycle(5)) == SparsePolynomial{0, 4, -10, 10, -5, 1});
}

TEST_CASE("forest polynomial matches the subset-scan oracle under random orderings") {
    std::mt19937_64 rng(23);
    for (int n = 1; n <= 5; ++n)
        for (const Graph& g : cp::all_graphs(n)) {
            const VertexOrdering ord(cp::random_permutation(n, rng));
            CHECK(penrose_polynomial(g, ord) == oracle::forest_polynomial_by_subsets(g, ord));
        }
    for (int k = 0; k < 12; ++k) {
        const Graph g = cp::random_graph(6 + k % 2, 0.4, rng);
        if (g.edge_count() > 14) continue;
        const VertexOrdering ord(cp::random_permutation(g.vertex_count(), rng));
        CHECK(penrose_polynomial(g, ord) == oracle::forest_polynomial_by_subsets(g, ord));
    }
}

TEST_CASE("forest stream agrees with the polynomial and every forest is Penrose") {
    std::mt19937_64 rng(29);
    for (const Graph& g : {cp::wheel(5), cp::petersen().induced(std::vector<Vertex>{0, 1, 2, 3, 4, 5, 6}),
                           cp::line_graph(cp::complete(4)), cp::complete_bipartite(2, 3)}) {
        const VertexOrdering ord(cp::random_permutation(g.vertex_count(), rng));
        std::vector<BigInt> counts(static_cast<std::size_t>(g.vertex_count()), 0);
        enumerate_penrose_forests(g, ord, [&](const Forest& f) {
            counts[static_cast<std::size_t>(f.edge_count())] += 1;
            CHECK(is_penrose_forest(g, ord, f));
            for (const auto& comp : f.components()) CHECK(oracle::penrose_tree(g, ord, comp));
        });
        CHECK(SparsePolynomial(counts) == penrose_polynomial(g, ord));
    }
}

TEST_CASE("forest is Penrose iff every component is") {
    const Graph g = cp::complete(4);
    const auto ord = VertexOrdering::natural(4);
    const std::vector<Edge> good{{0, 1}, {2, 3}};
    const std::vector<Edge> bad{{0, 1}, {0, 2}};
    CHECK(is_penrose_forest(g, ord, Forest(4, good)));
    CHECK_FALSE(is_penrose_forest(g, ord, Forest(4, bad)));
    const std::vector<Edge> cyc{{0, 1}, {1, 2}, {0, 2}};
    CHECK_THROWS_AS(Forest(4, cyc), ContractViolation);
}

TEST_CASE("ordering invariance") {
    std::mt19937_64 rng(31);
    for (const auto& [name, g] : cp::small_corpus()) {
        if (g.vertex_count() < 6) continue;
        const auto base = penrose_polynomial(g);
        for (int k = 0; k < 5; ++k) {
            const VertexOrdering ord(cp::random_permutation(g.vertex_count(), rng));
            CHECK_MESSAGE(penrose_polynomial(g, ord) == base, name);
        }
    }
}

TEST_CASE("Penrose forests are forests: counting bound") {
    for (int n = 2; n <= 5; ++n)
        for (const Graph& g : cp::all_graphs(n)) {
            const auto all = oracle::all_forests_by_size(g);
            const auto pen = penrose_polynomial(g);
            for (int k = 0; k <= pen.degree(); ++k) CHECK(pen.coeff(k) <= all[static_cast<std::size_t>(k)]);
        }
}

TEST_CASE("subset table") {
    const Graph g = cp::wheel(5);
    ForestPolynomialTable table(g);
    CHECK(table.of(table.full_mask()) == penrose_polynomial(g));
    for (std::uint32_t mask = 0; mask <= table.full_mask(); mask += 7) {
        std::vector<Vertex> keep;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (mask >> v & 1u) keep.push_back(v);
        CHECK(table.of(mask) == penrose_polynomial(g.induced(keep)));
    }
    // spanning Penrose trees of K3 under the natural order: the two paths through 1
    ForestPolynomialTable k3(cp::complete(3));
    CHECK(k3.spanning_penrose_trees(0b111) == 2);
    ForestPolynomialTable two(cp::empty(2));
    CHECK(two.spanning_penrose_trees(0b11) == 0);
}

TEST_CASE("tree enumeration respects root and allowed set") {
    const Graph g = cp::complete(4);
    const auto ord = VertexOrdering::natural(4);
    std::vector<bool> allowed{true, true, true, false};
    int count = 0;
    enumerate_penrose_trees(g, ord, 1, allowed, [&](const std::vector<Edge>& t) {
        ++count;
        for (const Edge& e : t) {
            CHECK_FALSE(e.contains(0));
            CHECK_FALSE(e.contains(3));
        }
        CHECK(is_penrose_tree(g, ord, std::span<const Edge>(t)));
    });
    CHECK(count == 1);  // just {1,2}
}

TEST_CASE("tree counts through a vertex") {
    const Graph k3 = cp::complete(3);
    const auto counts = penrose_tree_counts(k3, VertexOrdering::natural(3), 0, 5);
    CHECK(counts == std::vector<BigInt>{1, 2, 2});
}

TEST_CASE("ratio R examples") {
    for (Vertex u : {0, 1}) {
        const std::complex<double> z(0.3, -0.2);
        const auto r = ratio_R(cp::path(2), u, z);
        CHECK(r.real() == doctest::Approx(z.real()));
        CHECK(r.imag() == doctest::Approx(z.imag()));
        CHECK(std::abs(ratio_R(cp::empty(2), u, z)) == doctest::Approx(0.0));
    }
    CHECK(std::abs(ratio_R(cp::complete(3), 0, 0.0)) == doctest::Approx(0.0));
}

TEST_CASE("ratio R refuses a vanishing denominator") {
    // F of the single edge left after removing 0 is 1 + z
    CHECK_THROWS_AS(ratio_R(cp::path(3), 0, -1.0), ConditioningError);
}

TEST_CASE("enumeration cap") {
    CHECK_THROWS_AS(penrose_polynomial(cp::empty(13), 12), CapExceeded);
    CHECK_THROWS_AS(penrose_polynomial(cp::path(5), 4), CapExceeded);
    setenv("CLAWFREE_MAX_ENUM", "14", 1);
    CHECK(enumeration_cap() == 14);
    setenv("CLAWFREE_MAX_ENUM", "99", 1);
    CHECK(enumeration_cap() == kDefaultEnumerationCap);
    unsetenv("CLAWFREE_MAX_ENUM");
    CHECK(enumeration_cap() == kDefaultEnumerationCap);
}

TEST_CASE("obstruction examples") {
    // C4 as u=0, v1=1, v2=2, w=3 with v2 adjacent to w
    const Graph c4(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
    const auto ord = VertexOrdering::natural(4);
    const std::vector<Edge> tau1{{1, 3}}, none;
    auto r = obstruction_check(c4, ord, 0, 1, 2, tau1, none);
    CHECK(r.child_of_first);
    CHECK_FALSE(r.penrose());

    // no edges between the branches
    const Graph p5(5, {{0, 1}, {0, 2}, {1, 3}, {2, 4}});
    const std::vector<Edge> b1{{1, 3}}, b2{{2, 4}};
    r = obstruction_check(p5, VertexOrdering::natural(5), 0, 1, 2, b1, b2);
    CHECK(r.penrose());

    // both branches trivial: the path v1-u-v2
    CHECK(obstruction_check(c4, ord, 0, 1, 2, none, none).penrose());
}

TEST_CASE("obstruction preconditions") {
    const Graph c4(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
    const std::vector<Edge> none;
    CHECK_THROWS_AS(obstruction_check(c4, VertexOrdering({1, 0, 2, 3}), 0, 1, 2, none, none), ContractViolation);
    const Graph k3 = cp::complete(3);
    CHECK_THROWS_AS(obstruction_check(k3, VertexOrdering::natural(3), 0, 1, 2, none, none), ContractViolation);
    const std::vector<Edge> through_u{{0, 1}};
    CHECK_THROWS_AS(obstruction_check(c4, VertexOrdering::natural(4), 0, 1, 2, through_u, none), ContractViolation);
    const std::vector<Edge> t1{{1, 3}}, t2{{2, 3}};
    CHECK_THROWS_AS(obstruction_check(c4, VertexOrdering::natural(4), 0, 1, 2, t1, t2), ContractViolation);
}

}
