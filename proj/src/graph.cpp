#include "clawfree/graph.hpp"

#include "clawfree/errors.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <string>

namespace clawfree {

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n)) {
    if (n < 0) throw ContractViolation("negative vertex count");
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
    edges_.reserve(edges.size());
    for (const Edge& e : edges) {
        if (e.u == e.v) throw ContractViolation("self-loop at vertex " + std::to_string(e.u));
        if (e.u < 0 || e.v >= n)
            throw ContractViolation("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                    "} has an endpoint outside 0.." + std::to_string(n - 1));
        edges_.push_back(e);
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    for (const Edge& e : edges_) {
        adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
        adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    for (auto& list : adj_) std::sort(list.begin(), list.end());
}

bool Graph::has_edge(Vertex a, Vertex b) const {
    if (a < 0 || b < 0 || a >= n_ || b >= n_ || a == b) return false;
    const auto& list = adj_[static_cast<std::size_t>(a)];
    return std::binary_search(list.begin(), list.end(), b);
}

int Graph::edge_index(Vertex a, Vertex b) const {
    if (a == b) return -1;
    const Edge key(a, b);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
    if (it == edges_.end() || *it != key) return -1;
    return static_cast<int>(it - edges_.begin());
}

Graph Graph::induced(std::span<const Vertex> vertices) const {
    std::vector<Vertex> label(static_cast<std::size_t>(n_), -1);
    for (std::size_t k = 0; k < vertices.size(); ++k) {
        Vertex v = vertices[k];
        if (v < 0 || v >= n_) throw ContractViolation("induced: vertex out of range");
        if (label[static_cast<std::size_t>(v)] != -1) throw ContractViolation("induced: repeated vertex");
        label[static_cast<std::size_t>(v)] = static_cast<Vertex>(k);
    }
    std::vector<Edge> kept;
    for (const Edge& e : edges_) {
        Vertex a = label[static_cast<std::size_t>(e.u)];
        Vertex b = label[static_cast<std::size_t>(e.v)];
        if (a >= 0 && b >= 0) kept.emplace_back(a, b);
    }
    return Graph(static_cast<int>(vertices.size()), kept);
}

Graph Graph::relabeled(std::span<const Vertex> new_label) const {
    if (static_cast<int>(new_label.size()) != n_) throw ContractViolation("relabeled: wrong permutation size");
    std::vector<char> seen(static_cast<std::size_t>(n_), 0);
    for (Vertex v : new_label) {
        if (v < 0 || v >= n_ || seen[static_cast<std::size_t>(v)])
            throw ContractViolation("relabeled: not a permutation");
        seen[static_cast<std::size_t>(v)] = 1;
    }
    std::vector<Edge> moved;
    moved.reserve(edges_.size());
    for (const Edge& e : edges_)
        moved.emplace_back(new_label[static_cast<std::size_t>(e.u)], new_label[static_cast<std::size_t>(e.v)]);
    return Graph(n_, moved);
}

namespace {

std::string_view trim(std::string_view s) {
    auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
    while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
    while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
    return s;
}

// Reads exactly two non-negative integers separated by whitespace.
bool read_two(std::string_view s, long long& a, long long& b) {
    auto skip = [&](std::size_t pos) {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
        return pos;
    };
    std::size_t pos = skip(0);
    auto r1 = std::from_chars(s.data() + pos, s.data() + s.size(), a);
    if (r1.ec != std::errc() || r1.ptr == s.data() + pos) return false;
    std::size_t mid = static_cast<std::size_t>(r1.ptr - s.data());
    pos = skip(mid);
    if (pos == mid) return false;
    auto r2 = std::from_chars(s.data() + pos, s.data() + s.size(), b);
    if (r2.ec != std::errc() || r2.ptr == s.data() + pos) return false;
    pos = skip(static_cast<std::size_t>(r2.ptr - s.data()));
    return pos == s.size();
}

}  // namespace

ParsedGraph parse_graph(std::string_view text) {
    std::optional<std::pair<long long, long long>> header;
    std::vector<Edge> edges;
    long long expected = 0;
    std::size_t line_no = 0;
    ParsedGraph result;

    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = trim(text.substr(start, end - start));
        ++line_no;
        start = end + 1;

        if (line.empty() || line.front() == '#') {
            if (end == text.size()) break;
            continue;
        }
        long long a = 0, b = 0;
        if (!read_two(line, a, b)) throw ParseError(line_no, "expected two non-negative integers, got \"" + std::string(line) + "\"");
        if (!header) {
            if (a < 0 || b < 0 || a > 1'000'000 || b > 50'000'000) throw ParseError(line_no, "header counts out of range");
            header = {a, b};
            expected = b;
        } else {
            if (static_cast<long long>(edges.size()) >= expected)
                throw ParseError(line_no, "more edge lines than the header's m = " + std::to_string(expected));
            if (a < 0 || b < 0 || a >= header->first || b >= header->first)
                throw ParseError(line_no, "vertex index out of range 0.." + std::to_string(header->first - 1));
            if (a == b) throw ParseError(line_no, "self-loop at vertex " + std::to_string(a));
            Edge e(static_cast<Vertex>(a), static_cast<Vertex>(b));
            edges.push_back(e);
        }
        if (end == text.size()) break;
    }
    if (!header) throw ParseError(0, "missing \"n m\" header");
    if (static_cast<long long>(edges.size()) != expected)
        throw ParseError(0, "expected " + std::to_string(expected) + " edge lines, found " + std::to_string(edges.size()));
    std::sort(edges.begin(), edges.end());
    auto last = std::unique(edges.begin(), edges.end());
    result.duplicate_edges = static_cast<int>(edges.end() - last);
    edges.erase(last, edges.end());
    result.graph = Graph(static_cast<int>(header->first), edges);
    return result;
}

ParsedGraph load_graph_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(0, "cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
    return out.str();
}

int max_degree(const Graph& g) {
    int best = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) best = std::max(best, g.degree(v));
    return best;
}

bool is_claw_free(const Graph& g) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        const auto& nb = g.neighbors(v);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                if (g.has_edge(nb[i], nb[j])) continue;
                for (std::size_t k = j + 1; k < nb.size(); ++k)
                    if (!g.has_edge(nb[i], nb[k]) && !g.has_edge(nb[j], nb[k])) return false;
            }
    }
    return true;
}

namespace {

enum class FourVertexShape { Other, Square, Diamond };

// Scans every 4-subset once; stops at the first subset of the requested shape.
bool has_induced(const Graph& g, FourVertexShape wanted) {
    const int n = g.vertex_count();
    std::vector<std::uint8_t> adj(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    for (const Edge& e : g.edges()) {
        adj[static_cast<std::size_t>(e.u) * n + e.v] = 1;
        adj[static_cast<std::size_t>(e.v) * n + e.u] = 1;
    }
    auto at = [&](int a, int b) { return adj[static_cast<std::size_t>(a) * n + b]; };
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            const int ab = at(a, b);
            for (int c = b + 1; c < n; ++c) {
                const int abc = ab + at(a, c) + at(b, c);
                if (abc < 2) continue;  // both shapes have >= 2 edges among any three vertices
                for (int d = c + 1; d < n; ++d) {
                    const int da = at(d, a), db = at(d, b), dc = at(d, c);
                    const int m = abc + da + db + dc;
                    if (wanted == FourVertexShape::Diamond && m == 5) return true;
                    if (wanted == FourVertexShape::Square && m == 4) {
                        // 4 edges on 4 vertices: C4 iff every degree is 2.
                        const int deg_a = ab + at(a, c) + da;
                        const int deg_b = ab + at(b, c) + db;
                        const int deg_c = at(a, c) + at(b, c) + dc;
                        const int deg_d = da + db + dc;
                        if (deg_a == 2 && deg_b == 2 && deg_c == 2 && deg_d == 2) return true;
                    }
                }
            }
        }
    return false;
}

}  // namespace

bool is_square_free(const Graph& g) { return !has_induced(g, FourVertexShape::Square); }
bool is_diamond_free(const Graph& g) { return !has_induced(g, FourVertexShape::Diamond); }

ClassMembership classify(const Graph& g) {
    ClassMembership c;
    c.claw_free = is_claw_free(g);
    c.square_free = is_square_free(g);
    c.diamond_free = is_diamond_free(g);
    if (c.claw_free) c.class_index = (c.square_free && c.diamond_free) ? 1 : 0;
    return c;
}

std::vector<std::pair<Vertex, Vertex>> non_edges_in_neighborhood(const Graph& g, Vertex v) {
    if (v < 0 || v >= g.vertex_count()) throw ContractViolation("vertex out of range");
    std::vector<std::pair<Vertex, Vertex>> out;
    const auto& nb = g.neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i)
        for (std::size_t j = i + 1; j < nb.size(); ++j)
            if (!g.has_edge(nb[i], nb[j])) out.emplace_back(nb[i], nb[j]);
    return out;
}

NeighborhoodStats neighborhood_stats(const Graph& g) {
    NeighborhoodStats s;
    s.delta = max_degree(g);
    s.non_edge_counts.resize(static_cast<std::size_t>(g.vertex_count()), 0);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        const auto& nb = g.neighbors(v);
        int count = 0;
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j)
                if (!g.has_edge(nb[i], nb[j])) ++count;
        s.non_edge_counts[static_cast<std::size_t>(v)] = count;
        s.max_non_edges = std::max(s.max_non_edges, count);
    }
    return s;
}

Rational pair_independence_ratio(const Graph& g) {
    const NeighborhoodStats s = neighborhood_stats(g);
    const std::int64_t mantel = static_cast<std::int64_t>(s.delta) * s.delta / 4;
    if (mantel == 0) throw DegenerateDenominator(s.delta);
    return Rational(s.max_non_edges, mantel);
}

}  // namespace clawfree
