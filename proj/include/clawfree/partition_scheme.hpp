#pragma once

#include "clawfree/graph.hpp"
#include "clawfree/penrose.hpp"

#include <optional>
#include <vector>

namespace clawfree {

/// Largest |E|_R| the exhaustive interval check will enumerate subsets of.
inline constexpr int kPartitionCheckEdgeCap = 24;

struct PartitionCounterexample {
    std::vector<Vertex> subset;     // R
    std::vector<Edge> edge_set;     // an edge subset of E|_R covered the wrong number of times
    int cover_count = 0;            // how many intervals [tau, p(tau)] contain it
    bool connected_spanning = false;
};

struct PartitionSchemeReport {
    bool passed = true;
    long long subsets_checked = 0;           // vertex sets R
    long long connected_spanning_sets = 0;   // summed over R
    long long spanning_trees = 0;            // summed over R
    std::optional<PartitionCounterexample> counterexample;
};

/// For every R with 2 <= |R| <= r_max, checks that each connected spanning edge
/// subset of E|_R lies in exactly one interval [tau, p(tau)], tau ranging over
/// spanning trees of E|_R, and that the intervals contain nothing else.
/// Stops at the first failure. Throws CapExceeded if some E|_R has more than
/// kPartitionCheckEdgeCap edges.
PartitionSchemeReport verify_partition_scheme(const Graph& g, const VertexOrdering& ord, int r_max);

}  // namespace clawfree
