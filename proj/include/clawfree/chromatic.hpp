#pragma once

// Independent chromatic-polynomial oracle and the graph-isomorphism helpers it
// memoizes with.

#include "clawfree/graph.hpp"
#include "clawfree/polynomial.hpp"

#include <cstdint>
#include <vector>

namespace clawfree {

inline constexpr int kDeletionContractionCap = 16;

/// P_G(q) by deletion-contraction, memoized on isomorphism classes of minors.
/// Throws CapExceeded for graphs with more than kDeletionContractionCap vertices.
SparsePolynomial chromatic_deletion_contraction(const Graph& g);

/// Vertex colors after 1-dimensional Weisfeiler-Leman refinement, as dense ids
/// that do not depend on vertex labels.
std::vector<int> refined_colors(const Graph& g);

/// Label-independent hash of the refined coloring.
std::uint64_t isomorphism_invariant(const Graph& g);

bool are_isomorphic(const Graph& a, const Graph& b);

}  // namespace clawfree
