#pragma once

#include "slpa/cover.hpp"
#include "slpa/graph.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace slpa {

struct BinaryClassificationResult {
    double precision = 0.0;
    double recall = 0.0;
    double f_score = 0.0;
};

// Overlapping-node identification scored as binary classification. A node
// is overlapping when it belongs to >= 2 communities. Precision is
// |D cap T| / |D| (1 when both sets are empty, 0 when only D is), recall is
// |D cap T| / |T| likewise, F the harmonic mean (0 when P + R = 0). Both
// covers must live over the same [0, n) universe.
BinaryClassificationResult overlap_fscore(const Cover &detected, const Cover &truth,
                                          NodeId n);

// Extended NMI between covers: each community is a binary membership
// variable; H(X_k|Y) is the minimum conditional entropy over candidates
// Y_l whose joint cells satisfy h(1,1)+h(0,0) >= h(0,1)+h(1,0), or H(X_k)
// when no candidate qualifies. Communities with zero marginal entropy
// (empty or the full node set) are excluded from the normalized mean.
// Returns 1 - [H(X|Y)_norm + H(Y|X)_norm] / 2, in [0, 1]; exactly 1 for
// identical covers.
double extended_nmi(const Cover &x, const Cover &y, NodeId n);

// Equal-split crisp belonging coefficients: alpha_{i,c} = 1/#memberships(i)
// for i in c, else 0. Rows sum to 1. Requires every node covered.
struct BelongingCoefficients {
    // Per node: (community index, alpha) pairs for its memberships.
    std::vector<std::vector<std::pair<std::size_t, double>>> rows;
};

BelongingCoefficients belonging_coefficients(const Cover &cover, NodeId n);

// Nicosia's overlapping modularity with F(a, b) = 1/[(1+e^{-f(a)})(1+e^{-f(b)})],
// f(x) = 60x - 30, and equal-split coefficients. The undirected graph is
// treated as bidirected: each edge counted in both directions, m_dir = 2m,
// k_out = k_in = degree. This is the algebraically regrouped evaluation of
// the same sum the brute-force reference in the tests computes term by
// term.
double qov(const Graph &g, const Cover &cover);

struct CoverStats {
    std::size_t num_communities = 0;
    std::size_t num_overlapping_nodes = 0;    // nodes in >= 2 communities
    double avg_overlapping_memberships = 0.0; // mean memberships over those; 0 if none
};

CoverStats cover_stats(const Cover &cover, NodeId n);

} // namespace slpa
