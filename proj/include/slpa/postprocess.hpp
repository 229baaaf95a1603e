#pragma once

#include "slpa/cover.hpp"
#include "slpa/engine.hpp"
#include "slpa/graph.hpp"

#include <span>
#include <utility>
#include <vector>

namespace slpa {

// Per-node label probabilities. Each row is sorted by label, has entries in
// (0, 1], and sums to 1.
struct LabelDistribution {
    std::vector<std::vector<std::pair<Label, double>>> rows;
};

struct Threshold {
    double r;

    explicit Threshold(double value);
};

// probability(label at node) = count / (T + 1). Requires uniform memory
// totals, which run() guarantees.
LabelDistribution to_distribution(const MemoryState &state);

// Labels with probability >= r, per node, sorted; strictly below r is
// deleted. May leave nodes empty; see apply_threshold.
std::vector<std::vector<Label>> threshold_labels(const LabelDistribution &dist,
                                                 Threshold threshold);

// threshold_labels plus the fallback: a node whose labels were all pruned
// keeps its single most probable label (smallest label on ties), so every
// node keeps at least one label.
std::vector<std::vector<Label>> apply_threshold(const LabelDistribution &dist,
                                                Threshold threshold);

// For each surviving label, connected groups of its carriers become
// candidate communities; exact duplicates collapse (provenance merged) and
// candidates contained in another candidate are removed, so the result is
// maximal.
Cover build_cover(const Graph &g, std::span<const std::vector<Label>> label_sets);

struct DetectResult {
    Cover cover;
    LabelDistribution distribution;
};

// build_cover . apply_threshold . to_distribution . run
DetectResult detect(const Graph &g, const EngineConfig &config, Threshold threshold);

// Induced cover of a disjoint labeling: per label, connected node groups
// become communities.
Cover cover_from_labeling(const Graph &g, std::span<const Label> labels);

} // namespace slpa
