#include "slpa/postprocess.hpp"

#include "slpa/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>

namespace slpa {

Threshold::Threshold(double value) : r(value) {
    if (!(value >= 0.0 && value <= 1.0))
        throw UserError("threshold r must lie in [0, 1], got " + std::to_string(value));
}

LabelDistribution to_distribution(const MemoryState &state) {
    LabelDistribution dist;
    dist.rows.resize(state.memories.size());
    const std::size_t expected_total = state.sweeps_completed + 1;
    for (std::size_t u = 0; u < state.memories.size(); ++u) {
        const Memory &memory = state.memories[u];
        SLPA_INVARIANT(memory.total() == expected_total,
                       "to_distribution: non-uniform memory totals");
        auto &row = dist.rows[u];
        for (const auto &[label, count] : memory.counts())
            row.emplace_back(label, static_cast<double>(count) /
                                        static_cast<double>(expected_total));
    }
    return dist;
}

std::vector<std::vector<Label>> threshold_labels(const LabelDistribution &dist,
                                                 Threshold threshold) {
    std::vector<std::vector<Label>> kept(dist.rows.size());
    for (std::size_t u = 0; u < dist.rows.size(); ++u)
        for (const auto &[label, probability] : dist.rows[u])
            if (probability >= threshold.r)
                kept[u].push_back(label);
    return kept;
}

std::vector<std::vector<Label>> apply_threshold(const LabelDistribution &dist,
                                                Threshold threshold) {
    auto kept = threshold_labels(dist, threshold);
    for (std::size_t u = 0; u < kept.size(); ++u) {
        if (!kept[u].empty())
            continue;
        // All labels pruned: keep the most probable one, smallest label on
        // ties. Rows are sorted by label, so the first strict maximum wins.
        const auto &row = dist.rows[u];
        SLPA_INVARIANT(!row.empty(), "apply_threshold: node with empty distribution");
        Label best = row.front().first;
        double best_p = row.front().second;
        for (const auto &[label, probability] : row)
            if (probability > best_p) {
                best = label;
                best_p = probability;
            }
        kept[u].push_back(best);
    }
    return kept;
}

namespace {

struct Candidate {
    std::vector<NodeId> members; // sorted
    std::vector<Label> labels;   // provenance
};

// Connected groups of `carriers` (ascending) in the induced subgraph,
// appended to `out` with the given provenance label. Uses an epoch-stamped
// scratch to avoid O(n) resets per label.
void split_components(const Graph &g, const std::vector<NodeId> &carriers, Label label,
                      std::vector<std::uint32_t> &stamp, std::vector<std::uint32_t> &seen,
                      std::uint32_t epoch, std::vector<NodeId> &stack,
                      std::vector<Candidate> &out) {
    for (NodeId u : carriers)
        stamp[u] = epoch;
    for (NodeId seed : carriers) {
        if (seen[seed] == epoch)
            continue;
        Candidate candidate;
        candidate.labels.push_back(label);
        stack.assign(1, seed);
        seen[seed] = epoch;
        while (!stack.empty()) {
            const NodeId u = stack.back();
            stack.pop_back();
            candidate.members.push_back(u);
            for (NodeId v : g.neighbors(u)) {
                if (stamp[v] == epoch && seen[v] != epoch) {
                    seen[v] = epoch;
                    stack.push_back(v);
                }
            }
        }
        std::sort(candidate.members.begin(), candidate.members.end());
        out.push_back(std::move(candidate));
    }
}

} // namespace

Cover build_cover(const Graph &g, std::span<const std::vector<Label>> label_sets) {
    const NodeId n = g.num_nodes();
    SLPA_INVARIANT(label_sets.size() == n, "build_cover: label sets do not match graph");

    // invert: label -> carriers (ascending, since nodes are scanned in order)
    std::vector<std::vector<NodeId>> carriers(n);
    for (NodeId u = 0; u < n; ++u) {
        SLPA_INVARIANT(!label_sets[u].empty(), "build_cover: node without labels");
        for (Label label : label_sets[u]) {
            SLPA_INVARIANT(label < n, "build_cover: label out of range");
            carriers[label].push_back(u);
        }
    }

    std::vector<Candidate> candidates;
    std::vector<std::uint32_t> stamp(n, 0), seen(n, 0);
    std::vector<NodeId> stack;
    std::uint32_t epoch = 0;
    for (Label label = 0; label < n; ++label) {
        if (carriers[label].empty())
            continue;
        ++epoch;
        split_components(g, carriers[label], label, stamp, seen, epoch, stack, candidates);
    }

    // collapse exact duplicates, merging provenance
    std::map<std::vector<NodeId>, std::vector<Label>> unique;
    for (auto &candidate : candidates) {
        auto &labels = unique[std::move(candidate.members)];
        labels.insert(labels.end(), candidate.labels.begin(), candidate.labels.end());
    }

    // nested removal: a candidate dies iff it is a strict subset of another.
    // Only candidates sharing the smallest member can be supersets.
    std::vector<const std::vector<NodeId> *> sets;
    sets.reserve(unique.size());
    for (const auto &[members, labels] : unique)
        sets.push_back(&members);
    std::vector<std::vector<std::size_t>> containing(n);
    for (std::size_t c = 0; c < sets.size(); ++c)
        for (NodeId u : *sets[c])
            containing[u].push_back(c);

    Cover cover;
    std::size_t index = 0;
    for (auto &[members, labels] : unique) {
        bool nested = false;
        for (std::size_t other : containing[members.front()]) {
            if (other == index || sets[other]->size() <= members.size())
                continue;
            if (std::includes(sets[other]->begin(), sets[other]->end(), members.begin(),
                              members.end())) {
                nested = true;
                break;
            }
        }
        if (!nested) {
            std::sort(labels.begin(), labels.end());
            labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
            cover.communities.push_back(members);
            cover.provenance.push_back(std::move(labels));
        }
        ++index;
    }
    // std::map iteration is already the canonical order (lexicographic
    // member lists, hence by smallest member first)
    return cover;
}

DetectResult detect(const Graph &g, const EngineConfig &config, Threshold threshold) {
    MemoryState state = run(g, config);
    LabelDistribution dist = to_distribution(state);
    const auto kept = apply_threshold(dist, threshold);
    Cover cover = build_cover(g, kept);
    return {std::move(cover), std::move(dist)};
}

Cover cover_from_labeling(const Graph &g, std::span<const Label> labels) {
    SLPA_INVARIANT(labels.size() == g.num_nodes(),
                   "cover_from_labeling: labeling does not match graph");
    std::vector<std::vector<Label>> singletons(labels.size());
    for (std::size_t u = 0; u < labels.size(); ++u)
        singletons[u].push_back(labels[u]);
    return build_cover(g, singletons);
}

} // namespace slpa
