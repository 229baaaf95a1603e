#pragma once

#include "slpa/graph.hpp"
#include "slpa/random.hpp"

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace slpa {

// A node's accumulated label observations, stored as the append-only
// sequence of everything it has kept so far. A uniform draw over the
// sequence is exactly frequency-proportional sampling over the induced
// counts, which keeps the speaker rule O(1).
class Memory {
public:
    void reserve(std::size_t capacity) { history_.reserve(capacity); }
    void append(Label label) { history_.push_back(label); }

    std::size_t total() const { return history_.size(); }
    std::span<const Label> history() const { return history_; }

    std::size_t count_of(Label label) const;

    // (label, count) pairs sorted by label.
    std::vector<std::pair<Label, std::uint32_t>> counts() const;

    bool operator==(const Memory &) const = default;

private:
    std::vector<Label> history_;
};

enum class Mode { SLPA, LPA };

struct EngineConfig {
    std::uint32_t iterations = 100; // T; ignored in LPA mode
    std::uint64_t seed = 1;
    Mode mode = Mode::SLPA;
};

struct MemoryState {
    std::vector<Memory> memories;
    std::uint32_t sweeps_completed = 0;
};

// Every node's memory starts as {its own id}; no randomness consumed.
MemoryState initialize(const Graph &g);

// One label drawn with probability proportional to its occurrence count.
Label speaker_rule(const Memory &memory, Rng &rng);

// The most frequent label in `received`; ties broken uniformly at random
// among the tied labels (in order of first receipt).
Label listener_rule(std::span<const Label> received, Rng &rng);

// One asynchronous evolution pass. The generator is consumed in a fixed
// order: the node-order shuffle first (fresh Fisher-Yates each sweep), then
// per listener one speaker draw per neighbor in ascending neighbor index,
// then one tie-break draw iff two or more labels tie. Draws from a
// single-entry range consume nothing (see Rng::bounded). A degree-0
// listener appends its own label, the only one its memory can hold, and
// consumes nothing. Every memory grows by exactly one entry.
void sweep(MemoryState &state, const Graph &g, Rng &rng);

// initialize + config.iterations sweeps; afterwards every memory total is
// T + 1. A pure function of (graph, config). Requires mode == SLPA and
// T >= 1.
MemoryState run(const Graph &g, const EngineConfig &config);

struct LpaResult {
    std::vector<Label> labels;
    bool converged = false;
    std::uint32_t sweeps = 0;
};

// Single-label degenerate mode: asynchronous majority-label adoption in
// random order until every node's label is among the most frequent labels
// of its neighborhood, capped at 1000 sweeps (converged=false when the cap
// is hit). Degree-0 nodes keep their own label.
LpaResult run_lpa(const Graph &g, std::uint64_t seed);

// Memory-state dump for debugging, one "node label:count ..." line per
// node; not a stability-guaranteed format.
void dump_memories(const MemoryState &state, const Graph &g, std::ostream &out);

} // namespace slpa
