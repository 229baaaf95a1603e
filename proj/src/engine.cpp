#include "slpa/engine.hpp"

#include "slpa/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <ostream>
#include <unordered_map>

namespace slpa {

std::size_t Memory::count_of(Label label) const {
    return static_cast<std::size_t>(std::count(history_.begin(), history_.end(), label));
}

std::vector<std::pair<Label, std::uint32_t>> Memory::counts() const {
    std::map<Label, std::uint32_t> acc;
    for (Label l : history_)
        ++acc[l];
    return {acc.begin(), acc.end()};
}

MemoryState initialize(const Graph &g) {
    MemoryState state;
    state.memories.resize(g.num_nodes());
    for (NodeId u = 0; u < g.num_nodes(); ++u)
        state.memories[u].append(u);
    state.sweeps_completed = 0;
    return state;
}

Label speaker_rule(const Memory &memory, Rng &rng) {
    SLPA_INVARIANT(memory.total() > 0, "speaker_rule: empty memory");
    return memory.history()[rng.bounded(memory.total())];
}

namespace {

// Reusable counting buffers; clear() keeps the bucket allocation.
struct ListenerScratch {
    std::unordered_map<Label, std::uint32_t> counts;
    std::vector<Label> tied;
};

Label pick_majority(std::span<const Label> received, Rng &rng, ListenerScratch &scratch) {
    SLPA_INVARIANT(!received.empty(), "listener_rule: empty label list");
    auto &counts = scratch.counts;
    counts.clear();
    std::uint32_t best = 0;
    for (Label l : received)
        best = std::max(best, ++counts[l]);
    // Tied labels in order of first receipt; zeroing a collected count keeps
    // each label once.
    auto &tied = scratch.tied;
    tied.clear();
    for (Label l : received) {
        auto it = counts.find(l);
        if (it->second == best) {
            tied.push_back(l);
            it->second = 0;
        }
    }
    if (tied.size() == 1)
        return tied.front();
    return tied[rng.bounded(tied.size())];
}

void sweep_impl(MemoryState &state, const Graph &g, Rng &rng, std::vector<NodeId> &order,
                std::vector<Label> &received, ListenerScratch &scratch) {
    SLPA_INVARIANT(state.memories.size() == g.num_nodes(),
                   "sweep: state does not match graph");
    order.resize(g.num_nodes());
    std::iota(order.begin(), order.end(), NodeId{0});
    rng.shuffle(order);
    for (NodeId listener : order) {
        const auto nbs = g.neighbors(listener);
        if (nbs.empty()) {
            // No speakers; the memory holds only the node's own label, so
            // the most frequent label is the node id itself.
            state.memories[listener].append(listener);
            continue;
        }
        received.clear();
        for (NodeId speaker : nbs)
            received.push_back(speaker_rule(state.memories[speaker], rng));
        state.memories[listener].append(pick_majority(received, rng, scratch));
    }
    ++state.sweeps_completed;
}

} // namespace

Label listener_rule(std::span<const Label> received, Rng &rng) {
    ListenerScratch scratch;
    return pick_majority(received, rng, scratch);
}

void sweep(MemoryState &state, const Graph &g, Rng &rng) {
    std::vector<NodeId> order;
    std::vector<Label> received;
    ListenerScratch scratch;
    sweep_impl(state, g, rng, order, received, scratch);
}

MemoryState run(const Graph &g, const EngineConfig &config) {
    if (config.mode != Mode::SLPA)
        throw UserError("run() is the SLPA-mode entry point; use run_lpa for LPA");
    if (config.iterations < 1)
        throw UserError("iteration count T must be >= 1");

    Rng rng(config.seed);
    MemoryState state = initialize(g);
    for (auto &memory : state.memories)
        memory.reserve(config.iterations + 1);

    std::vector<NodeId> order;
    std::vector<Label> received;
    ListenerScratch scratch;
    received.reserve(g.max_degree());
    for (std::uint32_t t = 0; t < config.iterations; ++t)
        sweep_impl(state, g, rng, order, received, scratch);
    return state;
}

namespace {

// True when every node's label is among the most frequent labels of its
// neighborhood.
bool lpa_converged(const Graph &g, const std::vector<Label> &labels,
                   ListenerScratch &scratch) {
    for (NodeId u = 0; u < g.num_nodes(); ++u) {
        const auto nbs = g.neighbors(u);
        if (nbs.empty())
            continue;
        auto &counts = scratch.counts;
        counts.clear();
        std::uint32_t best = 0;
        for (NodeId v : nbs)
            best = std::max(best, ++counts[labels[v]]);
        auto it = counts.find(labels[u]);
        if (it == counts.end() || it->second != best)
            return false;
    }
    return true;
}

} // namespace

LpaResult run_lpa(const Graph &g, std::uint64_t seed) {
    constexpr std::uint32_t kSweepCap = 1000;
    Rng rng(seed);
    LpaResult result;
    result.labels.resize(g.num_nodes());
    std::iota(result.labels.begin(), result.labels.end(), NodeId{0});

    std::vector<NodeId> order(g.num_nodes());
    std::vector<Label> received;
    ListenerScratch scratch;
    for (result.sweeps = 0; result.sweeps < kSweepCap;) {
        std::iota(order.begin(), order.end(), NodeId{0});
        rng.shuffle(order);
        for (NodeId u : order) {
            const auto nbs = g.neighbors(u);
            if (nbs.empty())
                continue;
            received.clear();
            for (NodeId v : nbs)
                received.push_back(result.labels[v]);
            result.labels[u] = pick_majority(received, rng, scratch);
        }
        ++result.sweeps;
        if (lpa_converged(g, result.labels, scratch)) {
            result.converged = true;
            break;
        }
    }
    return result;
}

void dump_memories(const MemoryState &state, const Graph &g, std::ostream &out) {
    for (NodeId u = 0; u < g.num_nodes(); ++u) {
        out << g.external_id(u);
        for (const auto &[label, count] : state.memories[u].counts())
            out << ' ' << g.external_id(label) << ':' << count;
        out << '\n';
    }
}

} // namespace slpa
