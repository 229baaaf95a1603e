#include "slpa/benchgen.hpp"

#include "slpa/errors.hpp"
#include "slpa/random.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <unordered_set>

namespace slpa {

std::vector<std::string> BenchSpec::header_lines() const {
    char buf[200];
    std::snprintf(buf, sizeof(buf),
                  "benchgen n=%u kavg=%.3f mu=%.3f on=%u om=%u cmin=%u cmax=%u seed=%llu",
                  n, k_avg, mu, overlapping_nodes, memberships, community_min,
                  community_max, static_cast<unsigned long long>(seed));
    return {buf};
}

void validate(const BenchSpec &spec) {
    if (spec.n == 0)
        throw UserError("benchgen: n must be positive");
    if (!(spec.mu >= 0.0 && spec.mu < 1.0))
        throw UserError("benchgen: mu must lie in [0, 1)");
    if (spec.k_avg < 1.0)
        throw UserError("benchgen: k_avg must be >= 1");
    if (spec.overlapping_nodes > spec.n)
        throw UserError("benchgen: overlapping node count exceeds n");
    if (spec.memberships < 2)
        throw UserError("benchgen: memberships per overlapping node must be >= 2");
    if (spec.community_min < 3)
        throw UserError("benchgen: community size minimum is 3");
    if (spec.community_min > spec.community_max)
        throw UserError("benchgen: community size range is empty");
    if (spec.community_max >= spec.n)
        throw UserError("benchgen: community sizes must be smaller than n");
}

namespace {

std::uint64_t edge_key(NodeId u, NodeId v) {
    return (static_cast<std::uint64_t>(std::min(u, v)) << 32) | std::max(u, v);
}

bool share_community(const std::vector<std::uint32_t> &a,
                     const std::vector<std::uint32_t> &b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j])
            return true;
        a[i] < b[j] ? ++i : ++j;
    }
    return false;
}

bool community_connected(const std::vector<std::vector<NodeId>> &adj,
                         const std::vector<NodeId> &members,
                         std::vector<std::uint32_t> &stamp,
                         std::vector<std::uint32_t> &seen, std::uint32_t epoch,
                         std::vector<NodeId> &stack) {
    if (members.size() <= 1)
        return true;
    for (NodeId u : members)
        stamp[u] = epoch;
    stack.assign(1, members.front());
    seen[members.front()] = epoch;
    std::size_t reached = 0;
    while (!stack.empty()) {
        const NodeId u = stack.back();
        stack.pop_back();
        ++reached;
        for (NodeId v : adj[u])
            if (stamp[v] == epoch && seen[v] != epoch) {
                seen[v] = epoch;
                stack.push_back(v);
            }
    }
    return reached == members.size();
}

} // namespace

GeneratedBenchmark generate(const BenchSpec &spec) {
    validate(spec);
    Rng rng(spec.seed);

    const NodeId n = spec.n;
    const NodeId on = spec.overlapping_nodes;
    const std::uint32_t om = spec.memberships;
    const std::size_t slots_needed =
        static_cast<std::size_t>(n) + static_cast<std::size_t>(on) * (om - 1);

    // community sizes: uniform in [c_min, c_max] until the capacity covers
    // all memberships and overlapping nodes can get distinct communities
    std::vector<NodeId> sizes;
    std::size_t capacity = 0;
    while (capacity < slots_needed || (on > 0 && sizes.size() < om)) {
        const NodeId s = spec.community_min +
                         static_cast<NodeId>(rng.bounded(
                             spec.community_max - spec.community_min + 1));
        sizes.push_back(s);
        capacity += s;
    }
    const std::size_t num_communities = sizes.size();

    // overlapping node choice: first On of a shuffled id list
    std::vector<NodeId> ids(n);
    std::iota(ids.begin(), ids.end(), NodeId{0});
    rng.shuffle(ids);
    std::vector<char> overlapping(n, 0);
    for (NodeId k = 0; k < on; ++k)
        overlapping[ids[k]] = 1;

    // capacity-weighted slot pool: one entry per free membership slot
    std::vector<std::uint32_t> slots;
    slots.reserve(capacity);
    for (std::uint32_t c = 0; c < num_communities; ++c)
        slots.insert(slots.end(), sizes[c], c);
    auto take_slot = [&](std::size_t pos) {
        std::swap(slots[pos], slots.back());
        slots.pop_back();
    };

    std::vector<std::vector<std::uint32_t>> node_comms(n);
    for (NodeId k = 0; k < on; ++k) {
        const NodeId u = ids[k];
        auto &picked = node_comms[u];
        std::size_t rejects = 0;
        while (picked.size() < om) {
            const std::size_t pos = static_cast<std::size_t>(rng.bounded(slots.size()));
            const std::uint32_t c = slots[pos];
            if (std::find(picked.begin(), picked.end(), c) != picked.end()) {
                if (++rejects > 200) {
                    // slot pool dominated by already-picked communities;
                    // take the first free slot of a new one
                    auto it = std::find_if(slots.begin(), slots.end(), [&](std::uint32_t s) {
                        return std::find(picked.begin(), picked.end(), s) == picked.end();
                    });
                    if (it == slots.end())
                        throw UserError("benchgen: cannot assign distinct communities; "
                                        "increase community count or sizes");
                    picked.push_back(*it);
                    take_slot(static_cast<std::size_t>(it - slots.begin()));
                    rejects = 0;
                }
                continue;
            }
            picked.push_back(c);
            take_slot(pos);
        }
        std::sort(picked.begin(), picked.end());
    }
    for (NodeId u = 0; u < n; ++u) {
        if (overlapping[u])
            continue;
        const std::size_t pos = static_cast<std::size_t>(rng.bounded(slots.size()));
        node_comms[u].push_back(slots[pos]);
        take_slot(pos);
    }

    std::vector<std::vector<NodeId>> members(num_communities);
    for (NodeId u = 0; u < n; ++u)
        for (std::uint32_t c : node_comms[u])
            members[c].push_back(u);

    const std::uint32_t k_target =
        std::max<std::uint32_t>(3, static_cast<std::uint32_t>(std::llround(spec.k_avg)));

    std::vector<std::pair<NodeId, NodeId>> edges;
    std::vector<std::vector<NodeId>> adj(n);
    std::unordered_set<std::uint64_t> edge_set;
    auto add_edge = [&](NodeId u, NodeId v) {
        edges.emplace_back(u, v);
        adj[u].push_back(v);
        adj[v].push_back(u);
    };

    constexpr int kStubRetries = 50;
    constexpr int kBuildAttempts = 30;
    bool connected_ok = false;
    for (int attempt = 0; attempt < kBuildAttempts && !connected_ok; ++attempt) {
        edges.clear();
        edge_set.clear();
        for (auto &list : adj)
            list.clear();

        for (NodeId u = 0; u < n; ++u) {
            // stubs are half-edges: a node initiates half its target degree
            // and receives the other half
            std::uint32_t initiate = k_target / 2;
            if ((k_target & 1u) && rng.bernoulli(0.5))
                ++initiate;
            for (std::uint32_t stub = 0; stub < initiate; ++stub) {
                for (int retry = 0; retry < kStubRetries; ++retry) {
                    NodeId v;
                    if (rng.bernoulli(spec.mu)) {
                        v = static_cast<NodeId>(rng.bounded(n));
                        if (share_community(node_comms[u], node_comms[v]))
                            continue; // also rejects v == u
                    } else {
                        const auto &own = node_comms[u];
                        const auto &pool = members[own[rng.bounded(own.size())]];
                        v = pool[rng.bounded(pool.size())];
                        if (v == u)
                            continue;
                    }
                    if (!edge_set.insert(edge_key(u, v)).second)
                        continue;
                    add_edge(u, v);
                    break;
                }
            }
        }

        // the edge-list format cannot carry isolated nodes; join any to a
        // co-member (or to anyone, for degenerate singleton communities)
        for (NodeId u = 0; u < n; ++u) {
            if (!adj[u].empty())
                continue;
            std::vector<NodeId> pool;
            for (std::uint32_t c : node_comms[u])
                for (NodeId v : members[c])
                    if (v != u)
                        pool.push_back(v);
            NodeId v;
            if (!pool.empty()) {
                v = pool[rng.bounded(pool.size())];
            } else {
                v = static_cast<NodeId>(rng.bounded(n - 1));
                if (v >= u)
                    ++v;
            }
            edge_set.insert(edge_key(u, v));
            add_edge(u, v);
        }

        connected_ok = true;
        std::vector<std::uint32_t> stamp(n, 0), seen(n, 0);
        std::vector<NodeId> stack;
        for (std::uint32_t c = 0; c < num_communities && connected_ok; ++c)
            connected_ok = community_connected(adj, members[c], stamp, seen, c + 1, stack);
    }
    if (!connected_ok)
        throw UserError("benchgen: could not produce internally connected communities; "
                        "raise k_avg or lower mu/community sizes");

    Cover truth;
    for (auto &community : members)
        if (!community.empty())
            truth.communities.push_back(std::move(community));
    truth.provenance.assign(truth.communities.size(), {});
    canonicalize(truth);

    return {Graph(n, edges), std::move(truth)};
}

} // namespace slpa
