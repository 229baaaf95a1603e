#include "slpa/graph.hpp"

#include "slpa/errors.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>

namespace slpa {

Graph::Graph(NodeId n, std::span<const std::pair<NodeId, NodeId>> edges,
             std::vector<std::string> external_ids) {
    n_ = n;
    m_ = edges.size();

    if (external_ids.empty()) {
        external_ids.reserve(n);
        for (NodeId u = 0; u < n; ++u)
            external_ids.push_back(std::to_string(u));
    }
    if (external_ids.size() != n)
        throw UserError("external id count does not match node count");
    external_ids_ = std::move(external_ids);
    internal_ids_.reserve(n);
    for (NodeId u = 0; u < n; ++u) {
        if (!internal_ids_.emplace(external_ids_[u], u).second)
            throw UserError("duplicate external id: " + external_ids_[u]);
    }

    std::vector<std::size_t> deg(n, 0);
    for (const auto &[u, v] : edges) {
        if (u >= n || v >= n)
            throw UserError("edge endpoint out of range");
        if (u == v)
            throw UserError("self-loop in edge set");
        ++deg[u];
        ++deg[v];
    }
    offsets_.assign(n + 1, 0);
    for (NodeId u = 0; u < n; ++u)
        offsets_[u + 1] = offsets_[u] + deg[u];
    adjacency_.resize(2 * m_);
    std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
    for (const auto &[u, v] : edges) {
        adjacency_[cursor[u]++] = v;
        adjacency_[cursor[v]++] = u;
    }
    for (NodeId u = 0; u < n; ++u) {
        auto first = adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[u]);
        auto last = adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[u + 1]);
        std::sort(first, last);
        if (std::adjacent_find(first, last) != last)
            throw UserError("duplicate edge incident to node " + external_ids_[u]);
    }
}

bool Graph::has_edge(NodeId u, NodeId v) const {
    const auto nbs = neighbors(u);
    return std::binary_search(nbs.begin(), nbs.end(), v);
}

double Graph::mean_degree() const {
    return n_ == 0 ? 0.0 : 2.0 * static_cast<double>(m_) / static_cast<double>(n_);
}

std::size_t Graph::min_degree() const {
    std::size_t best = adjacency_.size();
    for (NodeId u = 0; u < n_; ++u)
        best = std::min(best, degree(u));
    return n_ == 0 ? 0 : best;
}

std::size_t Graph::max_degree() const {
    std::size_t best = 0;
    for (NodeId u = 0; u < n_; ++u)
        best = std::max(best, degree(u));
    return best;
}

std::optional<NodeId> Graph::internal_id(const std::string &token) const {
    auto it = internal_ids_.find(token);
    if (it == internal_ids_.end())
        return std::nullopt;
    return it->second;
}

bool Graph::check_consistency(std::string *why) const {
    auto fail = [&](const std::string &reason) {
        if (why)
            *why = reason;
        return false;
    };
    std::size_t degree_sum = 0;
    for (NodeId u = 0; u < n_; ++u) {
        const auto nbs = neighbors(u);
        degree_sum += nbs.size();
        for (std::size_t k = 0; k < nbs.size(); ++k) {
            const NodeId v = nbs[k];
            if (v >= n_)
                return fail("neighbor out of range at node " + std::to_string(u));
            if (v == u)
                return fail("self-loop at node " + std::to_string(u));
            if (k > 0 && nbs[k - 1] >= v)
                return fail("adjacency not strictly sorted at node " + std::to_string(u));
            if (!has_edge(v, u))
                return fail("asymmetric edge " + std::to_string(u) + "-" + std::to_string(v));
        }
    }
    if (degree_sum != 2 * m_)
        return fail("degree sum != 2m");
    return true;
}

std::string Graph::summary_line() const {
    char buf[160];
    std::snprintf(buf, sizeof(buf), "graph n=%u m=%zu kavg=%.3f degmin=%zu degmax=%zu",
                  n_, m_, mean_degree(), min_degree(), max_degree());
    return buf;
}

LoadResult load_edge_list(std::istream &in) {
    std::vector<std::pair<NodeId, NodeId>> edges;
    std::vector<std::string> names;
    std::unordered_map<std::string, NodeId> ids;
    // packed (min, max) pairs for duplicate detection
    std::unordered_set<std::uint64_t> seen;
    std::size_t self_loops = 0;
    std::size_t duplicates = 0;

    auto intern = [&](const std::string &token) {
        auto [it, inserted] = ids.emplace(token, static_cast<NodeId>(names.size()));
        if (inserted)
            names.push_back(token);
        return it->second;
    };

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream fields(line);
        std::string a, b, extra;
        if (!(fields >> a))
            continue; // blank
        if (a[0] == '#' || a[0] == '%')
            continue;
        if (!(fields >> b) || (fields >> extra))
            throw ParseError("expected exactly 2 tokens", line_no);
        const NodeId u = intern(a);
        const NodeId v = intern(b);
        if (u == v) {
            ++self_loops;
            continue;
        }
        const std::uint64_t key =
            (static_cast<std::uint64_t>(std::min(u, v)) << 32) | std::max(u, v);
        if (!seen.insert(key).second) {
            ++duplicates;
            continue;
        }
        edges.emplace_back(u, v);
    }
    if (edges.empty() && names.empty())
        throw UserError("empty graph: no nodes and no edges");

    return LoadResult{Graph(static_cast<NodeId>(names.size()), edges, std::move(names)),
                      self_loops, duplicates};
}

LoadResult load_edge_list_file(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw UserError("cannot open " + path);
    return load_edge_list(in);
}

void write_edge_list(const Graph &g, std::ostream &out,
                     std::span<const std::string> header) {
    for (const auto &line : header)
        out << "# " << line << '\n';
    for (NodeId u = 0; u < g.num_nodes(); ++u)
        for (NodeId v : g.neighbors(u))
            if (u < v)
                out << g.external_id(u) << ' ' << g.external_id(v) << '\n';
}

std::vector<std::vector<NodeId>> connected_components(const Graph &g,
                                                      std::span<const NodeId> subset) {
    std::vector<char> in_subset(g.num_nodes(), 0);
    for (NodeId u : subset) {
        SLPA_INVARIANT(u < g.num_nodes(), "connected_components: node out of range");
        in_subset[u] = 1;
    }

    std::vector<std::vector<NodeId>> components;
    std::vector<char> visited(g.num_nodes(), 0);
    std::vector<NodeId> stack;
    std::vector<NodeId> seeds(subset.begin(), subset.end());
    std::sort(seeds.begin(), seeds.end());
    seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());

    for (NodeId seed : seeds) {
        if (visited[seed])
            continue;
        std::vector<NodeId> component;
        stack.assign(1, seed);
        visited[seed] = 1;
        while (!stack.empty()) {
            const NodeId u = stack.back();
            stack.pop_back();
            component.push_back(u);
            for (NodeId v : g.neighbors(u)) {
                if (in_subset[v] && !visited[v]) {
                    visited[v] = 1;
                    stack.push_back(v);
                }
            }
        }
        std::sort(component.begin(), component.end());
        components.push_back(std::move(component));
    }
    // seeds were scanned ascending, so components are already ordered by
    // smallest member
    return components;
}

} // namespace slpa
