#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace slpa {

using NodeId = std::uint32_t;

// Labels are node ids: every label circulating in the dynamic is the id of
// the node that introduced it.
using Label = NodeId;

// Immutable simple undirected graph. Nodes carry dense internal indices in
// [0, n); the external tokens seen in the input are kept for I/O. Adjacency
// lists are sorted ascending and symmetric. Safe for concurrent reads.
class Graph {
public:
    // Builds from internal-index edges. Throws UserError on self-loops,
    // duplicate edges or out-of-range endpoints; callers clean their input
    // first (the edge-list loader does). `external_ids`, when empty,
    // defaults to the decimal index of each node.
    Graph(NodeId n, std::span<const std::pair<NodeId, NodeId>> edges,
          std::vector<std::string> external_ids = {});

    NodeId num_nodes() const { return n_; }
    std::size_t num_edges() const { return m_; }

    std::size_t degree(NodeId u) const { return offsets_[u + 1] - offsets_[u]; }

    std::span<const NodeId> neighbors(NodeId u) const {
        return {adjacency_.data() + offsets_[u], adjacency_.data() + offsets_[u + 1]};
    }

    bool has_edge(NodeId u, NodeId v) const;

    double mean_degree() const;
    std::size_t min_degree() const;
    std::size_t max_degree() const;

    const std::string &external_id(NodeId u) const { return external_ids_[u]; }
    std::optional<NodeId> internal_id(const std::string &token) const;

    // Verifies symmetry, simplicity, adjacency sortedness and the degree
    // sum. Returns false and fills `why` on the first violation.
    bool check_consistency(std::string *why = nullptr) const;

    // Single-line record for logs: n, m, mean degree, degree min/max.
    std::string summary_line() const;

private:
    NodeId n_ = 0;
    std::size_t m_ = 0;
    std::vector<std::size_t> offsets_;
    std::vector<NodeId> adjacency_;
    std::vector<std::string> external_ids_;
    std::unordered_map<std::string, NodeId> internal_ids_;
};

struct LoadResult {
    Graph graph;
    std::size_t self_loops_dropped = 0;
    std::size_t duplicates_collapsed = 0;
};

// Parses whitespace-separated "u v" pairs, one edge per line. Lines starting
// with '#' or '%' are comments; blank lines are allowed. Node ids are
// assigned in first-seen order. Throws ParseError on a line with a token
// count other than 2 and UserError when no edges remain.
LoadResult load_edge_list(std::istream &in);
LoadResult load_edge_list_file(const std::string &path);

// Writes one "u v" line per undirected edge using external tokens, ordered
// by internal index. `header` lines are emitted first as '#' comments.
void write_edge_list(const Graph &g, std::ostream &out,
                     std::span<const std::string> header = {});

// Partition of `subset` into maximal sets connected within the subgraph
// induced by `subset`. Components ordered by smallest member, members
// ascending. An empty subset yields an empty list.
std::vector<std::vector<NodeId>> connected_components(const Graph &g,
                                                      std::span<const NodeId> subset);

} // namespace slpa
