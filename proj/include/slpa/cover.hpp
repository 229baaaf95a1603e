#pragma once

#include "slpa/graph.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace slpa {

// A set of possibly overlapping communities over nodes [0, n). Communities
// are ascending node lists; the cover is ordered by smallest member, then
// lexicographically. provenance[c] lists the labels community c originated
// from (empty for ground truth and file-loaded covers).
struct Cover {
    std::vector<std::vector<NodeId>> communities;
    std::vector<std::vector<Label>> provenance;

    std::size_t size() const { return communities.size(); }

    // Number of communities containing each node in [0, n).
    std::vector<std::uint32_t> membership_counts(NodeId n) const;

    bool is_disjoint(NodeId n) const;
};

// Sorts members ascending and communities canonically, keeping provenance
// aligned.
void canonicalize(Cover &cover);

// Structural invariants: communities nonempty with members in [0, n), no
// community contained in another, every node in at least one community.
// Returns false and fills `why` on the first violation.
bool check_cover(const Cover &cover, NodeId n, std::string *why = nullptr);

} // namespace slpa
