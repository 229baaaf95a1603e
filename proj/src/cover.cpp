#include "slpa/cover.hpp"

#include "slpa/errors.hpp"

#include <algorithm>
#include <numeric>

namespace slpa {

std::vector<std::uint32_t> Cover::membership_counts(NodeId n) const {
    std::vector<std::uint32_t> counts(n, 0);
    for (const auto &community : communities)
        for (NodeId u : community) {
            SLPA_INVARIANT(u < n, "cover member out of range");
            ++counts[u];
        }
    return counts;
}

bool Cover::is_disjoint(NodeId n) const {
    for (std::uint32_t c : membership_counts(n))
        if (c > 1)
            return false;
    return true;
}

void canonicalize(Cover &cover) {
    for (auto &community : cover.communities)
        std::sort(community.begin(), community.end());
    for (auto &labels : cover.provenance)
        std::sort(labels.begin(), labels.end());

    std::vector<std::size_t> index(cover.communities.size());
    std::iota(index.begin(), index.end(), std::size_t{0});
    std::sort(index.begin(), index.end(), [&](std::size_t a, std::size_t b) {
        return cover.communities[a] < cover.communities[b];
    });

    Cover sorted;
    sorted.communities.reserve(cover.communities.size());
    sorted.provenance.reserve(cover.provenance.size());
    for (std::size_t i : index) {
        sorted.communities.push_back(std::move(cover.communities[i]));
        if (!cover.provenance.empty())
            sorted.provenance.push_back(std::move(cover.provenance[i]));
    }
    cover = std::move(sorted);
}

bool check_cover(const Cover &cover, NodeId n, std::string *why) {
    auto fail = [&](const std::string &reason) {
        if (why)
            *why = reason;
        return false;
    };
    std::vector<std::uint32_t> counts(n, 0);
    for (std::size_t c = 0; c < cover.communities.size(); ++c) {
        const auto &community = cover.communities[c];
        if (community.empty())
            return fail("empty community " + std::to_string(c));
        for (NodeId u : community) {
            if (u >= n)
                return fail("member out of range in community " + std::to_string(c));
            ++counts[u];
        }
        auto sorted = community;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            return fail("duplicate member in community " + std::to_string(c));
    }
    for (NodeId u = 0; u < n; ++u)
        if (counts[u] == 0)
            return fail("node " + std::to_string(u) + " not covered");

    // maximality: no community contained in (or equal to) another
    std::vector<std::vector<NodeId>> sorted = cover.communities;
    for (auto &community : sorted)
        std::sort(community.begin(), community.end());
    for (std::size_t a = 0; a < sorted.size(); ++a)
        for (std::size_t b = 0; b < sorted.size(); ++b) {
            if (a == b || sorted[a].size() > sorted[b].size())
                continue;
            if (std::includes(sorted[b].begin(), sorted[b].end(), sorted[a].begin(),
                              sorted[a].end()))
                return fail("community " + std::to_string(a) + " nested in " +
                            std::to_string(b));
        }
    return true;
}

} // namespace slpa
