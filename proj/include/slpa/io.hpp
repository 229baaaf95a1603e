#pragma once

#include "slpa/cover.hpp"
#include "slpa/graph.hpp"
#include "slpa/postprocess.hpp"

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace slpa {

// Crisp cover file: one community per line, space-separated external node
// ids, communities ordered by smallest internal member, members ascending.
void write_cover(const Cover &cover, const Graph &g, std::ostream &out,
                 std::span<const std::string> header = {});

// Communities as raw token lists; '#'/'%' comments and blank lines skipped.
std::vector<std::vector<std::string>> read_cover_tokens(std::istream &in);
std::vector<std::vector<std::string>> read_cover_file(const std::string &path);

// Maps token communities onto a graph's internal ids. Tokens unknown to the
// graph raise UserError listing the first 10 offenders.
Cover cover_from_tokens(const std::vector<std::vector<std::string>> &communities,
                        const Graph &g);

// Two token covers aligned onto one dense universe. Their node-token sets
// must be equal; a mismatch raises UserError listing the first 10 offending
// ids from the symmetric difference.
struct AlignedCovers {
    Cover first;
    Cover second;
    NodeId n = 0;
    std::vector<std::string> tokens; // dense index -> token
};

AlignedCovers align_covers(const std::vector<std::vector<std::string>> &first,
                           const std::vector<std::vector<std::string>> &second);

// Fuzzy membership file: tab-separated (node, label, probability) rows,
// probabilities with 6 decimals, ordered by node then label.
void write_fuzzy(const LabelDistribution &dist, const Graph &g, std::ostream &out);

} // namespace slpa
