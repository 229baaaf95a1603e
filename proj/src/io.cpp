#include "slpa/io.hpp"

#include "slpa/errors.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace slpa {

void write_cover(const Cover &cover, const Graph &g, std::ostream &out,
                 std::span<const std::string> header) {
    for (const auto &line : header)
        out << "# " << line << '\n';
    Cover canonical = cover;
    canonicalize(canonical);
    for (const auto &community : canonical.communities) {
        for (std::size_t i = 0; i < community.size(); ++i)
            out << (i ? " " : "") << g.external_id(community[i]);
        out << '\n';
    }
}

std::vector<std::vector<std::string>> read_cover_tokens(std::istream &in) {
    std::vector<std::vector<std::string>> communities;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream fields(line);
        std::vector<std::string> tokens;
        std::string token;
        while (fields >> token)
            tokens.push_back(token);
        if (tokens.empty() || tokens.front()[0] == '#' || tokens.front()[0] == '%')
            continue;
        communities.push_back(std::move(tokens));
    }
    return communities;
}

std::vector<std::vector<std::string>> read_cover_file(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw UserError("cannot open " + path);
    return read_cover_tokens(in);
}

namespace {

[[noreturn]] void universe_mismatch(const std::vector<std::string> &offenders,
                                    const std::string &what) {
    std::string msg = "node universes do not match (" + what + "):";
    const std::size_t shown = std::min<std::size_t>(offenders.size(), 10);
    for (std::size_t i = 0; i < shown; ++i)
        msg += " " + offenders[i];
    if (offenders.size() > shown)
        msg += " ... (" + std::to_string(offenders.size()) + " total)";
    throw UserError(msg);
}

} // namespace

Cover cover_from_tokens(const std::vector<std::vector<std::string>> &communities,
                        const Graph &g) {
    Cover cover;
    std::vector<std::string> unknown;
    for (const auto &tokens : communities) {
        std::vector<NodeId> community;
        for (const auto &token : tokens) {
            if (auto u = g.internal_id(token))
                community.push_back(*u);
            else
                unknown.push_back(token);
        }
        cover.communities.push_back(std::move(community));
    }
    if (!unknown.empty()) {
        std::sort(unknown.begin(), unknown.end());
        unknown.erase(std::unique(unknown.begin(), unknown.end()), unknown.end());
        universe_mismatch(unknown, "ids absent from the graph");
    }
    cover.provenance.assign(cover.communities.size(), {});
    canonicalize(cover);
    return cover;
}

AlignedCovers align_covers(const std::vector<std::vector<std::string>> &first,
                           const std::vector<std::vector<std::string>> &second) {
    std::map<std::string, NodeId> ids;
    auto collect = [&](const std::vector<std::vector<std::string>> &communities) {
        for (const auto &tokens : communities)
            for (const auto &token : tokens)
                ids.emplace(token, 0);
    };
    collect(first);
    collect(second);

    // tokens only present on one side are a universe mismatch
    auto side_tokens = [](const std::vector<std::vector<std::string>> &communities) {
        std::vector<std::string> tokens;
        for (const auto &community : communities)
            tokens.insert(tokens.end(), community.begin(), community.end());
        std::sort(tokens.begin(), tokens.end());
        tokens.erase(std::unique(tokens.begin(), tokens.end()), tokens.end());
        return tokens;
    };
    const auto a = side_tokens(first);
    const auto b = side_tokens(second);
    std::vector<std::string> offenders;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(offenders));
    if (!offenders.empty())
        universe_mismatch(offenders, "present in only one cover");

    AlignedCovers aligned;
    aligned.n = static_cast<NodeId>(ids.size());
    aligned.tokens.reserve(ids.size());
    NodeId next = 0;
    for (auto &[token, id] : ids) {
        id = next++;
        aligned.tokens.push_back(token);
    }
    auto map_cover = [&](const std::vector<std::vector<std::string>> &communities) {
        Cover cover;
        for (const auto &tokens : communities) {
            std::vector<NodeId> community;
            for (const auto &token : tokens)
                community.push_back(ids.at(token));
            cover.communities.push_back(std::move(community));
        }
        cover.provenance.assign(cover.communities.size(), {});
        canonicalize(cover);
        return cover;
    };
    aligned.first = map_cover(first);
    aligned.second = map_cover(second);
    return aligned;
}

void write_fuzzy(const LabelDistribution &dist, const Graph &g, std::ostream &out) {
    char buf[32];
    for (NodeId u = 0; u < dist.rows.size(); ++u)
        for (const auto &[label, probability] : dist.rows[u]) {
            std::snprintf(buf, sizeof(buf), "%.6f", probability);
            out << g.external_id(u) << '\t' << g.external_id(label) << '\t' << buf
                << '\n';
        }
}

} // namespace slpa
