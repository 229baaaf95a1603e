#pragma once

#include "slpa/cover.hpp"
#include "slpa/graph.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace slpa {

// Parameters of a synthetic ground-truthed overlapping benchmark: a planted
// overlapping partition with near-constant degree and uniformly drawn
// community sizes.
struct BenchSpec {
    NodeId n = 1000;
    double k_avg = 10.0;
    double mu = 0.1;                // expected fraction of external stubs
    NodeId overlapping_nodes = 0;   // On
    std::uint32_t memberships = 2;  // Om, communities per overlapping node
    NodeId community_min = 20;
    NodeId community_max = 100;
    std::uint64_t seed = 1;

    // Echo lines for generated file headers.
    std::vector<std::string> header_lines() const;
};

// Throws UserError on an infeasible spec (c_max >= n, On > n, Om < 2,
// c_min < 3, mu outside [0, 1), ...).
void validate(const BenchSpec &spec);

struct GeneratedBenchmark {
    Graph graph;
    Cover truth;
};

// Draws community sizes until capacity covers n + On*(Om-1) memberships,
// assigns On overlapping nodes to Om distinct communities each and the rest
// to one, then wires round(k_i/2) edges per node: internal with probability
// 1-mu (community picked uniformly among the node's own, then a co-member),
// external otherwise, with 50 retries per stub before dropping it. Edges
// are regenerated (up to 30 attempts) until every truth community is
// internally connected. Deterministic from spec.seed.
GeneratedBenchmark generate(const BenchSpec &spec);

} // namespace slpa
