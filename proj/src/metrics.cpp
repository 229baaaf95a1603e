#include "slpa/metrics.hpp"

#include "slpa/errors.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

namespace slpa {

namespace {

std::vector<NodeId> overlapping_nodes(const Cover &cover, NodeId n) {
    std::vector<NodeId> result;
    const auto counts = cover.membership_counts(n);
    for (NodeId u = 0; u < n; ++u)
        if (counts[u] >= 2)
            result.push_back(u);
    return result;
}

} // namespace

BinaryClassificationResult overlap_fscore(const Cover &detected, const Cover &truth,
                                          NodeId n) {
    const auto d = overlapping_nodes(detected, n);
    const auto t = overlapping_nodes(truth, n);
    std::vector<NodeId> both;
    std::set_intersection(d.begin(), d.end(), t.begin(), t.end(),
                          std::back_inserter(both));

    BinaryClassificationResult result;
    const double hits = static_cast<double>(both.size());
    result.precision = d.empty() ? (t.empty() ? 1.0 : 0.0)
                                 : hits / static_cast<double>(d.size());
    result.recall = t.empty() ? (d.empty() ? 1.0 : 0.0)
                              : hits / static_cast<double>(t.size());
    const double pr = result.precision + result.recall;
    result.f_score = pr > 0.0 ? 2.0 * result.precision * result.recall / pr : 0.0;
    return result;
}

namespace {

// Bit-packed membership rows for fast joint counts.
struct MembershipMatrix {
    std::size_t words = 0;
    std::vector<std::uint64_t> bits; // row-major, one row per community
    std::vector<std::size_t> sizes;

    MembershipMatrix(const Cover &cover, NodeId n) {
        words = (static_cast<std::size_t>(n) + 63) / 64;
        bits.assign(words * cover.size(), 0);
        sizes.reserve(cover.size());
        for (std::size_t c = 0; c < cover.size(); ++c) {
            for (NodeId u : cover.communities[c]) {
                SLPA_INVARIANT(u < n, "extended_nmi: member out of range");
                bits[c * words + u / 64] |= std::uint64_t{1} << (u % 64);
            }
            sizes.push_back(cover.communities[c].size());
        }
    }

    std::size_t intersection(std::size_t a, const MembershipMatrix &other,
                             std::size_t b) const {
        std::size_t count = 0;
        for (std::size_t w = 0; w < words; ++w)
            count += static_cast<std::size_t>(
                std::popcount(bits[a * words + w] & other.bits[b * words + w]));
        return count;
    }
};

double xlogx(double c) { return c > 0.0 ? c * std::log(c) : 0.0; }

// -p log p for p = c / n
double hcell(double c, double n) { return c > 0.0 ? -(c / n) * std::log(c / n) : 0.0; }

// H of a binary variable with `ones` positives out of n, in count form:
// log n - (f(ones) + f(n - ones)) / n with f = xlogx.
double marginal_entropy(std::size_t ones, double n) {
    return std::log(n) -
           (xlogx(static_cast<double>(ones)) + xlogx(n - static_cast<double>(ones))) / n;
}

// Mean over communities of X of H(X_k|Y) / H(X_k); zero-entropy communities
// are excluded from the mean.
double normalized_conditional_entropy(const MembershipMatrix &x,
                                      const MembershipMatrix &y, double n) {
    double sum = 0.0;
    std::size_t counted = 0;
    for (std::size_t k = 0; k < x.sizes.size(); ++k) {
        const double hx = marginal_entropy(x.sizes[k], n);
        if (!(hx > 0.0))
            continue;
        double best = hx; // no admissible candidate: H(X_k|Y) = H(X_k)
        for (std::size_t l = 0; l < y.sizes.size(); ++l) {
            const double c11 = static_cast<double>(x.intersection(k, y, l));
            const double c10 = static_cast<double>(x.sizes[k]) - c11;
            const double c01 = static_cast<double>(y.sizes[l]) - c11;
            const double c00 = n - c11 - c10 - c01;
            if (hcell(c11, n) + hcell(c00, n) < hcell(c01, n) + hcell(c10, n))
                continue;
            // H(X_k, Y_l) - H(Y_l) in count form; exact 0 when the
            // communities coincide.
            const double cy1 = c11 + c01;
            const double conditional = (xlogx(cy1) + xlogx(n - cy1) - xlogx(c11) -
                                        xlogx(c10) - xlogx(c01) - xlogx(c00)) /
                                       n;
            best = std::min(best, std::max(0.0, conditional));
        }
        sum += best / hx;
        ++counted;
    }
    return counted == 0 ? 0.0 : sum / static_cast<double>(counted);
}

} // namespace

double extended_nmi(const Cover &x, const Cover &y, NodeId n) {
    if (x.size() == 0 || y.size() == 0)
        throw UserError("extended_nmi: empty cover");
    const MembershipMatrix mx(x, n), my(y, n);
    const double nd = static_cast<double>(n);
    const double hxy = normalized_conditional_entropy(mx, my, nd);
    const double hyx = normalized_conditional_entropy(my, mx, nd);
    const double nmi = 1.0 - 0.5 * (hxy + hyx);
    return std::clamp(nmi, 0.0, 1.0);
}

BelongingCoefficients belonging_coefficients(const Cover &cover, NodeId n) {
    BelongingCoefficients alpha;
    alpha.rows.resize(n);
    for (std::size_t c = 0; c < cover.size(); ++c)
        for (NodeId u : cover.communities[c]) {
            SLPA_INVARIANT(u < n, "belonging_coefficients: member out of range");
            alpha.rows[u].emplace_back(c, 0.0);
        }
    for (NodeId u = 0; u < n; ++u) {
        auto &row = alpha.rows[u];
        if (row.empty())
            throw UserError("node " + std::to_string(u) +
                            " belongs to no community; not a valid cover");
        const double share = 1.0 / static_cast<double>(row.size());
        for (auto &[c, a] : row)
            a = share;
    }
    return alpha;
}

namespace {

// logistic of f(x) = 60x - 30; F(a, b) of the Qov definition factorizes as
// g(a) * g(b).
double logistic_f(double x) { return 1.0 / (1.0 + std::exp(30.0 - 60.0 * x)); }

} // namespace

double qov(const Graph &g, const Cover &cover) {
    const NodeId n = g.num_nodes();
    if (g.num_edges() == 0)
        throw UserError("qov undefined for edgeless graph");
    const double nd = static_cast<double>(n);
    const double m_dir = 2.0 * static_cast<double>(g.num_edges());
    const auto alpha = belonging_coefficients(cover, n);

    const double g0 = logistic_f(0.0);
    double degree_sum = 0.0;
    for (NodeId u = 0; u < n; ++u)
        degree_sum += static_cast<double>(g.degree(u));

    // per-node g(alpha) for the current community, defaulting to g0
    std::vector<double> gval(n, g0);
    std::vector<char> member(n, 0);

    double total = 0.0;
    for (std::size_t c = 0; c < cover.size(); ++c) {
        const auto &members = cover.communities[c];
        for (NodeId u : members) {
            double a = 0.0;
            for (const auto &[idx, share] : alpha.rows[u])
                if (idx == c)
                    a = share;
            gval[u] = logistic_f(a);
            member[u] = 1;
        }

        // S_c = sum_j g(alpha_jc); W_c = sum_j g(alpha_jc) * k_j
        double s = g0 * (nd - static_cast<double>(members.size()));
        double w = g0 * degree_sum;
        for (NodeId u : members) {
            s += gval[u];
            w += (gval[u] - g0) * static_cast<double>(g.degree(u));
        }

        // edge term: sum over directed edges of g(alpha_ic) g(alpha_jc);
        // start from the all-g0 baseline and correct pairs touching members.
        double edges = m_dir * g0 * g0;
        for (NodeId u : members)
            for (NodeId v : g.neighbors(u)) {
                const double correction = gval[u] * gval[v] - g0 * g0;
                // (u,v) comes from u's scan; (v,u) shows up in a member scan
                // only when v is one, so add it here otherwise.
                edges += member[v] ? correction : 2.0 * correction;
            }

        total += edges - (s * w / nd) * (s * w / nd) / m_dir;

        for (NodeId u : members) {
            gval[u] = g0;
            member[u] = 0;
        }
    }
    return total / m_dir;
}

CoverStats cover_stats(const Cover &cover, NodeId n) {
    CoverStats stats;
    stats.num_communities = cover.size();
    const auto counts = cover.membership_counts(n);
    std::size_t membership_total = 0;
    for (NodeId u = 0; u < n; ++u)
        if (counts[u] >= 2) {
            ++stats.num_overlapping_nodes;
            membership_total += counts[u];
        }
    if (stats.num_overlapping_nodes > 0)
        stats.avg_overlapping_memberships = static_cast<double>(membership_total) /
                                            static_cast<double>(stats.num_overlapping_nodes);
    return stats;
}

} // namespace slpa
