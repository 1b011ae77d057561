#include "cutbench/contraction.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

namespace cutbench {

VertexList sample_centers(int n, double p, Rng& rng) {
    if (p <= 0.0 || p > 1.0) throw std::invalid_argument("sample_centers: p in (0,1] required");
    VertexList r;
    for (int v = 0; v < n; ++v)
        if (rng.bernoulli(p)) r.push_back(v);
    return r;
}

std::pair<VertexPartition, StarSample> uniform_star_contraction(CutOracle& oracle, double p,
                                                                Rng& rng, StarVariant variant) {
    int n = oracle.n();
    StarSample sample;
    sample.centers = sample_centers(n, p, rng);
    Bitset in_r(n);
    in_r.set_all(sample.centers.begin(), sample.centers.end());

    VertexPartition partition(n);

    if (variant == StarVariant::NeighborhoodLists) {
        // Learn cut(R) explicitly from the centers, then sample locally.
        std::vector<VertexList> into_r(n);
        for (int c : sample.centers)
            for (int u : oracle.mdcp_nbh(c))
                if (!in_r.test(u)) into_r[u].push_back(c);
        for (int v = 0; v < n; ++v) {
            if (in_r.test(v)) continue;
            if (into_r[v].empty()) {
                sample.left_out.push_back(v);
                continue;
            }
            int c = into_r[v][rng.next_below(into_r[v].size())];
            sample.star_edges.push_back(make_edge(v, c));
            partition.unite(v, c);
        }
    } else {
        for (int v = 0; v < n; ++v) {
            if (in_r.test(v)) continue;
            auto c = oracle.random_neighbor(v, sample.centers, rng);
            if (!c) {
                sample.left_out.push_back(v);
                continue;
            }
            sample.star_edges.push_back(make_edge(v, *c));
            partition.unite(v, *c);
        }
    }
    return {std::move(partition), std::move(sample)};
}

std::vector<Edge> one_out_sample(const DirectedSubgraph& h, Rng& rng) {
    std::vector<Edge> out;
    for (int v = 0; v < h.n(); ++v) {
        const auto& arcs = h.out[v];
        if (arcs.empty()) continue;
        out.push_back(make_edge(v, arcs[rng.next_below(arcs.size())]));
    }
    return out;
}

std::vector<Edge> two_out_sample(const DirectedSubgraph& h, Rng& rng) {
    std::vector<Edge> out;
    for (int v = 0; v < h.n(); ++v) {
        const auto& arcs = h.out[v];
        if (arcs.empty()) continue;
        Edge e1 = make_edge(v, arcs[rng.next_below(arcs.size())]);
        Edge e2 = make_edge(v, arcs[rng.next_below(arcs.size())]);
        out.push_back(e1);
        if (e2 != e1) out.push_back(e2);
    }
    return out;
}

GoodnessReport goodness_report(const SimpleGraph& g, const DirectedSubgraph& h,
                               const std::vector<Edge>& c) {
    std::unordered_set<std::uint64_t> cut_edges;
    cut_edges.reserve(c.size() * 2);
    for (auto [u, v] : c) {
        if (!g.has_edge(u, v)) throw std::invalid_argument("goodness_report: C not a subset of E");
        cut_edges.insert(static_cast<std::uint64_t>(std::min(u, v)) * g.n() + std::max(u, v));
    }
    GoodnessReport rep;
    rep.q.assign(g.n(), 0.0);
    for (int u = 0; u < h.n(); ++u) {
        const auto& arcs = h.out[u];
        if (arcs.empty()) continue;
        int crossing = 0;
        for (int v : arcs) {
            std::uint64_t key = static_cast<std::uint64_t>(std::min(u, v)) * g.n() + std::max(u, v);
            if (cut_edges.count(key)) ++crossing;
        }
        rep.q[u] = static_cast<double>(crossing) / static_cast<double>(arcs.size());
        rep.max_q = std::max(rep.max_q, rep.q[u]);
        rep.sum_q += rep.q[u];
    }
    return rep;
}

double miss_probability_bound(double alpha, double beta) {
    if (alpha < 0.0 || alpha >= 1.0)
        throw std::invalid_argument("miss_probability_bound: 0 <= alpha < 1 required");
    if (beta <= 0.0) return 1.0;
    if (alpha == 0.0) return 1.0;
    double exponent = std::ceil(beta / alpha);
    return std::pow(1.0 - alpha, exponent);
}

std::optional<DirectedSubgraph> learn_subgraph(CutOracle& oracle, const VertexList& w, int h,
                                               long long tau, Rng& rng, double clock_factor) {
    if (h < 1) throw std::invalid_argument("learn_subgraph: h >= 1 required");
    VertexList v1, v2;
    for (int v : w)
        (rng.bernoulli(0.5) ? v1 : v2).push_back(v);

    auto filter = [&](const VertexList& side, const VertexList& other) {
        VertexList kept;
        for (int v : side) {
            long long d = oracle.cross({v}, other);
            if (d >= h) kept.push_back(v);
        }
        return kept;
    };
    VertexList v1p = v1.empty() || v2.empty() ? VertexList{} : filter(v1, v2);
    VertexList v2p = v1.empty() || v2.empty() ? VertexList{} : filter(v2, v1);

    long long outside = static_cast<long long>(w.size()) -
                        static_cast<long long>(v1p.size()) - static_cast<long long>(v2p.size());
    long long bound = tau + static_cast<long long>(w.size()) / std::max(1, h);
    if (outside > bound) return std::nullopt;

    DirectedSubgraph merged(oracle.n());
    if (!v1p.empty()) {
        auto z1 = wc_recover_k_from_all(oracle, v1p, v2, h, rng, clock_factor);
        if (!z1) return std::nullopt;
        for (int v = 0; v < merged.n(); ++v)
            for (int u : z1->out[v]) merged.add_arc(v, u);
    }
    if (!v2p.empty()) {
        auto z2 = wc_recover_k_from_all(oracle, v2p, v1, h, rng, clock_factor);
        if (!z2) return std::nullopt;
        for (int v = 0; v < merged.n(); ++v)
            for (int u : z2->out[v]) merged.add_arc(v, u);
    }
    return merged;
}

}  // namespace cutbench
