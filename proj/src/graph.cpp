#include "cutbench/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cutbench {

SimpleGraph::SimpleGraph(int n, const std::vector<Edge>& edges) : n_(n), adj_(n) {
    if (n < 0) throw std::invalid_argument("SimpleGraph: negative vertex count");
    std::set<Edge> seen;
    for (auto [u, v] : edges) {
        if (u == v) throw std::invalid_argument("SimpleGraph: self loop");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("SimpleGraph: vertex id out of range");
        Edge e = make_edge(u, v);
        if (!seen.insert(e).second) throw std::invalid_argument("SimpleGraph: duplicate edge");
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    m_ = static_cast<long long>(seen.size());
    for (auto& a : adj_) std::sort(a.begin(), a.end());
}

bool SimpleGraph::has_edge(int u, int v) const {
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
}

std::vector<Edge> SimpleGraph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<size_t>(m_));
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

const Bitset& SimpleGraph::adjacency_row(int v) const {
    std::call_once(*rows_once_, [this] {
        rows_.assign(n_, Bitset(n_));
        for (int u = 0; u < n_; ++u)
            for (int w : adj_[u]) rows_[u].set(w);
    });
    return rows_[v];
}

SimpleGraph SimpleGraph::load(std::istream& in) {
    int n;
    long long m;
    if (!(in >> n >> m)) throw std::invalid_argument("graph file: missing header");
    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(m));
    for (long long i = 0; i < m; ++i) {
        int u, v;
        if (!(in >> u >> v)) throw std::invalid_argument("graph file: truncated edge list");
        edges.emplace_back(u, v);
    }
    return SimpleGraph(n, edges);
}

SimpleGraph SimpleGraph::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("graph file: cannot open " + path);
    return load(in);
}

void SimpleGraph::save(std::ostream& out) const {
    out << n_ << ' ' << m_ << '\n';
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) out << u << ' ' << v << '\n';
}

VertexPartition::VertexPartition(int n) : parent_(n), rank_(n, 0), blocks_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
}

int VertexPartition::find(int v) const {
    while (parent_[v] != v) {
        parent_[v] = parent_[parent_[v]];
        v = parent_[v];
    }
    return v;
}

bool VertexPartition::unite(int a, int b) {
    int ra = find(a), rb = find(b);
    if (ra == rb) return false;
    if (rank_[ra] < rank_[rb]) std::swap(ra, rb);
    parent_[rb] = ra;
    if (rank_[ra] == rank_[rb]) ++rank_[ra];
    --blocks_;
    return true;
}

std::vector<int> VertexPartition::block_index() const {
    int n = size();
    std::vector<int> idx(n, -1);
    int next = 0;
    for (int v = 0; v < n; ++v) {
        int r = find(v);
        if (idx[r] < 0) idx[r] = next++;
    }
    std::vector<int> out(n);
    for (int v = 0; v < n; ++v) out[v] = idx[find(v)];
    return out;
}

std::vector<std::vector<int>> VertexPartition::block_lists() const {
    auto idx = block_index();
    std::vector<std::vector<int>> blocks(blocks_);
    for (int v = 0; v < size(); ++v) blocks[idx[v]].push_back(v);
    return blocks;
}

int min_degree(const SimpleGraph& g) {
    if (g.n() < 1) throw std::invalid_argument("min_degree: empty graph");
    int best = g.degree(0);
    for (int v = 1; v < g.n(); ++v) best = std::min(best, g.degree(v));
    return best;
}

std::vector<std::vector<int>> connected_components(const SimpleGraph& g) {
    VertexPartition p(g.n());
    for (int u = 0; u < g.n(); ++u)
        for (int v : g.neighbors(u))
            if (u < v) p.unite(u, v);
    return p.block_lists();
}

CutWitness exhaustive_min_cut(const SimpleGraph& g) {
    int n = g.n();
    if (n < 2) throw std::invalid_argument("exhaustive_min_cut: need n >= 2");
    if (n > 24) throw std::invalid_argument("exhaustive_min_cut: n too large");
    auto edges = g.edges();
    long long best = -1;
    std::uint32_t best_mask = 1;
    // Sides containing vertex 0, excluding the full set.
    std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
    for (std::uint32_t rest = 0; rest < (1u << (n - 1)); ++rest) {
        std::uint32_t mask = (rest << 1) | 1u;
        if (mask == full) continue;
        long long cut = 0;
        for (auto [u, v] : edges)
            cut += (((mask >> u) ^ (mask >> v)) & 1u);
        if (best < 0 || cut < best) {
            best = cut;
            best_mask = mask;
        }
    }
    CutWitness w;
    w.value = best;
    w.side = Bitset(n);
    for (int v = 0; v < n; ++v)
        if ((best_mask >> v) & 1u) w.side.set(v);
    return w;
}

std::pair<long long, std::vector<int>> stoer_wagner(std::vector<std::vector<long long>> w) {
    int n = static_cast<int>(w.size());
    if (n < 2) throw std::invalid_argument("stoer_wagner: need n >= 2");
    std::vector<std::vector<int>> members(n);
    for (int i = 0; i < n; ++i) members[i] = {i};
    std::vector<bool> merged(n, false);
    long long best = -1;
    std::vector<int> best_side;

    for (int phase = 0; phase < n - 1; ++phase) {
        std::vector<long long> keys(n, 0);
        std::vector<bool> in_a(n, false);
        int prev = -1, last = -1;
        for (int step = 0, active = n - phase; step < active; ++step) {
            int pick = -1;
            for (int v = 0; v < n; ++v)
                if (!merged[v] && !in_a[v] && (pick < 0 || keys[v] > keys[pick])) pick = v;
            in_a[pick] = true;
            prev = last;
            last = pick;
            for (int v = 0; v < n; ++v)
                if (!merged[v] && !in_a[v]) keys[v] += w[pick][v];
        }
        long long phase_cut = keys[last];
        if (best < 0 || phase_cut < best) {
            best = phase_cut;
            best_side = members[last];
        }
        // merge last into prev
        merged[last] = true;
        members[prev].insert(members[prev].end(), members[last].begin(), members[last].end());
        for (int v = 0; v < n; ++v) {
            w[prev][v] += w[last][v];
            w[v][prev] = w[prev][v];
        }
        w[prev][prev] = 0;
    }
    std::sort(best_side.begin(), best_side.end());
    return {best, best_side};
}

CutWitness exact_min_cut(const SimpleGraph& g) {
    int n = g.n();
    if (n < 2) throw std::invalid_argument("exact_min_cut: need n >= 2");

    auto comps = connected_components(g);
    CutWitness w;
    w.side = Bitset(n);
    if (comps.size() > 1) {
        w.value = 0;
        for (int v : comps[0]) w.side.set(v);
        return w;
    }

    std::vector<std::vector<long long>> mat(n, std::vector<long long>(n, 0));
    for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u)) mat[u][v] = 1;
    auto [value, side] = stoer_wagner(std::move(mat));
    w.value = value;
    for (int v : side) w.side.set(v);

    if (n <= 16) {
        CutWitness brute = exhaustive_min_cut(g);
        if (brute.value != w.value)
            throw std::logic_error("exact_min_cut: oracle disagreement at small n");
    }
    return w;
}

VertexPartition contract(const SimpleGraph& g, const std::vector<Edge>& f) {
    VertexPartition p(g.n());
    for (auto [u, v] : f) {
        if (!g.has_edge(u, v)) throw std::invalid_argument("contract: edge not in graph");
        p.unite(u, v);
    }
    return p;
}

std::pair<std::vector<std::vector<long long>>, std::vector<std::vector<int>>> quotient_matrix(
    const SimpleGraph& g, const VertexPartition& partition, const std::vector<Edge>* edges) {
    auto idx = partition.block_index();
    int q = partition.block_count();
    std::vector<std::vector<long long>> mat(q, std::vector<long long>(q, 0));
    auto add = [&](int u, int v) {
        int a = idx[u], b = idx[v];
        if (a == b) return;
        ++mat[a][b];
        ++mat[b][a];
    };
    if (edges) {
        for (auto [u, v] : *edges) add(u, v);
    } else {
        for (int u = 0; u < g.n(); ++u)
            for (int v : g.neighbors(u))
                if (u < v) add(u, v);
    }
    std::vector<std::vector<int>> blocks(q);
    for (int v = 0; v < g.n(); ++v) blocks[idx[v]].push_back(v);
    return {std::move(mat), std::move(blocks)};
}

std::vector<Edge> CertificateForests::all_edges() const {
    std::vector<Edge> out;
    for (const auto& f : forests) out.insert(out.end(), f.begin(), f.end());
    return out;
}

long long CertificateForests::edge_count() const {
    long long c = 0;
    for (const auto& f : forests) c += static_cast<long long>(f.size());
    return c;
}

CertificateForests ni_certificate_explicit(const SimpleGraph& g, const VertexPartition& partition,
                                           int r) {
    if (r < 1) throw std::invalid_argument("ni_certificate_explicit: r >= 1 required");
    auto idx = partition.block_index();
    int q = partition.block_count();
    CertificateForests cert;
    cert.block_of = idx;
    cert.forests.assign(r, {});
    std::vector<VertexPartition> uf(r, VertexPartition(q));
    for (int u = 0; u < g.n(); ++u) {
        for (int v : g.neighbors(u)) {
            if (u >= v) continue;
            int a = idx[u], b = idx[v];
            if (a == b) continue;
            for (int i = 0; i < r; ++i) {
                if (uf[i].unite(a, b)) {
                    cert.forests[i].emplace_back(u, v);
                    break;
                }
            }
        }
    }
    return cert;
}

std::pair<long long, std::vector<int>> certificate_min_cut(const SimpleGraph& g,
                                                           const CertificateForests& cert) {
    int q = 0;
    for (int b : cert.block_of) q = std::max(q, b + 1);
    std::vector<std::vector<long long>> mat(q, std::vector<long long>(q, 0));
    for (const auto& f : cert.forests) {
        for (auto [u, v] : f) {
            int a = cert.block_of[u], b = cert.block_of[v];
            ++mat[a][b];
            ++mat[b][a];
        }
    }
    (void)g;
    if (q < 2) return {0, {}};
    return stoer_wagner(std::move(mat));
}

SimpleGraph degree_to_connectivity_gadget(const SimpleGraph& g) {
    int n = g.n();
    if (n < 2) throw std::invalid_argument("gadget: need n >= 2");
    std::vector<Edge> edges = g.edges();
    // cross edges between V (ids 0..n-1) and K (ids n..2n-1)
    for (int u = 0; u < n; ++u)
        for (int k = 0; k < n; ++k) edges.emplace_back(u, n + k);
    // clique on K
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) edges.emplace_back(n + a, n + b);
    return SimpleGraph(2 * n, edges);
}

}  // namespace cutbench
