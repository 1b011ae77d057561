#include "cutbench/forest.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cutbench/recovery.hpp"

namespace cutbench {

namespace {

int log2_ceil_int(long long x) {
    int l = 0;
    while ((1LL << l) < x) ++l;
    return std::max(1, l);
}

// Binary search over `items` for one element contributing to a positive
// count, where count is a cross query against a fixed opposite side.
template <typename CountFn>
int binary_search_positive(const std::vector<int>& items, CountFn count) {
    size_t lo = 0, hi = items.size();
    while (hi - lo > 1) {
        size_t mid = lo + (hi - lo) / 2;
        std::vector<int> left(items.begin() + lo, items.begin() + mid);
        if (count(left) > 0)
            hi = mid;
        else
            lo = mid;
    }
    return items[lo];
}

}  // namespace

std::uint64_t simple_forest_budget(int q, int n) {
    // Per component: one termination check; per found edge: two binary
    // searches of <= ceil(log2 n) cross calls each, 3 units per call.
    return static_cast<std::uint64_t>(q) * (6ULL * log2_ceil_int(n) + 9ULL) + 9ULL;
}

std::vector<Edge> simple_spanning_forest(CutOracle& oracle, const VertexPartition& partition) {
    int n = oracle.n();
    auto blocks = partition.block_lists();
    int q = static_cast<int>(blocks.size());
    std::vector<int> block_of(n);
    for (int b = 0; b < q; ++b)
        for (int v : blocks[b]) block_of[v] = b;

    VertexPartition comp(q);  // components over block indices
    std::vector<Edge> forest;
    std::vector<char> closed(q, 0);  // block whose component is already complete

    for (int start = 0; start < q; ++start) {
        if (closed[comp.find(start)]) continue;
        // Grow the component containing `start` until it has no outgoing edge.
        while (true) {
            int root = comp.find(start);
            std::vector<int> inside, outside;
            inside.reserve(n);
            for (int v = 0; v < n; ++v)
                (comp.find(block_of[v]) == root ? inside : outside).push_back(v);
            if (outside.empty()) {
                closed[root] = 1;
                break;
            }
            if (oracle.cross(inside, outside) == 0) {
                closed[root] = 1;
                break;
            }
            int u = binary_search_positive(inside, [&](const std::vector<int>& half) {
                return oracle.cross(half, outside);
            });
            int v = binary_search_positive(outside, [&](const std::vector<int>& half) {
                return oracle.cross({u}, half);
            });
            forest.push_back(make_edge(u, v));
            comp.unite(block_of[u], block_of[v]);
        }
    }
    return forest;
}

std::vector<Edge> boruvka_spanning_forest(CutOracle& oracle, Rng& rng, const ForestConfig& cfg,
                                          int* rounds_out) {
    int n = oracle.n();
    VertexPartition partition(n);
    std::vector<char> active(n, 1);
    std::vector<Edge> forest;
    int rounds = 0;

    long long switch_at = cfg.switch_divisor > 0 ? static_cast<long long>(n) / cfg.switch_divisor
                                                 : static_cast<long long>(n) / log2_ceil_int(n);

    while (true) {
        // Components with at least one active vertex, ordered by smallest member.
        auto blocks = partition.block_lists();
        std::vector<std::vector<int>> comps;
        for (auto& b : blocks) {
            bool any = std::any_of(b.begin(), b.end(), [&](int v) { return active[v]; });
            if (any) comps.push_back(std::move(b));
        }
        long long t = static_cast<long long>(comps.size());
        if (t == 0) break;
        if (t < std::max<long long>(1, switch_at)) {
            auto rest = simple_spanning_forest(oracle, partition);
            forest.insert(forest.end(), rest.begin(), rest.end());
            break;
        }
        ++rounds;

        // Step 1: one representative per component, marking dead vertices.
        Bitset in_comp(n);
        std::vector<int> reps;
        std::vector<int> rep_comp;
        std::vector<char> comp_active(comps.size(), 0);
        for (size_t i = 0; i < comps.size(); ++i) {
            in_comp.clear();
            in_comp.set_all(comps[i].begin(), comps[i].end());
            std::vector<int> outside;
            outside.reserve(n - comps[i].size());
            for (int v = 0; v < n; ++v)
                if (!in_comp.test(v)) outside.push_back(v);
            if (outside.empty()) {
                for (int v : comps[i]) active[v] = 0;
                continue;
            }
            for (int v : comps[i]) {
                if (!active[v]) continue;
                long long d = oracle.cross({v}, outside);
                if (d > 0) {
                    reps.push_back(v);
                    rep_comp.push_back(static_cast<int>(i));
                    comp_active[i] = 1;
                    break;
                }
                active[v] = 0;
            }
        }
        if (reps.empty()) break;

        // Step 2: red/blue split, recover one blue neighbor per caught red rep.
        std::vector<char> red(comps.size(), 0);
        for (size_t i = 0; i < comps.size(); ++i)
            if (comp_active[i]) red[i] = rng.bernoulli(0.5) ? 1 : 0;
        std::vector<int> blue_vertices;
        for (size_t i = 0; i < comps.size(); ++i)
            if (comp_active[i] && !red[i])
                blue_vertices.insert(blue_vertices.end(), comps[i].begin(), comps[i].end());
        if (blue_vertices.empty()) continue;

        std::vector<int> w_rows;        // red representatives with a blue neighbor
        std::vector<int> w_comp;
        for (size_t j = 0; j < reps.size(); ++j) {
            if (!red[rep_comp[j]]) continue;
            long long c = oracle.cross({reps[j]}, blue_vertices);
            if (c > 0) {
                w_rows.push_back(reps[j]);
                w_comp.push_back(rep_comp[j]);
            }
        }
        if (w_rows.empty()) continue;

        GraphBipOracle bip(oracle, w_rows, blue_vertices);
        std::vector<int> row_ids(w_rows.size());
        for (size_t i = 0; i < w_rows.size(); ++i) row_ids[i] = static_cast<int>(i);
        std::vector<int> col_ids(blue_vertices.size());
        for (size_t j = 0; j < blue_vertices.size(); ++j) col_ids[j] = static_cast<int>(j);
        auto lists = recover_k_from_all(bip, row_ids, col_ids, cfg.recover_k, rng);

        for (size_t i = 0; i < w_rows.size(); ++i) {
            int u = w_rows[i];
            int v = blue_vertices[*std::min_element(lists.z[i].begin(), lists.z[i].end())];
            if (partition.unite(u, v)) forest.push_back(make_edge(u, v));
        }
    }
    if (rounds_out) *rounds_out = rounds;
    return forest;
}

double expected_certificate_queries(long long n, long long q, int r, const ForestConfig& cfg) {
    double lq = std::max(1.0, std::log2(static_cast<double>(std::max<long long>(2, q))));
    double ln = std::max(1.0, std::log2(static_cast<double>(std::max<long long>(2, n))));
    return cfg.cert_clock_c * (static_cast<double>(n) +
                               static_cast<double>(r) * static_cast<double>(q) * ln / lq) +
           64.0;
}

namespace {

CertificateForests sequential_certificate(CutOracle& oracle, const VertexPartition& partition,
                                          int r) {
    int n = oracle.n();
    CertificateForests cert;
    cert.block_of = partition.block_index();
    cert.forests.assign(r, {});
    cert.sequential_fallback = true;
    std::vector<Edge> removed;
    VertexList all(n);
    for (int v = 0; v < n; ++v) all[v] = v;
    for (int i = 0; i < r; ++i) {
        CutOracle view = oracle.restricted(all, removed);
        cert.forests[i] = simple_spanning_forest(view, partition);
        if (cert.forests[i].empty()) break;  // nothing left to span
        removed.insert(removed.end(), cert.forests[i].begin(), cert.forests[i].end());
    }
    return cert;
}

}  // namespace

CertificateForests contracted_certificate(CutOracle& oracle, const VertexPartition& partition,
                                          int r, Rng& rng, const ForestConfig& cfg) {
    if (r < 1) throw std::invalid_argument("contracted_certificate: r >= 1 required");
    int n = oracle.n();
    long long q = partition.block_count();

    double q_min = std::pow(log2_ceil_int(n), 2.0 + cfg.cert_epsilon);
    if (static_cast<double>(q) < q_min) return sequential_certificate(oracle, partition, r);

    auto block_of = partition.block_index();
    auto blocks = partition.block_lists();

    CertificateForests cert;
    cert.block_of = block_of;
    cert.forests.assign(r, {});
    std::vector<VertexPartition> uf(r, VertexPartition(static_cast<int>(q)));

    std::vector<char> active(n, 1);
    std::vector<Edge> removed;  // union of all forest edges so far
    VertexList all(n);
    for (int v = 0; v < n; ++v) all[v] = v;

    int switch_div = cfg.cert_switch_divisor > 0 ? cfg.cert_switch_divisor : log2_ceil_int(n);
    long long switch_at = std::max<long long>(1, q / switch_div);

    // Insert at the least-index forest without a cycle. Connectivity is
    // monotone decreasing along the laminar family (connected in F_{i+1}
    // implies connected in F_i), so the least free index is found by binary
    // search for the first forest where the endpoints are separated.
    auto least_index_insert = [&](Edge e) {
        int a = block_of[e.first], b = block_of[e.second];
        if (uf[r - 1].same(a, b)) return false;  // connected everywhere
        int lo = -1, hi = r - 1;                 // uf[hi] separates a,b
        while (hi - lo > 1) {
            int mid = lo + (hi - lo) / 2;
            if (uf[mid].same(a, b))
                lo = mid;
            else
                hi = mid;
        }
        uf[hi].unite(a, b);
        cert.forests[hi].push_back(e);
        removed.push_back(e);
        return true;
    };

    while (true) {
        // Components of F_r with an active vertex.
        auto rcomps_blocks = uf[r - 1].block_lists();
        std::vector<std::vector<int>> comps;
        comps.reserve(rcomps_blocks.size());
        for (auto& cb : rcomps_blocks) {
            std::vector<int> vertices;
            for (int b : cb)
                vertices.insert(vertices.end(), blocks[b].begin(), blocks[b].end());
            std::sort(vertices.begin(), vertices.end());
            if (std::any_of(vertices.begin(), vertices.end(), [&](int v) { return active[v]; }))
                comps.push_back(std::move(vertices));
        }
        long long t_r = static_cast<long long>(comps.size());
        if (t_r == 0) break;
        if (t_r <= switch_at) break;  // tail phase below

        CutOracle view = oracle.restricted(all, removed);

        // Step 1: representatives w.r.t. F_r components, over E minus forests.
        Bitset in_comp(n);
        std::vector<int> reps, rep_comp;
        std::vector<char> comp_active(comps.size(), 0);
        for (size_t i = 0; i < comps.size(); ++i) {
            in_comp.clear();
            in_comp.set_all(comps[i].begin(), comps[i].end());
            std::vector<int> outside;
            outside.reserve(n - comps[i].size());
            for (int v = 0; v < n; ++v)
                if (!in_comp.test(v)) outside.push_back(v);
            if (outside.empty()) {
                for (int v : comps[i]) active[v] = 0;
                continue;
            }
            for (int v : comps[i]) {
                if (!active[v]) continue;
                long long d = view.cross({v}, outside);
                if (d > 0) {
                    reps.push_back(v);
                    rep_comp.push_back(static_cast<int>(i));
                    comp_active[i] = 1;
                    break;
                }
                active[v] = 0;
            }
        }
        if (reps.empty()) break;

        // Step 2: red/blue on active F_r components.
        std::vector<char> red(comps.size(), 0);
        for (size_t i = 0; i < comps.size(); ++i)
            if (comp_active[i]) red[i] = rng.bernoulli(0.5) ? 1 : 0;
        std::vector<int> blue_vertices;
        for (size_t i = 0; i < comps.size(); ++i)
            if (comp_active[i] && !red[i])
                blue_vertices.insert(blue_vertices.end(), comps[i].begin(), comps[i].end());
        if (blue_vertices.empty()) continue;

        std::vector<int> w_rows;
        for (size_t j = 0; j < reps.size(); ++j) {
            if (!red[rep_comp[j]]) continue;
            long long c = view.cross({reps[j]}, blue_vertices);
            if (c > 0) w_rows.push_back(reps[j]);
        }
        if (w_rows.empty()) continue;

        GraphBipOracle bip(view, w_rows, blue_vertices);
        std::vector<int> row_ids(w_rows.size());
        for (size_t i = 0; i < w_rows.size(); ++i) row_ids[i] = static_cast<int>(i);
        std::vector<int> col_ids(blue_vertices.size());
        for (size_t j = 0; j < blue_vertices.size(); ++j) col_ids[j] = static_cast<int>(j);
        auto lists = recover_k_from_all(bip, row_ids, col_ids, cfg.recover_k, rng);

        for (size_t i = 0; i < w_rows.size(); ++i) {
            int u = w_rows[i];
            int v = blue_vertices[*std::min_element(lists.z[i].begin(), lists.z[i].end())];
            least_index_insert(make_edge(u, v));
        }
    }

    // Tail: complete each forest in turn with the Prim-style algorithm,
    // removing earlier forests' edges from later graphs.
    for (int i = 0; i < r; ++i) {
        std::vector<Edge> earlier;
        for (int j = 0; j < i; ++j)
            earlier.insert(earlier.end(), cert.forests[j].begin(), cert.forests[j].end());
        CutOracle view = oracle.restricted(all, earlier);
        // Partition by F_i's current components over base vertices.
        VertexPartition pi(n);
        for (const auto& b : blocks)
            for (size_t t = 1; t < b.size(); ++t) pi.unite(b[0], b[t]);
        for (const auto& e : cert.forests[i]) pi.unite(e.first, e.second);
        auto rest = simple_spanning_forest(view, pi);
        cert.forests[i].insert(cert.forests[i].end(), rest.begin(), rest.end());
        for (const auto& e : rest) uf[i].unite(block_of[e.first], block_of[e.second]);
        if (cert.forests[i].empty()) break;
    }
    return cert;
}

std::optional<CertificateForests> certificate_mc(CutOracle& oracle,
                                                 const VertexPartition& partition, int r,
                                                 double clock_factor, Rng& rng,
                                                 const ForestConfig& cfg) {
    double budget = clock_factor *
                    expected_certificate_queries(oracle.n(), partition.block_count(), r, cfg);
    if (budget < 1.0) return std::nullopt;
    auto& ledger = oracle.ledger();
    std::uint64_t prior_cap = ledger.unit_budget();
    std::uint64_t cap = ledger.total_units() + static_cast<std::uint64_t>(budget);
    if (prior_cap) cap = std::min(cap, prior_cap);
    ledger.set_unit_budget(cap);
    try {
        auto cert = contracted_certificate(oracle, partition, r, rng, cfg);
        ledger.set_unit_budget(prior_cap);
        return cert;
    } catch (const ClockExceeded&) {
        ledger.set_unit_budget(prior_cap);
        return std::nullopt;
    }
}

}  // namespace cutbench
