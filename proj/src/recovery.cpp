#include "cutbench/recovery.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

namespace cutbench {

GraphBipOracle::GraphBipOracle(CutOracle& oracle, VertexList row_vertices, VertexList col_vertices)
    : oracle_(&oracle), row_v_(std::move(row_vertices)), col_v_(std::move(col_vertices)) {}

long long GraphBipOracle::row_count_impl(int row, const std::vector<int>& col_ids) {
    // One simulated bipartite product: 3 cut units.
    oracle_->ledger().charge(QueryCategory::BipProduct, 3);
    int rv = row_v_[row];
    long long c = 0;
    for (int j : col_ids)
        if (oracle_->view_has_edge(rv, col_v_[j])) ++c;
    return c;
}

MatrixBipOracle::MatrixBipOracle(std::vector<std::vector<char>> m) : m_(std::move(m)) {}

long long MatrixBipOracle::row_count_impl(int row, const std::vector<int>& col_ids) {
    long long c = 0;
    for (int j : col_ids) c += m_[row][j];
    return c;
}

double learn_budget(long long m, long long n_cols, int ell) {
    auto l2ceil = [](long long x) {
        double l = std::ceil(std::log2(std::max<long long>(2, x)));
        return std::max(1.0, l);
    };
    return kLearnBudgetC * ell * static_cast<double>(m) * l2ceil(2 * n_cols) / l2ceil(2 * m) +
           kLearnBudgetC0;
}

namespace {

// Adaptive splitting over the sorted column-id list: descend only into halves
// with a positive residual count. Finds every one of the row.
void split_find(BipOracle& oracle, int row, const std::vector<int>& cols, size_t lo, size_t hi,
                long long ones, std::vector<int>& out) {
    if (ones == 0) return;
    if (hi - lo == 1) {
        out.push_back(cols[lo]);
        return;
    }
    size_t mid = lo + (hi - lo) / 2;
    std::vector<int> left(cols.begin() + lo, cols.begin() + mid);
    long long left_ones = oracle.row_count(row, left);
    split_find(oracle, row, cols, lo, mid, left_ones, out);
    split_find(oracle, row, cols, mid, hi, ones - left_ones, out);
}

std::vector<int> learn_row_adaptive(BipOracle& oracle, int row, const std::vector<int>& cols,
                                    long long ones) {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(ones));
    split_find(oracle, row, cols, 0, cols.size(), ones, out);
    return out;
}

// Singleton-isolation decoder for one row. Measurement layout per round:
// columns are hashed into 4*ell buckets; each bucket carries one count
// measurement plus ceil(log2 #cols) bit-mask measurements. A residual bucket
// count of exactly one certifies a singleton whose bit-mask residuals spell
// its position in the column list; found ones are peeled from later residuals.
std::vector<int> learn_row_isolation(BipOracle& oracle, int row, const std::vector<int>& cols,
                                     int ell, long long ones, std::uint64_t scheme_seed) {
    const int n = static_cast<int>(cols.size());
    int bit_count = 0;
    while ((1 << bit_count) < n) ++bit_count;
    const int buckets = std::max(2, 4 * ell);
    const int max_rounds = 8;

    std::vector<char> found(n, 0);
    std::vector<int> out;
    long long remaining = ones;

    for (int round = 0; round < max_rounds && remaining > 0; ++round) {
        std::uint64_t hseed = scheme_seed + 0x9e3779b97f4a7c15ULL * (round + 1);
        std::vector<int> bucket_of(n);
        std::vector<std::vector<int>> members(buckets);
        for (int j = 0; j < n; ++j) {
            std::uint64_t s = hseed ^ (0xd1342543de82ef95ULL * (std::uint64_t(j) + 1));
            bucket_of[j] = static_cast<int>(splitmix64(s) % buckets);
            members[bucket_of[j]].push_back(j);
        }
        // Peel until this round's measurements are exhausted.
        std::vector<long long> count(buckets, -1);  // -1: not yet measured
        std::vector<std::vector<long long>> bits(buckets);
        bool progress = true;
        while (progress && remaining > 0) {
            progress = false;
            for (int b = 0; b < buckets && remaining > 0; ++b) {
                if (members[b].empty()) continue;
                if (count[b] < 0) {
                    std::vector<int> ids;
                    ids.reserve(members[b].size());
                    for (int j : members[b]) ids.push_back(cols[j]);
                    count[b] = oracle.row_count(row, ids);
                }
                long long residual = count[b];
                for (int j : members[b])
                    if (found[j]) --residual;
                if (residual != 1) continue;
                if (bits[b].empty() && bit_count > 0) {
                    bits[b].resize(bit_count);
                    for (int t = 0; t < bit_count; ++t) {
                        std::vector<int> ids;
                        for (int j : members[b])
                            if ((j >> t) & 1) ids.push_back(cols[j]);
                        bits[b][t] = ids.empty() ? 0 : oracle.row_count(row, ids);
                    }
                }
                long long pos = 0;
                for (int t = 0; t < bit_count; ++t) {
                    long long residual_bit = bits[b].empty() ? 0 : bits[b][t];
                    for (int j : members[b])
                        if (found[j] && ((j >> t) & 1)) --residual_bit;
                    if (residual_bit == 1) pos |= (1LL << t);
                }
                if (pos >= n || bucket_of[static_cast<int>(pos)] != b ||
                    found[static_cast<int>(pos)])
                    continue;  // stale residual; a later peel or round resolves it
                found[static_cast<int>(pos)] = 1;
                out.push_back(cols[static_cast<int>(pos)]);
                --remaining;
                progress = true;
            }
        }
    }

    if (remaining > 0) {
        // Rare: peeling stalled. Finish with adaptive splitting on the
        // residual columns.
        std::vector<int> residual_cols;
        for (int j = 0; j < n; ++j)
            if (!found[j]) residual_cols.push_back(cols[j]);
        auto rest = learn_row_adaptive(oracle, row, residual_cols,
                                       oracle.row_count(row, residual_cols));
        out.insert(out.end(), rest.begin(), rest.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<std::vector<int>> learn_rows_exact(BipOracle& oracle, const std::vector<int>& row_ids,
                                               const std::vector<int>& col_ids, int ell,
                                               LearnScheme scheme) {
    if (ell < 0) throw std::invalid_argument("learn_rows_exact: negative sparsity bound");
    std::vector<int> cols = col_ids;
    std::sort(cols.begin(), cols.end());
    std::uint64_t scheme_seed = 0xc2b2ae3d27d4eb4fULL ^
                                (std::uint64_t(oracle.rows()) << 32) ^
                                std::uint64_t(oracle.cols()) ^ (std::uint64_t(ell) << 17);
    std::vector<std::vector<int>> out;
    out.reserve(row_ids.size());
    for (int row : row_ids) {
        long long ones = oracle.row_count(row, cols);
        if (ones > ell)
            throw ContractViolation("learn_rows_exact: row exceeds declared sparsity bound");
        if (scheme == LearnScheme::AdaptiveSplit || cols.size() <= 2)
            out.push_back(learn_row_adaptive(oracle, row, cols, ones));
        else
            out.push_back(learn_row_isolation(oracle, row, cols, ell, ones, scheme_seed));
    }
    return out;
}

AdjacencyLists learn_bucket(BipOracle& oracle, const std::vector<int>& row_ids,
                            const std::vector<int>& col_ids, long long r, int k, Rng& rng,
                            LearnScheme scheme) {
    if (k < 10) throw std::invalid_argument("learn_bucket: k >= 10 required");
    if (r < 1) throw std::invalid_argument("learn_bucket: r >= 1 required");
    double q = std::min(2.0 * k / static_cast<double>(r), 1.0);
    long long lo = std::min<long long>(r, k);
    long long hi = 8LL * k;

    AdjacencyLists result;
    result.z.assign(row_ids.size(), {});
    result.degree.assign(row_ids.size(), -1);

    std::vector<int> pending(row_ids.size());
    for (size_t i = 0; i < row_ids.size(); ++i) pending[i] = static_cast<int>(i);

    while (!pending.empty()) {
        std::vector<int> sample;
        sample.reserve(col_ids.size());
        for (int c : col_ids)
            if (rng.bernoulli(q)) sample.push_back(c);
        if (sample.empty()) continue;

        std::vector<long long> ones(pending.size());
        std::vector<int> caught;
        for (size_t t = 0; t < pending.size(); ++t) {
            int i = pending[t];
            ones[t] = oracle.row_count(row_ids[i], sample);
            if (ones[t] >= lo && ones[t] <= hi) caught.push_back(static_cast<int>(t));
        }
        if (caught.empty()) continue;

        std::vector<int> caught_rows;
        caught_rows.reserve(caught.size());
        for (int t : caught) caught_rows.push_back(row_ids[pending[t]]);
        auto learned = learn_rows_exact(oracle, caught_rows, sample, static_cast<int>(hi), scheme);

        std::vector<char> done(pending.size(), 0);
        for (size_t c = 0; c < caught.size(); ++c) {
            int t = caught[c];
            int i = pending[t];
            // The accepted sample's ones are learned in full; this is the
            // sampling contract the downstream goodness analysis relies on.
            if (static_cast<long long>(learned[c].size()) != ones[t])
                throw std::logic_error("learn_bucket: learned row does not match its count");
            result.z[i] = std::move(learned[c]);
            done[t] = 1;
        }
        std::vector<int> next;
        next.reserve(pending.size() - caught.size());
        for (size_t t = 0; t < pending.size(); ++t)
            if (!done[t]) next.push_back(pending[t]);
        pending = std::move(next);
    }
    return result;
}

AdjacencyLists recover_k_from_all(BipOracle& oracle, const std::vector<int>& row_ids,
                                  const std::vector<int>& col_ids, int k, Rng& rng,
                                  LearnScheme scheme) {
    if (k < 10) throw std::invalid_argument("recover_k_from_all: k >= 10 required");
    AdjacencyLists result;
    result.z.assign(row_ids.size(), {});
    result.degree.assign(row_ids.size(), 0);

    // Degree pass: exactly one query per row.
    long long d = -1;
    for (size_t i = 0; i < row_ids.size(); ++i) {
        result.degree[i] = oracle.row_count(row_ids[i], col_ids);
        if (result.degree[i] == 0)
            throw std::invalid_argument("recover_k_from_all: zero row violates d > 0");
        if (d < 0 || result.degree[i] < d) d = result.degree[i];
    }
    if (row_ids.empty()) return result;

    long long ncols = static_cast<long long>(col_ids.size());
    for (int a = 0;; ++a) {
        long long lo = d << a, hi = d << (a + 1);
        if (lo > ncols) break;
        std::vector<int> bucket_rows, bucket_local;
        for (size_t i = 0; i < row_ids.size(); ++i) {
            if (result.degree[i] >= lo && result.degree[i] < hi) {
                bucket_rows.push_back(row_ids[i]);
                bucket_local.push_back(static_cast<int>(i));
            }
        }
        if (bucket_rows.empty()) continue;
        auto learned = learn_bucket(oracle, bucket_rows, col_ids, lo, k, rng, scheme);
        for (size_t t = 0; t < bucket_local.size(); ++t)
            result.z[bucket_local[t]] = std::move(learned.z[t]);
    }
    return result;
}

double expected_recover_queries(long long m, long long n_cols, int k) {
    double l2n = std::max(1.0, std::log2(static_cast<double>(std::max<long long>(2, n_cols))));
    double denom =
        std::max(1.0, std::log2(std::max(2.0, 2.0 * static_cast<double>(m) / l2n)));
    return kRecoverBudgetC *
           (static_cast<double>(m) + static_cast<double>(k) * static_cast<double>(m) *
                                         std::max(1.0, std::log2(2.0 * static_cast<double>(
                                                                           std::max<long long>(
                                                                               2, n_cols)))) /
                                         denom);
}

std::optional<DirectedSubgraph> wc_recover_k_from_all(CutOracle& oracle, const VertexList& s,
                                                      const VertexList& t, int k, Rng& rng,
                                                      double clock_factor, LearnScheme scheme) {
    GraphBipOracle bip(oracle, s, t);
    double budget = clock_factor * expected_recover_queries(static_cast<long long>(s.size()),
                                                            static_cast<long long>(t.size()), k);
    if (budget < 1.0) return std::nullopt;  // degenerate clock always fails
    bip.set_budget(static_cast<std::uint64_t>(budget));

    std::vector<int> row_ids(s.size());
    for (size_t i = 0; i < s.size(); ++i) row_ids[i] = static_cast<int>(i);
    std::vector<int> col_ids(t.size());
    for (size_t j = 0; j < t.size(); ++j) col_ids[j] = static_cast<int>(j);

    try {
        auto lists = recover_k_from_all(bip, row_ids, col_ids, k, rng, scheme);
        DirectedSubgraph h(oracle.n());
        for (size_t i = 0; i < s.size(); ++i)
            for (int j : lists.z[i]) h.add_arc(s[i], t[j]);
        return h;
    } catch (const ClockExceeded&) {
        return std::nullopt;
    }
}

}  // namespace cutbench
