#pragma once

#include <optional>
#include <vector>

#include "cutbench/graph.hpp"
#include "cutbench/oracle.hpp"
#include "cutbench/rng.hpp"

namespace cutbench {

struct ForestConfig {
    int recover_k = 10;        // k of the per-round recovery calls
    int switch_divisor = 0;    // 0: n / ceil(log2 n); otherwise n / divisor
    double cert_epsilon = 0.5; // q >= ceil(log2 n)^(2+eps) gates the parallel certificate
    int cert_switch_divisor = 0;  // 0: ceil(log2 n)
    double cert_clock_c = 8.0;    // C in the certificate's expected-query model
};

// Prim growth with two nested binary searches per found edge. Deterministic
// given the block ordering. Returns base edges spanning the contraction of the
// oracle's view graph by `partition`.
std::vector<Edge> simple_spanning_forest(CutOracle& oracle, const VertexPartition& partition);

// Pinned query-unit bound of simple_spanning_forest (documented constant).
std::uint64_t simple_forest_budget(int q, int n);

// Boruvka-style spanning forest of the oracle's graph; zero error, O(n) cut
// queries in expectation. Returns the forest edges and (optionally) the number
// of rounds before the tail switch.
std::vector<Edge> boruvka_spanning_forest(CutOracle& oracle, Rng& rng,
                                          const ForestConfig& cfg = {}, int* rounds_out = nullptr);

// Sparse r-edge-connectivity certificate of the contraction of the oracle's
// graph by `partition`, built as r edge-disjoint forests grown in parallel
// with least-index insertion. Falls back to r sequential Prim passes when the
// contraction is too small for the parallel machinery to pay.
CertificateForests contracted_certificate(CutOracle& oracle, const VertexPartition& partition,
                                          int r, Rng& rng, const ForestConfig& cfg = {});

// Expected-query model used by the Monte Carlo clock.
double expected_certificate_queries(long long n, long long q, int r, const ForestConfig& cfg);

// Monte Carlo wrapper: FAIL iff the zero-error routine exceeds
// clock_factor * expected queries. A successful run is bit-identical to the
// zero-error routine under the same seed.
std::optional<CertificateForests> certificate_mc(CutOracle& oracle,
                                                 const VertexPartition& partition, int r,
                                                 double clock_factor, Rng& rng,
                                                 const ForestConfig& cfg = {});

}  // namespace cutbench
