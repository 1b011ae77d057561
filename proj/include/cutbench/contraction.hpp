#pragma once

#include <optional>
#include <vector>

#include "cutbench/graph.hpp"
#include "cutbench/oracle.hpp"
#include "cutbench/recovery.hpp"
#include "cutbench/rng.hpp"

namespace cutbench {

// Result of one star-contraction draw.
struct StarSample {
    VertexList centers;               // R
    std::vector<Edge> star_edges;     // X: one edge into R per contracted vertex
    VertexList left_out;              // v not in R with no neighbor in R
};

// Per-vertex crossing ratios q_u of a directed subgraph with respect to a
// protected edge set C. H is (alpha,beta)-good iff max_q <= alpha and
// sum_q <= beta.
struct GoodnessReport {
    std::vector<double> q;
    double max_q = 0;
    double sum_q = 0;

    bool good(double alpha, double beta) const { return max_q <= alpha && sum_q <= beta; }
};

// Each vertex joins R independently with probability p.
VertexList sample_centers(int n, double p, Rng& rng);

enum class StarVariant {
    NeighborhoodLists,  // learn all edges at the centers (mdcp_nbh per center)
    CutQueries          // random_neighbor per outside vertex
};

// Uniform star contraction: every v outside R with a neighbor in R contracts a
// uniformly chosen incident edge into R.
std::pair<VertexPartition, StarSample> uniform_star_contraction(CutOracle& oracle, double p,
                                                                Rng& rng, StarVariant variant);

// One (resp. two independent, with replacement) uniform outgoing arc draws per
// vertex with positive out-degree, as undirected base edges.
std::vector<Edge> one_out_sample(const DirectedSubgraph& h, Rng& rng);
std::vector<Edge> two_out_sample(const DirectedSubgraph& h, Rng& rng);

GoodnessReport goodness_report(const SimpleGraph& g, const DirectedSubgraph& h,
                               const std::vector<Edge>& c);

// (1-alpha)^ceil(beta/alpha): lower bound on the probability that a 1-out
// sample of an (alpha,beta)-good subgraph misses the protected cut.
double miss_probability_bound(double alpha, double beta);

// Algorithm: LearnSubgraph over the oracle's vertex set W. Bipartitions W by
// fair coins, filters by cross-degree >= h, and runs the WC recovery both
// ways. FAIL if too many vertices fall outside the filtered sides or if
// either recovery call fails.
std::optional<DirectedSubgraph> learn_subgraph(CutOracle& oracle, const VertexList& w, int h,
                                               long long tau, Rng& rng,
                                               double clock_factor = 100.0);

}  // namespace cutbench
