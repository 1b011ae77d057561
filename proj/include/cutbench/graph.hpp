#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "cutbench/bitset.hpp"

namespace cutbench {

using Edge = std::pair<int, int>;  // stored with first < second

inline Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

// Undirected simple graph on vertex ids [0, n). Immutable after construction;
// adjacency lists are sorted. Symmetry and absence of self loops are enforced
// by the builder.
class SimpleGraph {
public:
    SimpleGraph() = default;
    SimpleGraph(int n, const std::vector<Edge>& edges);

    int n() const { return n_; }
    long long m() const { return m_; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    bool has_edge(int u, int v) const;

    std::vector<Edge> edges() const;

    // Row bitsets for O(1) adjacency membership; built on first use.
    const Bitset& adjacency_row(int v) const;

    static SimpleGraph load(std::istream& in);
    static SimpleGraph load_file(const std::string& path);
    void save(std::ostream& out) const;

private:
    int n_ = 0;
    long long m_ = 0;
    std::vector<std::vector<int>> adj_;
    // lazy cache, built once under the flag; safe for concurrent readers
    mutable std::vector<Bitset> rows_;
    mutable std::shared_ptr<std::once_flag> rows_once_ = std::make_shared<std::once_flag>();
};

// Union-find partition of [0, n) into supervertex blocks.
class VertexPartition {
public:
    VertexPartition() = default;
    explicit VertexPartition(int n);

    int find(int v) const;
    bool unite(int a, int b);  // returns true if two blocks merged
    int block_count() const { return blocks_; }
    int size() const { return static_cast<int>(parent_.size()); }
    bool same(int a, int b) const { return find(a) == find(b); }

    // Blocks as sorted lists of members, ordered by smallest member id.
    std::vector<std::vector<int>> block_lists() const;
    // Map vertex -> dense block index, ordered by smallest member id.
    std::vector<int> block_index() const;

private:
    mutable std::vector<int> parent_;
    std::vector<int> rank_;
    int blocks_ = 0;
};

struct CutWitness {
    long long value = 0;
    Bitset side;  // 0 < |side| < n
};

// Directed subgraph over the vertices of a base graph: per-vertex outgoing
// arc lists. Arcs (u,v) must satisfy {u,v} in E of the base graph; no
// self-arcs. Validation is the caller's (or the test suite's) job.
struct DirectedSubgraph {
    std::vector<std::vector<int>> out;

    DirectedSubgraph() = default;
    explicit DirectedSubgraph(int n) : out(n) {}

    int n() const { return static_cast<int>(out.size()); }
    void add_arc(int u, int v) { out[u].push_back(v); }
    int out_degree(int v) const { return static_cast<int>(out[v].size()); }
    long long arc_count() const {
        long long c = 0;
        for (const auto& a : out) c += static_cast<long long>(a.size());
        return c;
    }
};

int min_degree(const SimpleGraph& g);

std::vector<std::vector<int>> connected_components(const SimpleGraph& g);

// Global minimum cut of g. Stoer-Wagner is the default oracle; for n <= 16 the
// exhaustive enumeration oracle is run as well and the two must agree.
CutWitness exact_min_cut(const SimpleGraph& g);

// Exhaustive enumeration over all 2^(n-1)-1 bipartitions; n <= 24 enforced.
CutWitness exhaustive_min_cut(const SimpleGraph& g);

// Stoer-Wagner on an integer-weighted adjacency matrix. Returns the minimum
// cut value and a witness subset of the matrix's vertex indices.
std::pair<long long, std::vector<int>> stoer_wagner(std::vector<std::vector<long long>> w);

// Partition of V into the connected components of (V, F). Every edge of F must
// be an edge of g.
VertexPartition contract(const SimpleGraph& g, const std::vector<Edge>& f);

// Weighted quotient of g under a partition restricted to the given edge set
// (or all edges when `edges` is null). Returns (matrix, block lists).
std::pair<std::vector<std::vector<long long>>, std::vector<std::vector<int>>> quotient_matrix(
    const SimpleGraph& g, const VertexPartition& partition,
    const std::vector<Edge>* edges = nullptr);

// Sparse r-edge-connectivity certificate forests over a contraction of g.
struct CertificateForests {
    std::vector<std::vector<Edge>> forests;  // F_1 .. F_r, base edges
    std::vector<int> block_of;               // vertex -> block index of the partition
    bool sequential_fallback = false;        // built by r sequential Prim passes

    std::vector<Edge> all_edges() const;
    long long edge_count() const;
};

// Single-scan placement: every base edge joining two distinct blocks is placed
// in the first forest where it does not close a cycle, forests beyond r drop it.
CertificateForests ni_certificate_explicit(const SimpleGraph& g, const VertexPartition& partition,
                                           int r);

inline CertificateForests ni_certificate_explicit(const SimpleGraph& g, int r) {
    return ni_certificate_explicit(g, VertexPartition(g.n()), r);
}

// Minimum cut value (+ witness over blocks) of the certificate viewed as a
// weighted quotient graph.
std::pair<long long, std::vector<int>> certificate_min_cut(const SimpleGraph& g,
                                                           const CertificateForests& cert);

// G' on 2n vertices: original edges, all V x K cross edges, clique on K.
// lambda(G') = delta(G) + n.
SimpleGraph degree_to_connectivity_gadget(const SimpleGraph& g);

}  // namespace cutbench
