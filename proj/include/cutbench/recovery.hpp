#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cutbench/graph.hpp"
#include "cutbench/oracle.hpp"
#include "cutbench/rng.hpp"

namespace cutbench {

// Thrown when an input violates a promised precondition that is only
// detectable from query answers (e.g. a row with more ones than declared).
struct ContractViolation : std::runtime_error {
    explicit ContractViolation(const std::string& what) : std::runtime_error(what) {}
};

// x^T M y access to a Boolean matrix. Columns are always addressed by
// explicit id lists so that sub-rectangles need no wrapper. A budget of 0
// means unlimited; otherwise the oracle throws ClockExceeded once spent.
class BipOracle {
public:
    virtual ~BipOracle() = default;
    virtual int rows() const = 0;
    virtual int cols() const = 0;

    // Number of ones of M(row, :) restricted to the given column ids.
    long long row_count(int row, const std::vector<int>& col_ids) {
        spend();
        return row_count_impl(row, col_ids);
    }

    std::uint64_t queries() const { return queries_; }
    void set_budget(std::uint64_t max_queries) { budget_ = max_queries; }

protected:
    virtual long long row_count_impl(int row, const std::vector<int>& col_ids) = 0;

    void spend() {
        ++queries_;
        if (budget_ && queries_ > budget_) throw ClockExceeded{};
    }

private:
    std::uint64_t queries_ = 0;
    std::uint64_t budget_ = 0;
};

// M = bipartite adjacency block A(S, T) of a hidden graph, queried through a
// CutOracle (3 cut units per query).
class GraphBipOracle : public BipOracle {
public:
    GraphBipOracle(CutOracle& oracle, VertexList row_vertices, VertexList col_vertices);

    int rows() const override { return static_cast<int>(row_v_.size()); }
    int cols() const override { return static_cast<int>(col_v_.size()); }
    int row_vertex(int i) const { return row_v_[i]; }
    int col_vertex(int j) const { return col_v_[j]; }

protected:
    long long row_count_impl(int row, const std::vector<int>& col_ids) override;

private:
    CutOracle* oracle_;
    VertexList row_v_, col_v_;
};

// Explicit Boolean matrix backing, for tests of the learners.
class MatrixBipOracle : public BipOracle {
public:
    explicit MatrixBipOracle(std::vector<std::vector<char>> m);
    int rows() const override { return static_cast<int>(m_.size()); }
    int cols() const override { return m_.empty() ? 0 : static_cast<int>(m_[0].size()); }

protected:
    long long row_count_impl(int row, const std::vector<int>& col_ids) override;

private:
    std::vector<std::vector<char>> m_;
};

enum class LearnScheme {
    AdaptiveSplit,      // per-row adaptive count splitting
    SingletonIsolation  // hashed buckets + bit-mask measurements, peeling decoder
};

// Documented budget of learn_rows_exact (both schemes), supported for
// m, n <= 2^16: C_learn * ell * m * ceil(log2(2n)) / ceil(log2(2m)) + C0.
constexpr double kLearnBudgetC = 40.0;
constexpr double kLearnBudgetC0 = 64.0;
double learn_budget(long long m, long long n_cols, int ell);

// Learns, exactly and deterministically, every one of M(row, col_ids) for each
// requested row, under the promise that each such row has at most ell ones
// among col_ids. A violated promise raises ContractViolation.
std::vector<std::vector<int>> learn_rows_exact(BipOracle& oracle, const std::vector<int>& row_ids,
                                               const std::vector<int>& col_ids, int ell,
                                               LearnScheme scheme = LearnScheme::AdaptiveSplit);

struct AdjacencyLists {
    std::vector<std::vector<int>> z;  // per requested row: found column ids
    std::vector<long long> degree;    // per requested row: exact ones count, when known
};

// Algorithm: LearnBucket. Promise: every requested row has between r and 2r
// ones among col_ids. Learns all ones inside the first accepted sample Q per
// row; each accepted Q satisfies min{r,k} <= ones(row, Q) <= 8k.
AdjacencyLists learn_bucket(BipOracle& oracle, const std::vector<int>& row_ids,
                            const std::vector<int>& col_ids, long long r, int k, Rng& rng,
                            LearnScheme scheme = LearnScheme::AdaptiveSplit);

// Algorithm: Recover-k-From-All. Promise: every requested row has at least one
// one among col_ids (a zero row is an invalid-input error). Returns, per row,
// at least min{k, d} ones where d is the minimum row degree.
AdjacencyLists recover_k_from_all(BipOracle& oracle, const std::vector<int>& row_ids,
                                  const std::vector<int>& col_ids, int k, Rng& rng,
                                  LearnScheme scheme = LearnScheme::AdaptiveSplit);

// Documented expected-query budget of recover_k_from_all; the Monte Carlo
// clock of the WC variant is clock_factor times this.
constexpr double kRecoverBudgetC = 40.0;
double expected_recover_queries(long long m, long long n_cols, int k);

// Directed arcs from every vertex of S to at least min{k, d_T(v)} neighbors in
// T, or FAIL if the zero-error routine exceeds clock_factor times its expected
// query count. clock_factor 0 forces FAIL.
std::optional<DirectedSubgraph> wc_recover_k_from_all(CutOracle& oracle, const VertexList& s,
                                                      const VertexList& t, int k, Rng& rng,
                                                      double clock_factor = 100.0,
                                                      LearnScheme scheme = LearnScheme::AdaptiveSplit);

}  // namespace cutbench
