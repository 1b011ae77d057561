#include "cutbench/oracle.hpp"

#include <algorithm>
#include <memory>
#include <stdexcept>

namespace cutbench {

namespace {
std::uint64_t edge_key(int n, int u, int v) {
    if (u > v) std::swap(u, v);
    return static_cast<std::uint64_t>(u) * static_cast<std::uint64_t>(n) +
           static_cast<std::uint64_t>(v);
}
}  // namespace

CutOracle::CutOracle(const SimpleGraph& g)
    : g_(&g), ledger_(std::make_shared<QueryLedger>()), costs_(g.n()) {}

CutOracle::CutOracle(const SimpleGraph& g, std::shared_ptr<QueryLedger> ledger)
    : g_(&g), ledger_(std::move(ledger)), costs_(g.n()) {}

CutOracle CutOracle::restricted(const VertexList& vertices,
                                const std::vector<Edge>& removed) const {
    CutOracle view(*g_, ledger_);
    view.view_all_ = false;
    view.view_bits_ = Bitset(g_->n());
    if (!view_all_) {
        for (int v : vertices)
            if (!view_bits_.test(v))
                throw std::invalid_argument("restricted: vertex outside current view");
    }
    view.view_bits_.set_all(vertices.begin(), vertices.end());
    view.removed_ = removed_;
    view.removed_list_ = removed_list_;
    for (auto [u, v] : removed) {
        if (!g_->has_edge(u, v)) throw std::invalid_argument("restricted: removed edge not in E");
        if (view.removed_.insert(edge_key(g_->n(), u, v)).second)
            view.removed_list_.push_back(make_edge(u, v));
    }
    return view;
}

bool CutOracle::edge_removed(int u, int v) const {
    if (removed_.empty()) return false;
    return removed_.count(edge_key(g_->n(), u, v)) > 0;
}

long long CutOracle::view_cut_raw(const Bitset& s_bits, const VertexList& s) const {
    // Count view edges with exactly one endpoint in S by scanning S's side.
    long long count = 0;
    for (int v : s) {
        for (int u : g_->neighbors(v)) {
            if (!in_view(u) || s_bits.test(u)) continue;
            if (edge_removed(v, u)) continue;
            ++count;
        }
    }
    return count;
}

long long CutOracle::cut(const VertexList& s) {
    Bitset bits(g_->n());
    for (int v : s) {
        if (!in_view(v)) throw std::invalid_argument("cut: vertex outside view");
        bits.set(v);
    }
    if (view_all_ && removed_.empty())
        ledger_->charge(QueryCategory::Cut, 1);
    else
        ledger_->charge(QueryCategory::InducedCut, 3);
    return view_cut_raw(bits, s);
}

long long CutOracle::induced_cut(const VertexList& s) {
    Bitset bits(g_->n());
    for (int v : s) {
        if (!in_view(v)) throw std::invalid_argument("induced_cut: vertex outside view");
        bits.set(v);
    }
    ledger_->charge(QueryCategory::InducedCut, 3);
    return view_cut_raw(bits, s);
}

long long CutOracle::count_edges_between(const VertexList& a, const Bitset& b_bits,
                                         long long) const {
    long long count = 0;
    for (int v : a) {
        for (int u : g_->neighbors(v)) {
            if (!b_bits.test(u)) continue;
            if (!in_view(u)) continue;
            if (edge_removed(v, u)) continue;
            ++count;
        }
    }
    return count;
}

long long CutOracle::cross(const VertexList& s, const VertexList& t) {
    Bitset tb(g_->n());
    for (int v : t) tb.set(v);
    for (int v : s)
        if (tb.test(v)) throw std::invalid_argument("cross: S and T overlap");
    ledger_->charge(QueryCategory::Cross, 3);
    if (s.size() <= t.size()) return count_edges_between(s, tb, static_cast<long long>(t.size()));
    Bitset sb(g_->n());
    for (int v : s) sb.set(v);
    return count_edges_between(t, sb, static_cast<long long>(s.size()));
}

long long CutOracle::bip_product(const VertexList& s, const VertexList& t,
                                 const std::vector<int>& x_support_idx,
                                 const std::vector<int>& y_support_idx) {
    VertexList sx, ty;
    sx.reserve(x_support_idx.size());
    ty.reserve(y_support_idx.size());
    for (int i : x_support_idx) sx.push_back(s.at(i));
    for (int j : y_support_idx) ty.push_back(t.at(j));
    return bip_count(sx, ty);
}

long long CutOracle::bip_count(const VertexList& sx, const VertexList& ty) {
    Bitset tb(g_->n());
    for (int v : ty) tb.set(v);
    for (int v : sx)
        if (tb.test(v)) throw std::invalid_argument("bip_count: supports overlap");
    ledger_->charge(QueryCategory::BipProduct, 3);
    if (sx.size() <= ty.size()) return count_edges_between(sx, tb, 0);
    Bitset sb(g_->n());
    for (int v : sx) sb.set(v);
    return count_edges_between(ty, sb, 0);
}

long long CutOracle::bip_count_row(int row, const Bitset& ty) {
    ledger_->charge(QueryCategory::BipProduct, 3);
    long long count = 0;
    for (int u : g_->neighbors(row)) {
        if (!ty.test(u)) continue;
        if (!in_view(u)) continue;
        if (edge_removed(row, u)) continue;
        ++count;
    }
    return count;
}

std::optional<int> CutOracle::random_neighbor(int v, const VertexList& r, Rng& rng) {
    VertexList current;
    current.reserve(r.size());
    for (int u : r) {
        if (u == v) throw std::invalid_argument("random_neighbor: v must not be in R");
        current.push_back(u);
    }
    std::sort(current.begin(), current.end());

    auto count_into = [&](const VertexList& subset) {
        Bitset bits(g_->n());
        bits.set_all(subset.begin(), subset.end());
        long long c = 0;
        for (int u : g_->neighbors(v)) {
            if (!bits.test(u) || !in_view(u) || edge_removed(v, u)) continue;
            ++c;
        }
        return c;
    };

    // Existence check: one cut unit.
    ledger_->charge(QueryCategory::Cut, 1);
    long long d = count_into(current);
    if (d == 0) return std::nullopt;
    if (current.size() == 1) return current[0];

    // Value of d_R(v): one cross call, then one per halving step.
    ledger_->charge(QueryCategory::Cross, 3);
    while (current.size() > 1) {
        size_t half = (current.size() + 1) / 2;  // lower-id half gets the ceiling
        VertexList lo(current.begin(), current.begin() + half);
        VertexList hi(current.begin() + half, current.end());
        ledger_->charge(QueryCategory::Cross, 3);
        long long d_lo = count_into(lo);
        long long d_hi = d - d_lo;
        if (d_lo > 0 && (d_hi == 0 || rng.next_below(static_cast<std::uint64_t>(d)) <
                                          static_cast<std::uint64_t>(d_lo))) {
            current = std::move(lo);
            d = d_lo;
        } else {
            current = std::move(hi);
            d = d_hi;
        }
    }
    return current[0];
}

std::vector<long long> CutOracle::mv_query(const Bitset& x, bool mask_complement) {
    ledger_->charge(QueryCategory::Mv, 1);
    std::vector<long long> out(g_->n(), 0);
    for (int v = 0; v < g_->n(); ++v) {
        if (!in_view(v)) continue;
        if (mask_complement && x.test(v)) continue;  // Ax o (1-x)
        long long acc = 0;
        for (int u : g_->neighbors(v)) {
            if (!x.test(u) || !in_view(u) || edge_removed(v, u)) continue;
            ++acc;
        }
        out[v] = acc;
    }
    return out;
}

int CutOracle::mdcp_mindeg() {
    ledger_->charge(QueryCategory::MdcpMindeg, costs_.mindeg());
    int best = -1;
    for (int v = 0; v < g_->n(); ++v) {
        if (!in_view(v)) continue;
        int d = 0;
        for (int u : g_->neighbors(v))
            if (in_view(u) && !edge_removed(v, u)) ++d;
        if (best < 0 || d < best) best = d;
    }
    if (best < 0) throw std::invalid_argument("mdcp_mindeg: empty view");
    return best;
}

VertexList CutOracle::mdcp_nbh(int v) {
    ledger_->charge(QueryCategory::MdcpNbh, costs_.nbh());
    VertexList out;
    for (int u : g_->neighbors(v))
        if (in_view(u) && !edge_removed(v, u)) out.push_back(u);
    return out;
}

std::vector<Edge> CutOracle::mdcp_spf(const std::vector<Edge>& removed) {
    ledger_->charge(QueryCategory::MdcpSpf, costs_.spf());
    std::unordered_set<std::uint64_t> skip;
    for (auto [u, v] : removed) {
        if (!g_->has_edge(u, v)) throw std::invalid_argument("mdcp_spf: E' not a subset of E");
        skip.insert(edge_key(g_->n(), u, v));
    }
    VertexPartition uf(g_->n());
    std::vector<Edge> forest;
    for (int u = 0; u < g_->n(); ++u) {
        if (!in_view(u)) continue;
        for (int v : g_->neighbors(u)) {
            if (u >= v || !in_view(v) || edge_removed(u, v)) continue;
            if (skip.count(edge_key(g_->n(), u, v))) continue;
            if (uf.unite(u, v)) forest.emplace_back(u, v);
        }
    }
    return forest;
}

long long CutOracle::mdcp_cut(const VertexList& s) {
    Bitset bits(g_->n());
    for (int v : s) bits.set(v);
    ledger_->charge(QueryCategory::MdcpCut, costs_.cut());
    return view_cut_raw(bits, s);
}

}  // namespace cutbench
