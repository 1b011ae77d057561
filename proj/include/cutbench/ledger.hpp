#pragma once

#include <array>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace cutbench {

// Thrown by a Monte Carlo clock when a zero-error routine exceeds its budget.
struct ClockExceeded : std::runtime_error {
    ClockExceeded() : std::runtime_error("query clock exceeded") {}
};

enum class QueryCategory {
    Cut = 0,
    Cross,
    BipProduct,
    InducedCut,
    Mv,
    MdcpMindeg,
    MdcpNbh,
    MdcpSpf,
    MdcpCut,
    kCount
};

inline const char* category_name(QueryCategory c) {
    switch (c) {
        case QueryCategory::Cut: return "cut";
        case QueryCategory::Cross: return "cross";
        case QueryCategory::BipProduct: return "bip_product";
        case QueryCategory::InducedCut: return "induced_cut";
        case QueryCategory::Mv: return "mv";
        case QueryCategory::MdcpMindeg: return "mdcp_mindeg";
        case QueryCategory::MdcpNbh: return "mdcp_nbh";
        case QueryCategory::MdcpSpf: return "mdcp_spf";
        case QueryCategory::MdcpCut: return "mdcp_cut";
        default: return "?";
    }
}

// Per-category call and charged-unit accounting. Charges are monotone; the
// modeled bucket tracks costs charged for black-box subroutines that stand in
// for external algorithms and is kept out of the per-category totals.
class QueryLedger {
public:
    static constexpr int kCategories = static_cast<int>(QueryCategory::kCount);

    void charge(QueryCategory c, std::uint64_t units, std::uint64_t calls = 1) {
        calls_[static_cast<int>(c)] += calls;
        units_[static_cast<int>(c)] += units;
        if (budget_ && total_units() > budget_) throw ClockExceeded{};
    }

    // Monte Carlo clock: total charged units above the cap abort the running
    // routine via ClockExceeded. A cap of 0 disables the clock.
    void set_unit_budget(std::uint64_t cap) { budget_ = cap; }
    std::uint64_t unit_budget() const { return budget_; }

    void charge_modeled(std::uint64_t units) { modeled_units_ += units; }

    std::uint64_t calls(QueryCategory c) const { return calls_[static_cast<int>(c)]; }
    std::uint64_t units(QueryCategory c) const { return units_[static_cast<int>(c)]; }

    std::uint64_t total_units() const {
        std::uint64_t t = 0;
        for (auto u : units_) t += u;
        return t;
    }
    std::uint64_t total_calls() const {
        std::uint64_t t = 0;
        for (auto c : calls_) t += c;
        return t;
    }

    // Cut-query units: categories whose charges are denominated in classical
    // cut queries (everything except mv and the mdcp categories).
    std::uint64_t cut_units() const {
        return units(QueryCategory::Cut) + units(QueryCategory::Cross) +
               units(QueryCategory::BipProduct) + units(QueryCategory::InducedCut);
    }

    std::uint64_t mdcp_units() const {
        return units(QueryCategory::MdcpMindeg) + units(QueryCategory::MdcpNbh) +
               units(QueryCategory::MdcpSpf) + units(QueryCategory::MdcpCut);
    }

    std::uint64_t modeled_units() const { return modeled_units_; }

    void write_csv(std::ostream& out) const {
        out << "category,calls,charged_units\n";
        for (int i = 0; i < kCategories; ++i)
            out << category_name(static_cast<QueryCategory>(i)) << ',' << calls_[i] << ','
                << units_[i] << '\n';
        out << "modeled,0," << modeled_units_ << '\n';
    }

    bool operator==(const QueryLedger& o) const {
        return calls_ == o.calls_ && units_ == o.units_ && modeled_units_ == o.modeled_units_;
    }

private:
    std::array<std::uint64_t, kCategories> calls_{};
    std::array<std::uint64_t, kCategories> units_{};
    std::uint64_t modeled_units_ = 0;
    std::uint64_t budget_ = 0;
};

}  // namespace cutbench
