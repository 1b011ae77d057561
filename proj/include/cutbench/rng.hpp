#pragma once

#include <cstdint>
#include <random>

namespace cutbench {

// splitmix64; used for seed expansion only, never as the main stream.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Counter-mode seed derivation: trial i of a master seed is reproducible in
// isolation as derive_seed(master, i).
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t counter) {
    std::uint64_t s = master ^ (0x9e3779b97f4a7c15ULL * (counter + 1));
    std::uint64_t a = splitmix64(s);
    std::uint64_t b = splitmix64(s);
    return a ^ (b << 1);
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0, bound).
    std::uint64_t next_below(std::uint64_t bound) {
        std::uniform_int_distribution<std::uint64_t> dist(0, bound - 1);
        return dist(engine_);
    }

    int next_int(int lo, int hi) {  // inclusive bounds
        std::uniform_int_distribution<int> dist(lo, hi);
        return dist(engine_);
    }

    double next_double() {
        std::uniform_real_distribution<double> dist(0.0, 1.0);
        return dist(engine_);
    }

    bool bernoulli(double p) {
        if (p >= 1.0) return true;
        if (p <= 0.0) return false;
        return next_double() < p;
    }

    int binomial(int n, double p) {
        std::binomial_distribution<int> dist(n, p);
        return dist(engine_);
    }

    std::mt19937_64& engine() { return engine_; }

    Rng fork(std::uint64_t counter) { return Rng(derive_seed(engine_(), counter)); }

private:
    std::mt19937_64 engine_;
};

}  // namespace cutbench
