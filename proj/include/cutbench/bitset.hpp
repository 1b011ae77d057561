#pragma once

#include <cstdint>
#include <vector>

namespace cutbench {

// Fixed-size dynamic bitset over vertex ids. Kept minimal on purpose: the
// oracle answers every query by scanning adjacency lists against one of these.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int n) : n_(n), words_((n + 63) / 64, 0) {}

    void set(int i) { words_[i >> 6] |= (1ULL << (i & 63)); }
    void reset(int i) { words_[i >> 6] &= ~(1ULL << (i & 63)); }
    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1ULL; }

    void clear() { std::fill(words_.begin(), words_.end(), 0ULL); }
    int size() const { return n_; }

    int count() const {
        int c = 0;
        for (std::uint64_t w : words_) c += __builtin_popcountll(w);
        return c;
    }

    template <typename It>
    void set_all(It first, It last) {
        for (; first != last; ++first) set(*first);
    }

private:
    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace cutbench
