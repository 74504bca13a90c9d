// Fixed-universe bitset used for granule extensions and relation rows.
// Intersection size is the hot operation of the miner, so it is a straight
// word-wise popcount without intermediate allocation.
#pragma once

#include <bit>
#include <cstdint>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace gram {

class IndexSet {
  public:
    IndexSet() = default;

    explicit IndexSet(std::size_t universe)
        : universe_(universe), words_((universe + 63) / 64, 0) {}

    static IndexSet full(std::size_t universe) {
        IndexSet s(universe);
        for (std::size_t i = 0; i < universe; ++i) s.set(i);
        return s;
    }

    std::size_t universe() const { return universe_; }

    bool empty() const { return count() == 0; }

    std::size_t count() const {
        std::size_t total = 0;
        for (std::uint64_t w : words_) total += static_cast<std::size_t>(std::popcount(w));
        return total;
    }

    bool test(std::size_t i) const {
        check_index(i);
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }

    void set(std::size_t i) {
        check_index(i);
        words_[i >> 6] |= std::uint64_t{1} << (i & 63);
    }

    void intersect_with(const IndexSet& other) {
        check_same_universe(other);
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
    }

    static std::size_t intersection_count(const IndexSet& a, const IndexSet& b) {
        a.check_same_universe(b);
        std::size_t total = 0;
        for (std::size_t w = 0; w < a.words_.size(); ++w)
            total += static_cast<std::size_t>(std::popcount(a.words_[w] & b.words_[w]));
        return total;
    }

    static IndexSet intersection(const IndexSet& a, const IndexSet& b) {
        IndexSet out = a;
        out.intersect_with(b);
        return out;
    }

    bool is_subset_of(const IndexSet& other) const {
        check_same_universe(other);
        for (std::size_t w = 0; w < words_.size(); ++w)
            if (words_[w] & ~other.words_[w]) return false;
        return true;
    }

    std::vector<std::size_t> indices() const {
        std::vector<std::size_t> out;
        out.reserve(count());
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits) {
                const int bit = std::countr_zero(bits);
                out.push_back(w * 64 + static_cast<std::size_t>(bit));
                bits &= bits - 1;
            }
        }
        return out;
    }

    friend bool operator==(const IndexSet& a, const IndexSet& b) {
        return a.universe_ == b.universe_ && a.words_ == b.words_;
    }

  private:
    void check_index(std::size_t i) const {
        if (i >= universe_) throw std::out_of_range("index " + std::to_string(i) +
                                                    " outside universe of " + std::to_string(universe_));
    }

    void check_same_universe(const IndexSet& other) const {
        if (universe_ != other.universe_)
            throw std::out_of_range("index sets over different universes");
    }

    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace gram
