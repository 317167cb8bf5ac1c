#pragma once

#include <cassert>
#include <cstdint>
#include <vector>

namespace rrg {

/// Fixed-capacity bitset backed by 64-bit words. The capacity is chosen at
/// construction and never changes; binary operations require operands of
/// equal capacity.
class Bitset {
public:
    Bitset() = default;

    explicit Bitset(int nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    int capacity() const { return nbits_; }

    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

    void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }

    void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    void clear() { std::fill(words_.begin(), words_.end(), 0); }

    void fill_all() {
        if (words_.empty()) return;
        std::fill(words_.begin(), words_.end(), ~std::uint64_t{0});
        trim();
    }

    bool empty() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    int count() const {
        int c = 0;
        for (auto w : words_) c += __builtin_popcountll(w);
        return c;
    }

    /// Index of the lowest set bit, or -1.
    int first() const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return int(i * 64 + __builtin_ctzll(words_[i]));
        return -1;
    }

    /// Index of the lowest set bit strictly above `prev`, or -1.
    int next(int prev) const {
        int i = prev + 1;
        if (i >= nbits_) return -1;
        std::size_t wi = std::size_t(i) >> 6;
        std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (i & 63));
        while (true) {
            if (w) return int(wi * 64 + __builtin_ctzll(w));
            if (++wi >= words_.size()) return -1;
            w = words_[wi];
        }
    }

    void and_with(const Bitset& o) {
        assert(nbits_ == o.nbits_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    }

    void or_with(const Bitset& o) {
        assert(nbits_ == o.nbits_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    }

    void andnot_with(const Bitset& o) {
        assert(nbits_ == o.nbits_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    }

    bool intersects(const Bitset& o) const {
        assert(nbits_ == o.nbits_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    bool is_subset_of(const Bitset& o) const {
        assert(nbits_ == o.nbits_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    friend bool operator==(const Bitset& a, const Bitset& b) {
        return a.nbits_ == b.nbits_ && a.words_ == b.words_;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = words_[wi];
            while (w) {
                int b = __builtin_ctzll(w);
                f(int(wi * 64 + b));
                w &= w - 1;
            }
        }
    }

private:
    void trim() {
        int extra = int(words_.size() * 64) - nbits_;
        if (extra > 0 && !words_.empty()) words_.back() &= ~std::uint64_t{0} >> extra;
    }

    int nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace rrg
