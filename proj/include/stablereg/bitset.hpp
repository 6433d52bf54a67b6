#pragma once

#include <bit>
#include <cstdint>
#include <cstddef>
#include <vector>

namespace stablereg {

// Dense bit-row over vertex ids 0..n-1.  All inner loops of the library are
// intersection popcounts over these rows, so the class keeps a conservative
// [lo, hi) word hull around the set bits; binary operations only touch the
// overlap of the two hulls.
class Bitset {
public:
    Bitset() = default;

    explicit Bitset(int nbits)
        : nbits_(nbits), words_((nbits + 63) / 64, 0), lo_(words_.size()), hi_(0) {}

    int capacity() const { return nbits_; }

    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }

    void set(int i) {
        std::size_t w = static_cast<std::size_t>(i) >> 6;
        words_[w] |= std::uint64_t(1) << (i & 63);
        if (w < lo_) lo_ = w;
        if (w + 1 > hi_) hi_ = w + 1;
    }

    void reset(int i) { words_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }

    void clear() {
        for (std::size_t w = lo_; w < hi_; ++w) words_[w] = 0;
        lo_ = words_.size();
        hi_ = 0;
    }

    bool any() const {
        for (std::size_t w = lo_; w < hi_; ++w)
            if (words_[w]) return true;
        return false;
    }

    bool none() const { return !any(); }

    long long count() const {
        long long c = 0;
        for (std::size_t w = lo_; w < hi_; ++w) c += std::popcount(words_[w]);
        return c;
    }

    // Smallest set bit, or -1.
    int first() const {
        for (std::size_t w = lo_; w < hi_; ++w)
            if (words_[w]) return static_cast<int>(w * 64 + std::countr_zero(words_[w]));
        return -1;
    }

    // Next set bit strictly after i, or -1.
    int next(int i) const {
        std::size_t w = static_cast<std::size_t>(i + 1) >> 6;
        if (w < lo_) w = lo_;
        if (w >= hi_) return -1;
        std::uint64_t word = words_[w] & (~std::uint64_t(0) << ((i + 1) & 63));
        while (true) {
            if (word) return static_cast<int>(w * 64 + std::countr_zero(word));
            if (++w >= hi_) return -1;
            word = words_[w];
        }
    }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t w = lo_; w < hi_; ++w) {
            std::uint64_t word = words_[w];
            while (word) {
                f(static_cast<int>(w * 64 + std::countr_zero(word)));
                word &= word - 1;
            }
        }
    }

    Bitset& operator&=(const Bitset& o) {
        std::size_t a = std::max(lo_, o.lo_), b = std::min(hi_, o.hi_);
        for (std::size_t w = lo_; w < std::min(hi_, a); ++w) words_[w] = 0;
        for (std::size_t w = std::max(lo_, b); w < hi_; ++w) words_[w] = 0;
        for (std::size_t w = a; w < b; ++w) words_[w] &= o.words_[w];
        if (a < b) { lo_ = a; hi_ = b; } else { lo_ = words_.size(); hi_ = 0; }
        return *this;
    }

    Bitset& operator|=(const Bitset& o) {
        for (std::size_t w = o.lo_; w < o.hi_; ++w) words_[w] |= o.words_[w];
        if (o.lo_ < o.hi_) {
            if (lo_ > hi_) { lo_ = o.lo_; hi_ = o.hi_; }
            else { lo_ = std::min(lo_, o.lo_); hi_ = std::max(hi_, o.hi_); }
        }
        return *this;
    }

    // this \ o
    Bitset& subtract(const Bitset& o) {
        std::size_t a = std::max(lo_, o.lo_), b = std::min(hi_, o.hi_);
        for (std::size_t w = a; w < b; ++w) words_[w] &= ~o.words_[w];
        return *this;
    }

    friend Bitset operator&(const Bitset& x, const Bitset& y) {
        Bitset r(x.nbits_);
        std::size_t a = std::max(x.lo_, y.lo_), b = std::min(x.hi_, y.hi_);
        for (std::size_t w = a; w < b; ++w) r.words_[w] = x.words_[w] & y.words_[w];
        if (a < b) { r.lo_ = a; r.hi_ = b; }
        return r;
    }

    friend Bitset and_not(const Bitset& x, const Bitset& y) {
        Bitset r(x.nbits_);
        for (std::size_t w = x.lo_; w < x.hi_; ++w) {
            std::uint64_t v = x.words_[w];
            if (w >= y.lo_ && w < y.hi_) v &= ~y.words_[w];
            r.words_[w] = v;
        }
        if (x.lo_ < x.hi_) { r.lo_ = x.lo_; r.hi_ = x.hi_; }
        return r;
    }

    friend long long count_and(const Bitset& x, const Bitset& y) {
        std::size_t a = std::max(x.lo_, y.lo_), b = std::min(x.hi_, y.hi_);
        long long c = 0;
        for (std::size_t w = a; w < b; ++w) c += std::popcount(x.words_[w] & y.words_[w]);
        return c;
    }

    friend bool intersects(const Bitset& x, const Bitset& y) {
        std::size_t a = std::max(x.lo_, y.lo_), b = std::min(x.hi_, y.hi_);
        for (std::size_t w = a; w < b; ++w)
            if (x.words_[w] & y.words_[w]) return true;
        return false;
    }

    // x \ y nonempty?
    friend bool any_minus(const Bitset& x, const Bitset& y) {
        for (std::size_t w = x.lo_; w < x.hi_; ++w) {
            std::uint64_t v = x.words_[w];
            if (w >= y.lo_ && w < y.hi_) v &= ~y.words_[w];
            if (v) return true;
        }
        return false;
    }

    friend bool is_subset(const Bitset& x, const Bitset& y) { return !any_minus(x, y); }

    bool operator==(const Bitset& o) const {
        std::size_t a = std::min(lo_, o.lo_), b = std::max(hi_, o.hi_);
        for (std::size_t w = a; w < b; ++w) {
            std::uint64_t u = (w >= lo_ && w < hi_) ? words_[w] : 0;
            std::uint64_t v = (w >= o.lo_ && w < o.hi_) ? o.words_[w] : 0;
            if (u != v) return false;
        }
        return true;
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    // Keep only the k smallest members.
    void trim_to(long long k) {
        long long seen = 0;
        for (std::size_t w = lo_; w < hi_; ++w) {
            int pc = std::popcount(words_[w]);
            if (seen + pc <= k) { seen += pc; continue; }
            std::uint64_t word = words_[w];
            std::uint64_t keep = 0;
            while (seen < k) {
                std::uint64_t low = word & (~word + 1);
                keep |= low;
                word &= word - 1;
                ++seen;
            }
            words_[w] = keep;
            for (std::size_t v = w + 1; v < hi_; ++v) words_[v] = 0;
            hi_ = w + 1;
            return;
        }
    }

    // Canonical key for hashing/dedup: the support words.
    std::vector<std::uint64_t> key() const {
        std::vector<std::uint64_t> k;
        bool started = false;
        for (std::size_t w = lo_; w < hi_; ++w) {
            if (!started && words_[w] == 0) continue;
            if (!started) { started = true; k.push_back(w); }
            k.push_back(words_[w]);
        }
        while (k.size() > 1 && k.back() == 0) k.pop_back();
        return k;
    }

private:
    int nbits_ = 0;
    std::vector<std::uint64_t> words_;
    std::size_t lo_ = 0, hi_ = 0;  // conservative word hull
};

inline Bitset full_set(int n) {
    Bitset b(n);
    for (int i = 0; i < n; ++i) b.set(i);
    return b;
}

inline Bitset singleton(int n, int v) {
    Bitset b(n);
    b.set(v);
    return b;
}

}  // namespace stablereg
