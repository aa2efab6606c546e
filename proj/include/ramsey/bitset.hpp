#ifndef RAMSEY_BITSET_HPP
#define RAMSEY_BITSET_HPP

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace ramsey {

// Fixed-capacity dynamic bitset over [0, n).  One 64-bit word for n <= 64,
// a word array beyond that.
class Bitset {
  public:
    Bitset() = default;
    explicit Bitset(int n) : n_(n), w_(static_cast<std::size_t>((n + 63) / 64), 0) {}

    int capacity() const { return n_; }

    bool test(int i) const {
        assert(i >= 0 && i < n_);
        return (w_[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1u;
    }
    void set(int i) {
        assert(i >= 0 && i < n_);
        w_[static_cast<std::size_t>(i) >> 6] |= std::uint64_t{1} << (i & 63);
    }
    void reset(int i) {
        assert(i >= 0 && i < n_);
        w_[static_cast<std::size_t>(i) >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }

    int count() const {
        int c = 0;
        for (std::uint64_t w : w_) c += std::popcount(w);
        return c;
    }
    bool any() const {
        for (std::uint64_t w : w_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    Bitset& operator&=(const Bitset& o) {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    // this &= ~o
    Bitset& andnot_assign(const Bitset& o) {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }
    bool intersects(const Bitset& o) const {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    // Lowest set bit, or -1.
    int lowest() const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i]) return static_cast<int>(i * 64) + std::countr_zero(w_[i]);
        return -1;
    }

    // Lowest set bit >= from, or -1.
    int next(int from) const {
        if (from >= n_) return -1;
        std::size_t wi = static_cast<std::size_t>(from) >> 6;
        std::uint64_t w = w_[wi] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (w) return static_cast<int>(wi * 64) + std::countr_zero(w);
            if (++wi == w_.size()) return -1;
            w = w_[wi];
        }
    }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < w_.size(); ++i) {
            std::uint64_t w = w_[i];
            while (w) {
                f(static_cast<int>(i * 64) + std::countr_zero(w));
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> v;
        v.reserve(static_cast<std::size_t>(count()));
        for_each([&](int i) { v.push_back(i); });
        return v;
    }

    friend bool operator==(const Bitset& a, const Bitset& b) {
        return a.n_ == b.n_ && a.w_ == b.w_;
    }

  private:
    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

}  // namespace ramsey

#endif
