#ifndef PALEY_BITSET_HPP
#define PALEY_BITSET_HPP

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace paley {

// Dense bit array over Z_n. Backs residue sets and adjacency rows; the
// clique kernels live on and_count_above. Bits at positions >= size() are
// kept zero as a class invariant.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(uint64_t nbits) : nbits_(nbits), w_((nbits + 63) / 64, 0) {}

    uint64_t size() const { return nbits_; }

    void set(uint64_t i) {
        assert(i < nbits_);
        w_[i >> 6] |= uint64_t(1) << (i & 63);
    }
    void reset(uint64_t i) {
        assert(i < nbits_);
        w_[i >> 6] &= ~(uint64_t(1) << (i & 63));
    }
    bool test(uint64_t i) const {
        assert(i < nbits_);
        return (w_[i >> 6] >> (i & 63)) & 1;
    }

    uint64_t count() const {
        uint64_t c = 0;
        for (uint64_t w : w_) c += std::popcount(w);
        return c;
    }

    bool operator==(const Bitset&) const = default;

    // Intersection; both operands must have the same size.
    Bitset& operator&=(const Bitset& o) {
        assert(nbits_ == o.nbits_);
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }

    // |{i > limit : a[i] and b[i]}|
    static uint64_t and_count_above(const Bitset& a, const Bitset& b, uint64_t limit);

    // Cyclic shift: bit (i + shift) mod n of the result equals bit i of *this.
    Bitset rotated(uint64_t shift) const;

    // Visit set bits in ascending order.
    template <class F>
    void for_each(F&& f) const {
        for (size_t wi = 0; wi < w_.size(); ++wi) {
            uint64_t w = w_[wi];
            while (w) {
                f(uint64_t(wi) * 64 + std::countr_zero(w));
                w &= w - 1;
            }
        }
    }

    // Visit set bits strictly greater than limit, in ascending order.
    template <class F>
    void for_each_above(uint64_t limit, F&& f) const {
        if (limit + 1 >= nbits_) return;
        size_t wi = (limit + 1) >> 6;
        unsigned r = (limit + 1) & 63;
        uint64_t w = w_[wi] & (~uint64_t(0) << r);
        for (;;) {
            while (w) {
                f(uint64_t(wi) * 64 + std::countr_zero(w));
                w &= w - 1;
            }
            if (++wi == w_.size()) return;
            w = w_[wi];
        }
    }

private:
    uint64_t nbits_ = 0;
    std::vector<uint64_t> w_;
};

} // namespace paley

#endif
