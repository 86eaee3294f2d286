#include "bitset.hpp"

namespace paley {

uint64_t Bitset::and_count_above(const Bitset& a, const Bitset& b, uint64_t limit) {
    assert(a.nbits_ == b.nbits_);
    if (limit + 1 >= a.nbits_) return 0;
    size_t wi = (limit + 1) >> 6;
    unsigned r = (limit + 1) & 63;
    uint64_t total = std::popcount(a.w_[wi] & b.w_[wi] & (~uint64_t(0) << r));
    for (size_t i = wi + 1; i < a.w_.size(); ++i)
        total += std::popcount(a.w_[i] & b.w_[i]);
    return total;
}

namespace {

// OR bits [src_off, src_off+len) of src into dst starting at dst_off.
// dst must have room; bits are moved in 64-bit chunks.
void or_bit_range(std::vector<uint64_t>& dst, uint64_t dst_off,
                  const std::vector<uint64_t>& src, uint64_t src_off, uint64_t len) {
    uint64_t done = 0;
    while (done < len) {
        const uint64_t take = std::min<uint64_t>(64, len - done);
        const uint64_t s = src_off + done;
        const size_t sw = s >> 6;
        const unsigned sr = s & 63;
        uint64_t bits = src[sw] >> sr;
        if (sr != 0 && sw + 1 < src.size()) bits |= src[sw + 1] << (64 - sr);
        if (take < 64) bits &= (uint64_t(1) << take) - 1;

        const uint64_t d = dst_off + done;
        const size_t dw = d >> 6;
        const unsigned dr = d & 63;
        dst[dw] |= bits << dr;
        if (dr != 0) {
            const uint64_t high = bits >> (64 - dr);
            if (high) dst[dw + 1] |= high;
        }
        done += take;
    }
}

} // namespace

Bitset Bitset::rotated(uint64_t shift) const {
    Bitset out(nbits_);
    if (nbits_ == 0) return out;
    shift %= nbits_;
    if (shift == 0) {
        out.w_ = w_;
        return out;
    }
    // low part of the source lands at [shift, n), the tail wraps to [0, shift)
    or_bit_range(out.w_, shift, w_, 0, nbits_ - shift);
    or_bit_range(out.w_, 0, w_, nbits_ - shift, shift);
    return out;
}

} // namespace paley
