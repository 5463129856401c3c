#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "maxlin/errors.hpp"

namespace maxlin {

// Fixed-width bit vector over 64-bit words, little-endian by index:
// bit i lives in word i/64 at position i%64.
class BitVec {
  public:
    BitVec() = default;
    explicit BitVec(std::size_t nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    std::size_t size() const { return nbits_; }

    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }

    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }

    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    void assign(std::size_t i, bool v) {
        if (v)
            set(i);
        else
            reset(i);
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (std::uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    bool none() const {
        for (std::uint64_t w : words_)
            if (w) return false;
        return true;
    }

    bool any() const { return !none(); }

    // Symmetric difference.
    BitVec& operator^=(const BitVec& other) {
        require_same_width(other);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
        return *this;
    }

    friend BitVec operator^(BitVec a, const BitVec& b) {
        a ^= b;
        return a;
    }

    friend bool operator==(const BitVec& a, const BitVec& b) {
        return a.nbits_ == b.nbits_ && a.words_ == b.words_;
    }

    friend bool operator!=(const BitVec& a, const BitVec& b) { return !(a == b); }

    // popcount(a & b) mod 2.
    friend bool parity_and(const BitVec& a, const BitVec& b) {
        a.require_same_width(b);
        std::uint64_t fold = 0;
        for (std::size_t i = 0; i < a.words_.size(); ++i) fold ^= a.words_[i] & b.words_[i];
        return std::popcount(fold) & 1u;
    }

    bool intersects(const BitVec& other) const {
        require_same_width(other);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & other.words_[i]) return true;
        return false;
    }

    // Lowest set bit, or size() if none.
    std::size_t find_first() const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return i * 64 + std::countr_zero(words_[i]);
        return nbits_;
    }

    template <typename Fn>
    void for_each_set(Fn&& fn) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w) {
                fn(i * 64 + std::countr_zero(w));
                w &= w - 1;
            }
        }
    }

    std::vector<std::uint32_t> to_indices() const {
        std::vector<std::uint32_t> out;
        out.reserve(count());
        for_each_set([&](std::size_t i) { out.push_back(static_cast<std::uint32_t>(i)); });
        return out;
    }

    std::size_t hash() const {
        std::uint64_t h = 0x9e3779b97f4a7c15ull ^ nbits_;
        for (std::uint64_t w : words_) {
            h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return static_cast<std::size_t>(h);
    }

  private:
    void require_same_width(const BitVec& other) const {
        if (nbits_ != other.nbits_)
            throw DimensionError("bit vector width mismatch: " + std::to_string(nbits_) +
                                 " vs " + std::to_string(other.nbits_));
    }

    std::size_t nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

struct BitVecHash {
    std::size_t operator()(const BitVec& v) const { return v.hash(); }
};

}  // namespace maxlin
