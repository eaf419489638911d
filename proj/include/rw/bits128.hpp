#pragma once

#include <bit>
#include <cstdint>
#include <functional>

namespace rw {

// Fixed-width set over {0, ..., 127}. Two machine words, value semantics.
struct Bits128 {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;

    static Bits128 single(int i) {
        Bits128 b;
        b.set(i);
        return b;
    }

    // All bits below n set: the full vertex range of an n-vertex graph.
    static Bits128 below(int n) {
        Bits128 b;
        if (n >= 128) {
            b.lo = b.hi = ~0ull;
        } else if (n > 64) {
            b.lo = ~0ull;
            b.hi = (1ull << (n - 64)) - 1;
        } else if (n == 64) {
            b.lo = ~0ull;
        } else if (n > 0) {
            b.lo = (1ull << n) - 1;
        }
        return b;
    }

    void set(int i) { (i < 64 ? lo : hi) |= 1ull << (i & 63); }
    void reset(int i) { (i < 64 ? lo : hi) &= ~(1ull << (i & 63)); }
    bool test(int i) const { return ((i < 64 ? lo : hi) >> (i & 63)) & 1; }

    int count() const { return std::popcount(lo) + std::popcount(hi); }
    bool empty() const { return lo == 0 && hi == 0; }
    bool any() const { return !empty(); }

    // Lowest set bit, or 128 when empty.
    int first() const {
        if (lo) return std::countr_zero(lo);
        if (hi) return 64 + std::countr_zero(hi);
        return 128;
    }

    // Lowest set bit strictly above i, or 128.
    int next(int i) const {
        ++i;
        if (i >= 128) return 128;
        if (i < 64) {
            std::uint64_t m = lo & ~((1ull << i) - 1);
            if (m) return std::countr_zero(m);
            if (hi) return 64 + std::countr_zero(hi);
            return 128;
        }
        std::uint64_t m = hi & (i == 64 ? ~0ull : ~((1ull << (i - 64)) - 1));
        if (m) return 64 + std::countr_zero(m);
        return 128;
    }

    bool is_subset_of(const Bits128& o) const {
        return (lo & ~o.lo) == 0 && (hi & ~o.hi) == 0;
    }

    friend Bits128 operator&(Bits128 a, const Bits128& b) {
        a.lo &= b.lo;
        a.hi &= b.hi;
        return a;
    }
    friend Bits128 operator|(Bits128 a, const Bits128& b) {
        a.lo |= b.lo;
        a.hi |= b.hi;
        return a;
    }
    friend Bits128 operator^(Bits128 a, const Bits128& b) {
        a.lo ^= b.lo;
        a.hi ^= b.hi;
        return a;
    }
    // Set difference.
    friend Bits128 operator-(Bits128 a, const Bits128& b) {
        a.lo &= ~b.lo;
        a.hi &= ~b.hi;
        return a;
    }
    Bits128& operator&=(const Bits128& b) { lo &= b.lo; hi &= b.hi; return *this; }
    Bits128& operator|=(const Bits128& b) { lo |= b.lo; hi |= b.hi; return *this; }
    Bits128& operator-=(const Bits128& b) { lo &= ~b.lo; hi &= ~b.hi; return *this; }

    friend bool operator==(const Bits128&, const Bits128&) = default;

    // Lexicographic on (hi, lo); any total order works for tie-breaking.
    friend bool operator<(const Bits128& a, const Bits128& b) {
        return a.hi != b.hi ? a.hi < b.hi : a.lo < b.lo;
    }
};

// for (int v : iterate(bits)) { ... }
struct Bits128Iter {
    Bits128 bits;
    struct It {
        Bits128 b;
        int v;
        int operator*() const { return v; }
        It& operator++() {
            v = b.next(v);
            return *this;
        }
        bool operator!=(const It& o) const { return v != o.v; }
    };
    It begin() const { return It{bits, bits.first()}; }
    It end() const { return It{bits, 128}; }
};
inline Bits128Iter iterate(const Bits128& b) { return Bits128Iter{b}; }

}  // namespace rw

template <>
struct std::hash<rw::Bits128> {
    std::size_t operator()(const rw::Bits128& b) const noexcept {
        std::uint64_t x = b.lo * 0x9e3779b97f4a7c15ull ^ (b.hi + 0xd1b54a32d192ed03ull);
        x ^= x >> 32;
        return static_cast<std::size_t>(x * 0xff51afd7ed558ccdull);
    }
};
