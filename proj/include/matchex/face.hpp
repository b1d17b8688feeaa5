#pragma once

#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

#include "matchex/errors.hpp"

namespace matchex {

// A subset of up to 128 ground-set positions (the edge slots of a graph),
// stored as a fixed-width bitset and ordered by its 128-bit value.
// The empty face has dimension -1.
class Face {
public:
    static constexpr int max_bits = 128;

    constexpr Face() = default;
    constexpr Face(std::uint64_t lo, std::uint64_t hi) : lo_(lo), hi_(hi) {}

    static Face single(int pos) {
        Face f;
        f.set(pos);
        return f;
    }

    static Face from_positions(const std::vector<int>& positions) {
        Face f;
        for (int p : positions) f.set(p);
        return f;
    }

    // Positions 0..count-1 all set.
    static Face full(int count) {
        check_range(count == 0 ? 0 : count - 1);
        Face f;
        if (count >= 64) {
            f.lo_ = ~0ULL;
            f.hi_ = count == 64 ? 0 : low_mask(count - 64);
        } else {
            f.lo_ = low_mask(count);
        }
        return f;
    }

    void set(int pos) {
        check_range(pos);
        if (pos < 64)
            lo_ |= 1ULL << pos;
        else
            hi_ |= 1ULL << (pos - 64);
    }

    void clear(int pos) {
        check_range(pos);
        if (pos < 64)
            lo_ &= ~(1ULL << pos);
        else
            hi_ &= ~(1ULL << (pos - 64));
    }

    bool test(int pos) const {
        if (pos < 0 || pos >= max_bits) return false;
        return pos < 64 ? (lo_ >> pos) & 1 : (hi_ >> (pos - 64)) & 1;
    }

    Face with(int pos) const {
        Face f = *this;
        f.set(pos);
        return f;
    }

    Face without(int pos) const {
        Face f = *this;
        f.clear(pos);
        return f;
    }

    int cardinality() const {
        return __builtin_popcountll(lo_) + __builtin_popcountll(hi_);
    }

    int dimension() const { return cardinality() - 1; }

    bool is_empty() const { return lo_ == 0 && hi_ == 0; }

    // other is a subset of this face
    bool contains(const Face& other) const {
        return (other.lo_ & ~lo_) == 0 && (other.hi_ & ~hi_) == 0;
    }

    bool disjoint_with(const Face& other) const {
        return (lo_ & other.lo_) == 0 && (hi_ & other.hi_) == 0;
    }

    Face operator|(const Face& o) const { return Face(lo_ | o.lo_, hi_ | o.hi_); }
    Face operator&(const Face& o) const { return Face(lo_ & o.lo_, hi_ & o.hi_); }

    // set difference this \ o
    Face minus(const Face& o) const { return Face(lo_ & ~o.lo_, hi_ & ~o.hi_); }

    // All positions moved up by k; throws CapacityError past 128 bits.
    Face shifted_up(int k) const {
        if (k == 0) return *this;
        int hb = highest();
        if (hb >= 0 && hb + k >= max_bits)
            throw CapacityError("face shift exceeds 128 ground positions");
        Face f;
        for (int p = lowest(); p >= 0; p = next(p + 1)) f.set(p + k);
        return f;
    }

    int lowest() const {
        if (lo_) return __builtin_ctzll(lo_);
        if (hi_) return 64 + __builtin_ctzll(hi_);
        return -1;
    }

    int highest() const {
        if (hi_) return 127 - __builtin_clzll(hi_);
        if (lo_) return 63 - __builtin_clzll(lo_);
        return -1;
    }

    // Smallest set position >= from, or -1.
    int next(int from) const {
        if (from < 0) from = 0;
        if (from >= max_bits) return -1;
        if (from < 64) {
            std::uint64_t rest = lo_ & (~0ULL << from);
            if (rest) return __builtin_ctzll(rest);
            if (hi_) return 64 + __builtin_ctzll(hi_);
            return -1;
        }
        std::uint64_t rest = hi_ & (~0ULL << (from - 64));
        if (rest) return 64 + __builtin_ctzll(rest);
        return -1;
    }

    std::vector<int> positions() const {
        std::vector<int> out;
        out.reserve(cardinality());
        for (int p = lowest(); p >= 0; p = next(p + 1)) out.push_back(p);
        return out;
    }

    // Lowercase hex of the 128-bit value, no prefix, no leading zeros ("0" for empty).
    std::string to_hex() const {
        static const char* digits = "0123456789abcdef";
        if (is_empty()) return "0";
        std::string s;
        bool started = false;
        for (int nibble = 31; nibble >= 0; --nibble) {
            std::uint64_t word = nibble >= 16 ? hi_ : lo_;
            int shift = (nibble % 16) * 4;
            unsigned v = (word >> shift) & 0xF;
            if (!started && v == 0) continue;
            started = true;
            s.push_back(digits[v]);
        }
        return s;
    }

    static Face from_hex(const std::string& s) {
        if (s.empty() || s.size() > 32)
            throw std::invalid_argument("bad hex face: '" + s + "'");
        Face f;
        for (char c : s) {
            unsigned v;
            if (c >= '0' && c <= '9')
                v = static_cast<unsigned>(c - '0');
            else if (c >= 'a' && c <= 'f')
                v = static_cast<unsigned>(c - 'a') + 10;
            else if (c >= 'A' && c <= 'F')
                v = static_cast<unsigned>(c - 'A') + 10;
            else
                throw std::invalid_argument("bad hex face: '" + s + "'");
            f.hi_ = (f.hi_ << 4) | (f.lo_ >> 60);
            f.lo_ = (f.lo_ << 4) | v;
        }
        return f;
    }

    std::uint64_t lo() const { return lo_; }
    std::uint64_t hi() const { return hi_; }

    friend bool operator==(const Face& a, const Face& b) = default;

    friend bool operator<(const Face& a, const Face& b) {
        return a.hi_ != b.hi_ ? a.hi_ < b.hi_ : a.lo_ < b.lo_;
    }

private:
    static std::uint64_t low_mask(int bits) {
        return bits >= 64 ? ~0ULL : (1ULL << bits) - 1;
    }

    static void check_range(int pos) {
        if (pos < 0 || pos >= max_bits)
            throw CapacityError("face position out of the 128-bit range");
    }

    std::uint64_t lo_ = 0;
    std::uint64_t hi_ = 0;
};

struct FaceHash {
    std::size_t operator()(const Face& f) const noexcept {
        auto mix = [](std::uint64_t x) {
            x += 0x9e3779b97f4a7c15ULL;
            x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
            x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
            return x ^ (x >> 31);
        };
        return static_cast<std::size_t>(mix(f.lo()) ^ (mix(f.hi()) * 0x9e3779b97f4a7c15ULL));
    }
};

using FaceSet = std::unordered_set<Face, FaceHash>;

} // namespace matchex
