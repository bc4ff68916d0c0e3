#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "bitpath/errors.hpp"

namespace bitpath {

using VertexId = std::uint32_t;

// A path is a vertex sequence; consecutive entries must be joined by an edge
// of the graph it belongs to. Hop length = size() - 1.
using Path = std::vector<VertexId>;

// A set of vertices over a fixed universe [0, size), packed into 64-bit
// words. Serves both as an adjacency row (successor/predecessor set of one
// vertex) and as a search frontier. All binary laws require equal sizes.
// Unused tail bits of the last word are kept zero, so word-wise equality is
// set equality.
class VertexSet {
public:
    VertexSet() = default;

    explicit VertexSet(std::size_t size)
        : words_((size + kWordBits - 1) / kWordBits, 0), size_(size) {}

    // Indicator set {v} over a universe of `size` vertices.
    static VertexSet single(VertexId v, std::size_t size) {
        VertexSet s(size);
        s.set(v);
        return s;
    }

    std::size_t size() const { return size_; }

    bool test(VertexId v) const {
        check_index(v);
        return (words_[v / kWordBits] >> (v % kWordBits)) & 1u;
    }

    void set(VertexId v) {
        check_index(v);
        words_[v / kWordBits] |= std::uint64_t{1} << (v % kWordBits);
    }

    void reset(VertexId v) {
        check_index(v);
        words_[v / kWordBits] &= ~(std::uint64_t{1} << (v % kWordBits));
    }

    bool any() const {
        for (std::uint64_t w : words_)
            if (w != 0) return true;
        return false;
    }

    bool none() const { return !any(); }

    std::size_t count() const {
        std::size_t n = 0;
        for (std::uint64_t w : words_) n += static_cast<std::size_t>(std::popcount(w));
        return n;
    }

    VertexSet& operator|=(const VertexSet& other) {
        check_same_size(other);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
        return *this;
    }

    VertexSet& operator&=(const VertexSet& other) {
        check_same_size(other);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }

    bool operator==(const VertexSet& other) const = default;

    bool is_subset_of(const VertexSet& other) const {
        check_same_size(other);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if ((words_[i] & ~other.words_[i]) != 0) return false;
        return true;
    }

    // Members in ascending order.
    std::vector<VertexId> support() const {
        std::vector<VertexId> out;
        out.reserve(count());
        for_each([&](VertexId v) { out.push_back(v); });
        return out;
    }

    // Visits members in ascending order without allocating.
    template <typename F>
    void for_each(F&& fn) const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = words_[wi];
            while (w != 0) {
                const auto bit = static_cast<unsigned>(std::countr_zero(w));
                fn(static_cast<VertexId>(wi * kWordBits + bit));
                w &= w - 1;
            }
        }
    }

    friend std::ostream& operator<<(std::ostream& os, const VertexSet& s);

private:
    static constexpr std::size_t kWordBits = 64;

    void check_index(VertexId v) const {
        if (v >= size_)
            throw IndexError("vertex " + std::to_string(v) + " outside universe of size " +
                             std::to_string(size_));
    }

    void check_same_size(const VertexSet& other) const {
        if (size_ != other.size_)
            throw DimensionError("vertex set size mismatch: " + std::to_string(size_) + " vs " +
                                 std::to_string(other.size_));
    }

    std::vector<std::uint64_t> words_;
    std::size_t size_ = 0;
};

}  // namespace bitpath
