#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "sumcont/common.hpp"

namespace sumcont {

/// Which element ordering an IndexSet is defined over.
enum class Universe : std::uint8_t { Ground, Sum };

inline const char* universe_name(Universe u) {
    return u == Universe::Ground ? "Y" : "Y+Y";
}

/**
 * A subset of a ground set or of its sum universe, stored as a bitset over
 * the universe's canonical element ordering. Bits at positions >= size()
 * are always zero, so word-wise comparison is a set comparison.
 */
class IndexSet {
public:
    IndexSet() = default;

    IndexSet(Universe tag, int universe_size)
        : tag_(tag), size_(universe_size),
          words_((static_cast<std::size_t>(universe_size) + 63) / 64, 0) {
        if (universe_size < 0) throw PreconditionError("IndexSet: negative universe size");
    }

    Universe tag() const { return tag_; }
    int universe_size() const { return size_; }

    bool test(int i) const {
        check_index(i);
        return (words_[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1u;
    }

    void set(int i) {
        check_index(i);
        words_[static_cast<std::size_t>(i) >> 6] |= std::uint64_t{1} << (i & 63);
    }

    void reset(int i) {
        check_index(i);
        words_[static_cast<std::size_t>(i) >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }

    int count() const {
        int c = 0;
        for (std::uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    bool empty() const {
        for (std::uint64_t w : words_) if (w) return false;
        return true;
    }

    bool is_subset_of(const IndexSet& other) const {
        check_same(other);
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & ~other.words_[k]) return false;
        return true;
    }

    IndexSet operator|(const IndexSet& o) const { return apply(o, [](std::uint64_t a, std::uint64_t b) { return a | b; }); }
    IndexSet operator&(const IndexSet& o) const { return apply(o, [](std::uint64_t a, std::uint64_t b) { return a & b; }); }
    /// Set difference: elements of *this not in o.
    IndexSet and_not(const IndexSet& o) const { return apply(o, [](std::uint64_t a, std::uint64_t b) { return a & ~b; }); }

    IndexSet& operator|=(const IndexSet& o) {
        check_same(o);
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
        return *this;
    }
    IndexSet& operator&=(const IndexSet& o) {
        check_same(o);
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
        return *this;
    }
    IndexSet& subtract(const IndexSet& o) {
        check_same(o);
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
        return *this;
    }

    int intersection_count(const IndexSet& o) const {
        check_same(o);
        int c = 0;
        for (std::size_t k = 0; k < words_.size(); ++k)
            c += std::popcount(words_[k] & o.words_[k]);
        return c;
    }

    bool operator==(const IndexSet& o) const {
        return tag_ == o.tag_ && size_ == o.size_ && words_ == o.words_;
    }
    bool operator!=(const IndexSet& o) const { return !(*this == o); }

    /// Total order usable as a deterministic map key.
    bool operator<(const IndexSet& o) const {
        if (tag_ != o.tag_) return tag_ < o.tag_;
        if (size_ != o.size_) return size_ < o.size_;
        return words_ < o.words_;
    }

    template <class Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            std::uint64_t w = words_[k];
            while (w) {
                int b = std::countr_zero(w);
                fn(static_cast<int>(k * 64) + b);
                w &= w - 1;
            }
        }
    }

    std::vector<int> indices() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for_each([&](int i) { out.push_back(i); });
        return out;
    }

    /// Smallest set index, or -1 when empty.
    int first() const {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k]) return static_cast<int>(k * 64) + std::countr_zero(words_[k]);
        return -1;
    }

    /// Hex rendering of the raw words, low word first. Used for fingerprint keys.
    std::string hex_key() const {
        static const char* digits = "0123456789abcdef";
        std::string s;
        s.reserve(words_.size() * 16);
        for (std::uint64_t w : words_)
            for (int shift = 0; shift < 64; shift += 4)
                s.push_back(digits[(w >> shift) & 0xF]);
        return s;
    }

private:
    void check_index(int i) const {
        if (i < 0 || i >= size_)
            throw PreconditionError("IndexSet: index " + std::to_string(i) +
                                    " outside universe of size " + std::to_string(size_));
    }
    void check_same(const IndexSet& o) const {
        if (tag_ != o.tag_ || size_ != o.size_)
            throw PreconditionError(std::string("IndexSet: universe mismatch (") +
                                    universe_name(tag_) + "/" + std::to_string(size_) + " vs " +
                                    universe_name(o.tag_) + "/" + std::to_string(o.size_) + ")");
    }
    template <class Op>
    IndexSet apply(const IndexSet& o, Op op) const {
        check_same(o);
        IndexSet r(tag_, size_);
        for (std::size_t k = 0; k < words_.size(); ++k) r.words_[k] = op(words_[k], o.words_[k]);
        return r;
    }

    Universe tag_ = Universe::Ground;
    int size_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace sumcont
