#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace blowup {

using Vertex = int;
using VertexList = std::vector<Vertex>;

/// Fixed-width dynamic bitset over vertex ids 0..size-1.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    static Bitset from_list(std::size_t size, const VertexList& vertices)
    {
        Bitset b(size);
        for (Vertex v : vertices) b.set(v);
        return b;
    }

    std::size_t size() const { return size_; }

    bool test(Vertex v) const { return (words_[v >> 6] >> (v & 63)) & 1U; }
    void set(Vertex v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
    void reset(Vertex v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
    void clear()
    {
        for (auto& w : words_) w = 0;
    }
    void fill()
    {
        for (auto& w : words_) w = ~std::uint64_t{0};
        trim();
    }

    std::size_t count() const
    {
        std::size_t c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }
    bool any() const
    {
        for (auto w : words_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    std::size_t intersect_count(const Bitset& o) const
    {
        std::size_t c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i) c += std::popcount(words_[i] & o.words_[i]);
        return c;
    }
    bool intersects(const Bitset& o) const
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }
    bool is_subset_of(const Bitset& o) const
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    Bitset& operator&=(const Bitset& o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    Bitset& operator|=(const Bitset& o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    Bitset& subtract(const Bitset& o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }
    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend bool operator==(const Bitset&, const Bitset&) = default;

    template <typename F>
    void for_each(F&& f) const
    {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w) {
                int bit = std::countr_zero(w);
                f(static_cast<Vertex>(i * 64 + bit));
                w &= w - 1;
            }
        }
    }

    /// Members in ascending order.
    VertexList to_list() const
    {
        VertexList out;
        out.reserve(count());
        for_each([&](Vertex v) { out.push_back(v); });
        return out;
    }

    const std::vector<std::uint64_t>& words() const { return words_; }

private:
    void trim()
    {
        if (size_ % 64 && !words_.empty()) words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
    }

    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace blowup
