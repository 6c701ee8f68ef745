#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <vector>

namespace dismantle {

// Hard limit on graph order: vertex sets are single 64-bit words.
inline constexpr int kMaxVertices = 64;

// A subset of the vertices of some graph, as a bit mask. Which graph it
// belongs to is carried by the context (the Graph or Engine it is used with).
class VertexSet {
public:
    class iterator {
    public:
        using value_type = int;
        using difference_type = std::ptrdiff_t;

        iterator() = default;
        explicit iterator(std::uint64_t bits) : bits_(bits) {}

        int operator*() const { return std::countr_zero(bits_); }
        iterator & operator++() { bits_ &= bits_ - 1; return *this; }
        iterator operator++(int) { auto t = *this; ++*this; return t; }
        bool operator==(const iterator &) const = default;

    private:
        std::uint64_t bits_ = 0;
    };

    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

    static constexpr VertexSet full(int n) {
        return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }
    static constexpr VertexSet single(int v) { return VertexSet(std::uint64_t{1} << v); }

    template <typename Range>
    static VertexSet of(const Range & vs) {
        VertexSet s;
        for (int v : vs)
            s.insert(v);
        return s;
    }
    static VertexSet of(std::initializer_list<int> vs) {
        VertexSet s;
        for (int v : vs)
            s.insert(v);
        return s;
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool contains(int v) const { return (bits_ >> v) & 1; }
    constexpr void insert(int v) { bits_ |= std::uint64_t{1} << v; }
    constexpr void erase(int v) { bits_ &= ~(std::uint64_t{1} << v); }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool empty() const { return bits_ == 0; }
    // smallest member; undefined on the empty set
    constexpr int first() const { return std::countr_zero(bits_); }
    constexpr bool is_subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
    constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }

    constexpr VertexSet with(int v) const { auto s = *this; s.insert(v); return s; }
    constexpr VertexSet without(int v) const { auto s = *this; s.erase(v); return s; }

    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
    friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
    VertexSet & operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
    VertexSet & operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
    VertexSet & operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }

    friend constexpr bool operator==(VertexSet, VertexSet) = default;

    iterator begin() const { return iterator(bits_); }
    iterator end() const { return iterator(0); }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(size());
        for (int v : *this)
            out.push_back(v);
        return out;
    }

    // ascending lexicographic comparison of the sorted member lists
    static bool lex_less(VertexSet a, VertexSet b);

private:
    std::uint64_t bits_ = 0;
};

inline bool VertexSet::lex_less(VertexSet a, VertexSet b) {
    auto x = a.bits_, y = b.bits_;
    while (x && y) {
        int i = std::countr_zero(x), j = std::countr_zero(y);
        if (i != j)
            return i < j;
        x &= x - 1;
        y &= y - 1;
    }
    return !x && y;
}

} // namespace dismantle

template <>
struct std::hash<dismantle::VertexSet> {
    std::size_t operator()(dismantle::VertexSet s) const noexcept {
        return std::hash<std::uint64_t>{}(s.bits());
    }
};
