#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

namespace ohg {

// Largest universe the bit-mask representation supports. Counting and curve
// code never materializes sets and is not bound by this cap.
inline constexpr int kMaxDenseVertices = 128;

// A subset of the fixed universe {0, ..., n-1}, stored as a 128-bit mask.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe_size);
    VertexSet(int universe_size, std::initializer_list<int> members);
    VertexSet(int universe_size, std::span<const int> members);

    // Low `universe_size` bits of `mask` (only valid for universes <= 64).
    static VertexSet from_mask(int universe_size, std::uint64_t mask);
    static VertexSet full(int universe_size);

    int universe_size() const noexcept { return universe_; }

    bool contains(int v) const noexcept {
        if (v < 0 || v >= universe_) return false;
        return (words_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1U;
    }
    void insert(int v);
    void erase(int v);

    int size() const noexcept {
        return std::popcount(words_[0]) + std::popcount(words_[1]);
    }
    bool empty() const noexcept { return (words_[0] | words_[1]) == 0; }
    bool is_full() const noexcept { return size() == universe_; }

    // Smallest member, or -1 when empty.
    int min_element() const noexcept {
        if (words_[0] != 0) return std::countr_zero(words_[0]);
        if (words_[1] != 0) return 64 + std::countr_zero(words_[1]);
        return -1;
    }

    bool intersects(const VertexSet& other) const noexcept {
        return ((words_[0] & other.words_[0]) | (words_[1] & other.words_[1])) != 0;
    }

    VertexSet operator|(const VertexSet& other) const;
    VertexSet operator&(const VertexSet& other) const;
    VertexSet without(const VertexSet& other) const;

    std::vector<int> members() const;

    std::uint64_t low_word() const noexcept { return words_[0]; }
    std::uint64_t high_word() const noexcept { return words_[1]; }

    bool operator==(const VertexSet&) const = default;
    // Orders by universe, then by the mask read as a 128-bit integer.
    std::strong_ordering operator<=>(const VertexSet& other) const noexcept {
        if (auto c = universe_ <=> other.universe_; c != 0) return c;
        if (auto c = words_[1] <=> other.words_[1]; c != 0) return c;
        return words_[0] <=> other.words_[0];
    }

    // (size, sorted members) lexicographic order used for matrix rows.
    static bool size_lex_less(const VertexSet& a, const VertexSet& b);

private:
    int universe_ = 0;
    std::array<std::uint64_t, 2> words_{0, 0};
};

}  // namespace ohg

template <>
struct std::hash<ohg::VertexSet> {
    std::size_t operator()(const ohg::VertexSet& s) const noexcept {
        std::uint64_t h = s.low_word() * 0x9E3779B97F4A7C15ULL;
        h ^= s.high_word() + 0x632BE59BD9B4E019ULL + (h << 6) + (h >> 2);
        h ^= static_cast<std::uint64_t>(s.universe_size()) * 0xC2B2AE3D27D4EB4FULL;
        return static_cast<std::size_t>(h);
    }
};
