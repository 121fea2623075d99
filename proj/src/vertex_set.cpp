#include "ohg/vertex_set.hpp"

#include <algorithm>
#include <string>

#include "ohg/error.hpp"

namespace ohg {

namespace {

void check_universe(int n) {
    if (n < 1 || n > kMaxDenseVertices) {
        throw Error(ErrorCategory::ResourceLimit,
                    "vertex universe of size " + std::to_string(n) +
                        " outside the supported range [1, " +
                        std::to_string(kMaxDenseVertices) + "]");
    }
}

}  // namespace

VertexSet::VertexSet(int universe_size) : universe_(universe_size) {
    check_universe(universe_size);
}

VertexSet::VertexSet(int universe_size, std::initializer_list<int> members)
    : VertexSet(universe_size, std::span<const int>(members.begin(), members.size())) {}

VertexSet::VertexSet(int universe_size, std::span<const int> members)
    : VertexSet(universe_size) {
    for (int v : members) insert(v);
}

VertexSet VertexSet::from_mask(int universe_size, std::uint64_t mask) {
    VertexSet s(universe_size);
    if (universe_size < 64) mask &= (std::uint64_t{1} << universe_size) - 1;
    s.words_[0] = mask;
    return s;
}

VertexSet VertexSet::full(int universe_size) {
    VertexSet s(universe_size);
    for (int v = 0; v < universe_size; ++v) s.insert(v);
    return s;
}

void VertexSet::insert(int v) {
    if (v < 0 || v >= universe_) {
        throw Error(ErrorCategory::OutOfRange,
                    "vertex index " + std::to_string(v) + " outside universe of size " +
                        std::to_string(universe_));
    }
    words_[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63);
}

void VertexSet::erase(int v) {
    if (v < 0 || v >= universe_) return;
    words_[static_cast<std::size_t>(v) >> 6] &= ~(std::uint64_t{1} << (v & 63));
}

VertexSet VertexSet::operator|(const VertexSet& other) const {
    VertexSet r = *this;
    r.words_[0] |= other.words_[0];
    r.words_[1] |= other.words_[1];
    return r;
}

VertexSet VertexSet::operator&(const VertexSet& other) const {
    VertexSet r = *this;
    r.words_[0] &= other.words_[0];
    r.words_[1] &= other.words_[1];
    return r;
}

VertexSet VertexSet::without(const VertexSet& other) const {
    VertexSet r = *this;
    r.words_[0] &= ~other.words_[0];
    r.words_[1] &= ~other.words_[1];
    return r;
}

std::vector<int> VertexSet::members() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::size_t w = 0; w < 2; ++w) {
        std::uint64_t bits = words_[w];
        while (bits != 0) {
            out.push_back(static_cast<int>(w * 64) + std::countr_zero(bits));
            bits &= bits - 1;
        }
    }
    return out;
}

bool VertexSet::size_lex_less(const VertexSet& a, const VertexSet& b) {
    const int sa = a.size();
    const int sb = b.size();
    if (sa != sb) return sa < sb;
    const auto ma = a.members();
    const auto mb = b.members();
    return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
}

}  // namespace ohg
