#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace graded {

using ElemId = int;

// Subset of a carrier with at most 64 elements, one bit per element id.
using ElemSet = std::uint64_t;

inline constexpr int kMaxOrder = 64;

inline constexpr ElemSet set_empty() { return 0; }
inline constexpr ElemSet set_single(ElemId x) { return ElemSet{1} << x; }
inline constexpr ElemSet set_full(int order) {
    return order >= kMaxOrder ? ~ElemSet{0} : (ElemSet{1} << order) - 1;
}
inline constexpr bool set_contains(ElemSet s, ElemId x) { return (s >> x) & 1; }
inline constexpr ElemSet set_with(ElemSet s, ElemId x) { return s | set_single(x); }
inline constexpr int set_size(ElemSet s) { return std::popcount(s); }

inline std::vector<ElemId> set_elements(ElemSet s) {
    std::vector<ElemId> out;
    out.reserve(static_cast<std::size_t>(set_size(s)));
    while (s) {
        out.push_back(std::countr_zero(s));
        s &= s - 1;
    }
    return out;
}

inline ElemSet set_of(const std::vector<ElemId>& xs) {
    ElemSet s = 0;
    for (ElemId x : xs) s |= set_single(x);
    return s;
}

template <typename F>
inline void set_for_each(ElemSet s, F&& f) {
    while (s) {
        f(std::countr_zero(s));
        s &= s - 1;
    }
}

// Orders sets by cardinality, then lexicographically on the sorted id lists.
inline bool set_less(ElemSet a, ElemSet b) {
    int ca = set_size(a), cb = set_size(b);
    if (ca != cb) return ca < cb;
    while (a && b) {
        int xa = std::countr_zero(a), xb = std::countr_zero(b);
        if (xa != xb) return xa < xb;
        a &= a - 1;
        b &= b - 1;
    }
    return false;
}

}  // namespace graded
