#ifndef LSPACE_VSET_HPP
#define LSPACE_VSET_HPP

#include <algorithm>
#include <vector>

namespace lspace {

// Vertex sets as sorted unique index vectors.
using VSet = std::vector<int>;

inline void vset_normalize(VSet& s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
}

inline VSet vset_union(const VSet& a, const VSet& b) {
    VSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline VSet vset_intersect(const VSet& a, const VSet& b) {
    VSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline VSet vset_difference(const VSet& a, const VSet& b) {
    VSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline bool vset_subset(const VSet& a, const VSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline bool vset_contains(const VSet& s, int v) {
    return std::binary_search(s.begin(), s.end(), v);
}

}  // namespace lspace

#endif
