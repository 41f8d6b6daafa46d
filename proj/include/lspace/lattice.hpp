#ifndef LSPACE_LATTICE_HPP
#define LSPACE_LATTICE_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lspace/levels.hpp"
#include "lspace/verdict.hpp"

namespace lspace {

// The level-ell fragment of the accommodating set algebra: the closure of
// the word ranges r(beta), |beta| <= ell, under finite unions and
// intersections. Every element is a union of level-ell classes, so
// elements are kept as sorted class-id vectors.
class GeneratedLattice {
public:
    GeneratedLattice(LevelEngine& eng, int ell, size_t element_cap = 1u << 16);

    int level() const { return ell_; }
    bool capped() const { return capped_; }
    size_t size() const { return elements_.size(); }
    size_t generator_count() const { return generators_; }

    // Elements as class-id sets (canonical order). Includes the empty set.
    const std::set<std::vector<int>>& elements() const { return elements_; }

    // true / false / nullopt (= closure budget exceeded before the set was
    // seen, so membership is undecided)
    std::optional<bool> contains_class_set(const std::vector<int>& class_ids) const;
    std::optional<bool> contains_vertex_set(const LevelEngine& eng, const VSet& vs) const;

    // class-id decomposition of a vertex set, when it is class-aligned
    static std::optional<std::vector<int>> decompose(const LevelEngine& eng, int ell,
                                                     const VSet& vs);

private:
    int ell_;
    bool capped_ = false;
    size_t generators_ = 0;
    std::set<std::vector<int>> elements_;
};

// Smallest member of the level-ell algebra containing v: the intersection
// of all generating ranges that contain v.
VSet minimal_containing(LevelEngine& eng, int v, int ell);

// Membership of a vertex set in the level-ell algebra.
PropertyVerdict e0minus_membership(LevelEngine& eng, const VSet& A, int ell,
                                   size_t element_cap = 1u << 16);

// r(A,alpha) ∩ r(B,alpha) = r(A∩B,alpha) over the generated lattice and
// bounded word lengths; left-resolving graphs certify outright.
PropertyVerdict check_weakly_left_resolving(LevelEngine& eng, int ell_max, int word_len_max,
                                            size_t element_cap = 1u << 16);

PropertyVerdict check_set_finite(LevelEngine& eng, int ell_max);
PropertyVerdict check_receiver_set_finite(LevelEngine& eng, int ell_max);

}  // namespace lspace

#endif
