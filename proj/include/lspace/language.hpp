#ifndef LSPACE_LANGUAGE_HPP
#define LSPACE_LANGUAGE_HPP

#include "lspace/graph.hpp"
#include "lspace/vset.hpp"
#include "lspace/words.hpp"

namespace lspace {

// Labelled-path combinatorics on a finite graph (or window fragment; every
// path of the fragment is a path of the presented object, so results are
// exact subsets and exact on ranges the window covers).

// All labelled words of length exactly n.
WordSet enumerate_words(const LabelledGraph& g, int n);
// Lengths 1..ell, cumulatively.
WordSet enumerate_words_upto(const LabelledGraph& g, int ell);

// Endpoints of paths labelled w starting inside A.
VSet relative_range(const LabelledGraph& g, const VSet& A, const Word& w);

// Start / end vertex sets of the representatives of w.
VSet source_set(const LabelledGraph& g, const Word& w);
VSet range_set(const LabelledGraph& g, const Word& w);

// L^n_A: words of length n emitted from A.
WordSet labels_from(const LabelledGraph& g, const VSet& A, int n);

// Words of length <= ell with a representative ending in A.
WordSet paths_into(const LabelledGraph& g, const VSet& A, int ell);

bool is_in_language(const LabelledGraph& g, const Word& w);

}  // namespace lspace

#endif
