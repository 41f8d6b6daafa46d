#ifndef LSPACE_WORDS_HPP
#define LSPACE_WORDS_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace lspace {

// Symbols are interned per graph; a Word is a nonempty label sequence.
using Sym = int32_t;
using Word = std::vector<Sym>;

// Sorted-unique set of words, ordered by (length, lexicographic).
using WordSet = std::vector<Word>;

bool word_less(const Word& a, const Word& b);
void sort_unique(WordSet& ws);
WordSet set_union(const WordSet& a, const WordSet& b);
bool set_contains(const WordSet& ws, const Word& w);

// Least p >= 1 with w[i] == w[i+p] for all valid i; |w| when w has no
// proper border. Computed from the KMP border array.
int smallest_period(const Word& w);

template <typename CharSeq>
int smallest_period_str(const CharSeq& s) {
    Word w(s.begin(), s.end());
    return smallest_period(w);
}

}  // namespace lspace

#endif
