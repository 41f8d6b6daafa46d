#include "lspace/words.hpp"

#include <algorithm>
#include <stdexcept>

namespace lspace {

bool word_less(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

void sort_unique(WordSet& ws) {
    std::sort(ws.begin(), ws.end(), word_less);
    ws.erase(std::unique(ws.begin(), ws.end()), ws.end());
}

WordSet set_union(const WordSet& a, const WordSet& b) {
    WordSet out;
    out.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out), word_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool set_contains(const WordSet& ws, const Word& w) {
    return std::binary_search(ws.begin(), ws.end(), w, word_less);
}

int smallest_period(const Word& w) {
    if (w.empty()) throw std::invalid_argument("smallest_period: empty word");
    const int n = static_cast<int>(w.size());
    std::vector<int> border(n, 0);
    int k = 0;
    for (int i = 1; i < n; ++i) {
        while (k > 0 && w[i] != w[k]) k = border[k - 1];
        if (w[i] == w[k]) ++k;
        border[i] = k;
    }
    return n - border[n - 1];
}

}  // namespace lspace
