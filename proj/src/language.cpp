#include "lspace/language.hpp"

#include <stdexcept>

namespace lspace {

namespace {

// Per-vertex sets of emitted words, extended breadth-first one symbol at a
// time; out[k][v] holds the words of length k+1 emitted by v.
std::vector<std::vector<WordSet>> emitted_tables(const LabelledGraph& g, int n) {
    std::vector<std::vector<WordSet>> table;
    table.emplace_back(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        WordSet& ws = table[0][v];
        for (const Edge& e : g.out_edges(v)) ws.push_back({e.label});
        sort_unique(ws);
    }
    for (int k = 1; k < n; ++k) {
        table.emplace_back(g.vertex_count());
        for (int v = 0; v < g.vertex_count(); ++v) {
            WordSet& ws = table[k][v];
            for (const Edge& e : g.out_edges(v))
                for (const Word& tail : table[k - 1][e.dst]) {
                    Word w;
                    w.reserve(tail.size() + 1);
                    w.push_back(e.label);
                    w.insert(w.end(), tail.begin(), tail.end());
                    ws.push_back(std::move(w));
                }
            sort_unique(ws);
        }
    }
    return table;
}

}  // namespace

WordSet enumerate_words(const LabelledGraph& g, int n) {
    if (n < 1) throw std::invalid_argument("word length must be >= 1");
    auto table = emitted_tables(g, n);
    WordSet out;
    for (int v = 0; v < g.vertex_count(); ++v) out = set_union(out, table[n - 1][v]);
    return out;
}

WordSet enumerate_words_upto(const LabelledGraph& g, int ell) {
    if (ell < 1) throw std::invalid_argument("word length must be >= 1");
    auto table = emitted_tables(g, ell);
    WordSet out;
    for (int k = 0; k < ell; ++k)
        for (int v = 0; v < g.vertex_count(); ++v) out = set_union(out, table[k][v]);
    return out;
}

VSet relative_range(const LabelledGraph& g, const VSet& A, const Word& w) {
    VSet cur = A;
    for (Sym a : w) {
        VSet next;
        for (int v : cur)
            for (const Edge& e : g.out_edges(v))
                if (e.label == a) next.push_back(e.dst);
        vset_normalize(next);
        cur = std::move(next);
        if (cur.empty()) break;
    }
    return cur;
}

VSet source_set(const LabelledGraph& g, const Word& w) {
    VSet cur(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) cur[v] = v;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        VSet prev;
        for (int v : cur)
            for (const Edge& e : g.in_edges(v))
                if (e.label == *it) prev.push_back(e.src);
        vset_normalize(prev);
        cur = std::move(prev);
        if (cur.empty()) break;
    }
    return cur;
}

VSet range_set(const LabelledGraph& g, const Word& w) {
    VSet all(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) all[v] = v;
    return relative_range(g, all, w);
}

WordSet labels_from(const LabelledGraph& g, const VSet& A, int n) {
    if (n < 1) throw std::invalid_argument("word length must be >= 1");
    auto table = emitted_tables(g, n);
    WordSet out;
    for (int v : A) out = set_union(out, table[n - 1][v]);
    return out;
}

WordSet paths_into(const LabelledGraph& g, const VSet& A, int ell) {
    if (ell < 1) throw std::invalid_argument("word length must be >= 1");
    // received words, built backwards
    std::vector<WordSet> cur(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        for (const Edge& e : g.in_edges(v)) cur[v].push_back({e.label});
        sort_unique(cur[v]);
    }
    WordSet out;
    for (int v : A) out = set_union(out, cur[v]);
    for (int k = 2; k <= ell; ++k) {
        std::vector<WordSet> next(g.vertex_count());
        for (int v = 0; v < g.vertex_count(); ++v) {
            for (const Edge& e : g.in_edges(v))
                for (const Word& head : cur[e.src]) {
                    Word w = head;
                    w.push_back(e.label);
                    next[v].push_back(std::move(w));
                }
            sort_unique(next[v]);
        }
        cur = std::move(next);
        for (int v : A) out = set_union(out, cur[v]);
    }
    return out;
}

bool is_in_language(const LabelledGraph& g, const Word& w) {
    return !source_set(g, w).empty();
}

}  // namespace lspace
