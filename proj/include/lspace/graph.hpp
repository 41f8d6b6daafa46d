#ifndef LSPACE_GRAPH_HPP
#define LSPACE_GRAPH_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lspace/words.hpp"

namespace lspace {

struct GraphError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Edge {
    int src;
    int dst;
    Sym label;
    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Finite directed multigraph with edge labels over a finite alphabet.
// Vertices and symbols are kept in lexicographic order so that every
// derived report (partitions, matrices, exports) is deterministic.
class LabelledGraph {
public:
    LabelledGraph() = default;

    // `edges` as (src id, dst id, label); the alphabet is exactly the set
    // of labels in use.
    static LabelledGraph make(std::vector<std::string> vertex_ids,
                              const std::vector<std::tuple<std::string, std::string, std::string>>& edges);

    int vertex_count() const { return static_cast<int>(vertex_ids_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int alphabet_size() const { return static_cast<int>(symbols_.size()); }

    const std::vector<std::string>& vertex_ids() const { return vertex_ids_; }
    const std::vector<std::string>& symbols() const { return symbols_; }
    const std::vector<Edge>& edges() const { return edges_; }

    const std::string& vertex_name(int v) const { return vertex_ids_.at(v); }
    const std::string& symbol_name(Sym a) const { return symbols_.at(a); }

    std::optional<int> find_vertex(const std::string& id) const;
    std::optional<Sym> find_symbol(const std::string& s) const;
    int vertex(const std::string& id) const;
    Sym symbol(const std::string& s) const;

    const std::vector<Edge>& out_edges(int v) const { return out_.at(v); }
    const std::vector<Edge>& in_edges(int v) const { return in_.at(v); }

    std::string render_word(const Word& w) const;
    Word parse_word(const std::string& text) const;
    Word parse_word(const std::vector<std::string>& syms) const;

private:
    std::vector<std::string> vertex_ids_;  // sorted
    std::vector<std::string> symbols_;     // sorted
    std::vector<Edge> edges_;              // sorted (src, label, dst)
    std::vector<std::vector<Edge>> out_;
    std::vector<std::vector<Edge>> in_;
};

struct ValidationReport {
    bool essential = false;
    std::vector<std::string> non_essential_vertices;  // missing in- or out-edges
    bool left_resolving = false;
    // witness: vertex receiving two equally labelled edges, with the label
    std::optional<std::pair<std::string, std::string>> left_resolving_witness;
    bool onto = true;  // alphabet equals the labels in use (by construction)
};

ValidationReport validate(const LabelledGraph& g);

// Each edge gets its own symbol ("e0", "e1", ...); singleton classes at
// every level, so the graph-algebra picture is recovered exactly.
LabelledGraph trivial_labelling(const std::vector<std::string>& vertex_ids,
                                const std::vector<std::pair<std::string, std::string>>& arcs);

std::string to_dot(const LabelledGraph& g);

}  // namespace lspace

#endif
