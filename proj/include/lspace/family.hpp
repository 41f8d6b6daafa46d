#ifndef LSPACE_FAMILY_HPP
#define LSPACE_FAMILY_HPP

#include <limits>
#include <memory>
#include <string>
#include <vector>

#include "lspace/graph.hpp"

namespace lspace {

// An (possibly infinite) edge-labelled graph given by local rules. Vertex
// ids are stable strings; in_edges/out_edges must be exact and finite for
// every vertex.
class PresentationFamily {
public:
    virtual ~PresentationFamily() = default;
    virtual std::string tag() const = 0;
    virtual std::vector<std::string> base_vertices() const = 0;
    // (neighbour id, label)
    virtual std::vector<std::pair<std::string, std::string>> out_edges(const std::string& v) const = 0;
    virtual std::vector<std::pair<std::string, std::string>> in_edges(const std::string& v) const = 0;
};

constexpr int kExactEverywhere = std::numeric_limits<int>::max() / 2;

// A finite graph, or a finite exact fragment of a family. back_exact[v] is
// the largest r such that every in-path of length <= r at v lies inside the
// fragment (fwd_exact likewise for out-paths); both are kExactEverywhere
// for finite graphs. The core is where both reach the advertised depths.
class Presentation {
public:
    LabelledGraph graph;
    std::vector<int> back_exact;
    std::vector<int> fwd_exact;
    int back_depth = kExactEverywhere;
    int fwd_depth = kExactEverywhere;
    std::string family_tag;  // empty for finite graphs
    std::shared_ptr<const PresentationFamily> family;

    static Presentation finite(LabelledGraph g);

    bool is_window() const { return !family_tag.empty(); }
    bool in_core(int v) const {
        return back_exact[v] >= back_depth && fwd_exact[v] >= fwd_depth;
    }
    std::vector<int> core() const;
    // vertices whose labelled in-path data is exact up to length ell
    std::vector<int> back_universe(int ell) const;
    void require_back(int ell) const;  // throws when ell exceeds back_depth
};

struct WindowError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Expands the family around its base vertices to undirected radius
// back_depth + fwd_depth, then derives per-vertex exactness radii.
Presentation build_window(std::shared_ptr<const PresentationFamily> family,
                          int back_depth, int fwd_depth,
                          size_t vertex_cap = 1u << 20);

// Exactness radii for a pre-materialized vertex set: expanded[v] marks
// vertices whose in/out edge lists are complete in `g`.
void compute_exactness(const LabelledGraph& g, const std::vector<bool>& expanded,
                       std::vector<int>& back_exact, std::vector<int>& fwd_exact);

}  // namespace lspace

#endif
