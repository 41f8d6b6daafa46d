#ifndef LSPACE_FAMILIES_HPP
#define LSPACE_FAMILIES_HPP

#include <functional>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "lspace/family.hpp"
#include "lspace/graph.hpp"
#include "lspace/verdict.hpp"

namespace lspace {

// Two-vertex presentation of the even shift: a 1-loop at u and a 0-cycle
// between u and v.
LabelledGraph gen_even_e1();
// The same plus a tail vertex w with u -1-> w and a 0-loop at w.
LabelledGraph gen_even_e2();

// Finite group given by an explicit multiplication table.
struct GroupTable {
    std::vector<std::string> elements;
    std::vector<std::vector<int>> product;  // product[i][j] = index of e_i * e_j

    void check() const;  // identity, associativity, inverses
    static GroupTable cyclic(int n);
};

// Cayley graph of (G, S): one vertex per element, edges h -> h*g labelled g.
LabelledGraph gen_cayley(const GroupTable& table, const std::vector<std::string>& generators);

// Infinite N-ary tree in which every vertex emits N forward (opening)
// edges and one return (closing) edge per incoming opening edge. Vertices
// are addressed relative to a base vertex by how far up the spine and then
// which branches down.
class DyckFamily : public PresentationFamily {
public:
    explicit DyckFamily(int n);
    std::string tag() const override { return "dyck"; }
    std::vector<std::string> base_vertices() const override { return {"g0_"}; }
    std::vector<std::pair<std::string, std::string>> out_edges(const std::string& v) const override;
    std::vector<std::pair<std::string, std::string>> in_edges(const std::string& v) const override;
    int branching() const { return n_; }

private:
    int n_;
};

// Window of the tree presentation, exact to `depth` on both sides.
Presentation gen_dyck(int n, int depth, size_t vertex_cap = 1u << 20);

// Bi-infinite line with b to the right, c to the left, and an a-loop at
// the origin.
class StripFamily : public PresentationFamily {
public:
    std::string tag() const override { return "strip_x"; }
    std::vector<std::string> base_vertices() const override { return {"v0"}; }
    std::vector<std::pair<std::string, std::string>> out_edges(const std::string& v) const override;
    std::vector<std::pair<std::string, std::string>> in_edges(const std::string& v) const override;
};

// Vertices v_{-W}..v_W; depths default to ceil((W+1)/2) so that every core
// vertex carries an anchored singleton word within the exact range.
Presentation gen_strip_x(int width, int back_depth = -1, int fwd_depth = -1);

// Finite graphs wrapped for the same call surface.
Presentation finite_presentation(LabelledGraph g);

// Direct combinatorial language membership, independent of any graph.
using LanguageOracle = std::function<bool(const std::vector<std::string>&)>;

bool oracle_even(const std::vector<std::string>& word);
bool oracle_dyck(const std::vector<std::string>& word, int n);
bool oracle_x(const std::vector<std::string>& word);

// Set equality, length by length, between the words the presentation
// generates and the words the oracle accepts over the same alphabet.
PropertyVerdict cross_validate(const Presentation& p, const LanguageOracle& oracle, int n_max);

// Random essential labelled graph (every vertex emits and receives) on at
// most `max_vertices` vertices over at most `max_symbols` labels.
LabelledGraph random_essential_graph(std::mt19937& rng, int max_vertices, int max_symbols);
// Random essential directed graph handed to the trivial labelling.
std::pair<std::vector<std::string>, std::vector<std::pair<std::string, std::string>>>
random_essential_digraph(std::mt19937& rng, int max_vertices);

}  // namespace lspace

#endif
