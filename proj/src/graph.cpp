#include "lspace/graph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace lspace {

LabelledGraph LabelledGraph::make(
    std::vector<std::string> vertex_ids,
    const std::vector<std::tuple<std::string, std::string, std::string>>& edges) {
    if (vertex_ids.empty()) throw GraphError("empty graph: no vertices");
    std::sort(vertex_ids.begin(), vertex_ids.end());
    if (std::adjacent_find(vertex_ids.begin(), vertex_ids.end()) != vertex_ids.end())
        throw GraphError("duplicate vertex id");

    LabelledGraph g;
    g.vertex_ids_ = std::move(vertex_ids);

    std::set<std::string> used;
    for (const auto& [src, dst, label] : edges) used.insert(label);
    g.symbols_.assign(used.begin(), used.end());

    auto vid = [&](const std::string& id) {
        auto it = std::lower_bound(g.vertex_ids_.begin(), g.vertex_ids_.end(), id);
        if (it == g.vertex_ids_.end() || *it != id)
            throw GraphError("edge endpoint refers to unknown vertex id '" + id + "'");
        return static_cast<int>(it - g.vertex_ids_.begin());
    };
    for (const auto& [src, dst, label] : edges) {
        auto it = std::lower_bound(g.symbols_.begin(), g.symbols_.end(), label);
        g.edges_.push_back({vid(src), vid(dst), static_cast<Sym>(it - g.symbols_.begin())});
    }
    std::sort(g.edges_.begin(), g.edges_.end(), [](const Edge& a, const Edge& b) {
        return std::tie(a.src, a.label, a.dst) < std::tie(b.src, b.label, b.dst);
    });

    g.out_.assign(g.vertex_count(), {});
    g.in_.assign(g.vertex_count(), {});
    for (const Edge& e : g.edges_) {
        g.out_[e.src].push_back(e);
        g.in_[e.dst].push_back(e);
    }
    for (auto& v : g.in_)
        std::sort(v.begin(), v.end(), [](const Edge& a, const Edge& b) {
            return std::tie(a.label, a.src) < std::tie(b.label, b.src);
        });
    return g;
}

std::optional<int> LabelledGraph::find_vertex(const std::string& id) const {
    auto it = std::lower_bound(vertex_ids_.begin(), vertex_ids_.end(), id);
    if (it == vertex_ids_.end() || *it != id) return std::nullopt;
    return static_cast<int>(it - vertex_ids_.begin());
}

std::optional<Sym> LabelledGraph::find_symbol(const std::string& s) const {
    auto it = std::lower_bound(symbols_.begin(), symbols_.end(), s);
    if (it == symbols_.end() || *it != s) return std::nullopt;
    return static_cast<Sym>(it - symbols_.begin());
}

int LabelledGraph::vertex(const std::string& id) const {
    auto v = find_vertex(id);
    if (!v) throw GraphError("unknown vertex id '" + id + "'");
    return *v;
}

Sym LabelledGraph::symbol(const std::string& s) const {
    auto a = find_symbol(s);
    if (!a) throw GraphError("unknown symbol '" + s + "'");
    return *a;
}

std::string LabelledGraph::render_word(const Word& w) const {
    bool compact = std::all_of(symbols_.begin(), symbols_.end(),
                               [](const std::string& s) { return s.size() == 1; });
    std::string out;
    for (size_t i = 0; i < w.size(); ++i) {
        if (!compact && i) out += '.';
        out += symbol_name(w[i]);
    }
    return out;
}

Word LabelledGraph::parse_word(const std::string& text) const {
    if (text.empty()) throw GraphError("empty word");
    Word w;
    if (text.find('.') != std::string::npos) {
        std::stringstream ss(text);
        std::string tok;
        while (std::getline(ss, tok, '.')) w.push_back(symbol(tok));
        return w;
    }
    bool compact = std::all_of(symbols_.begin(), symbols_.end(),
                               [](const std::string& s) { return s.size() == 1; });
    if (compact) {
        for (char c : text) w.push_back(symbol(std::string(1, c)));
        return w;
    }
    w.push_back(symbol(text));
    return w;
}

Word LabelledGraph::parse_word(const std::vector<std::string>& syms) const {
    if (syms.empty()) throw GraphError("empty word");
    Word w;
    for (const auto& s : syms) w.push_back(symbol(s));
    return w;
}

ValidationReport validate(const LabelledGraph& g) {
    ValidationReport rep;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.in_edges(v).empty() || g.out_edges(v).empty())
            rep.non_essential_vertices.push_back(g.vertex_name(v));
    rep.essential = rep.non_essential_vertices.empty();

    rep.left_resolving = true;
    for (int v = 0; v < g.vertex_count() && rep.left_resolving; ++v) {
        const auto& in = g.in_edges(v);  // sorted by label
        for (size_t i = 1; i < in.size(); ++i) {
            if (in[i].label == in[i - 1].label) {
                rep.left_resolving = false;
                rep.left_resolving_witness = {g.vertex_name(v), g.symbol_name(in[i].label)};
                break;
            }
        }
    }
    return rep;
}

LabelledGraph trivial_labelling(const std::vector<std::string>& vertex_ids,
                                const std::vector<std::pair<std::string, std::string>>& arcs) {
    std::vector<std::tuple<std::string, std::string, std::string>> edges;
    int width = 1;
    for (size_t n = arcs.size(); n >= 10; n /= 10) ++width;
    for (size_t i = 0; i < arcs.size(); ++i) {
        std::string id = std::to_string(i);
        id.insert(0, width - id.size(), '0');  // zero-pad so symbol order matches edge order
        edges.emplace_back(arcs[i].first, arcs[i].second, "e" + id);
    }
    return LabelledGraph::make(vertex_ids, edges);
}

std::string to_dot(const LabelledGraph& g) {
    std::ostringstream os;
    os << "digraph labelled_graph {\n  rankdir=LR;\n";
    for (const auto& id : g.vertex_ids()) os << "  \"" << id << "\";\n";
    for (const Edge& e : g.edges())
        os << "  \"" << g.vertex_name(e.src) << "\" -> \"" << g.vertex_name(e.dst)
           << "\" [label=\"" << g.symbol_name(e.label) << "\"];\n";
    os << "}\n";
    return os.str();
}

}  // namespace lspace
