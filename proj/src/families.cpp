#include "lspace/families.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "lspace/language.hpp"

namespace lspace {

LabelledGraph gen_even_e1() {
    return LabelledGraph::make({"u", "v"}, {{"u", "u", "1"}, {"u", "v", "0"}, {"v", "u", "0"}});
}

LabelledGraph gen_even_e2() {
    return LabelledGraph::make({"u", "v", "w"}, {{"u", "u", "1"},
                                                 {"u", "v", "0"},
                                                 {"v", "u", "0"},
                                                 {"u", "w", "1"},
                                                 {"w", "w", "0"}});
}

void GroupTable::check() const {
    const int n = static_cast<int>(elements.size());
    if (n == 0) throw GraphError("group table: no elements");
    if (static_cast<int>(product.size()) != n)
        throw GraphError("group table: wrong number of rows");
    for (const auto& row : product) {
        if (static_cast<int>(row.size()) != n) throw GraphError("group table: ragged row");
        for (int x : row)
            if (x < 0 || x >= n) throw GraphError("group table: entry out of range");
    }
    int identity = -1;
    for (int e = 0; e < n; ++e) {
        bool ok = true;
        for (int g = 0; g < n && ok; ++g)
            ok = product[e][g] == g && product[g][e] == g;
        if (ok) {
            identity = e;
            break;
        }
    }
    if (identity < 0) throw GraphError("group table: no identity element");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (product[product[a][b]][c] != product[a][product[b][c]])
                    throw GraphError("group table: not associative");
    for (int g = 0; g < n; ++g) {
        bool has_inverse = false;
        for (int h = 0; h < n; ++h)
            if (product[g][h] == identity && product[h][g] == identity) has_inverse = true;
        if (!has_inverse) throw GraphError("group table: missing inverse");
    }
}

GroupTable GroupTable::cyclic(int n) {
    if (n < 1) throw GraphError("cyclic group order must be >= 1");
    GroupTable t;
    for (int i = 0; i < n; ++i) t.elements.push_back(std::to_string(i));
    t.product.assign(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t.product[i][j] = (i + j) % n;
    return t;
}

LabelledGraph gen_cayley(const GroupTable& table, const std::vector<std::string>& generators) {
    table.check();
    if (generators.empty()) throw GraphError("generator set must be nonempty");
    std::set<std::string> seen;
    std::vector<int> gen_ids;
    for (const auto& gname : generators) {
        if (!seen.insert(gname).second)
            throw GraphError("generator set has repeated element '" + gname + "'");
        auto it = std::find(table.elements.begin(), table.elements.end(), gname);
        if (it == table.elements.end())
            throw GraphError("generator '" + gname + "' is not a group element");
        gen_ids.push_back(static_cast<int>(it - table.elements.begin()));
    }
    std::vector<std::tuple<std::string, std::string, std::string>> edges;
    for (size_t h = 0; h < table.elements.size(); ++h)
        for (int g : gen_ids)
            edges.emplace_back(table.elements[h], table.elements[table.product[h][g]],
                               table.elements[g]);
    LabelledGraph out = LabelledGraph::make(table.elements, edges);
    ValidationReport rep = validate(out);
    if (!rep.left_resolving)
        throw GraphError("cayley graph failed the left-resolving check");
    return out;
}

// ---- Dyck tree ----

namespace {

struct TreeAddr {
    int up = 0;
    std::string branches;  // digits '1'..'9'

    // descending from the spine via branch 1 lands back on the spine
    void canonicalize() {
        while (up >= 1 && !branches.empty() && branches.front() == '1') {
            --up;
            branches.erase(branches.begin());
        }
    }
    std::string id() const { return "g" + std::to_string(up) + "_" + branches; }

    static TreeAddr parse(const std::string& id) {
        if (id.size() < 3 || id[0] != 'g') throw GraphError("bad tree address '" + id + "'");
        size_t sep = id.find('_');
        if (sep == std::string::npos) throw GraphError("bad tree address '" + id + "'");
        TreeAddr a;
        a.up = std::stoi(id.substr(1, sep - 1));
        a.branches = id.substr(sep + 1);
        return a;
    }

    // (parent address, branch index of this vertex below it)
    std::pair<TreeAddr, int> parent() const {
        TreeAddr p = *this;
        if (!branches.empty()) {
            int b = branches.back() - '0';
            p.branches.pop_back();
            return {p, b};
        }
        ++p.up;
        return {p, 1};  // the spine descends through first children
    }

    TreeAddr child(int i) const {
        TreeAddr c = *this;
        c.branches.push_back(static_cast<char>('0' + i));
        c.canonicalize();
        return c;
    }
};

std::string open_label(int i) { return "a" + std::to_string(i); }
std::string close_label(int i) { return "b" + std::to_string(i); }

}  // namespace

DyckFamily::DyckFamily(int n) : n_(n) {
    if (n < 1 || n > 9) throw GraphError("bracket-pair count must be in 1..9");
}

std::vector<std::pair<std::string, std::string>> DyckFamily::out_edges(
    const std::string& v) const {
    TreeAddr a = TreeAddr::parse(v);
    std::vector<std::pair<std::string, std::string>> out;
    for (int i = 1; i <= n_; ++i) out.emplace_back(a.child(i).id(), open_label(i));
    auto [p, b] = a.parent();
    out.emplace_back(p.id(), close_label(b));
    return out;
}

std::vector<std::pair<std::string, std::string>> DyckFamily::in_edges(const std::string& v) const {
    TreeAddr a = TreeAddr::parse(v);
    std::vector<std::pair<std::string, std::string>> in;
    auto [p, b] = a.parent();
    in.emplace_back(p.id(), open_label(b));
    for (int i = 1; i <= n_; ++i) in.emplace_back(a.child(i).id(), close_label(i));
    return in;
}

Presentation gen_dyck(int n, int depth, size_t vertex_cap) {
    if (depth < 1) throw GraphError("window depth must be >= 1");
    return build_window(std::make_shared<DyckFamily>(n), depth, depth, vertex_cap);
}

// ---- Strip presentation ----

namespace {

int strip_index(const std::string& id) {
    if (id.size() < 2 || id[0] != 'v') throw GraphError("bad strip address '" + id + "'");
    return std::stoi(id.substr(1));
}

std::string strip_id(int n) { return "v" + std::to_string(n); }

}  // namespace

std::vector<std::pair<std::string, std::string>> StripFamily::out_edges(
    const std::string& v) const {
    int n = strip_index(v);
    std::vector<std::pair<std::string, std::string>> out;
    out.emplace_back(strip_id(n + 1), "b");
    out.emplace_back(strip_id(n - 1), "c");
    if (n == 0) out.emplace_back(strip_id(0), "a");
    return out;
}

std::vector<std::pair<std::string, std::string>> StripFamily::in_edges(
    const std::string& v) const {
    int n = strip_index(v);
    std::vector<std::pair<std::string, std::string>> in;
    in.emplace_back(strip_id(n - 1), "b");
    in.emplace_back(strip_id(n + 1), "c");
    if (n == 0) in.emplace_back(strip_id(0), "a");
    return in;
}

Presentation gen_strip_x(int width, int back_depth, int fwd_depth) {
    if (width < 2) throw GraphError("strip width must be >= 2");
    if (back_depth < 0) back_depth = (width + 2) / 2;
    if (fwd_depth < 0) fwd_depth = back_depth;

    std::vector<std::string> ids;
    std::vector<std::tuple<std::string, std::string, std::string>> edges;
    for (int n = -width; n <= width; ++n) ids.push_back(strip_id(n));
    for (int n = -width; n < width; ++n) {
        edges.emplace_back(strip_id(n), strip_id(n + 1), "b");
        edges.emplace_back(strip_id(n + 1), strip_id(n), "c");
    }
    edges.emplace_back(strip_id(0), strip_id(0), "a");

    Presentation p;
    p.graph = LabelledGraph::make(ids, edges);
    std::vector<bool> expanded(p.graph.vertex_count(), false);
    for (int n = -width + 1; n <= width - 1; ++n) expanded[p.graph.vertex(strip_id(n))] = true;
    compute_exactness(p.graph, expanded, p.back_exact, p.fwd_exact);
    p.back_depth = back_depth;
    p.fwd_depth = fwd_depth;
    p.family_tag = "strip_x";
    p.family = std::make_shared<StripFamily>();
    return p;
}

Presentation finite_presentation(LabelledGraph g) { return Presentation::finite(std::move(g)); }

// ---- Language oracles ----

bool oracle_even(const std::vector<std::string>& word) {
    for (const auto& s : word)
        if (s != "0" && s != "1") throw GraphError("foreign symbol '" + s + "'");
    for (size_t i = 0; i < word.size(); ++i) {
        if (word[i] != "1") continue;
        size_t j = i + 1;
        while (j < word.size() && word[j] == "0") ++j;
        if (j < word.size() && word[j] == "1" && (j - i - 1) % 2 == 1) return false;
        // scanning may resume at the closing 1
        if (j > i + 1) i = j - 1;
    }
    return true;
}

bool oracle_dyck(const std::vector<std::string>& word, int n) {
    std::vector<int> stack;
    for (const auto& s : word) {
        if (s.size() < 2 || (s[0] != 'a' && s[0] != 'b'))
            throw GraphError("foreign symbol '" + s + "'");
        int i = std::stoi(s.substr(1));
        if (i < 1 || i > n) throw GraphError("foreign symbol '" + s + "'");
        if (s[0] == 'a') {
            stack.push_back(i);
        } else {
            // unmatched closers are legal: they close brackets opened
            // before the word began
            if (!stack.empty()) {
                if (stack.back() != i) return false;
                stack.pop_back();
            }
        }
    }
    return true;
}

bool oracle_x(const std::vector<std::string>& word) {
    for (const auto& s : word)
        if (s != "a" && s != "b" && s != "c") throw GraphError("foreign symbol '" + s + "'");
    // between consecutive a's the counts of b and c must agree; the open
    // blocks before the first and after the last a are unconstrained
    int balance = 0;
    bool inside = false;
    for (const auto& s : word) {
        if (s == "a") {
            if (inside && balance != 0) return false;
            inside = true;
            balance = 0;
        } else if (inside) {
            balance += (s == "b") ? 1 : -1;
        }
    }
    return true;
}

PropertyVerdict cross_validate(const Presentation& p, const LanguageOracle& oracle, int n_max) {
    PropertyVerdict verdict;
    verdict.property = "cross-validate";
    verdict.bounds["n_max"] = n_max;
    const LabelledGraph& g = p.graph;

    std::vector<std::string> alphabet = g.symbols();
    std::vector<size_t> counts;
    for (int n = 1; n <= n_max; ++n) {
        WordSet generated = enumerate_words(g, n);
        std::set<std::vector<std::string>> from_graph;
        for (const Word& w : generated) {
            std::vector<std::string> syms;
            for (Sym a : w) syms.push_back(g.symbol_name(a));
            from_graph.insert(std::move(syms));
        }
        // walk all words over the alphabet of this length
        std::vector<std::string> current;
        size_t accepted = 0;
        std::function<bool(int)> walk = [&](int remaining) -> bool {
            if (remaining == 0) {
                bool oracle_in = oracle(current);
                bool graph_in = from_graph.count(current) > 0;
                if (oracle_in) ++accepted;
                if (oracle_in != graph_in) {
                    verdict.status = PropertyVerdict::Status::refuted;
                    verdict.witness["word"] = current;
                    verdict.witness["in_oracle"] = oracle_in;
                    verdict.witness["in_presentation"] = graph_in;
                    verdict.witness["length"] = n;
                    return false;
                }
                return true;
            }
            for (const auto& s : alphabet) {
                current.push_back(s);
                bool ok = walk(remaining - 1);
                current.pop_back();
                if (!ok) return false;
            }
            return true;
        };
        if (!walk(n)) return verdict;
        if (accepted != from_graph.size()) {
            verdict.status = PropertyVerdict::Status::refuted;
            verdict.witness["length"] = n;
            verdict.notes.push_back("word count mismatch");
            return verdict;
        }
        counts.push_back(accepted);
    }
    verdict.status = PropertyVerdict::Status::certified;
    verdict.exact = !p.is_window();
    verdict.witness["words_per_length"] = counts;
    if (p.is_window())
        verdict.notes.push_back("window: equality verified up to n_max within the window");
    return verdict;
}

LabelledGraph random_essential_graph(std::mt19937& rng, int max_vertices, int max_symbols) {
    std::uniform_int_distribution<int> nv(2, max_vertices);
    std::uniform_int_distribution<int> ns(1, max_symbols);
    const int n = nv(rng);
    const int k = ns(rng);
    std::vector<std::string> ids;
    for (int i = 0; i < n; ++i) ids.push_back("q" + std::to_string(i));
    std::vector<std::string> syms;
    for (int i = 0; i < k; ++i) syms.push_back(std::string(1, static_cast<char>('0' + i)));

    std::uniform_int_distribution<int> pick_v(0, n - 1);
    std::uniform_int_distribution<int> pick_s(0, k - 1);
    std::uniform_int_distribution<int> extra(0, 2 * n);
    std::set<std::tuple<std::string, std::string, std::string>> edges;
    int additional = extra(rng);
    for (int i = 0; i < additional; ++i)
        edges.insert({ids[pick_v(rng)], ids[pick_v(rng)], syms[pick_s(rng)]});
    // patch to essential
    auto has_out = [&](const std::string& v) {
        return std::any_of(edges.begin(), edges.end(),
                           [&](const auto& e) { return std::get<0>(e) == v; });
    };
    auto has_in = [&](const std::string& v) {
        return std::any_of(edges.begin(), edges.end(),
                           [&](const auto& e) { return std::get<1>(e) == v; });
    };
    for (const auto& v : ids) {
        if (!has_out(v)) edges.insert({v, ids[pick_v(rng)], syms[pick_s(rng)]});
        if (!has_in(v)) edges.insert({ids[pick_v(rng)], v, syms[pick_s(rng)]});
    }
    return LabelledGraph::make(
        ids, std::vector<std::tuple<std::string, std::string, std::string>>(edges.begin(),
                                                                            edges.end()));
}

std::pair<std::vector<std::string>, std::vector<std::pair<std::string, std::string>>>
random_essential_digraph(std::mt19937& rng, int max_vertices) {
    LabelledGraph g = random_essential_graph(rng, max_vertices, 3);
    std::vector<std::pair<std::string, std::string>> arcs;
    for (const Edge& e : g.edges())
        arcs.emplace_back(g.vertex_name(e.src), g.vertex_name(e.dst));
    return {g.vertex_ids(), arcs};
}

}  // namespace lspace
