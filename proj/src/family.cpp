#include "lspace/family.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace lspace {

Presentation Presentation::finite(LabelledGraph g) {
    Presentation p;
    p.graph = std::move(g);
    p.back_exact.assign(p.graph.vertex_count(), kExactEverywhere);
    p.fwd_exact.assign(p.graph.vertex_count(), kExactEverywhere);
    return p;
}

std::vector<int> Presentation::core() const {
    std::vector<int> out;
    for (int v = 0; v < graph.vertex_count(); ++v)
        if (in_core(v)) out.push_back(v);
    return out;
}

std::vector<int> Presentation::back_universe(int ell) const {
    std::vector<int> out;
    for (int v = 0; v < graph.vertex_count(); ++v)
        if (back_exact[v] >= ell) out.push_back(v);
    return out;
}

void Presentation::require_back(int ell) const {
    if (ell > back_depth)
        throw WindowError("window depth insufficient: level " + std::to_string(ell) +
                          " exceeds back depth " + std::to_string(back_depth));
}

namespace {

// r[v] >= k iff v has complete edge lists and every predecessor (under
// `neighbours`) satisfies r >= k-1; unexpanded vertices pin the fixpoint.
void relax_exactness(int n, const std::vector<bool>& expanded,
                     const std::vector<std::vector<int>>& neighbours, std::vector<int>& r) {
    r.assign(n, 0);
    for (int v = 0; v < n; ++v) r[v] = expanded[v] ? kExactEverywhere : 0;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < n; ++v) {
            if (!expanded[v]) continue;
            int best = kExactEverywhere;
            for (int u : neighbours[v])
                best = std::min(best, r[u] >= kExactEverywhere ? kExactEverywhere : r[u] + 1);
            if (best < r[v]) {
                r[v] = best;
                changed = true;
            }
        }
    }
}

}  // namespace

void compute_exactness(const LabelledGraph& g, const std::vector<bool>& expanded,
                       std::vector<int>& back_exact, std::vector<int>& fwd_exact) {
    const int n = g.vertex_count();
    std::vector<std::vector<int>> preds(n), succs(n);
    for (int v = 0; v < n; ++v) {
        for (const Edge& e : g.in_edges(v)) preds[v].push_back(e.src);
        for (const Edge& e : g.out_edges(v)) succs[v].push_back(e.dst);
    }
    relax_exactness(n, expanded, preds, back_exact);
    relax_exactness(n, expanded, succs, fwd_exact);
}

Presentation build_window(std::shared_ptr<const PresentationFamily> family,
                          int back_depth, int fwd_depth, size_t vertex_cap) {
    if (back_depth < 0 || fwd_depth < 0) throw WindowError("window depths must be nonnegative");
    const int radius = back_depth + fwd_depth;

    std::map<std::string, int> dist;
    std::deque<std::string> queue;
    for (const auto& b : family->base_vertices()) {
        dist[b] = 0;
        queue.push_back(b);
    }
    std::set<std::tuple<std::string, std::string, std::string>> edge_set;
    std::set<std::string> expanded_ids;
    while (!queue.empty()) {
        std::string v = queue.front();
        queue.pop_front();
        int d = dist.at(v);
        if (d > radius) continue;
        expanded_ids.insert(v);
        auto visit = [&](const std::string& u) {
            if (!dist.count(u)) {
                dist[u] = d + 1;
                if (dist.size() > vertex_cap)
                    throw WindowError("window expansion budget exceeded (vertex cap " +
                                      std::to_string(vertex_cap) + ")");
                queue.push_back(u);
            }
        };
        for (const auto& [u, label] : family->out_edges(v)) {
            edge_set.insert({v, u, label});
            visit(u);
        }
        for (const auto& [u, label] : family->in_edges(v)) {
            edge_set.insert({u, v, label});
            visit(u);
        }
    }

    std::vector<std::string> ids;
    ids.reserve(dist.size());
    for (const auto& [id, d] : dist) ids.push_back(id);
    std::vector<std::tuple<std::string, std::string, std::string>> edges(edge_set.begin(),
                                                                         edge_set.end());
    Presentation p;
    p.graph = LabelledGraph::make(ids, edges);
    std::vector<bool> expanded(p.graph.vertex_count(), false);
    for (const auto& id : expanded_ids) expanded[p.graph.vertex(id)] = true;
    compute_exactness(p.graph, expanded, p.back_exact, p.fwd_exact);
    p.back_depth = back_depth;
    p.fwd_depth = fwd_depth;
    p.family_tag = family->tag();
    p.family = std::move(family);
    return p;
}

}  // namespace lspace
