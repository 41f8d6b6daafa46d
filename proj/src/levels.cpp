#include "lspace/levels.hpp"

#include <algorithm>
#include <stdexcept>

namespace lspace {

LevelEngine::LevelEngine(const Presentation& p) : p_(&p) {}

int LevelEngine::intern(WordSet ws) {
    auto it = pool_index_.find(ws);
    if (it != pool_index_.end()) return it->second;
    int id = static_cast<int>(pool_.size());
    pool_.push_back(ws);
    pool_index_.emplace(std::move(ws), id);
    return id;
}

const LevelEngine::Level& LevelEngine::level(int ell) const {
    if (ell < 1 || ell > static_cast<int>(levels_.size()))
        throw std::out_of_range("level " + std::to_string(ell) + " not computed");
    return levels_[ell - 1];
}

void LevelEngine::ensure(int ell) {
    while (static_cast<int>(levels_.size()) < ell) build_next_level();
}

void LevelEngine::build_next_level() {
    const LabelledGraph& g = p_->graph;
    const int k = static_cast<int>(levels_.size()) + 1;
    Level lvl;
    lvl.universe = p_->back_universe(k);
    if (lvl.universe.empty())
        throw WindowError("window depth insufficient: no vertex has exact in-paths to length " +
                          std::to_string(k));
    lvl.wsid.assign(g.vertex_count(), -1);
    lvl.class_of.assign(g.vertex_count(), -1);

    for (int v : lvl.universe) {
        WordSet ws;
        if (k == 1) {
            for (const Edge& e : g.in_edges(v)) ws.push_back({e.label});
        } else {
            const Level& prev = levels_[k - 2];
            for (const Edge& e : g.in_edges(v)) {
                for (const Word& head : pool_[prev.wsid[e.src]]) {
                    Word w = head;
                    w.push_back(e.label);
                    ws.push_back(std::move(w));
                }
            }
        }
        sort_unique(ws);
        lvl.wsid[v] = intern(std::move(ws));
    }

    // group by (previous class, extended word set)
    std::map<std::pair<int, int>, std::vector<int>> groups;
    for (int v : lvl.universe) {
        int prev_class = (k == 1) ? -1 : levels_[k - 2].class_of[v];
        groups[{prev_class, lvl.wsid[v]}].push_back(v);
    }
    std::vector<ClassInfo> classes;
    for (auto& [key, members] : groups) {
        ClassInfo ci;
        ci.parent = key.first;
        ci.wsid = key.second;
        ci.members = members;  // universe order = ascending vertex index
        ci.least = members.front();
        classes.push_back(std::move(ci));
    }
    std::sort(classes.begin(), classes.end(), [&](const ClassInfo& a, const ClassInfo& b) {
        return g.vertex_name(a.least) < g.vertex_name(b.least);
    });
    for (size_t cid = 0; cid < classes.size(); ++cid)
        for (int v : classes[cid].members) lvl.class_of[v] = static_cast<int>(cid);
    lvl.classes = std::move(classes);
    levels_.push_back(std::move(lvl));
}

const WordSet& LevelEngine::in_words(int v, int k) const {
    const Level& lvl = level(k);
    if (lvl.wsid[v] < 0)
        throw WindowError("vertex '" + p_->graph.vertex_name(v) +
                          "' has no exact in-path data at length " + std::to_string(k));
    return pool_[lvl.wsid[v]];
}

WordSet LevelEngine::lambda_set(int v, int ell) const {
    WordSet out;
    for (int k = 1; k <= ell; ++k) out = set_union(out, in_words(v, k));
    return out;
}

int LevelEngine::class_id(int v, int ell) const { return level(ell).class_of[v]; }

std::string LevelEngine::class_name(int ell, int cid) const {
    return p_->graph.vertex_name(level(ell).classes.at(cid).least);
}

int LevelEngine::class_id_by_name(int ell, const std::string& name) const {
    const auto& cls = level(ell).classes;
    for (size_t i = 0; i < cls.size(); ++i)
        if (p_->graph.vertex_name(cls[i].least) == name) return static_cast<int>(i);
    auto v = p_->graph.find_vertex(name);
    if (v && level(ell).class_of[*v] >= 0) return level(ell).class_of[*v];
    throw GraphError("no class named or containing '" + name + "' at level " +
                     std::to_string(ell));
}

VSet LevelEngine::x_set(int v, int ell) const {
    const Level& lvl = level(ell);
    VSet out;
    for (int w : lvl.universe) {
        bool super = true;
        for (int k = 1; k <= ell && super; ++k) {
            const WordSet& need = in_words(v, k);
            const WordSet& have = in_words(w, k);
            super = std::includes(have.begin(), have.end(), need.begin(), need.end(), word_less);
        }
        if (super) out.push_back(w);
    }
    return out;
}

WordSet LevelEngine::y_set(int v, int ell) const {
    WordSet mine = lambda_set(v, ell);
    WordSet extra;
    for (int w : x_set(v, ell)) {
        for (const Word& word : lambda_set(w, ell))
            if (!set_contains(mine, word)) extra.push_back(word);
    }
    sort_unique(extra);
    return extra;
}

VSet LevelEngine::class_of_formula(int v, int ell) const {
    VSet x = x_set(v, ell);
    VSet ry;
    for (const Word& word : y_set(v, ell)) ry = vset_union(ry, range_in_universe(word, ell));
    return vset_difference(x, ry);
}

VSet LevelEngine::range_in_universe(const Word& w, int ell) const {
    if (static_cast<int>(w.size()) > ell)
        throw std::invalid_argument("word longer than the level");
    const Level& lvl = level(ell);
    const int k = static_cast<int>(w.size());
    VSet out;
    for (int v : lvl.universe)
        if (set_contains(in_words(v, k), w)) out.push_back(v);
    return out;
}

std::vector<int> LevelEngine::refinement_map(int ell) const {
    const auto& fine = level(ell + 1).classes;
    std::vector<int> map(fine.size(), -1);
    for (size_t j = 0; j < fine.size(); ++j) map[j] = level(ell).class_of[fine[j].least];
    return map;
}

ClassPartition omega(LevelEngine& eng, int ell) {
    const Presentation& p = eng.presentation();
    p.require_back(ell);
    eng.ensure(ell);
    ClassPartition part;
    part.level = ell;
    part.classes_in_universe = static_cast<int>(eng.classes(ell).size());
    const auto& cls = eng.classes(ell);
    for (size_t cid = 0; cid < cls.size(); ++cid) {
        ClassPartition::Entry entry;
        std::vector<int> core_members;
        for (int v : cls[cid].members)
            if (p.in_core(v)) core_members.push_back(v);
        if (core_members.empty()) continue;
        entry.name = p.graph.vertex_name(core_members.front());
        for (int v : core_members) entry.members.push_back(p.graph.vertex_name(v));
        entry.signature = eng.lambda_set(core_members.front(), ell);
        part.entries.push_back(std::move(entry));
    }
    return part;
}

std::pair<ClassPartition, std::vector<std::pair<std::string, std::string>>> refine(
    LevelEngine& eng, int ell) {
    ClassPartition coarse = omega(eng, ell);
    ClassPartition fine = omega(eng, ell + 1);
    const Presentation& p = eng.presentation();
    std::vector<std::pair<std::string, std::string>> map;
    for (const auto& entry : fine.entries) {
        int member = p.graph.vertex(entry.members.front());
        int coarse_cid = eng.class_id(member, ell);
        // report the core-restricted coarse name
        int least_core = -1;
        for (int v : eng.classes(ell)[coarse_cid].members)
            if (p.in_core(v)) {
                least_core = v;
                break;
            }
        map.emplace_back(entry.name,
                         least_core >= 0 ? p.graph.vertex_name(least_core)
                                         : eng.class_name(ell, coarse_cid));
    }
    (void)coarse;
    return {fine, map};
}

}  // namespace lspace
