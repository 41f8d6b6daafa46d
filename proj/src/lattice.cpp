#include "lspace/lattice.hpp"

#include <algorithm>
#include <deque>

#include "lspace/language.hpp"

namespace lspace {

namespace {

std::vector<int> ids_union(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::vector<int> ids_intersect(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace

std::optional<std::vector<int>> GeneratedLattice::decompose(const LevelEngine& eng, int ell,
                                                            const VSet& vs) {
    std::vector<int> ids;
    for (int v : vs) {
        int cid = eng.class_id(v, ell);
        if (cid < 0) return std::nullopt;
        ids.push_back(cid);
    }
    vset_normalize(ids);
    // class-aligned iff the union of the named classes gives back vs
    size_t total = 0;
    for (int cid : ids) total += eng.classes(ell)[cid].members.size();
    if (total != vs.size()) return std::nullopt;
    return ids;
}

GeneratedLattice::GeneratedLattice(LevelEngine& eng, int ell, size_t element_cap) : ell_(ell) {
    eng.ensure(ell);

    // generators: ranges of every received word of length <= ell, as
    // class-id sets (ranges are unions of classes at this level)
    std::set<std::vector<int>> gens;
    std::map<Word, std::vector<int>> by_word;
    for (int k = 1; k <= ell; ++k) {
        for (int v : eng.universe(ell)) {
            for (const Word& w : eng.in_words(v, k)) {
                auto [it, fresh] = by_word.try_emplace(w);
                if (fresh) it->second.reserve(4);
                it->second.push_back(eng.class_id(v, ell));
            }
        }
    }
    for (auto& [w, ids] : by_word) {
        vset_normalize(ids);
        gens.insert(ids);
    }
    generators_ = gens.size();

    elements_.insert({});  // empty set (empty union)
    std::deque<std::vector<int>> fresh(gens.begin(), gens.end());
    for (const auto& g : gens) elements_.insert(g);
    while (!fresh.empty()) {
        if (elements_.size() > element_cap) {
            capped_ = true;
            break;
        }
        std::vector<int> a = std::move(fresh.front());
        fresh.pop_front();
        std::vector<std::vector<int>> produced;
        for (const auto& b : elements_) {
            produced.push_back(ids_union(a, b));
            produced.push_back(ids_intersect(a, b));
        }
        for (auto& c : produced)
            if (elements_.insert(c).second) fresh.push_back(std::move(c));
    }
}

std::optional<bool> GeneratedLattice::contains_class_set(const std::vector<int>& class_ids) const {
    if (elements_.count(class_ids)) return true;
    if (capped_) return std::nullopt;
    return false;
}

std::optional<bool> GeneratedLattice::contains_vertex_set(const LevelEngine& eng,
                                                          const VSet& vs) const {
    auto ids = decompose(eng, ell_, vs);
    if (!ids) return false;  // not a union of classes, so not in the algebra
    return contains_class_set(*ids);
}

VSet minimal_containing(LevelEngine& eng, int v, int ell) {
    eng.ensure(ell);
    // every generator containing v is a range of a word v receives, and
    // their intersection is exactly the common-receiver set of v
    return eng.x_set(v, ell);
}

PropertyVerdict e0minus_membership(LevelEngine& eng, const VSet& A, int ell, size_t element_cap) {
    PropertyVerdict verdict;
    verdict.property = "generated-set-membership";
    verdict.bounds["ell"] = ell;
    verdict.bounds["element_cap"] = element_cap;
    GeneratedLattice lat(eng, ell, element_cap);
    verdict.bounds["lattice_size"] = lat.size();
    verdict.bounds["lattice_capped"] = lat.capped();
    auto r = lat.contains_vertex_set(eng, A);
    std::vector<std::string> names;
    for (int v : A) names.push_back(eng.graph().vertex_name(v));
    verdict.witness["set"] = names;
    if (!r.has_value()) {
        verdict.status = PropertyVerdict::Status::inconclusive;
        verdict.notes.push_back("closure budget exceeded; partial lattice size reported");
        return verdict;
    }
    verdict.status = *r ? PropertyVerdict::Status::certified : PropertyVerdict::Status::refuted;
    verdict.exact = !eng.presentation().is_window();
    if (auto ids = GeneratedLattice::decompose(eng, ell, A)) {
        std::vector<std::string> cls;
        for (int cid : *ids) cls.push_back(eng.class_name(ell, cid));
        verdict.witness["class_decomposition"] = cls;
    } else {
        verdict.witness["class_decomposition"] = nullptr;
        verdict.notes.push_back("set is not a union of level classes");
    }
    return verdict;
}

PropertyVerdict check_weakly_left_resolving(LevelEngine& eng, int ell_max, int word_len_max,
                                            size_t element_cap) {
    PropertyVerdict verdict;
    verdict.property = "weakly-left-resolving";
    verdict.bounds["ell_max"] = ell_max;
    verdict.bounds["word_len_max"] = word_len_max;
    const LabelledGraph& g = eng.graph();

    ValidationReport rep = validate(g);
    if (rep.left_resolving) {
        verdict.status = PropertyVerdict::Status::certified;
        verdict.exact = true;
        verdict.witness["argument"] =
            "left-resolving, hence weakly left-resolving for every accommodating family";
        return verdict;
    }

    eng.ensure(ell_max);
    GeneratedLattice lat(eng, ell_max, element_cap);
    verdict.bounds["lattice_size"] = lat.size();
    if (lat.capped()) {
        verdict.status = PropertyVerdict::Status::inconclusive;
        verdict.notes.push_back("lattice closure budget exceeded");
        return verdict;
    }

    auto to_vset = [&](const std::vector<int>& ids) {
        VSet out;
        for (int cid : ids)
            for (int v : eng.classes(ell_max)[cid].members) out.push_back(v);
        vset_normalize(out);
        return out;
    };
    WordSet words = enumerate_words_upto(g, word_len_max);
    for (const auto& ids_a : lat.elements()) {
        VSet A = to_vset(ids_a);
        for (const auto& ids_b : lat.elements()) {
            VSet B = to_vset(ids_b);
            VSet AB = vset_intersect(A, B);
            for (const Word& w : words) {
                VSet lhs = vset_intersect(relative_range(g, A, w), relative_range(g, B, w));
                VSet rhs = relative_range(g, AB, w);
                if (lhs != rhs) {
                    verdict.status = PropertyVerdict::Status::refuted;
                    verdict.exact = true;
                    std::vector<std::string> an, bn;
                    for (int v : A) an.push_back(g.vertex_name(v));
                    for (int v : B) bn.push_back(g.vertex_name(v));
                    verdict.witness["A"] = an;
                    verdict.witness["B"] = bn;
                    verdict.witness["word"] = g.render_word(w);
                    return verdict;
                }
            }
        }
    }
    verdict.status = PropertyVerdict::Status::certified;
    verdict.exact = false;
    verdict.notes.push_back("identity verified over the generated lattice up to the bounds");
    return verdict;
}

PropertyVerdict check_set_finite(LevelEngine& eng, int ell_max) {
    PropertyVerdict verdict;
    verdict.property = "set-finite";
    verdict.bounds["ell_max"] = ell_max;
    eng.ensure(ell_max);
    const LabelledGraph& g = eng.graph();
    size_t max_l1 = 0;
    for (const auto& ci : eng.classes(ell_max)) {
        WordSet l1 = labels_from(g, ci.members, 1);
        max_l1 = std::max(max_l1, l1.size());
    }
    verdict.status = PropertyVerdict::Status::certified;
    verdict.exact = !eng.presentation().is_window();
    verdict.witness["argument"] = "finite alphabet; every emitted label set is finite";
    verdict.witness["max_class_label_set"] = max_l1;
    verdict.witness["alphabet_size"] = g.alphabet_size();
    if (eng.presentation().is_window())
        verdict.notes.push_back("window: cardinalities reported up to the window depths");
    return verdict;
}

PropertyVerdict check_receiver_set_finite(LevelEngine& eng, int ell_max) {
    PropertyVerdict verdict;
    verdict.property = "receiver-set-finite";
    verdict.bounds["ell_max"] = ell_max;
    eng.ensure(ell_max);
    size_t max_received = 0;
    for (int v : eng.universe(ell_max))
        max_received = std::max(max_received, eng.lambda_set(v, ell_max).size());
    verdict.status = PropertyVerdict::Status::certified;
    verdict.exact = !eng.presentation().is_window();
    verdict.witness["argument"] =
        "finite alphabet; at most |alphabet|^len labelled paths of each length";
    verdict.witness["max_received_words"] = max_received;
    if (eng.presentation().is_window())
        verdict.notes.push_back("window: cardinalities reported up to the window depths");
    return verdict;
}

}  // namespace lspace
