#ifndef LSPACE_DYNAMICS_HPP
#define LSPACE_DYNAMICS_HPP

#include <optional>
#include <string>
#include <vector>

#include "lspace/levels.hpp"
#include "lspace/verdict.hpp"

namespace lspace {

// Search limits for the bounded verifiers. Every verdict embeds the limits
// it ran with, so reports are self-describing.
struct DynamicsBounds {
    int ell_max = 4;        // levels probed
    int n_max = 6;          // witnesses must reach at least this length
    int len_max = 12;       // word length budget
    int prefix_len = 4;     // cofinality: length of the infinite-path proxy
    int slack = 2;          // proxy must extend this much further
    int r_max = 4;          // cofinality: receiver levels probed
    int m_max = 8;          // cofinality: cover size budget
    int cofinal_ell = 2;    // level at which the aggregate check probes cofinality
    int repeat_check = 4;   // verify alpha^i in the language up to this power
    long long node_budget = 1'000'000;  // per-search expansion budget

    Json to_json() const;
};

// A word is agreeable for level ell when it carries a period at most ell;
// equivalently it factors as beta·w' = w'·gamma with |beta| = |gamma| <= ell.
bool is_agreeable_word(const Word& w, int ell);

// Searches the words emitted by the class for arbitrarily long ones with
// period above ell (certify), or exhausts the emitted language up to the
// budget finding only ell-periodic words (refute).
PropertyVerdict is_class_disagreeable(LevelEngine& eng, int ell, int class_id,
                                      const DynamicsBounds& bounds);

// Aggregates class verdicts over all levels up to ell_max; reports the
// least usable threshold per vertex.
PropertyVerdict is_space_disagreeable(LevelEngine& eng, const DynamicsBounds& bounds);

// Every cycle passes through a vertex with out-degree at least two.
// Exact; labels are ignored.
PropertyVerdict check_condition_l(const LabelledGraph& g);

// Cross-check of the cycle criterion against disagreeability of the
// trivially labelled space, on one graph.
PropertyVerdict condition_l_equivalence(
    const std::vector<std::string>& vertex_ids,
    const std::vector<std::pair<std::string, std::string>>& arcs, const DynamicsBounds& bounds);

// Exact sufficient criterion: row-finite + transitive + every vertex's
// singleton lies in the accommodating algebra.
PropertyVerdict check_cofinal_sufficient(LevelEngine& eng, const DynamicsBounds& bounds);

// Bounded cover search for level-ell cofinality. Finite unreachable
// targets refute exactly.
PropertyVerdict check_cofinal_bounded(LevelEngine& eng, int ell, const DynamicsBounds& bounds);

struct RepeatableCertificate {
    std::string class_name;  // the class that connects
    int class_level = 0;
    std::string delta;
    std::string alpha;
    std::string witness_vertex;
    int threshold = 0;            // L(w): inclusion holds from this level on
    int verified_to = 0;          // top level checked
    std::vector<int> powers_checked;  // alpha^i confirmed in the language
};

// Searches for delta, alpha with w in r(class, delta·alpha) such that each
// level class of w from some threshold on returns into itself under alpha.
PropertyVerdict find_repeatable_connection(LevelEngine& eng, int m, int class_id,
                                           const DynamicsBounds& bounds,
                                           RepeatableCertificate* cert = nullptr);

struct SoficReport {
    std::vector<int> sizes;  // |Omega_1| .. |Omega_ell_max| over the core
    bool stabilized = false;
    int stabilized_at = 0;
    bool exact = false;  // finite graph: stabilization is a fixpoint
    Json to_json() const;
};

SoficReport sofic_stabilization(LevelEngine& eng, int ell_max);

struct TheoremFlags {
    PropertyVerdict cofinal;
    PropertyVerdict disagreeable;
    PropertyVerdict repeatable;
    PropertyVerdict simple_hypotheses;         // cofinal AND disagreeable
    PropertyVerdict pure_infinite_hypotheses;  // plus repeatable connectivity
    Json to_json() const;
};

// Checks the hypothesis sets of the simplicity and pure-infiniteness
// theorems. The operator-algebraic conclusions are reported as cited
// implications, never computed.
TheoremFlags theorem_flags(LevelEngine& eng, const DynamicsBounds& bounds);

}  // namespace lspace

#endif
