#ifndef LSPACE_LEVELS_HPP
#define LSPACE_LEVELS_HPP

#include <map>
#include <string>
#include <vector>

#include "lspace/family.hpp"
#include "lspace/graph.hpp"
#include "lspace/vset.hpp"
#include "lspace/words.hpp"

namespace lspace {

// Generalized-vertex structure: vertices are grouped at level ell by the
// set of labelled words of length <= ell they receive. Computed by
// signature refinement — the exact-length word set of a vertex at level k
// extends the level k-1 sets of its in-neighbours by one symbol, so each
// level refines the previous one and signatures never have to be rebuilt
// from scratch. (Brute-force recomputation lives in the tests as the
// oracle.)
class LevelEngine {
public:
    struct ClassInfo {
        int least = -1;            // canonical representative (least vertex index)
        VSet members;              // within the level universe
        int parent = -1;           // class id one level down (-1 at level 1)
        int wsid = -1;             // interned exact-length word set
    };

    explicit LevelEngine(const Presentation& p);

    const Presentation& presentation() const { return *p_; }
    const LabelledGraph& graph() const { return p_->graph; }

    // Extends the tower to `ell` levels; throws WindowError when no vertex
    // has exact data that deep.
    void ensure(int ell);
    int levels_computed() const { return static_cast<int>(levels_.size()); }

    // Universe of vertices classifiable at level ell.
    const VSet& universe(int ell) const { return level(ell).universe; }

    // Exact-length-k received words of v (k <= back_exact[v]).
    const WordSet& in_words(int v, int k) const;
    // All received words of length <= ell.
    WordSet lambda_set(int v, int ell) const;

    int class_id(int v, int ell) const;  // -1 if v not classifiable
    const std::vector<ClassInfo>& classes(int ell) const { return level(ell).classes; }
    std::string class_name(int ell, int cid) const;
    int class_id_by_name(int ell, const std::string& name) const;

    // Vertices (within the level universe) receiving at least Lambda_ell(v).
    VSet x_set(int v, int ell) const;
    // Extra words received by those vertices.
    WordSet y_set(int v, int ell) const;
    // X minus the range of the extra words; cross-checked in the tests
    // against direct signature equality.
    VSet class_of_formula(int v, int ell) const;

    // r(w) within universe(ell); requires |w| <= ell.
    VSet range_in_universe(const Word& w, int ell) const;

    // Refinement map: class id at ell+1 -> class id at ell.
    std::vector<int> refinement_map(int ell) const;

private:
    struct Level {
        VSet universe;
        std::vector<int> wsid;      // per vertex, -1 outside universe
        std::vector<int> class_of;  // per vertex, -1 outside universe
        std::vector<ClassInfo> classes;
    };

    const Level& level(int ell) const;
    void build_next_level();

    const Presentation* p_;
    std::vector<Level> levels_;           // levels_[k] is level k+1
    std::vector<WordSet> pool_;           // interned word sets
    std::map<WordSet, int> pool_index_;
    int intern(WordSet ws);
};

// Partition report at a fixed level, restricted to core vertices.
struct ClassPartition {
    int level = 0;
    struct Entry {
        std::string name;
        std::vector<std::string> members;    // core members
        WordSet signature;                   // received words up to the level
    };
    std::vector<Entry> entries;
    int classes_in_universe = 0;  // including classes with no core member
};

ClassPartition omega(LevelEngine& eng, int ell);

// (partition at ell+1, map: refined class name -> coarse class name)
std::pair<ClassPartition, std::vector<std::pair<std::string, std::string>>> refine(
    LevelEngine& eng, int ell);

}  // namespace lspace

#endif
