#ifndef LSPACE_MATRIX_HPP
#define LSPACE_MATRIX_HPP

#include <string>
#include <vector>

#include "lspace/levels.hpp"
#include "lspace/verdict.hpp"

namespace lspace {

// Formal sum of symbols: a sorted multiset. Products against 0/1 matrices
// combine entries by multiset sum.
using FormalSum = std::vector<Sym>;

FormalSum formal_add(const FormalSum& a, const FormalSum& b);

// The pair (M, I) over classes at ell (rows) and ell+1 (columns):
// I(i,j) = 1 when column class j refines row class i; M(i,j) is the formal
// sum of labels carried from row class i into column class j, read off at
// the canonical representative of j (well-defined for left-resolving
// labellings; checked across representatives at construction).
struct SymbolicMatrixPair {
    int level = 0;
    std::vector<std::string> row_names;
    std::vector<std::string> col_names;
    std::vector<std::vector<uint8_t>> I;
    std::vector<std::vector<FormalSum>> M;
};

struct MatrixError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

SymbolicMatrixPair matrix_pair(LevelEngine& eng, int ell);

// M_{l,l+1} I_{l+1,l+2} = I_{l,l+1} M_{l+1,l+2}, entrywise over formal sums.
PropertyVerdict verify_commutation(LevelEngine& eng, int ell);

// Boolean transition tensor: entries (row class, symbol, column class)
// with A(i,a,j) = 1 exactly when a occurs in M(i,j).
struct LambdaTransition {
    int row;
    Sym symbol;
    int col;
};
std::vector<LambdaTransition> lambda_transitions(LevelEngine& eng, int ell);

// Dimension of the level-(k,ell) matrix summand of a class: the number of
// labelled words of length exactly k received by (every member of) the
// class. Requires k <= ell.
long long af_summand_dim(LevelEngine& eng, int k, int ell, int class_id);

// Tower of finite-dimensional pieces indexed by (k, ell), k <= ell, with
// horizontal inclusions (fixed k, refinement, multiplicity 1) and diagonal
// embeddings (k,ell) -> (k+1,ell+1) whose multiplicities count the symbols
// carried from each class into each refined class.
struct BratteliDiagram {
    struct Summand {
        std::string class_name;
        long long dim;
    };
    struct Level {
        int k;
        int ell;
        std::vector<Summand> summands;
    };
    struct EdgeRec {
        int k;
        int ell;  // source floor
        std::string from;
        std::string to;
        long long mult;
    };
    std::vector<Level> levels;
    std::vector<EdgeRec> horizontal;  // (k,ell) -> (k,ell+1)
    std::vector<EdgeRec> diagonal;    // (k,ell) -> (k+1,ell+1)
};

BratteliDiagram bratteli_diagram(LevelEngine& eng, int k_max, int ell_max);

std::string to_dot(const BratteliDiagram& d);

}  // namespace lspace

#endif
