#ifndef BMAT_CHARACTERIZE_HPP_
#define BMAT_CHARACTERIZE_HPP_

#include <optional>
#include <vector>

#include "bmat/boolmat.hpp"
#include "bmat/boolrank.hpp"
#include "bmat/families.hpp"

namespace bmat {

/// Vertex classes of M under simultaneous row-and-column equality, in first
/// occurrence order, plus the class-level pattern. Expanding the pattern
/// with the class sizes reproduces M up to the induced vertex ordering.
struct QuotientResult {
  PatternMatrix pattern;
  std::vector<std::vector<int>> classes;
};

/// Groups vertices with identical rows and identical columns. Every block
/// expansion of a reduced pattern quotients back to that pattern exactly.
QuotientResult quotient(const BoolMatrix& m);

/// True iff 2 <= boolean_rank(M) <= n-1 and the scrambling index sits
/// exactly at the rank bound; nullopt when the rank is over budget.
/// Throws std::domain_error when M is not primitive.
std::optional<bool> is_extremal(const BoolMatrix& m, const RankBudget& budget = {});

/// The three conditions forcing the rank bound to be attained, for a
/// factorization M = A B of width b >= 3: B A is the order-b matrix of
/// largest scrambling index, A contains the unit rows with 1 at positions
/// floor(b/2) and b (1-based), and no column of B is the sum of the last
/// two unit columns. Throws std::invalid_argument on shape mismatch.
bool extremal_factor_conditions(const BoolMatrix& a, const BoolMatrix& b);

/// Width-2 counterpart: B A is [[1,1],[1,0]] or all ones, A contains both
/// unit rows, and no column of B is all ones.
bool rank2_factor_conditions(const BoolMatrix& a, const BoolMatrix& b);

/// Permutation p with permute_sym(from, p) == to, if any. Backtracking with
/// row/column-count pruning; intended for small orders (tests use n <= 8).
std::optional<Permutation> find_similarity_perm(const BoolMatrix& from,
                                                const BoolMatrix& to);

/// True iff some simultaneous row/column permutation carries a onto b.
bool are_permutation_similar(const BoolMatrix& a, const BoolMatrix& b);

/// Recognizes M as a block expansion of one of the named extremal forms:
/// quotient M, align the quotient against the parametric m1/m2/m3 patterns
/// (anchored on the forced principal cycle) or the 21 fixed patterns
/// (exhaustively, they have at most 6 blocks). Returns a spec that
/// regenerates a matrix permutation-similar to M, or nullopt.
std::optional<FamilySpec> match_extremal(const BoolMatrix& m);

}  // namespace bmat

#endif  // BMAT_CHARACTERIZE_HPP_
