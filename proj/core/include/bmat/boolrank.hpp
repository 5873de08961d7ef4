#ifndef BMAT_BOOLRANK_HPP_
#define BMAT_BOOLRANK_HPP_

#include <chrono>
#include <optional>
#include <vector>

#include "bmat/boolmat.hpp"

namespace bmat {

/// All-ones submatrix of the target: every cell of rowset x colset is 1.
/// A rank-1 Boolean summand is exactly such a rectangle.
struct Rectangle {
  Bitset rowset;
  Bitset colset;
  bool operator==(const Rectangle&) const = default;
};

/// Witness for M = A B over the Boolean semiring with inner width `width`.
struct Factorization {
  BoolMatrix a;  // m x width
  BoolMatrix b;  // width x n
  int width = 0;
};

/// Exact Boolean rank is NP-hard; past this budget the search reports
/// "unknown" (nullopt) instead of risking a wrong number.
struct RankBudget {
  int max_dim = 20;
  std::chrono::milliseconds timeout{10'000};
};

/// Every inclusion-maximal all-ones rectangle of M's support; empty for the
/// zero matrix. The minimum cover over these equals the minimum over all
/// rectangles, since any rectangle extends to a maximal one inside the
/// support.
std::vector<Rectangle> maximal_rectangles(const BoolMatrix& m);

/// Minimum number of all-ones rectangles covering M's support exactly
/// (0 for the zero matrix); nullopt when the budget is exceeded.
std::optional<int> boolean_rank(const BoolMatrix& m, const RankBudget& budget = {});

/// A factorization M = A B of width boolean_rank(M): column i of A marks
/// rectangle i's rows, row i of B its columns. Throws std::invalid_argument
/// for the zero matrix; nullopt when the budget is exceeded.
std::optional<Factorization> rank_factorization(const BoolMatrix& m,
                                                const RankBudget& budget = {});

/// True iff multiply(F.a, F.b) == M.
bool verify_factorization(const BoolMatrix& m, const Factorization& f);

}  // namespace bmat

#endif  // BMAT_BOOLRANK_HPP_
