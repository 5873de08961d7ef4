#ifndef BMAT_SCRAMBLE_HPP_
#define BMAT_SCRAMBLE_HPP_

#include <optional>
#include <utility>

#include "bmat/boolmat.hpp"

namespace bmat {

struct ScrambleResult {
  int k = 0;
  /// A row pair that still fails to meet after k - 1 steps; absent when
  /// k <= 1 (nothing failed earlier). Indices are 0-based with first < second.
  std::optional<std::pair<int, int>> witness_pair;
};

/// M[u][v] = 1 iff rows u and v of A^k share a common 1-column, i.e. some
/// vertex is reachable from both u and v by walks of length exactly k.
/// Equals A^k (A^t)^k. Requires square A and k >= 0 (k = 0 gives I).
BoolMatrix meet_matrix(const BoolMatrix& a, int k);

/// Least k >= 1 with meet_matrix(a, k) all ones. Throws std::domain_error
/// when `a` is not primitive (no such k exists then).
ScrambleResult scrambling_index(const BoolMatrix& a);

/// Least k with the length-k out-neighborhoods of u and v intersecting;
/// 0 when u == v. Throws std::domain_error when `a` is not primitive.
int local_scrambling_index(const BoolMatrix& a, int u, int v);

}  // namespace bmat

#endif  // BMAT_SCRAMBLE_HPP_
