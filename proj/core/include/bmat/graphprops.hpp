#ifndef BMAT_GRAPHPROPS_HPP_
#define BMAT_GRAPHPROPS_HPP_

#include "bmat/boolmat.hpp"

namespace bmat {

/// Digraph reading of a square Boolean matrix: arc i -> j iff A[i][j] = 1.
/// All functions treat the matrix as adjacency; none mutate it.

/// One multiplication step on a vertex set: the union of out-neighborhoods
/// of the vertices in `from`. Workhorse for reachability and index loops.
Bitset step_neighborhood(const Bitset& from, const BoolMatrix& adjacency);

bool is_strongly_connected(const BoolMatrix& adjacency);

/// Length of the shortest directed cycle; a loop counts as length 1.
/// Throws std::domain_error when the digraph is acyclic.
int girth(const BoolMatrix& adjacency);

/// True iff the digraph is strongly connected with cycle-length gcd 1.
/// Throws std::invalid_argument for non-square input.
bool is_primitive(const BoolMatrix& a);

/// Smallest r >= 1 with A^r all ones. Throws std::domain_error when A is
/// not primitive.
int exponent(const BoolMatrix& a);

}  // namespace bmat

#endif  // BMAT_GRAPHPROPS_HPP_
