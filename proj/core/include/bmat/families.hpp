#ifndef BMAT_FAMILIES_HPP_
#define BMAT_FAMILIES_HPP_

#include <string>
#include <vector>

#include "bmat/boolmat.hpp"
#include "bmat/boolrank.hpp"

namespace bmat {

/// A square 0/1 matrix read as a block recipe: 1 marks an all-ones block,
/// 0 a zero block. Expanding with unit sizes returns the pattern itself.
using PatternMatrix = BoolMatrix;

enum class FamilyKind {
  wielandt,  // W_n
  all_ones,  // J_n
  m1,        // parametric rank-b families with one or two extra blocks
  m2,
  m3,
  t2,  // fixed rank-2 patterns, variants 1..3
  t3,  // fixed rank-2 patterns, variants 1..18
};

/// CLI-facing name: "wielandt", "jn", "m1", "m2", "m3", "t2", "t3".
std::string family_name(FamilyKind kind);

struct FamilySpec {
  FamilyKind kind = FamilyKind::wielandt;
  int variant = 0;  // t2: 1..3, t3: 1..18; 0 otherwise
  /// Order n for wielandt/all_ones; the rank parameter for m1/m2/m3;
  /// ignored for t2/t3 (their rank is always 2).
  int b = 0;
  /// One size per block; empty means unit blocks. m1/m2 take b+1 sizes,
  /// m3 takes b+2, t2/t3 the pattern dimension. Unused for wielandt/all_ones.
  std::vector<int> block_sizes;

  bool operator==(const FamilySpec&) const = default;
};

/// Order-n matrix with ones at (i, i+1) for i < n-1 and at (n-2, 0) and
/// (n-1, 0); the unique order-n matrix with largest scrambling index.
/// Requires n >= 2.
BoolMatrix wielandt(int n);

/// Blows each 1 of the square pattern up to an all-ones sizes[i] x sizes[j]
/// block and each 0 to a zero block. Requires one size >= 1 per block row.
BoolMatrix expand_pattern(const PatternMatrix& pattern, const std::vector<int>& sizes);

/// The parametric block pattern behind m1/m2/m3 at rank parameter b >= 3:
/// (b+1) x (b+1) for m1/m2, (b+2) x (b+2) for m3.
PatternMatrix table1_pattern(FamilyKind kind, int b);

/// One of the 21 fixed rank-2 block patterns, in source order.
PatternMatrix table23_pattern(FamilyKind kind, int variant);

/// expand_pattern(table1_pattern(kind, b), sizes).
BoolMatrix table1(FamilyKind kind, int b, const std::vector<int>& sizes);

/// expand_pattern(table23_pattern(kind, variant), sizes).
BoolMatrix table23(FamilyKind kind, int variant, const std::vector<int>& sizes);

/// The width-b factorization M = A B that witnesses boolean_rank = b for
/// table1 instances. B A is the order-b matrix with largest scrambling index.
Factorization table1_factorization(FamilyKind kind, int b, const std::vector<int>& sizes);

/// Number of block sizes `spec.kind` expects (0 for wielandt/all_ones).
int block_count(const FamilySpec& spec);

/// Builds the family member described by `spec`; empty block_sizes means
/// unit blocks. Throws std::invalid_argument for out-of-range parameters.
BoolMatrix generate(const FamilySpec& spec);

}  // namespace bmat

#endif  // BMAT_FAMILIES_HPP_
