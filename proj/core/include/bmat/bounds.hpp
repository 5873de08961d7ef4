#ifndef BMAT_BOUNDS_HPP_
#define BMAT_BOUNDS_HPP_

#include <string>
#include <vector>

#include "bmat/boolmat.hpp"
#include "bmat/boolrank.hpp"

namespace bmat {

/// Largest scrambling index among primitive matrices of order n:
/// ceil(((n-1)^2 + 1) / 2). Exact integer arithmetic throughout.
/// Requires n >= 2, like the other formulas here.
long long order_scrambling_bound(long long n);

/// Scrambling bound for a primitive digraph of order n and girth s.
long long girth_scrambling_bound(long long n, long long s);

/// Scrambling bound in terms of Boolean rank b: order bound at b, plus one.
long long rank_scrambling_bound(long long b);

/// Exponent bound in terms of Boolean rank b: (b-1)^2 + 2.
long long rank_exponent_bound(long long b);

enum class CheckStatus { evaluated, skipped };

/// One bound compared against one computed invariant. bound_value, satisfied
/// and attained are meaningful only when status == evaluated; a skipped check
/// (rank unavailable) is not a violation.
struct BoundCheck {
  std::string name;
  long long bound_value = 0;
  long long actual = 0;
  bool satisfied = false;
  bool attained = false;
  CheckStatus status = CheckStatus::evaluated;
};

enum class BoundId : unsigned {
  order_bound = 1u << 0,
  girth_bound = 1u << 1,
  rank_scrambling = 1u << 2,
  rank_exponent = 1u << 3,
};

struct CheckSelection {
  unsigned mask = 0xF;  // all
  bool contains(BoundId id) const { return mask & static_cast<unsigned>(id); }
  static CheckSelection all() { return {}; }
  static CheckSelection only(BoundId id) { return {static_cast<unsigned>(id)}; }
  bool wants_rank() const {
    return contains(BoundId::rank_scrambling) || contains(BoundId::rank_exponent);
  }
};

/// Computed invariants of one primitive matrix, ready for bound evaluation.
struct Invariants {
  int n = 0;
  int girth = 0;
  int exponent = 0;
  int scrambling_index = 0;
  std::optional<int> boolean_rank;  // nullopt: not computed / over budget
};

/// Compares precomputed invariants against the selected bounds. Rank-based
/// checks come back with status = skipped when the rank is absent; they are
/// omitted entirely when the rank is 1 (the bounds assume b >= 2). For
/// n = 1 the list is empty: every formula here assumes order >= 2.
std::vector<BoundCheck> evaluate_checks(const Invariants& inv,
                                        const CheckSelection& sel = {});

/// Computes all invariants of M (rank within the given budget) and evaluates
/// every selected bound. Throws std::domain_error when M is not primitive.
std::vector<BoundCheck> check_all(const BoolMatrix& m, const RankBudget& budget = {},
                                  const CheckSelection& sel = {});

}  // namespace bmat

#endif  // BMAT_BOUNDS_HPP_
