#ifndef BMAT_HARNESS_HPP_
#define BMAT_HARNESS_HPP_

#include <chrono>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bmat/boolmat.hpp"
#include "bmat/bounds.hpp"

namespace bmat {

/// One failed assertion: which check, the two numbers that disagreed, and
/// the offending matrix (or matrix pair, for product campaigns).
struct ViolationRecord {
  std::string check;
  long long actual = 0;
  long long bound_value = 0;
  std::vector<BoolMatrix> matrices;
};

struct CampaignReport {
  long long total_examined = 0;
  long long primitive_count = 0;
  /// First kMaxStoredViolations records; violation_total keeps the full count.
  std::vector<ViolationRecord> violations;
  long long violation_total = 0;
  /// Per-check attainment tallies for bound campaigns; per-outcome tallies
  /// for the random campaigns (index gap sizes, family kinds).
  std::map<std::string, long long> attained_counts;
  std::chrono::milliseconds elapsed{0};

  bool passed() const { return violation_total == 0; }
};

inline constexpr int kMaxStoredViolations = 100;

/// Entry (i, j) of the result is bit i*n+j of `bits`; the enumeration
/// order used by exhaustive_verify.
BoolMatrix matrix_from_bits(int n, std::uint64_t bits);

/// Checks every selected bound on every primitive 0/1 matrix of order n,
/// tallying attainment. n = 5 iterates 2^25 matrices and must be enabled
/// with allow_long; the space is split into fixed partitions processed by
/// `jobs` workers, with order-independent merging.
CampaignReport exhaustive_verify(int n, const CheckSelection& sel = {},
                                 bool allow_long = false, int jobs = 1);

/// Samples no-zero-line pairs A (n x m), B (m x n), keeps those where both
/// products are primitive, and asserts that primitivity of AB and BA agrees
/// and their scrambling indices differ by at most 1. `trials` counts kept
/// pairs; total_examined counts all sampled pairs.
CampaignReport random_pair_campaign(long long trials, std::pair<int, int> n_range,
                                    std::pair<int, int> m_range, std::uint64_t seed);

/// Generates the 21 unit-block fixed patterns plus `specs` random family
/// specs (rank parameter <= 8, expanded order <= 20) and asserts each
/// instance is primitive, has the expected Boolean rank and scrambling
/// index, and is recognized back by match_extremal.
CampaignReport family_roundtrip_campaign(long long specs, std::uint64_t seed);

}  // namespace bmat

#endif  // BMAT_HARNESS_HPP_
