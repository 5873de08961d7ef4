#include "bmat/scramble.hpp"

#include <stdexcept>

#include "bmat/bounds.hpp"
#include "bmat/graphprops.hpp"

namespace bmat {
namespace {

// A pair of rows of p that do not meet, or nullopt when every pair does.
// `probe` is tried first: a pair that failed at the previous power usually
// still fails, which skips the quadratic scan on most iterations.
std::optional<std::pair<int, int>> find_disjoint_pair(
    const BoolMatrix& p, std::optional<std::pair<int, int>> probe) {
  if (probe && !p.rows_intersect(probe->first, probe->second)) return probe;
  const int n = p.rows();
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!p.rows_intersect(u, v)) return std::make_pair(u, v);
    }
  }
  return std::nullopt;
}

}  // namespace

BoolMatrix meet_matrix(const BoolMatrix& a, int k) {
  if (a.rows() != a.cols()) {
    throw std::invalid_argument("meet_matrix: matrix must be square");
  }
  if (k < 0) throw std::invalid_argument("meet_matrix: k must be >= 0");
  const BoolMatrix p = power(a, k);
  const int n = a.rows();
  BoolMatrix m = BoolMatrix::zeros(n, n);
  for (int u = 0; u < n; ++u) {
    for (int v = u; v < n; ++v) {
      if (p.rows_intersect(u, v)) {
        m.set(u, v, true);
        m.set(v, u, true);
      }
    }
  }
  return m;
}

ScrambleResult scrambling_index(const BoolMatrix& a) {
  if (a.rows() != a.cols()) {
    throw std::invalid_argument("scrambling_index: matrix must be square");
  }
  if (!is_primitive(a)) {
    throw std::domain_error("scrambling_index: matrix is not primitive");
  }
  // The only primitive 1x1 matrix is [1], which meets itself in one step.
  if (a.rows() == 1) return {1, std::nullopt};
  const int bound = static_cast<int>(order_scrambling_bound(a.rows()));
  BoolMatrix p = a;
  std::optional<std::pair<int, int>> failing;
  for (int k = 1; k <= bound; ++k) {
    auto still_failing = find_disjoint_pair(p, failing);
    if (!still_failing) return {k, failing};
    failing = still_failing;
    p = multiply(p, a);
  }
  throw std::logic_error("scrambling_index: primitive matrix exceeded the order bound");
}

int local_scrambling_index(const BoolMatrix& a, int u, int v) {
  if (a.rows() != a.cols()) {
    throw std::invalid_argument("local_scrambling_index: matrix must be square");
  }
  if (u < 0 || u >= a.rows() || v < 0 || v >= a.rows()) {
    throw std::invalid_argument("local_scrambling_index: vertex out of range");
  }
  if (!is_primitive(a)) {
    throw std::domain_error("local_scrambling_index: matrix is not primitive");
  }
  if (u == v) return 0;  // also covers n = 1, where the bound formula is undefined
  const int bound = static_cast<int>(order_scrambling_bound(a.rows()));
  Bitset from_u = a.row(u);
  Bitset from_v = a.row(v);
  for (int k = 1; k <= bound; ++k) {
    if (from_u.intersects(from_v)) return k;
    from_u = step_neighborhood(from_u, a);
    from_v = step_neighborhood(from_v, a);
  }
  throw std::logic_error("local_scrambling_index: primitive matrix exceeded the order bound");
}

}  // namespace bmat
