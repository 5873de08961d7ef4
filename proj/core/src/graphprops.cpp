#include "bmat/graphprops.hpp"

#include <numeric>
#include <vector>

namespace bmat {

namespace {

void require_square(const BoolMatrix& a, const char* who) {
  if (!a.is_square()) throw std::invalid_argument(std::string(who) + ": matrix must be square");
}

// Vertices reachable from `start` by walks of length >= 1.
Bitset reachable_from(const BoolMatrix& adj, int start) {
  Bitset reach = adj.row(start);
  Bitset frontier = reach;
  while (frontier.any()) {
    Bitset next = step_neighborhood(frontier, adj);
    Bitset fresh(adj.rows());
    for (std::size_t w = 0; w < next.words().size(); ++w)
      fresh.words()[w] = next.words()[w] & ~reach.words()[w];
    if (fresh.none()) break;
    reach |= fresh;
    frontier = fresh;
  }
  return reach;
}

// BFS levels from `start`; -1 for unreachable vertices. Level of start is 0.
std::vector<int> bfs_levels(const BoolMatrix& adj, int start) {
  std::vector<int> level(static_cast<std::size_t>(adj.rows()), -1);
  level[static_cast<std::size_t>(start)] = 0;
  Bitset seen(adj.rows());
  seen.set(start);
  Bitset frontier(adj.rows());
  frontier.set(start);
  int depth = 0;
  while (frontier.any()) {
    ++depth;
    Bitset next = step_neighborhood(frontier, adj);
    Bitset fresh(adj.rows());
    for (std::size_t w = 0; w < next.words().size(); ++w)
      fresh.words()[w] = next.words()[w] & ~seen.words()[w];
    if (fresh.none()) break;
    fresh.for_each_set([&](int v) { level[static_cast<std::size_t>(v)] = depth; });
    seen |= fresh;
    frontier = fresh;
  }
  return level;
}

}  // namespace

Bitset step_neighborhood(const Bitset& from, const BoolMatrix& adjacency) {
  Bitset out(adjacency.cols());
  from.for_each_set([&](int v) {
    auto row = adjacency.row_span(v);
    for (std::size_t w = 0; w < row.size(); ++w) out.words()[w] |= row[w];
  });
  return out;
}

bool is_strongly_connected(const BoolMatrix& adjacency) {
  require_square(adjacency, "is_strongly_connected");
  int n = adjacency.rows();
  if (n == 1) return true;
  Bitset fwd = reachable_from(adjacency, 0);
  BoolMatrix t = transpose(adjacency);
  Bitset bwd = reachable_from(t, 0);
  for (int v = 1; v < n; ++v)
    if (!fwd.test(v) || !bwd.test(v)) return false;
  return true;
}

int girth(const BoolMatrix& adjacency) {
  require_square(adjacency, "girth");
  int n = adjacency.rows();
  int best = n + 1;
  for (int v = 0; v < n; ++v) {
    if (adjacency.at(v, v)) return 1;  // loop, nothing shorter exists
    // Shortest cycle through v: min over arcs (u, v) of dist(v, u) + 1.
    std::vector<int> level = bfs_levels(adjacency, v);
    for (int u = 0; u < n; ++u) {
      if (!adjacency.at(u, v)) continue;
      int d = level[static_cast<std::size_t>(u)];
      if (d >= 0 && d + 1 < best) best = d + 1;
    }
  }
  if (best > n) throw std::domain_error("girth: digraph is acyclic");
  return best;
}

bool is_primitive(const BoolMatrix& a) {
  require_square(a, "is_primitive");
  int n = a.rows();
  if (n == 1) return a.at(0, 0);
  if (!is_strongly_connected(a)) return false;
  // gcd of cycle lengths equals gcd over all arcs (u, v) of level(u)+1-level(v)
  // for BFS levels within the strongly connected digraph.
  std::vector<int> level = bfs_levels(a, 0);
  long long g = 0;
  for (int u = 0; u < n; ++u) {
    auto row = a.row_span(u);
    for (std::size_t w = 0; w < row.size(); ++w) {
      std::uint64_t bits = row[w];
      while (bits) {
        int v = static_cast<int>(w) * Bitset::kWordBits + std::countr_zero(bits);
        bits &= bits - 1;
        long long diff = level[static_cast<std::size_t>(u)] + 1 - level[static_cast<std::size_t>(v)];
        g = std::gcd(g, diff < 0 ? -diff : diff);
        if (g == 1) return true;
      }
    }
  }
  return g == 1;
}

int exponent(const BoolMatrix& a) {
  require_square(a, "exponent");
  if (!is_primitive(a)) throw std::domain_error("exponent: matrix is not primitive");
  int n = a.rows();
  long long wielandt = static_cast<long long>(n - 1) * (n - 1) + 1;
  BoolMatrix p = a;
  for (long long r = 1; r <= wielandt; ++r) {
    if (p.all_ones()) return static_cast<int>(r);
    p = multiply(p, a);
  }
  // A primitive matrix reaches all ones by (n-1)^2+1 steps; getting here
  // means the primitivity test and the power loop disagree.
  throw std::logic_error("exponent: power iteration exceeded the order bound");
}

}  // namespace bmat
