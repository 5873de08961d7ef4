#include "bmat/boolrank.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>
#include <utility>

namespace bmat {
namespace {

using Clock = std::chrono::steady_clock;

struct Deadline {
  Clock::time_point at;
  bool expired() const { return Clock::now() >= at; }
};

/// Thrown inside the search to unwind to the driver, which reports "unknown".
struct BudgetExceeded {};

// Instances whose rectangle set is this large are far beyond what exact
// branch-and-bound can finish inside the timeout, so give up early instead
// of building gigabytes of incidence structure first.
constexpr std::size_t kMaxRectangles = 100'000;

/// The minimum-cover instance: target cells, the candidate rectangles, and
/// both incidence directions between them.
struct CoverProblem {
  const BoolMatrix* m = nullptr;
  std::vector<Rectangle> rects;
  std::vector<std::pair<int, int>> cells;  // cell index -> (row, col)
  std::vector<Bitset> rect_cells;          // cells inside each rectangle
  std::vector<std::vector<int>> covering;  // rectangles containing each cell
};

CoverProblem build_problem(const BoolMatrix& m, std::vector<Rectangle> rects,
                           const Deadline& deadline) {
  CoverProblem p;
  p.m = &m;
  p.rects = std::move(rects);
  std::vector<int> cell_index(static_cast<std::size_t>(m.rows()) * m.cols(), -1);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      if (m.at(i, j)) {
        cell_index[static_cast<std::size_t>(i) * m.cols() + j] =
            static_cast<int>(p.cells.size());
        p.cells.emplace_back(i, j);
      }
    }
  }
  const int cell_count = static_cast<int>(p.cells.size());
  p.covering.resize(cell_count);
  p.rect_cells.reserve(p.rects.size());
  for (std::size_t r = 0; r < p.rects.size(); ++r) {
    if (deadline.expired()) throw BudgetExceeded{};
    Bitset inside(cell_count);
    p.rects[r].rowset.for_each_set([&](int i) {
      p.rects[r].colset.for_each_set([&](int j) {
        const int x = cell_index[static_cast<std::size_t>(i) * m.cols() + j];
        inside.set(x);
        p.covering[x].push_back(static_cast<int>(r));
      });
    });
    p.rect_cells.push_back(std::move(inside));
  }
  return p;
}

/// Cells no single rectangle can contain two of; its size lower-bounds the
/// remaining cover. Two 1-cells fit one rectangle iff both opposite corners
/// are 1, so "independent" means at least one opposite corner is 0.
int fooling_lower_bound(const CoverProblem& p, const Bitset& uncovered) {
  std::vector<int> chosen;
  uncovered.for_each_set([&](int x) {
    const auto [i, j] = p.cells[x];
    for (int y : chosen) {
      const auto [i2, j2] = p.cells[y];
      if (p.m->at(i, j2) && p.m->at(i2, j)) return;
    }
    chosen.push_back(x);
  });
  return static_cast<int>(chosen.size());
}

std::vector<int> greedy_cover(const CoverProblem& p) {
  std::vector<int> chosen;
  Bitset uncovered(static_cast<int>(p.cells.size()));
  for (std::size_t x = 0; x < p.cells.size(); ++x) uncovered.set(static_cast<int>(x));
  while (uncovered.any()) {
    int best = -1;
    int best_gain = 0;
    for (std::size_t r = 0; r < p.rects.size(); ++r) {
      const int gain = (p.rect_cells[r] & uncovered).count();
      if (gain > best_gain) {
        best_gain = gain;
        best = static_cast<int>(r);
      }
    }
    chosen.push_back(best);  // every 1-cell lies in some maximal rectangle
    uncovered -= p.rect_cells[best];
  }
  return chosen;
}

struct Search {
  const CoverProblem& p;
  Deadline deadline;
  std::vector<int> best;
  std::vector<int> current;
  long long nodes = 0;

  void run(const Bitset& uncovered) {
    if ((++nodes & 255) == 0 && deadline.expired()) throw BudgetExceeded{};
    if (uncovered.none()) {
      best = current;
      return;
    }
    const int depth = static_cast<int>(current.size());
    if (depth + fooling_lower_bound(p, uncovered) >=
        static_cast<int>(best.size())) {
      return;
    }
    // Branch on the uncovered cell with the fewest candidate rectangles.
    int cell = -1;
    std::size_t fewest = p.rects.size() + 1;
    uncovered.for_each_set([&](int x) {
      if (p.covering[x].size() < fewest) {
        fewest = p.covering[x].size();
        cell = x;
      }
    });
    std::vector<std::pair<int, int>> order;  // (-gain, rect)
    order.reserve(p.covering[cell].size());
    for (int r : p.covering[cell]) {
      order.emplace_back(-(p.rect_cells[r] & uncovered).count(), r);
    }
    std::sort(order.begin(), order.end());
    for (const auto& [neg_gain, r] : order) {
      (void)neg_gain;
      current.push_back(r);
      run(uncovered - p.rect_cells[r]);
      current.pop_back();
      if (static_cast<int>(best.size()) <= depth + 1) break;  // cannot improve here
    }
  }
};

struct CoverSolution {
  std::vector<Rectangle> rects;
  std::vector<int> chosen;  // indices into rects, a minimum cover
};

std::optional<CoverSolution> minimum_cover(const BoolMatrix& m,
                                           const RankBudget& budget) {
  if (m.rows() > budget.max_dim || m.cols() > budget.max_dim) return std::nullopt;
  const Deadline deadline{Clock::now() + budget.timeout};
  try {
    std::vector<Rectangle> rects = maximal_rectangles(m);
    if (rects.size() > kMaxRectangles) throw BudgetExceeded{};
    CoverProblem p = build_problem(m, std::move(rects), deadline);
    Search search{p, deadline, greedy_cover(p), {}, 0};
    Bitset all(static_cast<int>(p.cells.size()));
    for (std::size_t x = 0; x < p.cells.size(); ++x) all.set(static_cast<int>(x));
    if (fooling_lower_bound(p, all) < static_cast<int>(search.best.size())) {
      search.run(all);
    }
    return CoverSolution{std::move(p.rects), std::move(search.best)};
  } catch (const BudgetExceeded&) {
    return std::nullopt;
  }
}

}  // namespace

std::vector<Rectangle> maximal_rectangles(const BoolMatrix& m) {
  // Maximal rectangles correspond to nonempty intersections C of row
  // supports paired with the full set of rows containing C, so close the
  // distinct supports under pairwise intersection.
  std::vector<Bitset> generators;
  std::unordered_set<Bitset, BitsetHash> seen;
  for (int i = 0; i < m.rows(); ++i) {
    Bitset support = m.row(i);
    if (support.any() && seen.insert(support).second) {
      generators.push_back(std::move(support));
    }
  }
  std::vector<Bitset> closed = generators;
  for (std::size_t next = 0; next < closed.size(); ++next) {
    for (const Bitset& g : generators) {
      Bitset meet = closed[next] & g;
      if (meet.any() && seen.insert(meet).second) closed.push_back(std::move(meet));
    }
  }
  std::vector<Rectangle> out;
  out.reserve(closed.size());
  for (Bitset& colset : closed) {
    Bitset rowset(m.rows());
    for (int i = 0; i < m.rows(); ++i) {
      if (colset.is_subset_of(m.row(i))) rowset.set(i);
    }
    out.push_back(Rectangle{std::move(rowset), std::move(colset)});
  }
  return out;
}

std::optional<int> boolean_rank(const BoolMatrix& m, const RankBudget& budget) {
  if (m.is_zero()) return 0;
  auto cover = minimum_cover(m, budget);
  if (!cover) return std::nullopt;
  return static_cast<int>(cover->chosen.size());
}

std::optional<Factorization> rank_factorization(const BoolMatrix& m,
                                                const RankBudget& budget) {
  if (m.is_zero()) {
    throw std::invalid_argument("rank_factorization: zero matrix has no factorization");
  }
  auto cover = minimum_cover(m, budget);
  if (!cover) return std::nullopt;
  const int width = static_cast<int>(cover->chosen.size());
  Factorization f{BoolMatrix::zeros(m.rows(), width),
                  BoolMatrix::zeros(width, m.cols()), width};
  for (int i = 0; i < width; ++i) {
    const Rectangle& rect = cover->rects[static_cast<std::size_t>(cover->chosen[i])];
    rect.rowset.for_each_set([&](int r) { f.a.set(r, i, true); });
    rect.colset.for_each_set([&](int c) { f.b.set(i, c, true); });
  }
  return f;
}

bool verify_factorization(const BoolMatrix& m, const Factorization& f) {
  if (f.a.rows() != m.rows() || f.b.cols() != m.cols() ||
      f.a.cols() != f.b.rows() || f.width != f.a.cols()) {
    throw std::invalid_argument("verify_factorization: dimension mismatch");
  }
  return multiply(f.a, f.b) == m;
}

}  // namespace bmat
