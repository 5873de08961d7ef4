#include "bmat/characterize.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "bmat/bounds.hpp"
#include "bmat/graphprops.hpp"
#include "bmat/scramble.hpp"

namespace bmat {
namespace {

bool is_unit_row(const Bitset& row, int index) {
  return row.count() == 1 && row.test(index);
}

/// True when some row of `a` is the unit row with its 1 at `index`.
bool has_unit_row(const BoolMatrix& a, int index) {
  for (int i = 0; i < a.rows(); ++i) {
    if (is_unit_row(a.row(i), index)) return true;
  }
  return false;
}

void require_factor_shapes(const BoolMatrix& a, const BoolMatrix& b) {
  if (a.cols() != b.rows() || a.rows() != b.cols()) {
    throw std::invalid_argument("factor conditions: A must be n x b and B must be b x n");
  }
}

}  // namespace

QuotientResult quotient(const BoolMatrix& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("quotient: matrix must be square");
  }
  const int n = m.rows();
  std::vector<Bitset> rows(static_cast<std::size_t>(n));
  std::vector<Bitset> cols(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    rows[static_cast<std::size_t>(i)] = m.row(i);
    cols[static_cast<std::size_t>(i)] = m.col(i);
  }
  std::vector<std::vector<int>> classes;
  std::vector<int> reps;
  for (int i = 0; i < n; ++i) {
    bool placed = false;
    for (std::size_t c = 0; c < reps.size(); ++c) {
      const int r = reps[c];
      if (rows[static_cast<std::size_t>(i)] == rows[static_cast<std::size_t>(r)] &&
          cols[static_cast<std::size_t>(i)] == cols[static_cast<std::size_t>(r)]) {
        classes[c].push_back(i);
        placed = true;
        break;
      }
    }
    if (!placed) {
      reps.push_back(i);
      classes.push_back({i});
    }
  }
  const int d = static_cast<int>(reps.size());
  BoolMatrix pattern = BoolMatrix::zeros(d, d);
  for (int bi = 0; bi < d; ++bi) {
    for (int bj = 0; bj < d; ++bj) {
      if (m.at(reps[static_cast<std::size_t>(bi)], reps[static_cast<std::size_t>(bj)])) {
        pattern.set(bi, bj, true);
      }
    }
  }
  return QuotientResult{std::move(pattern), std::move(classes)};
}

std::optional<bool> is_extremal(const BoolMatrix& m, const RankBudget& budget) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("is_extremal: matrix must be square");
  }
  if (!is_primitive(m)) throw std::domain_error("is_extremal: matrix is not primitive");
  const std::optional<int> b = boolean_rank(m, budget);
  if (!b) return std::nullopt;
  if (*b < 2 || *b > m.rows() - 1) return false;
  return scrambling_index(m).k == rank_scrambling_bound(*b);
}

bool extremal_factor_conditions(const BoolMatrix& a, const BoolMatrix& b) {
  require_factor_shapes(a, b);
  const int width = a.cols();
  if (width < 3) {
    throw std::invalid_argument("extremal_factor_conditions: width must be >= 3");
  }
  if (multiply(b, a) != wielandt(width)) return false;
  // 1-based rows floor(width/2) and width.
  if (!has_unit_row(a, width / 2 - 1) || !has_unit_row(a, width - 1)) return false;
  Bitset forbidden(width);
  forbidden.set(width - 2);
  forbidden.set(width - 1);
  for (int j = 0; j < b.cols(); ++j) {
    if (b.col(j) == forbidden) return false;
  }
  return true;
}

bool rank2_factor_conditions(const BoolMatrix& a, const BoolMatrix& b) {
  require_factor_shapes(a, b);
  if (a.cols() != 2) {
    throw std::invalid_argument("rank2_factor_conditions: width must be 2");
  }
  const BoolMatrix product = multiply(b, a);
  if (product != wielandt(2) && product != BoolMatrix::ones(2, 2)) return false;
  if (!has_unit_row(a, 0) || !has_unit_row(a, 1)) return false;
  Bitset forbidden(2);
  forbidden.set(0);
  forbidden.set(1);
  for (int j = 0; j < b.cols(); ++j) {
    if (b.col(j) == forbidden) return false;
  }
  return true;
}

std::optional<Permutation> find_similarity_perm(const BoolMatrix& from,
                                                const BoolMatrix& to) {
  if (from.rows() != from.cols() || to.rows() != to.cols()) {
    throw std::invalid_argument("find_similarity_perm: matrices must be square");
  }
  const int n = from.rows();
  if (to.rows() != n) return std::nullopt;
  // Per-vertex signature: (row count, column count, loop). Any similarity
  // must map equal signatures onto each other.
  auto signature = [](const BoolMatrix& m, int v) {
    return std::array<int, 3>{m.row(v).count(), m.col(v).count(),
                              m.at(v, v) ? 1 : 0};
  };
  std::vector<std::array<int, 3>> from_sig, to_sig;
  for (int v = 0; v < n; ++v) {
    from_sig.push_back(signature(from, v));
    to_sig.push_back(signature(to, v));
  }
  {
    auto a = from_sig;
    auto b = to_sig;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }
  std::vector<int> map(static_cast<std::size_t>(n), -1);
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  // map[i] = p(i): entry (i, j) of `to` must equal (p(i), p(j)) of `from`.
  auto dfs = [&](auto&& self, int i) -> bool {
    if (i == n) return true;
    for (int cand = 0; cand < n; ++cand) {
      if (used[static_cast<std::size_t>(cand)]) continue;
      if (from_sig[static_cast<std::size_t>(cand)] != to_sig[static_cast<std::size_t>(i)]) {
        continue;
      }
      bool ok = true;
      for (int j = 0; j <= i && ok; ++j) {
        const int pj = map[static_cast<std::size_t>(j)];
        const int look = (j == i) ? cand : pj;
        ok = from.at(cand, look) == to.at(i, j) && from.at(look, cand) == to.at(j, i);
      }
      if (!ok) continue;
      map[static_cast<std::size_t>(i)] = cand;
      used[static_cast<std::size_t>(cand)] = 1;
      if (self(self, i + 1)) return true;
      used[static_cast<std::size_t>(cand)] = 0;
      map[static_cast<std::size_t>(i)] = -1;
    }
    return false;
  };
  if (!dfs(dfs, 0)) return std::nullopt;
  return Permutation(std::move(map));
}

bool are_permutation_similar(const BoolMatrix& a, const BoolMatrix& b) {
  return find_similarity_perm(a, b).has_value();
}

namespace {

/// Tries to read `q` as the parametric pattern of `kind`: pick the feeder
/// vertex (the one principal vertex with extra out-arcs), walk the principal
/// cycle it lies on, then verify the relabeling reproduces the pattern.
std::optional<FamilySpec> match_table1_kind(const PatternMatrix& q,
                                            const std::vector<int>& class_sizes,
                                            FamilyKind kind) {
  const int d = q.rows();
  const int extra_count = (kind == FamilyKind::m3) ? 2 : 1;
  const int b = d - extra_count;
  if (b < 3) return std::nullopt;
  const PatternMatrix target = table1_pattern(kind, b);
  std::vector<Bitset> out;
  for (int v = 0; v < d; ++v) out.push_back(q.row(v));

  auto try_align = [&](int feeder, int succ,
                       const std::vector<int>& extras) -> std::optional<FamilySpec> {
    std::vector<char> is_extra(static_cast<std::size_t>(d), 0);
    for (int x : extras) is_extra[static_cast<std::size_t>(x)] = 1;
    // A looped feeder offers itself as an extra candidate; the roles are
    // disjoint in the pattern, so such an alignment can never verify.
    if (is_extra[static_cast<std::size_t>(feeder)]) return std::nullopt;
    // Walk the cycle feeder -> succ -> ... of length b through all
    // principal vertices; each step must be forced.
    std::vector<int> order{feeder};
    std::vector<char> visited(static_cast<std::size_t>(d), 0);
    visited[static_cast<std::size_t>(feeder)] = 1;
    int cur = feeder;
    for (int step = 1; step < b; ++step) {
      int next = -1;
      bool unique = true;
      out[static_cast<std::size_t>(cur)].for_each_set([&](int w) {
        if (is_extra[static_cast<std::size_t>(w)]) return;
        if (next == -1) {
          next = w;
        } else {
          unique = false;
        }
      });
      if (!unique || next == -1 || visited[static_cast<std::size_t>(next)]) {
        return std::nullopt;
      }
      if (step == 1 && next != succ) return std::nullopt;
      visited[static_cast<std::size_t>(next)] = 1;
      order.push_back(next);
      cur = next;
    }
    if (!out[static_cast<std::size_t>(cur)].test(feeder)) return std::nullopt;
    // The feeder is principal block b-2 (1-based), i.e. index b-3.
    std::vector<int> map(static_cast<std::size_t>(d), -1);
    for (int t = 0; t < b; ++t) map[static_cast<std::size_t>((b - 3 + t) % b)] = order[static_cast<std::size_t>(t)];
    for (int e = 0; e < extra_count; ++e) map[static_cast<std::size_t>(b + e)] = extras[static_cast<std::size_t>(e)];
    Permutation perm(map);
    if (permute_sym(q, perm) != target) return std::nullopt;
    FamilySpec spec;
    spec.kind = kind;
    spec.b = b;
    spec.block_sizes.resize(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
      spec.block_sizes[static_cast<std::size_t>(i)] =
          class_sizes[static_cast<std::size_t>(perm(i))];
    }
    return spec;
  };

  const int feeder_degree = 1 + extra_count;  // cycle successor plus extras
  for (int feeder = 0; feeder < d; ++feeder) {
    if (out[static_cast<std::size_t>(feeder)].count() != feeder_degree) continue;
    std::vector<int> targets = out[static_cast<std::size_t>(feeder)].to_indices();
    for (int si = 0; si < feeder_degree; ++si) {
      std::vector<int> extras;
      for (int t = 0; t < feeder_degree; ++t) {
        if (t != si) extras.push_back(targets[static_cast<std::size_t>(t)]);
      }
      do {
        if (auto spec = try_align(feeder, targets[static_cast<std::size_t>(si)], extras)) {
          return spec;
        }
      } while (std::next_permutation(extras.begin(), extras.end()));
    }
  }
  return std::nullopt;
}

std::optional<FamilySpec> match_fixed_pattern(const PatternMatrix& q,
                                              const std::vector<int>& class_sizes,
                                              FamilyKind kind, int variant) {
  const PatternMatrix target = table23_pattern(kind, variant);
  if (target.rows() != q.rows()) return std::nullopt;
  auto perm = find_similarity_perm(q, target);
  if (!perm) return std::nullopt;
  FamilySpec spec;
  spec.kind = kind;
  spec.variant = variant;
  spec.b = 2;
  spec.block_sizes.resize(static_cast<std::size_t>(q.rows()));
  for (int i = 0; i < q.rows(); ++i) {
    spec.block_sizes[static_cast<std::size_t>(i)] =
        class_sizes[static_cast<std::size_t>((*perm)(i))];
  }
  return spec;
}

}  // namespace

std::optional<FamilySpec> match_extremal(const BoolMatrix& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("match_extremal: matrix must be square");
  }
  const QuotientResult q = quotient(m);
  std::vector<int> class_sizes;
  class_sizes.reserve(q.classes.size());
  for (const auto& cls : q.classes) class_sizes.push_back(static_cast<int>(cls.size()));
  for (FamilyKind kind : {FamilyKind::m1, FamilyKind::m2, FamilyKind::m3}) {
    if (auto spec = match_table1_kind(q.pattern, class_sizes, kind)) return spec;
  }
  for (int variant = 1; variant <= 3; ++variant) {
    if (auto spec = match_fixed_pattern(q.pattern, class_sizes, FamilyKind::t2, variant)) {
      return spec;
    }
  }
  for (int variant = 1; variant <= 18; ++variant) {
    if (auto spec = match_fixed_pattern(q.pattern, class_sizes, FamilyKind::t3, variant)) {
      return spec;
    }
  }
  return std::nullopt;
}

}  // namespace bmat
