#include "bmat/bounds.hpp"

#include <stdexcept>
#include <utility>

#include "bmat/graphprops.hpp"
#include "bmat/scramble.hpp"

namespace bmat {

long long order_scrambling_bound(long long n) {
  if (n < 2) throw std::invalid_argument("order_scrambling_bound: n must be >= 2");
  return ((n - 1) * (n - 1) + 2) / 2;  // ceil(((n-1)^2 + 1) / 2)
}

long long girth_scrambling_bound(long long n, long long s) {
  if (n < 1) throw std::invalid_argument("girth_scrambling_bound: n must be >= 1");
  if (s < 1 || s > n) {
    throw std::invalid_argument("girth_scrambling_bound: need 1 <= s <= n");
  }
  if (s % 2 == 1) return n - s + (s - 1) / 2 * n;
  return n - s + (n - 1) * s / 2;
}

long long rank_scrambling_bound(long long b) {
  if (b < 2) throw std::invalid_argument("rank_scrambling_bound: b must be >= 2");
  return order_scrambling_bound(b) + 1;
}

long long rank_exponent_bound(long long b) {
  if (b < 2) throw std::invalid_argument("rank_exponent_bound: b must be >= 2");
  return (b - 1) * (b - 1) + 2;
}

namespace {

BoundCheck evaluated(std::string name, long long bound, long long actual) {
  BoundCheck c;
  c.name = std::move(name);
  c.bound_value = bound;
  c.actual = actual;
  c.satisfied = actual <= bound;
  c.attained = actual == bound;
  return c;
}

BoundCheck skipped(std::string name, long long actual) {
  BoundCheck c;
  c.name = std::move(name);
  c.actual = actual;
  c.status = CheckStatus::skipped;
  return c;
}

}  // namespace

std::vector<BoundCheck> evaluate_checks(const Invariants& inv, const CheckSelection& sel) {
  if (inv.n < 1) throw std::invalid_argument("evaluate_checks: n must be >= 1");
  std::vector<BoundCheck> out;
  if (inv.n == 1) return out;
  if (sel.contains(BoundId::order_bound)) {
    out.push_back(
        evaluated("order", order_scrambling_bound(inv.n), inv.scrambling_index));
  }
  if (sel.contains(BoundId::girth_bound)) {
    out.push_back(evaluated("girth", girth_scrambling_bound(inv.n, inv.girth),
                            inv.scrambling_index));
  }
  if (sel.contains(BoundId::rank_scrambling)) {
    if (!inv.boolean_rank) {
      out.push_back(skipped("rank_scrambling", inv.scrambling_index));
    } else if (*inv.boolean_rank >= 2) {
      out.push_back(evaluated("rank_scrambling",
                              rank_scrambling_bound(*inv.boolean_rank),
                              inv.scrambling_index));
    }
  }
  if (sel.contains(BoundId::rank_exponent)) {
    if (!inv.boolean_rank) {
      out.push_back(skipped("rank_exponent", inv.exponent));
    } else if (*inv.boolean_rank >= 2) {
      out.push_back(evaluated("rank_exponent", rank_exponent_bound(*inv.boolean_rank),
                              inv.exponent));
    }
  }
  return out;
}

std::vector<BoundCheck> check_all(const BoolMatrix& m, const RankBudget& budget,
                                  const CheckSelection& sel) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("check_all: matrix must be square");
  }
  if (!is_primitive(m)) throw std::domain_error("check_all: matrix is not primitive");
  Invariants inv;
  inv.n = m.rows();
  inv.girth = girth(m);
  inv.exponent = exponent(m);
  inv.scrambling_index = scrambling_index(m).k;
  if (sel.wants_rank()) inv.boolean_rank = boolean_rank(m, budget);
  return evaluate_checks(inv, sel);
}

}  // namespace bmat
