#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include "bmat/boolmat.hpp"
#include "bmat/boolrank.hpp"
#include "bmat/bounds.hpp"
#include "bmat/characterize.hpp"
#include "bmat/families.hpp"
#include "bmat/graphprops.hpp"
#include "bmat/harness.hpp"
#include "bmat/scramble.hpp"
#include "doctest.h"
#include "support/testutil.hpp"

using bmat::BoolMatrix;
using bmat::FamilyKind;
using bmat::FamilySpec;
using bmat::Permutation;

namespace {

/// Reorders the inner dimension of a factorization; the product A B is
/// unchanged, B A is conjugated.
bmat::Factorization reorder_width(const bmat::Factorization& f,
                                  const std::vector<int>& order) {
  BoolMatrix a(f.a.rows(), f.width);
  BoolMatrix b(f.width, f.b.cols());
  for (int i = 0; i < f.width; ++i) {
    for (int r = 0; r < f.a.rows(); ++r)
      if (f.a.at(r, order[static_cast<std::size_t>(i)])) a.set(r, i);
    for (int c = 0; c < f.b.cols(); ++c)
      if (f.b.at(order[static_cast<std::size_t>(i)], c)) b.set(i, c);
  }
  return {std::move(a), std::move(b), f.width};
}

}  // namespace

TEST_SUITE("characterize") {

TEST_CASE("quotient groups vertices with equal rows and columns") {
  const BoolMatrix m = BoolMatrix::from_strings({
      "111111111", "111111111", "111111111", "111111111",
      "111100000", "111100000",
      "000011111", "000011111", "000011111"});
  const auto q = bmat::quotient(m);
  CHECK(q.pattern == BoolMatrix::from_strings({"111", "100", "011"}));
  CHECK(q.classes == std::vector<std::vector<int>>{{0, 1, 2, 3}, {4, 5}, {6, 7, 8}});
}

TEST_CASE("quotient of a matrix with all classes trivial is the matrix") {
  const BoolMatrix m = BoolMatrix::from_strings({"010", "001", "110"});
  const auto q = bmat::quotient(m);
  CHECK(q.pattern == m);
  CHECK(q.classes.size() == 3);
  CHECK_THROWS_AS(bmat::quotient(BoolMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("expanding a quotient reproduces the matrix up to block order") {
  std::mt19937_64 rng(6001);
  for (int trial = 0; trial < 60; ++trial) {
    const BoolMatrix seed = testutil::random_matrix(rng, 4, 4, 0.5);
    const auto core = bmat::quotient(seed);
    const int blocks = core.pattern.rows();
    std::vector<int> sizes(static_cast<std::size_t>(blocks), 1);
    std::uniform_int_distribution<int> pick(0, blocks - 1);
    for (int extra = 0; extra < 6; ++extra) ++sizes[static_cast<std::size_t>(pick(rng))];
    const BoolMatrix m = bmat::expand_pattern(core.pattern, sizes);

    const auto q = bmat::quotient(m);
    CHECK(q.pattern == core.pattern);
    std::vector<int> got_sizes;
    std::vector<int> concat;
    for (const auto& cls : q.classes) {
      got_sizes.push_back(static_cast<int>(cls.size()));
      concat.insert(concat.end(), cls.begin(), cls.end());
    }
    CHECK(got_sizes == sizes);
    CHECK(bmat::permute_sym(m, Permutation(concat)) ==
          bmat::expand_pattern(q.pattern, got_sizes));
  }
}

TEST_CASE("extremality test and rank-bound attainment") {
  CHECK(bmat::is_extremal(bmat::table1(FamilyKind::m1, 3, {1, 1, 1, 1})) == true);
  CHECK(bmat::is_extremal(bmat::table1(FamilyKind::m3, 5, {1, 2, 1, 1, 1, 2, 1})) ==
        true);
  CHECK(bmat::is_extremal(bmat::table23(FamilyKind::t2, 1, {1, 1, 1})) == true);
  CHECK(bmat::is_extremal(bmat::table23(FamilyKind::t3, 18, {2, 1, 1, 2})) == true);
  // Full rank or rank 1 is outside the 2..n-1 window.
  CHECK(bmat::is_extremal(bmat::wielandt(5)) == false);
  CHECK(bmat::is_extremal(BoolMatrix::ones(4, 4)) == false);
  const BoolMatrix full = BoolMatrix::from_strings({"110", "011", "101"});
  REQUIRE(bmat::boolean_rank(full) == 3);
  CHECK(bmat::is_extremal(full) == false);
  // Rank in range, index below the bound.
  BoolMatrix j_minus = BoolMatrix::ones(4, 4);
  j_minus.set(0, 0, false);
  REQUIRE(bmat::boolean_rank(j_minus) == 2);
  REQUIRE(bmat::scrambling_index(j_minus).k == 1);
  CHECK(bmat::is_extremal(j_minus) == false);

  CHECK_THROWS_AS(bmat::is_extremal(BoolMatrix(2, 3)), std::invalid_argument);
  CHECK_THROWS_AS(bmat::is_extremal(BoolMatrix::identity(3)), std::domain_error);

  bmat::RankBudget tight;
  tight.max_dim = 3;
  CHECK(bmat::is_extremal(bmat::wielandt(5), tight) == std::nullopt);
}

TEST_CASE("factor conditions for the rank-b bound") {
  for (int b = 3; b <= 6; ++b)
    for (FamilyKind kind : {FamilyKind::m1, FamilyKind::m2, FamilyKind::m3}) {
      const int blocks = kind == FamilyKind::m3 ? b + 2 : b + 1;
      const auto f =
          bmat::table1_factorization(kind, b, std::vector<int>(blocks, 1));
      CHECK(bmat::extremal_factor_conditions(f.a, f.b));
    }

  // Perturbations breaking exactly one condition each.
  const BoolMatrix a0 = BoolMatrix::from_strings({"010", "001", "100", "100"});
  const BoolMatrix b0 = BoolMatrix::from_strings({"1000", "0101", "0010"});
  REQUIRE(bmat::extremal_factor_conditions(a0, b0));

  CHECK_FALSE(bmat::extremal_factor_conditions(BoolMatrix::ones(4, 3),
                                               BoolMatrix::ones(3, 4)));

  // Replace the only e_3 row by e_1 + e_3; B A stays the same.
  const BoolMatrix a_no_unit = BoolMatrix::from_strings({"010", "101", "100", "100"});
  CHECK(bmat::multiply(b0, a_no_unit) == bmat::wielandt(3));
  CHECK_FALSE(bmat::extremal_factor_conditions(a_no_unit, b0));

  // Turn the last column of B into e_2 + e_3; B A stays the same.
  const BoolMatrix b_sum_col = BoolMatrix::from_strings({"1000", "0101", "0011"});
  CHECK(bmat::multiply(b_sum_col, a0) == bmat::wielandt(3));
  CHECK_FALSE(bmat::extremal_factor_conditions(a0, b_sum_col));

  CHECK_THROWS_AS(bmat::extremal_factor_conditions(a0, BoolMatrix(3, 3)),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      bmat::extremal_factor_conditions(BoolMatrix(4, 2), BoolMatrix(2, 4)),
      std::invalid_argument);
}

TEST_CASE("some rectangle order of a computed factorization meets the conditions") {
  const BoolMatrix m = bmat::table1(FamilyKind::m2, 3, {2, 1, 1, 1});
  const auto f = bmat::rank_factorization(m);
  REQUIRE(f.has_value());
  REQUIRE(f->width == 3);
  std::vector<int> order(3);
  std::iota(order.begin(), order.end(), 0);
  bool any = false;
  do {
    const auto g = reorder_width(*f, order);
    CHECK(bmat::multiply(g.a, g.b) == m);
    any = any || bmat::extremal_factor_conditions(g.a, g.b);
  } while (std::next_permutation(order.begin(), order.end()));
  CHECK(any);
}

TEST_CASE("factor conditions for rank 2") {
  const BoolMatrix a_w = BoolMatrix::from_strings({"01", "10", "10"});
  const BoolMatrix b_w = BoolMatrix::from_strings({"101", "010"});
  REQUIRE(bmat::multiply(b_w, a_w) == bmat::wielandt(2));
  CHECK(bmat::rank2_factor_conditions(a_w, b_w));
  CHECK(bmat::multiply(a_w, b_w) == bmat::table23(FamilyKind::t2, 1, {1, 1, 1}));

  // Missing unit row (B A is still all ones).
  CHECK_FALSE(bmat::rank2_factor_conditions(
      BoolMatrix::from_strings({"11", "01", "11"}),
      BoolMatrix::from_strings({"100", "001"})));
  // All-ones column in B.
  CHECK_FALSE(bmat::rank2_factor_conditions(
      BoolMatrix::from_strings({"01", "10", "10"}),
      BoolMatrix::from_strings({"101", "110"})));
  // B A is the 2-cycle: not primitive, conditions must reject it.
  CHECK_FALSE(bmat::rank2_factor_conditions(
      BoolMatrix::from_strings({"10", "01", "10"}),
      BoolMatrix::from_strings({"010", "101"})));
  CHECK_THROWS_AS(
      bmat::rank2_factor_conditions(BoolMatrix(4, 3), BoolMatrix(3, 4)),
      std::invalid_argument);

  // Every fixed-pattern instance admits an order of its two rectangles
  // satisfying the conditions.
  for (int v = 1; v <= 3; ++v) {
    const int blocks = bmat::table23_pattern(FamilyKind::t2, v).rows();
    const BoolMatrix m =
        bmat::table23(FamilyKind::t2, v, std::vector<int>(blocks, 1));
    const auto f = bmat::rank_factorization(m);
    REQUIRE(f.has_value());
    const bool direct = bmat::rank2_factor_conditions(f->a, f->b);
    const auto swapped = reorder_width(*f, {1, 0});
    CHECK((direct || bmat::rank2_factor_conditions(swapped.a, swapped.b)));
  }
  for (int v = 1; v <= 18; ++v) {
    const int blocks = bmat::table23_pattern(FamilyKind::t3, v).rows();
    const BoolMatrix m =
        bmat::table23(FamilyKind::t3, v, std::vector<int>(blocks, 1));
    const auto f = bmat::rank_factorization(m);
    REQUIRE(f.has_value());
    CHECK(bmat::multiply(f->b, f->a) == BoolMatrix::ones(2, 2));
    const auto swapped = reorder_width(*f, {1, 0});
    CHECK((bmat::rank2_factor_conditions(f->a, f->b) ||
           bmat::rank2_factor_conditions(swapped.a, swapped.b)));
  }
}

TEST_CASE("similarity search finds conjugating permutations") {
  std::mt19937_64 rng(6002);
  for (int trial = 0; trial < 50; ++trial) {
    const BoolMatrix m = testutil::random_matrix(rng, 7, 7, 0.4);
    const Permutation p = testutil::random_permutation(rng, 7);
    const BoolMatrix conj = bmat::permute_sym(m, p);
    const auto found = bmat::find_similarity_perm(m, conj);
    REQUIRE(found.has_value());
    CHECK(bmat::permute_sym(m, *found) == conj);
    CHECK(bmat::are_permutation_similar(conj, m));
  }
  const BoolMatrix a = BoolMatrix::from_strings({"010", "001", "100"});
  CHECK(bmat::find_similarity_perm(a, a) == Permutation::identity(3));
  CHECK_FALSE(bmat::are_permutation_similar(a, BoolMatrix::from_strings(
                                                   {"110", "001", "100"})));
  CHECK_FALSE(bmat::are_permutation_similar(a, BoolMatrix::identity(4)));
  CHECK_THROWS_AS(bmat::find_similarity_perm(a, BoolMatrix(3, 4)),
                  std::invalid_argument);
}

TEST_CASE("similar matrices share every invariant") {
  std::mt19937_64 rng(6003);
  for (int trial = 0; trial < 25; ++trial) {
    const BoolMatrix m = testutil::random_primitive(rng, 6);
    const BoolMatrix conj =
        bmat::permute_sym(m, testutil::random_permutation(rng, 6));
    CHECK(bmat::girth(conj) == bmat::girth(m));
    CHECK(bmat::exponent(conj) == bmat::exponent(m));
    CHECK(bmat::scrambling_index(conj).k == bmat::scrambling_index(m).k);
    CHECK(bmat::boolean_rank(conj) == bmat::boolean_rank(m));
  }
}

TEST_CASE("recognition recovers the generating family") {
  const auto m2 = bmat::match_extremal(bmat::table1(FamilyKind::m2, 4, {1, 2, 1, 1, 1}));
  REQUIRE(m2.has_value());
  CHECK(m2->kind == FamilyKind::m2);
  CHECK(m2->b == 4);
  CHECK(std::accumulate(m2->block_sizes.begin(), m2->block_sizes.end(), 0) == 6);
  std::vector<int> sorted = m2->block_sizes;
  std::sort(sorted.begin(), sorted.end());
  CHECK(sorted == std::vector<int>{1, 1, 1, 1, 2});

  const auto t2 = bmat::match_extremal(bmat::table23(FamilyKind::t2, 3, {1, 1, 1, 1}));
  REQUIRE(t2.has_value());
  CHECK(t2->kind == FamilyKind::t2);
  CHECK(t2->variant == 3);
  CHECK(t2->block_sizes == std::vector<int>{1, 1, 1, 1});

  CHECK_FALSE(bmat::match_extremal(BoolMatrix::ones(5, 5)).has_value());
  CHECK_FALSE(bmat::match_extremal(bmat::wielandt(6)).has_value());
  // The cycle-plus-chord shape of order b+1 is not an expansion of the
  // rank-b patterns even though it contains the same principal cycle.
  CHECK_FALSE(bmat::match_extremal(bmat::wielandt(4)).has_value());
  CHECK_FALSE(bmat::match_extremal(bmat::wielandt(5)).has_value());
  CHECK_THROWS_AS(bmat::match_extremal(BoolMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("recognition is sound on random family instances") {
  std::mt19937_64 rng(6004);
  std::uniform_int_distribution<int> kind_pick(0, 4);
  for (int trial = 0; trial < 120; ++trial) {
    FamilySpec spec;
    switch (kind_pick(rng)) {
      case 0: spec = {FamilyKind::m1, 0, 3 + trial % 4, {}}; break;
      case 1: spec = {FamilyKind::m2, 0, 3 + trial % 4, {}}; break;
      case 2: spec = {FamilyKind::m3, 0, 3 + trial % 4, {}}; break;
      case 3: spec = {FamilyKind::t2, 1 + trial % 3, 2, {}}; break;
      default: spec = {FamilyKind::t3, 1 + trial % 18, 2, {}}; break;
    }
    const int blocks = bmat::block_count(spec);
    std::vector<int> sizes(static_cast<std::size_t>(blocks), 1);
    std::uniform_int_distribution<int> pick(0, blocks - 1);
    for (int extra = 0; extra < 4; ++extra) ++sizes[static_cast<std::size_t>(pick(rng))];
    spec.block_sizes = sizes;
    const BoolMatrix m = bmat::generate(spec);

    const auto recovered = bmat::match_extremal(m);
    REQUIRE(recovered.has_value());
    CHECK(recovered->kind == spec.kind);
    CHECK(recovered->b == spec.b);
    // The matcher may report an earlier permutation-similar variant, so
    // the contract is regeneration up to similarity, not spec equality.
    const BoolMatrix again = bmat::generate(*recovered);
    REQUIRE(again.rows() == m.rows());
    CHECK(bmat::are_permutation_similar(m, again));
  }
}

TEST_CASE("recognition and extremality agree on every order-3 matrix") {
  for (std::uint64_t bits = 0; bits < 512; ++bits) {
    const BoolMatrix m = bmat::matrix_from_bits(3, bits);
    if (!bmat::is_primitive(m)) continue;
    const auto extremal = bmat::is_extremal(m);
    REQUIRE(extremal.has_value());
    const auto matched = bmat::match_extremal(m);
    CHECK(*extremal == matched.has_value());
    if (matched) {
      const BoolMatrix again = bmat::generate(*matched);
      CHECK(bmat::are_permutation_similar(m, again));
    }
  }
}

TEST_CASE("matcher survives a looped candidate feeder") {
  // Vertex 1 has a loop plus one out-arc, so it looks like a feeder whose
  // own loop target is offered as the extra block. That alignment must be
  // rejected, not asserted into a permutation.
  const BoolMatrix m =
      BoolMatrix::from_strings({"0101", "0110", "1000", "1000"});
  REQUIRE(bmat::is_primitive(m));
  const auto matched = bmat::match_extremal(m);
  const auto extremal = bmat::is_extremal(m);
  REQUIRE(extremal.has_value());
  CHECK(*extremal == matched.has_value());
}

}  // TEST_SUITE
