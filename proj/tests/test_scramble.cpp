#include <algorithm>
#include <random>
#include <stdexcept>

#include "bmat/boolmat.hpp"
#include "bmat/bounds.hpp"
#include "bmat/families.hpp"
#include "bmat/graphprops.hpp"
#include "bmat/harness.hpp"
#include "bmat/scramble.hpp"
#include "doctest.h"
#include "support/reference.hpp"
#include "support/testutil.hpp"

using bmat::BoolMatrix;

TEST_SUITE("scramble") {

TEST_CASE("meet matrix is the product with the transposed power") {
  std::mt19937_64 rng(3001);
  for (int trial = 0; trial < 50; ++trial) {
    const BoolMatrix a = testutil::random_matrix(rng, 6, 6);
    for (int k = 0; k <= 4; ++k) {
      const BoolMatrix p = bmat::power(a, k);
      CHECK(bmat::meet_matrix(a, k) == bmat::multiply(p, bmat::transpose(p)));
    }
  }
  const BoolMatrix a = testutil::random_matrix(rng, 5, 5);
  CHECK(bmat::meet_matrix(a, 0) == BoolMatrix::identity(5));
  CHECK_THROWS_AS(bmat::meet_matrix(a, -1), std::invalid_argument);
  CHECK_THROWS_AS(bmat::meet_matrix(BoolMatrix(2, 3), 1), std::invalid_argument);
}

TEST_CASE("scrambling index agrees with the oracle") {
  for (std::uint64_t bits = 0; bits < 512; ++bits) {
    const BoolMatrix m = bmat::matrix_from_bits(3, bits);
    if (!bmat::is_primitive(m)) {
      CHECK_THROWS_AS(bmat::scrambling_index(m), std::domain_error);
      continue;
    }
    CHECK(bmat::scrambling_index(m).k == ref::scrambling_index(ref::from_bmat(m)));
  }
  std::mt19937_64 rng(3002);
  for (int trial = 0; trial < 120; ++trial) {
    const BoolMatrix m = testutil::random_primitive(rng, 5 + trial % 2);
    CHECK(bmat::scrambling_index(m).k == ref::scrambling_index(ref::from_bmat(m)));
  }
}

TEST_CASE("witness pair fails exactly one step early") {
  std::mt19937_64 rng(3003);
  int nontrivial = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const BoolMatrix m = testutil::random_primitive(rng, 5, 0.3);
    const auto [k, witness] = bmat::scrambling_index(m);
    if (k <= 1) {
      CHECK_FALSE(witness.has_value());
      continue;
    }
    ++nontrivial;
    REQUIRE(witness.has_value());
    const auto [u, v] = *witness;
    CHECK(u < v);
    const BoolMatrix prev = bmat::power(m, k - 1);
    CHECK_FALSE(prev.rows_intersect(u, v));
    CHECK(bmat::local_scrambling_index(m, u, v) == k);
  }
  CHECK(nontrivial > 20);
}

TEST_CASE("order-1 and trivial cases") {
  CHECK(bmat::scrambling_index(BoolMatrix::from_strings({"1"})).k == 1);
  CHECK_FALSE(bmat::scrambling_index(BoolMatrix::from_strings({"1"})).witness_pair);
  CHECK_THROWS_AS(bmat::scrambling_index(BoolMatrix::from_strings({"0"})),
                  std::domain_error);
  CHECK(bmat::scrambling_index(BoolMatrix::ones(4, 4)).k == 1);
}

TEST_CASE("local index agrees with the oracle and caps the global index") {
  for (std::uint64_t bits = 0; bits < 512; ++bits) {
    const BoolMatrix m = bmat::matrix_from_bits(3, bits);
    if (!bmat::is_primitive(m)) continue;
    for (int u = 0; u < 3; ++u)
      for (int v = 0; v < 3; ++v)
        CHECK(bmat::local_scrambling_index(m, u, v) ==
              ref::local_scrambling_index(ref::from_bmat(m), u, v));
  }
  std::mt19937_64 rng(3004);
  for (int trial = 0; trial < 40; ++trial) {
    const BoolMatrix m = testutil::random_primitive(rng, 6);
    const int k = bmat::scrambling_index(m).k;
    int max_local = 0;
    for (int u = 0; u < 6; ++u)
      for (int v = u + 1; v < 6; ++v) {
        const int local = bmat::local_scrambling_index(m, u, v);
        CHECK(local == bmat::local_scrambling_index(m, v, u));
        CHECK(local <= k);
        max_local = std::max(max_local, local);
      }
    CHECK(max_local == k);
    CHECK(bmat::local_scrambling_index(m, 2, 2) == 0);
  }
  CHECK_THROWS_AS(bmat::local_scrambling_index(bmat::wielandt(3), 0, 3),
                  std::invalid_argument);
}

TEST_CASE("largest-index family attains the order scrambling bound") {
  for (int n = 2; n <= 12; ++n)
    CHECK(bmat::scrambling_index(bmat::wielandt(n)).k ==
          bmat::order_scrambling_bound(n));
}

TEST_CASE("scrambling index never exceeds the exponent") {
  std::mt19937_64 rng(3005);
  for (int trial = 0; trial < 60; ++trial) {
    const BoolMatrix m = testutil::random_primitive(rng, 6);
    CHECK(bmat::scrambling_index(m).k <= bmat::exponent(m));
  }
}

}  // TEST_SUITE
