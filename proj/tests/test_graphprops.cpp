#include <random>
#include <stdexcept>

#include "bmat/boolmat.hpp"
#include "bmat/families.hpp"
#include "bmat/graphprops.hpp"
#include "bmat/harness.hpp"
#include "doctest.h"
#include "support/reference.hpp"
#include "support/testutil.hpp"

using bmat::BoolMatrix;

TEST_SUITE("graphprops") {

TEST_CASE("step neighborhood unions out-neighbor rows") {
  const BoolMatrix a = BoolMatrix::from_strings({"010", "001", "110"});
  bmat::Bitset from(3);
  from.set(0);
  from.set(2);
  const bmat::Bitset to = bmat::step_neighborhood(from, a);
  CHECK(to.to_indices() == std::vector<int>{0, 1});
}

TEST_CASE("strong connectivity agrees with all-pairs reachability") {
  for (std::uint64_t bits = 0; bits < 512; ++bits) {
    const BoolMatrix m = bmat::matrix_from_bits(3, bits);
    CHECK(bmat::is_strongly_connected(m) == ref::strongly_connected(ref::from_bmat(m)));
  }
  std::mt19937_64 rng(2001);
  for (int trial = 0; trial < 200; ++trial) {
    const BoolMatrix m = testutil::random_matrix(rng, 7, 7, 0.25);
    CHECK(bmat::is_strongly_connected(m) == ref::strongly_connected(ref::from_bmat(m)));
  }
}

TEST_CASE("girth agrees with the shortest-closed-walk oracle") {
  for (std::uint64_t bits = 0; bits < 512; ++bits) {
    const BoolMatrix m = bmat::matrix_from_bits(3, bits);
    const int expected = ref::girth(ref::from_bmat(m));
    if (expected == -1)
      CHECK_THROWS_AS(bmat::girth(m), std::domain_error);
    else
      CHECK(bmat::girth(m) == expected);
  }
  std::mt19937_64 rng(2002);
  for (int trial = 0; trial < 300; ++trial) {
    const BoolMatrix m = testutil::random_matrix(rng, 8, 8, 0.18);
    const int expected = ref::girth(ref::from_bmat(m));
    if (expected == -1)
      CHECK_THROWS_AS(bmat::girth(m), std::domain_error);
    else
      CHECK(bmat::girth(m) == expected);
  }
}

TEST_CASE("girth spot values") {
  CHECK(bmat::girth(BoolMatrix::from_strings({"01", "10"})) == 2);
  CHECK(bmat::girth(BoolMatrix::from_strings({"11", "10"})) == 1);
  CHECK(bmat::girth(bmat::wielandt(3)) == 2);
  for (int n = 4; n <= 9; ++n) CHECK(bmat::girth(bmat::wielandt(n)) == n - 1);
  CHECK_THROWS_AS(bmat::girth(BoolMatrix::from_strings({"01", "00"})),
                  std::domain_error);
  CHECK_THROWS_AS(bmat::girth(BoolMatrix(1, 1)), std::domain_error);
  CHECK(bmat::girth(BoolMatrix::from_strings({"1"})) == 1);
}

TEST_CASE("primitivity matches the all-positive-power definition") {
  CHECK(bmat::is_primitive(BoolMatrix::from_strings({"1"})));
  CHECK_FALSE(bmat::is_primitive(BoolMatrix::from_strings({"0"})));
  for (std::uint64_t bits = 0; bits < 16; ++bits) {
    const BoolMatrix m = bmat::matrix_from_bits(2, bits);
    CHECK(bmat::is_primitive(m) == ref::is_primitive(ref::from_bmat(m)));
  }
  for (std::uint64_t bits = 0; bits < 512; ++bits) {
    const BoolMatrix m = bmat::matrix_from_bits(3, bits);
    CHECK(bmat::is_primitive(m) == ref::is_primitive(ref::from_bmat(m)));
  }
  std::mt19937_64 rng(2003);
  for (int trial = 0; trial < 200; ++trial) {
    const BoolMatrix m = testutil::random_matrix(rng, 5, 5, 0.3);
    CHECK(bmat::is_primitive(m) == ref::is_primitive(ref::from_bmat(m)));
  }
  CHECK_THROWS_AS(bmat::is_primitive(BoolMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("exponent matches the oracle on primitive matrices") {
  for (std::uint64_t bits = 0; bits < 512; ++bits) {
    const BoolMatrix m = bmat::matrix_from_bits(3, bits);
    const int expected = ref::exponent(ref::from_bmat(m));
    if (expected == -1)
      CHECK_THROWS_AS(bmat::exponent(m), std::domain_error);
    else
      CHECK(bmat::exponent(m) == expected);
  }
  std::mt19937_64 rng(2004);
  for (int trial = 0; trial < 100; ++trial) {
    const BoolMatrix m = testutil::random_primitive(rng, 6);
    CHECK(bmat::exponent(m) == ref::exponent(ref::from_bmat(m)));
  }
}

TEST_CASE("largest-index family attains the order exponent bound") {
  for (int n = 3; n <= 8; ++n)
    CHECK(bmat::exponent(bmat::wielandt(n)) == (n - 1) * (n - 1) + 1);
  CHECK(bmat::exponent(BoolMatrix::ones(4, 4)) == 1);
}

}  // TEST_SUITE
