#include <doctest.h>

#include <random>

#include "tiled/errors.hpp"
#include "tiled/permutation.hpp"

#include "support/generators.hpp"

using tiled::Permutation;

TEST_CASE("cycle notation round trip") {
  const Permutation p = Permutation::from_cycles(4, "(1 3)(2 4)");
  CHECK(p(0) == 2);
  CHECK(p(1) == 3);
  CHECK(p.cycle_string() == "(1 3)(2 4)");

  CHECK(Permutation(5).cycle_string() == "()");
  CHECK(Permutation::from_cycles(5, "()").is_identity());
  CHECK(Permutation::from_cycles(3, "(1 2 3)").cycle_string() == "(1 2 3)");
  CHECK(Permutation::from_cycles(6, "(2,5) (3 4)").cycle_string() ==
        "(2 5)(3 4)");
  // fixed points are omitted
  CHECK(Permutation::from_cycles(5, "(4 5)").cycle_string() == "(4 5)");
}

TEST_CASE("cycle notation rejects malformed input") {
  CHECK_THROWS_AS(Permutation::from_cycles(3, "(1 4)"), tiled::error);
  CHECK_THROWS_AS(Permutation::from_cycles(3, "(1 1)"), tiled::error);
  CHECK_THROWS_AS(Permutation::from_cycles(3, "(1 2"), tiled::error);
  CHECK_THROWS_AS(Permutation::from_cycles(3, "1 2"), tiled::error);
  CHECK_THROWS_AS(Permutation::from_images({0, 0, 1}), tiled::error);
}

TEST_CASE("composition and inverse") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + int(rng() % 7);
    const Permutation a = testgen::random_permutation(rng, n);
    const Permutation b = testgen::random_permutation(rng, n);
    const Permutation ab = a.after(b);
    for (int i = 0; i < n; ++i) CHECK(ab(i) == a(b(i)));
    CHECK(a.after(a.inverse()).is_identity());
    CHECK(a.inverse().after(a).is_identity());
    CHECK(Permutation::from_cycles(n, a.cycle_string()) == a);
  }
}

TEST_CASE("cycle lengths cover all points") {
  const Permutation p = Permutation::from_cycles(6, "(1 2 3)(5 6)");
  auto lens = p.cycle_lengths();
  std::sort(lens.begin(), lens.end());
  CHECK(lens == std::vector<int>{1, 2, 3});
}
