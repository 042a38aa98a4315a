#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "godgraph/perm.hpp"
#include "godgraph/util.hpp"

using namespace godgraph;

TEST_CASE("identity and composition") {
  const Perm id = identity_perm(5);
  CHECK(is_identity(id));
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    Perm p = identity_perm(8);
    std::shuffle(p.begin(), p.end(), rng);
    CHECK(is_identity(compose(p, inverse(p))));
    CHECK(is_identity(compose(inverse(p), p)));
    CHECK(compose(p, identity_perm(8)) == p);
    CHECK(compose(identity_perm(8), p) == p);
  }
}

TEST_CASE("composition applies the left factor last") {
  // a = (0 1), b = (1 2) on three points: (a*b)(2) = a(b(2)) = a(1) = 0.
  const Perm a = {1, 0, 2};
  const Perm b = {0, 2, 1};
  const Perm ab = compose(a, b);
  CHECK(ab == Perm{1, 2, 0});
}

TEST_CASE("rank and unrank are inverse and lexicographic") {
  for (int n = 1; n <= 6; ++n) {
    const std::uint64_t total = factorial(n);
    Perm prev;
    for (std::uint64_t r = 0; r < total; ++r) {
      const Perm p = perm_unrank(n, r);
      CHECK(perm_rank(p) == r);
      if (r > 0) CHECK(std::lexicographical_compare(prev.begin(), prev.end(), p.begin(), p.end()));
      prev = p;
    }
  }
  CHECK(perm_rank(identity_perm(9)) == 0);
}

TEST_CASE("factorial") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(1) == 1);
  CHECK(factorial(6) == 720);
  CHECK(factorial(12) == 479001600ull);
}

TEST_CASE("byte packing round trip") {
  std::mt19937 rng(11);
  for (const int n : {1, 7, 30, 200, 300}) {
    Perm p = identity_perm(n);
    std::shuffle(p.begin(), p.end(), rng);
    const std::string bytes = pack_perm(p);
    CHECK(unpack_perm(bytes, n) == p);
    if (n <= 255) CHECK(bytes.size() == static_cast<std::size_t>(n));
    else CHECK(bytes.size() == static_cast<std::size_t>(2 * n));
  }
}

TEST_CASE("cycle type lists nontrivial cycle lengths, longest first") {
  CHECK(cycle_type(identity_perm(4)).empty());
  // (0 1)(2 3 4) as an image list.
  CHECK(cycle_type(Perm{1, 0, 3, 4, 2}) == std::vector<int>{3, 2});
}

TEST_CASE("cycle notation parsing is 1-based") {
  const Perm p = parse_perm("(1,2)(3,4,5)", 5);
  CHECK(p == Perm{1, 0, 3, 4, 2});
  // Fixed points are implicit.
  CHECK(parse_perm("(2,5)", 5) == Perm{0, 4, 2, 3, 1});
}

TEST_CASE("image list parsing") {
  CHECK(parse_perm("2 1 3", 3) == Perm{1, 0, 2});
}

TEST_CASE("malformed permutations are rejected") {
  CHECK_THROWS_AS(parse_perm("(1,2)(2,3)", 3), SpecError);  // overlapping cycles
  CHECK_THROWS_AS(parse_perm("(0,2)", 3), SpecError);
  CHECK_THROWS_AS(parse_perm("(1,9)", 3), SpecError);
  CHECK_THROWS_AS(parse_perm("1 1 2", 3), SpecError);
}

TEST_CASE("state cap guard") {
  CHECK_NOTHROW(check_cap(10, "small"));
  try {
    check_cap(state_cap() + 1, "too-big");
    CHECK(false);
  } catch (const StateCapExceeded& ex) {
    CHECK(ex.spec_name == "too-big");
    CHECK(ex.cap_value == state_cap());
  }
}
