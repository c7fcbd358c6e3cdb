#include <random>

#include "doctest.h"
#include "mildcert/cohomology.hpp"
#include "mildcert/error.hpp"
#include "mildcert/kummer.hpp"
#include "oracle.hpp"

using namespace mildcert;

TEST_CASE("S-elements") {
  CHECK(s_element(7, {11}).value == 7);
  CHECK(s_element(13, {}).value == 13);
  CHECK_THROWS(s_element(11, {11}));
}

TEST_CASE("local condition matrix") {
  const auto m = local_condition_matrix({13}, {11}, 3);
  REQUIRE(m.rows() == 1);
  REQUIRE(m.cols() == 1);
  CHECK(m(0, 0) != 0);
  CHECK(local_condition_matrix({}, {11, 13}, 3).rows() == 0);
  CHECK(local_condition_matrix({}, {11, 13}, 3).cols() == 2);
  CHECK(local_condition_matrix({5}, {11}, 3).rows() == 0);
  CHECK_THROWS(local_condition_matrix({11}, {11}, 3));
}

TEST_CASE("Kummer dimensions") {
  CHECK(kummer_dimension({}, {11, 13}, 3) == 2);
  CHECK(kummer_dimension({13}, {11}, 3) == 0);
  CHECK(kummer_dimension({7}, {}, 3) == 0);
  CHECK(sha2_dimension({13}, {11}, 3) == 0);
  CHECK(sha2_dimension({}, {11}, 3) == 1);
  CHECK(sha2_dimension({}, {}, 3) == 0);
}

TEST_CASE("drop-one") {
  CHECK(drop_one_holds({7, 13}, {11}, 3));
  CHECK_FALSE(drop_one_holds({13}, {11}, 3));
  CHECK(drop_one_holds({}, {}, 3));
  CHECK_THROWS(drop_one_holds({5}, {}, 3));
}

TEST_CASE("ramification in the elementary quotient") {
  CHECK(ramifies_in_elementary(7, {7}, {}, 3));
  CHECK_FALSE(ramifies_in_elementary(5, {5}, {}, 3));
  CHECK(ramifies_in_elementary(13, {7, 13}, {11}, 3));
  CHECK_THROWS(ramifies_in_elementary(7, {13}, {}, 3));
}

TEST_CASE("local dimensions") {
  const auto a = local_dims(7, 3, false);
  CHECK(a.h2_x == 1);
  CHECK(a.h3_x == 1);
  const auto b = local_dims(5, 3, true);
  CHECK(b.h2_x == 1);
  CHECK(b.h3_x == 0);
  const auto c = local_dims(3, 3, false);
  CHECK(c.h2_x == 1);
  CHECK(c.h3_x == 0);
  CHECK(local_delta(7, 3) == 1);
  CHECK(local_delta(5, 3) == 0);
}

TEST_CASE("global profiles") {
  const auto a = global_profile({13}, {}, 3);
  CHECK(a.h == std::array<std::size_t, 4>{1, 1, 1, 0});
  CHECK(a.chi == 1);
  const auto b = global_profile({13}, {11}, 3);
  CHECK(b.h == std::array<std::size_t, 4>{1, 0, 1, 0});
  CHECK(b.chi == 2);
  const auto c = global_profile({}, {}, 3);
  CHECK(c.h == std::array<std::size_t, 4>{1, 0, 0, 0});
  CHECK(c.chi == 1);
  const auto d = global_profile({3, 7}, {}, 3);
  CHECK(d.h[1] == 2);
  CHECK(d.chi == 0);
  CHECK_THROWS(global_profile({11}, {11}, 3));
}

TEST_CASE("h1 through characters") {
  CHECK(h1_via_characters({13}, {11}, 3) == 0);
  CHECK(h1_via_characters({7, 13}, {}, 3) == 2);
  CHECK(h1_via_characters({7, 13}, {11}, 3) == 1);
  CHECK_THROWS_WITH(h1_via_characters({3, 7}, {}, 3), doctest::Contains("tame-only"));
}

TEST_CASE("excision and reduction") {
  CHECK(excision_identity_holds({13}, {11}, 3));
  CHECK(excision_identity_holds({}, {}, 3));
  CHECK(s_min({5, 7, 13}, 3) == PrimeSet{7, 13});
  CHECK(s_min({3, 5}, 3) == PrimeSet{3});
  CHECK(s_min({}, 3).empty());
}

TEST_CASE("Kummer dimension against brute force on small sets") {
  const auto primes = oracle::primes_below(50);
  std::mt19937 rng(77);
  std::uniform_int_distribution<std::size_t> pick(0, primes.size() - 1);
  for (Integer p : {3, 5, 7}) {
    for (int trial = 0; trial < 300; ++trial) {
      PrimeSet S;
      PrimeSet T;
      for (int i = 0; i < 3; ++i) S.push_back(primes[pick(rng)]);
      for (int i = 0; i < 2; ++i) T.push_back(primes[pick(rng)]);
      S = make_prime_set(S);
      T = set_difference(make_prime_set(T), S);
      CHECK(kummer_dimension(S, T, p) == oracle::kummer_dimension(S, T, p));
    }
  }
}
