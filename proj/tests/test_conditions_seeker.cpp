#include <algorithm>

#include "doctest.h"
#include "mildcert/cohomology.hpp"
#include "mildcert/conditions.hpp"
#include "mildcert/error.hpp"
#include "mildcert/kummer.hpp"
#include "mildcert/seeker.hpp"
#include "oracle.hpp"

using namespace mildcert;

namespace {

SearchConfig small_bounds() {
  SearchConfig cfg;
  cfg.max_prime = 2'000'000;
  cfg.max_candidates_per_slot = 200'000;
  return cfg;
}

std::vector<TamePrime> tame(std::initializer_list<Integer> qs, Integer p = 3) {
  std::vector<TamePrime> out;
  for (Integer q : qs) out.push_back(make_tame_prime(q, p));
  return out;
}

}  // namespace

TEST_CASE("splitting in the unit Kummer field") {
  CHECK(splits_in_unit_kummer_field(make_tame_prime(13, 3), {}));
  CHECK_FALSE(splits_in_unit_kummer_field(make_tame_prime(13, 3), {11}));
  CHECK(splits_in_unit_kummer_field(make_tame_prime(31, 5), {11}) == oracle::is_pth_power(11, 31, 5));
  CHECK_THROWS(splits_in_unit_kummer_field(make_tame_prime(11, 5), {11}));
}

TEST_CASE("eta characters") {
  const auto eta = eta_character(make_tame_prime(13, 3), {}, 3);
  CHECK(eta_value(eta, 3).value == 1);
  CHECK(eta_value(eta, 1).value == 0);
  CHECK(eta_value(eta, oracle::powmod(5, 3, 13)).value == 0);
  CHECK_THROWS_AS(eta_character(make_tame_prime(13, 3), {11}, 3), Error);
  CHECK_THROWS(eta_value(eta, 26));
}

TEST_CASE("Frobenius vectors") {
  const auto v = frobenius_vector(13, tame({7}), {});
  REQUIRE(v.vec.size() == 1);
  CHECK(v.vec(0) == 0);
  CHECK(frobenius_vector(13, {}, {}).vec.size() == 0);
  CHECK_THROWS_WITH(frobenius_vector(7, tame({7}), {}), doctest::Contains("ramified place"));
}

TEST_CASE("linking condition, clause by clause") {
  // own slot: l(7,13) = 2 != 0, but Frob_13 restricted to {7} is 0, in every span.
  const ConditionBa single(0, tame({7}), {}, {});
  const auto out = single.evaluate(13);
  CHECK_FALSE(out.satisfied);
  CHECK(out.first_failure == BaClause::kFrobeniusOffInertia);

  // q = 31 against S0 = (7, 13), slot 2
  const ConditionBa two(1, tame({7, 13}), {}, {});
  // 7 is not a cube mod 31, so the slot-1 prime does not split
  REQUIRE_FALSE(oracle::is_pth_power(7, 31, 3));
  const auto r = two.evaluate(31);
  CHECK_FALSE(r.satisfied);
  CHECK(r.first_failure == BaClause::kOtherSlotsSplit);

  // q with l(p_a, q) = 0 fails the own-slot clause
  const ConditionBa own(0, tame({7}), {}, {});
  for (Integer q : {19, 37, 61, 67, 73, 79}) {
    if (oracle::is_pth_power(7, q, 3)) {
      CHECK_FALSE(own.evaluate(q).satisfied);
      CHECK(own.evaluate(q).first_failure == BaClause::kOwnSlotInert);
    }
  }
  CHECK_THROWS(own.evaluate(7));
  CHECK_THROWS(own.evaluate(17));
  CHECK_THROWS(ConditionBa(1, tame({7}), {}, {}));
}

TEST_CASE("the found linking primes satisfy every clause by brute force") {
  const std::vector<Integer> S0{7, 13};
  const auto Q = find_linking_primes(S0, {}, {}, 3, small_bounds());
  CHECK(Q == std::vector<Integer>{163, 313});
  for (std::size_t a = 0; a < S0.size(); ++a) {
    const Integer q = Q[a];
    CHECK(q % 3 == 1);
    CHECK_FALSE(oracle::is_pth_power(S0[a], q, 3));
    CHECK(oracle::is_pth_power(S0[1 - a], q, 3));
  }
  CHECK(oracle::is_pth_power(Q[0], Q[1], 3));
  CHECK(oracle::is_pth_power(Q[1], Q[0], 3));
}

TEST_CASE("S0 search") {
  CHECK(find_S0_killing_V({}, AvoidanceSet::divisors_of_p(), 3, small_bounds()) == std::vector<Integer>{7, 13});
  CHECK(find_S0_killing_V({11}, AvoidanceSet::divisors_of_p(), 3, small_bounds()) == std::vector<Integer>{7, 13, 19});
  CHECK(find_S0_killing_V({}, {}, 5, small_bounds()) == std::vector<Integer>{11, 31});
  CHECK(find_S0_killing_V({}, {}, 7, small_bounds()) == std::vector<Integer>{29, 43});

  const PrimeSet T{11, 13};
  const auto S0 = find_S0_killing_V(T, {}, 3, small_bounds());
  CHECK(S0 == std::vector<Integer>{7, 19, 31, 37});
  // brute-force drop-one: every deletion keeps V = 0
  CHECK(oracle::kummer_dimension(S0, T, 3) == 0);
  for (std::size_t i = 0; i < S0.size(); ++i) {
    auto smaller = S0;
    smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(i));
    CHECK(oracle::kummer_dimension(smaller, T, 3) == 0);
  }
  CHECK(s0_defect(make_prime_set(S0), T, 3) == 0);
  CHECK(global_profile(make_prime_set(S0), T, 3).h[1] >= 2);
}

TEST_CASE("a singleton S0 cannot be completed") {
  SearchConfig cfg;
  cfg.max_prime = 100'000;
  cfg.max_candidates_per_slot = 500;
  try {
    (void)find_linking_primes({7}, {}, {}, 3, cfg);
    FAIL("expected exhaustion");
  } catch (const SearchExhausted& e) {
    CHECK(std::string(e.what()).find("slot 1") != std::string::npos);
    CHECK(std::string(e.what()).find("frobenius-outside-inertia") != std::string::npos);
  }
  CHECK(find_linking_primes({}, {}, {}, 3, cfg).empty());
}

TEST_CASE("search bounds are enforced") {
  SearchConfig cfg;
  cfg.max_prime = 10;
  cfg.max_candidates_per_slot = 10;
  CHECK_THROWS_AS(find_S0_killing_V({}, {}, 3, cfg), SearchExhausted);

  AvoidanceSet avoid;
  for (Integer q : oracle::primes_below(2000)) {
    if (q % 3 == 1 && q != 7 && q != 13) avoid.explicit_primes.push_back(q);
  }
  cfg.max_prime = 2000;
  cfg.max_candidates_per_slot = 1000;
  try {
    (void)find_linking_primes({7, 13}, {}, avoid, 3, cfg);
    FAIL("expected exhaustion");
  } catch (const SearchExhausted& e) {
    CHECK(std::string(e.what()).find("search bound exceeded") != std::string::npos);
    CHECK_FALSE(e.trace().empty());
  }
}

TEST_CASE("full seeker run") {
  const auto r = seek_certified_set({13}, {11}, AvoidanceSet::divisors_of_p(), 3, SearchConfig{});
  CHECK(r.marking == PrimeSet{11, 13});
  CHECK(r.T0.empty());
  CHECK(r.S0 == std::vector<Integer>{7, 19, 31, 37});
  CHECK(r.Q == std::vector<Integer>{30211, 284377, 124513, 81876241});
  for (Integer q : r.places()) {
    CHECK(q % 3 == 1);
    CHECK(q != 11);
    CHECK(q != 13);
  }
  CHECK(r.trace.slot_steps.size() == 4);
  CHECK(r.trace.slot_steps.back().candidates_scanned == 2385990);
  CHECK_THROWS(seek_certified_set({11}, {11}, {}, 3, SearchConfig{}));
}
