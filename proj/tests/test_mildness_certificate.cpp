#include "doctest.h"
#include "mildcert/certificate.hpp"
#include "mildcert/certificate_io.hpp"
#include "mildcert/error.hpp"
#include "mildcert/mildness.hpp"
#include "oracle.hpp"

using namespace mildcert;

namespace {

FpVector vec(std::initializer_list<Integer> xs) {
  FpVector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (Integer x : xs) v(i++) = x;
  return v;
}

const Certificate& minimal_certificate() {
  static const Certificate cert = certify({{}, {}, 3, AvoidanceSet::divisors_of_p(), SearchConfig{}});
  return cert;
}

}  // namespace

TEST_CASE("linking table") {
  const auto t = build_linking_table(std::vector<Integer>{7}, std::vector<Integer>{13}, {}, 3);
  CHECK(t.symbol(7, 13) == 2);
  CHECK(t.symbol(13, 7) == 0);
  CHECK(t.roots() == std::map<Integer, Integer>{{7, 3}, {13, 2}});
  CHECK(build_linking_table(std::vector<Integer>{}, PrimeSet{}, 3).size() == 0);
  CHECK_THROWS(build_linking_table(std::vector<Integer>{7, 7}, PrimeSet{}, 3));
  CHECK_THROWS(build_linking_table(std::vector<Integer>{5}, PrimeSet{}, 3));
  CHECK_THROWS(t.symbol(11, 13));

  const auto marked = build_linking_table(std::vector<Integer>{7, 13}, PrimeSet{11}, 3);
  CHECK(marked.symbol(11, 7) == oracle::discrete_log_mod_p(11, 7, 3, 3));
  CHECK(marked.symbol(11, 13) == oracle::discrete_log_mod_p(11, 13, 3, 2));
}

TEST_CASE("cup product of coordinate characters") {
  const auto t = build_linking_table(std::vector<Integer>{7, 19, 61}, PrimeSet{}, 3);
  const FpVector e0 = vec({1, 0, 0});
  const FpVector e2 = vec({0, 0, 1});
  const FpVector c = cup_components(t, e0, e2);
  // component l(61, 7) at 61, -l(7, 61) at 7
  CHECK(c(2) == oracle::discrete_log_mod_p(61, 7, 3, 3));
  CHECK(c(0) == reduce_mod(-oracle::discrete_log_mod_p(7, 61, 3, 2), 3));
  CHECK(c(1) == 0);
  CHECK(is_zero_vector(cup_components(t, e0, e0)));
  const FpVector d = cup_components(t, e2, e0);
  for (Eigen::Index i = 0; i < 3; ++i) CHECK(reduce_mod(c(i) + d(i), 3) == 0);
}

TEST_CASE("character basis") {
  const auto t = build_linking_table(std::vector<Integer>{7}, std::vector<Integer>{13}, {}, 3);
  // Frob_13 restricted to 7 is 0, so no psi_1 exists
  CHECK_THROWS_WITH(character_basis(t, 1), doctest::Contains("psi_1"));
  const auto empty = character_basis(build_linking_table(std::vector<Integer>{}, PrimeSet{}, 3), 0);
  CHECK(empty.chi.empty());
  CHECK_THROWS(character_basis(t, 2));

  const auto& cert = minimal_certificate();
  const auto& b = cert.characters;
  for (std::size_t a = 0; a < b.m; ++a) {
    CHECK(b.chi[a](static_cast<Eigen::Index>(a)) == 1);
    CHECK(cert.table.frobenius_value(b.chi[a], b.m + a) == 0);
    CHECK(cert.table.frobenius_value(b.psi[a], b.m + a) == 1);
    CHECK(cert.psi_evaluations[a].at_q == 1);
  }
}

TEST_CASE("shape check") {
  const auto shaped = FpMatrix::from_rows({{2, 0, 0, 0}, {0, 1, 0, 0}, {1, 2, 1, 0}, {2, 0, 0, 2}}, 3);
  CHECK(shape_check(shaped));
  CHECK(matches_block_shape(shaped));
  const auto off = FpMatrix::from_rows({{2, 1, 0, 0}, {0, 1, 0, 0}, {1, 2, 1, 0}, {2, 0, 0, 2}}, 3);
  CHECK(shape_check(off));
  CHECK_FALSE(matches_block_shape(off));
  CHECK_FALSE(shape_check(FpMatrix::from_rows({{0, 0}, {1, 1}}, 3)));
  CHECK_FALSE(shape_check(FpMatrix::from_rows({{1, 1}, {1, 1}}, 3)));
  CHECK(shape_check(FpMatrix(0, 0, 3)));
}

TEST_CASE("mildness check") {
  const auto shaped = FpMatrix::from_rows({{2, 0}, {1, 1}}, 3);
  CHECK(mildness_check(shaped, true));
  CHECK_FALSE(mildness_check(shaped, false));
  CHECK_FALSE(mildness_check(FpMatrix::from_rows({{1, 1}, {2, 2}}, 3), true));
  CHECK_FALSE(mildness_check(FpMatrix(0, 0, 3), true));
}

TEST_CASE("mild split for four primes") {
  const auto t = build_linking_table(std::vector<Integer>{7, 19, 61, 163}, PrimeSet{}, 3);
  const auto split = find_coordinate_mild_split(t);
  REQUIRE(split);
  CHECK(split->V == std::vector<FpVector>{vec({0, 0, 1, 0}), vec({0, 0, 0, 1})});
  CHECK(satisfies_split_criterion(t, *split));
  MildSplit swapped{split->V, split->U};
  CHECK_FALSE(satisfies_split_criterion(t, swapped));
}

TEST_CASE("minimal certificate") {
  const auto& c = minimal_certificate();
  CHECK(c.seeker.S0 == std::vector<Integer>{7, 13});
  CHECK(c.seeker.Q == std::vector<Integer>{163, 313});
  CHECK(c.m() == 2);
  CHECK(c.cup.entries == FpMatrix::from_rows({{2, 0, 0, 0}, {0, 2, 0, 0}, {1, 0, 1, 0}, {0, 0, 0, 1}}, 3));
  CHECK(c.cup_rank == 4);
  CHECK(c.profile.h == std::array<std::size_t, 4>{1, 4, 4, 0});
  const Verdicts& v = c.verdicts;
  CHECK(v.vdim_zero);
  CHECK(v.drop_one);
  CHECK(v.shape_ok);
  CHECK(v.rank_full);
  CHECK(v.vv_block_zero);
  CHECK(v.mild);
  CHECK(v.cd2);
  CHECK(v.kpi1);
  CHECK(v.ramified_everywhere);
  CHECK(v.local_realization_claim);
}

TEST_CASE("p = 2 is refused") {
  CHECK_THROWS_WITH(certify({{13}, {}, 2, {}, SearchConfig{}}), doctest::Contains("p=2 unsupported"));
}

TEST_CASE("serialization round trip and verification") {
  const auto& c = minimal_certificate();
  const std::string text = serialize(c);
  CHECK(text.find("\"format\": \"mildcert-certificate/1\"") != std::string::npos);
  const Certificate back = parse_certificate(text);
  CHECK(serialize(back) == text);
  CHECK(verify(back));

  Certificate flipped = back;
  flipped.cup.entries.set(0, 0, flipped.cup.entries(0, 0) + 1);
  const auto report = verify_report(flipped);
  CHECK_FALSE(report.ok);
  CHECK(std::find(report.mismatches.begin(), report.mismatches.end(), "cup_matrix.entries") != report.mismatches.end());

  Certificate lied = back;
  lied.verdicts.mild = false;
  CHECK_FALSE(verify(lied));

  CHECK_THROWS_AS(parse_certificate("{}"), Error);
  CHECK_THROWS_AS(parse_certificate("not json"), Error);
}

TEST_CASE("certificates under other primitive roots verify") {
  const Certificate c = certify({{}, {}, 3, AvoidanceSet::divisors_of_p(), SearchConfig{}}, RootChoice::second_smallest());
  CHECK(c.roots.at(13) == 6);
  CHECK(verify(c));
  CHECK(c.verdicts == minimal_certificate().verdicts);
}

TEST_CASE("enlargement") {
  const auto& c = minimal_certificate();
  CHECK(enlargement_check(c, {}).verdict == EnlargementVerdict::kSufficientYes);
  CHECK(enlargement_check(c, {19}).verdict == EnlargementVerdict::kSufficientYes);
  CHECK(enlargement_check(c, {547}).verdict == EnlargementVerdict::kInconclusive);
  CHECK(enlargement_check(c, {7}).primes.front().already_inside);
  const auto chars = full_characters(c);
  CHECK(chars.basis.size() == c.profile.h[1]);
  // 547: every one of 7, 13, 163, 313 is a cube modulo 547 and conversely
  for (Integer u : {7, 13, 163, 313}) CHECK(oracle::is_pth_power(547, u, 3));
  CHECK_THROWS(frobenius_image(chars, 163));

  const Certificate marked = certify({{13}, {11}, 3, AvoidanceSet::divisors_of_p(), SearchConfig{}});
  CHECK_THROWS_WITH(enlargement_check(marked, {11}), doctest::Contains("disjoint from T"));
}
