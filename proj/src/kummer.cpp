#include "mildcert/kummer.hpp"

#include "mildcert/cohomology.hpp"
#include "mildcert/modarith.hpp"

namespace mildcert {

SElement s_element(Integer q, const PrimeSet& T) {
  if (!is_prime(q)) throw Error(std::to_string(q) + " is not prime");
  if (contains(T, q)) throw Error("s-element requires q outside T");
  return {q, q};
}

LocalConditions local_conditions(const PrimeSet& S, const PrimeSet& T, Integer p) {
  require_odd_prime(p);
  require_disjoint(S, T);
  std::vector<FpVector> rows;
  std::vector<Integer> places;
  const auto cols = static_cast<Eigen::Index>(T.size());
  for (Integer v : S) {
    FpVector row(cols);
    if (v == p) {
      for (Eigen::Index j = 0; j < cols; ++j) row(j) = wild_unit_exponent(T[j], p).value;
    } else if (v % p == 1) {
      const TamePrime place = make_tame_prime(v, p);
      for (Eigen::Index j = 0; j < cols; ++j) row(j) = linking_symbol(T[j], place).value;
    } else {
      continue;  // units at v are p-divisible: no condition
    }
    rows.push_back(std::move(row));
    places.push_back(v);
  }
  return {FpMatrix::from_row_vectors(rows, cols, p), std::move(places)};
}

KummerGroup kummer_group(const PrimeSet& S, const PrimeSet& T, Integer p) {
  const auto conditions = local_conditions(S, T, p);
  KummerGroup out;
  out.S = S;
  out.T = T;
  out.p = p;
  out.basis = kernel_basis(conditions.matrix);
  out.dim = out.basis.size();
  return out;
}

std::size_t sha2_dimension(const PrimeSet& S, const PrimeSet& T, Integer p) {
  return kummer_group(S, T, p).dim;
}

bool drop_one_holds(const PrimeSet& S0, const PrimeSet& T, Integer p) {
  require_odd_prime(p);
  require_disjoint(S0, T);
  for (Integer q : S0) {
    if (!is_tame_split_prime(q, p)) {
      throw Error("drop-one test needs tame primes; " + std::to_string(q) + " is not");
    }
  }
  if (kummer_dimension(S0, T, p) != 0) return false;
  for (Integer q : S0) {
    if (kummer_dimension(set_difference(S0, {q}), T, p) != 0) return false;
  }
  return true;
}

bool ramifies_in_elementary(Integer q, const PrimeSet& S, const PrimeSet& T, Integer p) {
  if (!contains(S, q)) throw Error("ramification test needs q in S");
  const auto with = global_profile(S, T, p);
  const auto without = global_profile(set_difference(S, {q}), T, p);
  return with.h[1] > without.h[1];
}

}  // namespace mildcert
