#include "mildcert/cohomology.hpp"

#include "mildcert/kummer.hpp"
#include "mildcert/modarith.hpp"

namespace mildcert {

int local_delta(Integer q, Integer p) { return (q != p && q % p == 1) ? 1 : 0; }

LocalCohomologyDims local_dims(Integer q, Integer p, bool marked) {
  require_odd_prime(p);
  if (!is_prime(q)) throw Error(std::to_string(q) + " is not prime");
  const std::size_t delta = static_cast<std::size_t>(local_delta(q, p));
  const std::size_t degree = q == p ? 1 : 0;
  return {q, p, marked, delta + degree + (marked ? 1 : 0), delta};
}

CohomologyProfile global_profile(const PrimeSet& S, const PrimeSet& T, Integer p) {
  require_odd_prime(p);
  require_disjoint(S, T);

  CohomologyProfile out;
  out.S = S;
  out.T = T;
  out.p = p;
  out.vdim = kummer_dimension(S, T, p);
  // Over Q: r = 1, delta = 0, so theta = 0 and h^3 = 0.
  out.theta = 0;

  long delta_sum = 0;
  for (Integer q : S) delta_sum += local_delta(q, p);
  const long wild_degree = contains(S, p) ? 1 : 0;
  const long vdim = static_cast<long>(out.vdim);
  const long t = static_cast<long>(T.size());

  const long h1 = 1 + delta_sum + vdim + wild_degree - 1 - t;
  const long h2 = delta_sum + vdim + out.theta;
  if (h1 < 0 || h2 < 0) throw Error("negative cohomology dimension: inconsistent input");

  out.h = {1, static_cast<std::size_t>(h1), static_cast<std::size_t>(h2),
           static_cast<std::size_t>(out.theta)};
  out.chi = 1 - h1 + h2 - out.theta;
  return out;
}

std::size_t h1_via_characters(const PrimeSet& S, const PrimeSet& T, Integer p) {
  require_odd_prime(p);
  require_disjoint(S, T);
  std::vector<TamePrime> conductors;
  for (Integer q : S) {
    if (q == p || q % p != 1) throw Error("character oracle is tame-only");
    conductors.push_back(make_tame_prime(q, p));
  }
  // Rows: Frobenius at t; columns: the characters dlog_q.
  FpMatrix splitting(static_cast<Eigen::Index>(T.size()), static_cast<Eigen::Index>(S.size()), p);
  for (std::size_t i = 0; i < T.size(); ++i) {
    for (std::size_t j = 0; j < conductors.size(); ++j) {
      splitting.set(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j),
                    linking_symbol(T[i], conductors[j]).value);
    }
  }
  return S.size() - rank(splitting);
}

bool excision_identity_holds(const PrimeSet& S, const PrimeSet& T, Integer p) {
  const auto marked = global_profile(S, T, p);
  const auto unmarked = global_profile(S, {}, p);
  const long lhs = static_cast<long>(marked.h[1]) - static_cast<long>(unmarked.h[1]) +
                   static_cast<long>(T.size()) - static_cast<long>(marked.h[2]) +
                   static_cast<long>(unmarked.h[2]);
  return lhs == 0 && marked.h[3] == unmarked.h[3];
}

PrimeSet s_min(const PrimeSet& S, Integer p) {
  PrimeSet out;
  for (Integer q : S) {
    if (q == p || q % p == 1) out.push_back(q);
  }
  return out;
}

}  // namespace mildcert
