#include "mildcert/certificate.hpp"

#include <algorithm>

#include "mildcert/certificate_io.hpp"
#include "mildcert/error.hpp"
#include "mildcert/kummer.hpp"

namespace mildcert {

namespace {

Eigen::Index idx(std::size_t i) { return static_cast<Eigen::Index>(i); }

}  // namespace

PrimeSet Certificate::all_places() const {
  PrimeSet out = inputs.S;
  out.insert(out.end(), seeker.S0.begin(), seeker.S0.end());
  out.insert(out.end(), seeker.Q.begin(), seeker.Q.end());
  return make_prime_set(out);
}

Certificate certify(const CertificateInputs& inputs, const RootChoice& roots) {
  require_odd_prime(inputs.p);
  const Integer p = inputs.p;

  Certificate c;
  c.inputs = inputs;
  c.seeker = seek_certified_set(inputs.S, inputs.T, inputs.avoid, p, inputs.cfg);
  const std::size_t m = c.m();
  const PrimeSet all = c.all_places();
  for (Integer q : all) {
    if (is_tame_split_prime(q, p)) c.roots[q] = make_tame_prime(q, p, roots.root_for(q)).g;
  }
  const RootChoice fixed{0, c.roots};

  c.table = build_linking_table(c.seeker.S0, c.seeker.Q, c.seeker.marking, p, fixed);
  c.characters = character_basis(c.table, m);
  for (std::size_t a = 0; a < m; ++a) {
    c.psi_evaluations.push_back({c.table.frobenius_value(c.characters.psi[a], a),
                                 c.table.frobenius_value(c.characters.psi[a], m + a)});
  }
  c.cup = assemble_cup_matrix(c.table, c.characters);
  c.cup_rank = rank(c.cup.entries);

  const PrimeSet auxiliary_places = make_prime_set(c.seeker.places());
  c.profile = global_profile(all, inputs.T, p);
  c.auxiliary = global_profile(auxiliary_places, c.seeker.marking, p);
  for (Integer q : auxiliary_places) {
    c.ramification[q] = ramifies_in_elementary(q, auxiliary_places, c.seeker.marking, p);
  }

  Verdicts& v = c.verdicts;
  v.vdim_zero = c.profile.vdim == 0 && c.auxiliary.vdim == 0;
  v.drop_one = drop_one_holds(make_prime_set(c.seeker.S0), c.seeker.marking, p);
  v.shape_ok = shape_check(c.cup.entries);
  v.rank_full = m > 0 && c.cup_rank == 2 * m && c.auxiliary.h[2] == 2 * m;
  v.vv_block_zero = vv_block_zero(c.table, c.characters);
  v.mild = mildness_check(c.cup.entries, v.vv_block_zero);
  v.cd2 = v.mild;
  v.kpi1 = v.cd2 && v.rank_full;
  v.ramified_everywhere =
      !c.ramification.empty() &&
      std::all_of(c.ramification.begin(), c.ramification.end(), [](const auto& e) { return e.second; });
  v.local_realization_claim = v.kpi1 && v.vdim_zero && v.ramified_everywhere;
  return c;
}

VerifyReport verify_report(const Certificate& cert) {
  VerifyReport report;
  if (cert.format != kCertificateFormat) {
    report.mismatches.push_back("format");
    return report;
  }
  const Certificate fresh = certify(cert.inputs, RootChoice{0, cert.roots});
  report.mismatches = certificate_field_diff(cert, fresh);

  // Independent of the stored matrix: re-derive criterion (i) and the rank
  // from the stored characters against the recomputed table.
  if (cert.characters.m == fresh.characters.m && cert.characters.chi.size() == cert.characters.m &&
      cert.characters.psi.size() == cert.characters.m && cert.characters.eta.size() == cert.characters.m) {
    try {
      const CupMatrix again = assemble_cup_matrix(fresh.table, cert.characters);
      if (!(again.entries == cert.cup.entries)) report.mismatches.push_back("cup_matrix.recomputed");
      if (vv_block_zero(fresh.table, cert.characters) != cert.verdicts.vv_block_zero) {
        report.mismatches.push_back("verdicts.vv_block_zero.recomputed");
      }
    } catch (const Error&) {
      report.mismatches.push_back("characters.shape");
    }
  } else {
    report.mismatches.push_back("characters.shape");
  }
  std::sort(report.mismatches.begin(), report.mismatches.end());
  report.mismatches.erase(std::unique(report.mismatches.begin(), report.mismatches.end()),
                          report.mismatches.end());
  report.ok = report.mismatches.empty();
  return report;
}

FullCharacters full_characters(const Certificate& cert) {
  FullCharacters out;
  out.p = cert.inputs.p;
  const Integer p = out.p;
  for (Integer q : cert.all_places()) {
    if (is_tame_split_prime(q, p)) {
      const auto it = cert.roots.find(q);
      out.tame.push_back(make_tame_prime(q, p, it == cert.roots.end() ? 0 : it->second));
    } else if (q == p) {
      out.wild = true;
    }
  }
  const std::size_t n = out.tame.size() + (out.wild ? 1 : 0);
  std::vector<FpVector> rows;
  for (Integer t : cert.inputs.T) {
    FpVector row(idx(n));
    for (std::size_t u = 0; u < out.tame.size(); ++u) row(idx(u)) = linking_symbol(t, out.tame[u]).value;
    if (out.wild) row(idx(n - 1)) = wild_unit_exponent(t, p).value;
    rows.push_back(std::move(row));
  }
  if (rows.empty()) {
    for (std::size_t i = 0; i < n; ++i) {
      FpVector e = FpVector::Zero(idx(n));
      e(idx(i)) = 1;
      out.basis.push_back(std::move(e));
    }
  } else {
    out.basis = kernel_basis(FpMatrix::from_row_vectors(rows, idx(n), p));
  }
  return out;
}

FpVector frobenius_image(const FullCharacters& chars, Integer q) {
  const Integer p = chars.p;
  if (chars.wild && q == p) throw Error("Frobenius undefined at ramified place");
  for (const auto& t : chars.tame) {
    if (t.q == q) throw Error("Frobenius undefined at ramified place");
  }
  const std::size_t n = chars.tame.size() + (chars.wild ? 1 : 0);
  FpVector point(idx(n));
  for (std::size_t u = 0; u < chars.tame.size(); ++u) point(idx(u)) = linking_symbol(q, chars.tame[u]).value;
  if (chars.wild) point(idx(n - 1)) = wild_unit_exponent(q, p).value;

  FpVector out(idx(chars.basis.size()));
  for (std::size_t i = 0; i < chars.basis.size(); ++i) {
    Integer total = 0;
    for (std::size_t u = 0; u < n; ++u) total += chars.basis[i](idx(u)) * point(idx(u));
    out(idx(i)) = reduce_mod(total, p);
  }
  return out;
}

EnlargementReport enlargement_check(const Certificate& cert, const PrimeSet& extra) {
  const PrimeSet new_primes = make_prime_set(extra);
  if (!disjoint(new_primes, cert.inputs.T)) throw Error("enlargement primes must be disjoint from T");
  const PrimeSet inside = cert.all_places();
  const FullCharacters chars = full_characters(cert);

  EnlargementReport report;
  report.character_count = chars.basis.size();
  for (Integer q : new_primes) {
    EnlargementPrime entry{q, contains(inside, q), false};
    if (!entry.already_inside) {
      entry.nonzero = !is_zero_vector(frobenius_image(chars, q));
      if (!entry.nonzero) report.verdict = EnlargementVerdict::kInconclusive;
    }
    report.primes.push_back(entry);
  }
  return report;
}

std::string_view verdict_name(EnlargementVerdict v) {
  return v == EnlargementVerdict::kSufficientYes ? "sufficient_yes" : "inconclusive";
}

}  // namespace mildcert
