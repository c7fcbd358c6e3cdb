#ifndef MILDCERT_CERTIFICATE_HPP
#define MILDCERT_CERTIFICATE_HPP

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "mildcert/cohomology.hpp"
#include "mildcert/linking_table.hpp"
#include "mildcert/mildness.hpp"
#include "mildcert/seeker.hpp"

namespace mildcert {

inline constexpr std::string_view kCertificateFormat = "mildcert-certificate/1";
inline constexpr std::string_view kToolVersion = "1.0.0";
inline constexpr std::string_view kPairingConvention =
    "(a u b)_v = a(Frob_v) b(tau_v) - a(tau_v) b(Frob_v); Frob_v lifted by the uniformizer v; "
    "tau_v maps to the recorded primitive root g_v";
inline constexpr std::string_view kSymbolConvention =
    "l(a, q) = e in [0, p) with a^((q-1)/p) = g_q^(e (q-1)/p) mod q";
inline constexpr std::string_view kClaimStatus = "derived-by-theorem, not recomputed";

struct CertificateInputs {
  PrimeSet S;
  PrimeSet T;
  Integer p = 3;
  AvoidanceSet avoid;
  SearchConfig cfg;
};

struct Verdicts {
  bool vdim_zero = false;
  bool drop_one = false;
  bool shape_ok = false;
  bool rank_full = false;
  bool vv_block_zero = false;
  bool mild = false;
  bool cd2 = false;
  bool kpi1 = false;
  bool ramified_everywhere = false;
  /// Not computed: follows from the verdicts above by theorem.
  bool local_realization_claim = false;

  friend bool operator==(const Verdicts&, const Verdicts&) = default;
};

/// psi_a evaluated on both Frobenius lifts that the construction refers to.
struct PsiEvaluation {
  Integer at_s0 = 0;  ///< psi_a(Frob_{p_a})
  Integer at_q = 0;   ///< psi_a(Frob_{q_a}), forced nonzero

  friend bool operator==(const PsiEvaluation&, const PsiEvaluation&) = default;
};

struct Certificate {
  std::string format{kCertificateFormat};
  std::string version{kToolVersion};
  CertificateInputs inputs;
  SeekerResult seeker;
  std::map<Integer, Integer> roots;  ///< primitive root per tame prime of S u S0 u Q
  LinkingTable table;
  CharacterBasis characters;
  std::vector<PsiEvaluation> psi_evaluations;
  CupMatrix cup;
  std::size_t cup_rank = 0;
  CohomologyProfile profile;    ///< (S u S0 u Q, T)
  CohomologyProfile auxiliary;  ///< (S0 u Q, S u T)
  std::map<Integer, bool> ramification;
  Verdicts verdicts;

  std::size_t m() const noexcept { return seeker.S0.size(); }
  PrimeSet all_places() const;
};

/// Runs the seeker and assembles every verdict. `roots` selects the primitive
/// roots used for the linking symbols.
Certificate certify(const CertificateInputs& inputs, const RootChoice& roots = {});

struct VerifyReport {
  bool ok = false;
  std::vector<std::string> mismatches;
};

/// Recomputes the certificate from its inputs under its recorded roots and
/// compares every field.
VerifyReport verify_report(const Certificate& cert);
inline bool verify(const Certificate& cert) { return verify_report(cert).ok; }

/// Characters of the elementary quotient of G_{S u S0 u Q}^T: coordinates are
/// the tame places followed, when p is in S, by the conductor-p^2 character.
struct FullCharacters {
  Integer p = 3;
  std::vector<TamePrime> tame;
  bool wild = false;
  std::vector<FpVector> basis;
};

FullCharacters full_characters(const Certificate& cert);

/// Values of every basis character on Frob_q, q outside S u S0 u Q.
FpVector frobenius_image(const FullCharacters& chars, Integer q);

enum class EnlargementVerdict { kSufficientYes, kInconclusive };

struct EnlargementPrime {
  Integer q = 0;
  bool already_inside = false;
  bool nonzero = false;
};

struct EnlargementReport {
  EnlargementVerdict verdict = EnlargementVerdict::kSufficientYes;
  std::size_t character_count = 0;
  std::vector<EnlargementPrime> primes;
};

/// sufficient_yes iff each new prime has nonzero Frobenius in the elementary
/// quotient; otherwise inconclusive.
EnlargementReport enlargement_check(const Certificate& cert, const PrimeSet& extra);

std::string_view verdict_name(EnlargementVerdict v);

}  // namespace mildcert

#endif  // MILDCERT_CERTIFICATE_HPP
