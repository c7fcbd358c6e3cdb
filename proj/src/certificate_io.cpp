#include "mildcert/certificate_io.hpp"

#include <sstream>

#include "json.hpp"
#include "mildcert/error.hpp"

namespace mildcert {

using nlohmann::json;

namespace {

Eigen::Index idx(std::size_t i) { return static_cast<Eigen::Index>(i); }

json vector_json(const FpVector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

FpVector vector_from(const json& j) {
  FpVector out(idx(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) out(idx(i)) = j.at(i).get<Integer>();
  return out;
}

json vectors_json(const std::vector<FpVector>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back(vector_json(v));
  return out;
}

std::vector<FpVector> vectors_from(const json& j) {
  std::vector<FpVector> out;
  for (const auto& v : j) out.push_back(vector_from(v));
  return out;
}

json profile_json(const CohomologyProfile& pr) {
  return {{"S", pr.S}, {"T", pr.T}, {"p", pr.p}, {"h", pr.h},
          {"chi", pr.chi}, {"theta", pr.theta}, {"vdim", pr.vdim}};
}

CohomologyProfile profile_from(const json& j) {
  CohomologyProfile pr;
  pr.S = j.at("S").get<PrimeSet>();
  pr.T = j.at("T").get<PrimeSet>();
  pr.p = j.at("p").get<Integer>();
  pr.h = j.at("h").get<std::array<std::size_t, 4>>();
  pr.chi = j.at("chi").get<long>();
  pr.theta = j.at("theta").get<int>();
  pr.vdim = j.at("vdim").get<std::size_t>();
  return pr;
}

json trace_json(const SeekerTrace& t) {
  json s0 = json::array();
  for (const auto& s : t.s0_steps) {
    s0.push_back({{"prime", s.prime}, {"candidates_scanned", s.candidates_scanned}, {"defect_after", s.defect_after}});
  }
  json slots = json::array();
  for (const auto& s : t.slot_steps) {
    json failures = json::object();
    for (std::size_t c = 0; c < kBaClauseCount; ++c) {
      failures[std::string(clause_name(static_cast<BaClause>(c)))] = s.failures[c];
    }
    slots.push_back({{"slot", s.slot + 1}, {"prime", s.prime}, {"candidates_scanned", s.candidates_scanned},
                     {"failures", failures}});
  }
  return {{"initial_defect", t.initial_defect}, {"s0_steps", s0}, {"slot_steps", slots}};
}

SeekerTrace trace_from(const json& j) {
  SeekerTrace t;
  t.initial_defect = j.at("initial_defect").get<std::size_t>();
  for (const auto& s : j.at("s0_steps")) {
    t.s0_steps.push_back({s.at("prime").get<Integer>(), s.at("candidates_scanned").get<std::size_t>(),
                          s.at("defect_after").get<std::size_t>()});
  }
  for (const auto& s : j.at("slot_steps")) {
    SlotStep step;
    step.slot = s.at("slot").get<std::size_t>() - 1;
    step.prime = s.at("prime").get<Integer>();
    step.candidates_scanned = s.at("candidates_scanned").get<std::size_t>();
    for (std::size_t c = 0; c < kBaClauseCount; ++c) {
      step.failures[c] = s.at("failures").at(std::string(clause_name(static_cast<BaClause>(c)))).get<std::size_t>();
    }
    t.slot_steps.push_back(step);
  }
  return t;
}

json to_json_value(const Certificate& c) {
  json avoid_congruences = json::array();
  for (const auto& k : c.inputs.avoid.congruences) {
    avoid_congruences.push_back({{"residue", k.residue}, {"modulus", k.modulus}});
  }
  json inputs = {{"p", c.inputs.p},
                 {"S", c.inputs.S},
                 {"T", c.inputs.T},
                 {"avoid",
                  {{"divisors_of_p", c.inputs.avoid.exclude_p_divisors},
                   {"primes", c.inputs.avoid.explicit_primes},
                   {"congruences", avoid_congruences}}},
                 {"max_prime", c.inputs.cfg.max_prime},
                 {"max_candidates_per_slot", c.inputs.cfg.max_candidates_per_slot}};

  json seeker = {{"marking", c.seeker.marking}, {"T0", c.seeker.T0}, {"S0", c.seeker.S0},
                 {"Q", c.seeker.Q}, {"trace", trace_json(c.seeker.trace)}};

  json roots = json::array();
  for (const auto& [q, g] : c.roots) roots.push_back({{"prime", q}, {"root", g}});

  json places = json::array();
  for (const auto& t : c.table.places()) places.push_back({{"prime", t.q}, {"root", t.g}});
  json symbols = json::array();
  for (const auto& [key, value] : c.table.symbols()) {
    symbols.push_back({{"a", key.first}, {"q", key.second}, {"value", value}});
  }
  json table = {{"p", c.table.p()}, {"places", places}, {"marking", c.table.marking()}, {"symbols", symbols}};

  json characters = {{"m", c.characters.m},
                     {"chi", vectors_json(c.characters.chi)},
                     {"psi", vectors_json(c.characters.psi)},
                     {"eta", vectors_json(c.characters.eta)}};

  json psi_eval = json::array();
  for (const auto& e : c.psi_evaluations) psi_eval.push_back({{"frob_s0", e.at_s0}, {"frob_q", e.at_q}});

  json entries = json::array();
  for (Eigen::Index r = 0; r < c.cup.entries.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index k = 0; k < c.cup.entries.cols(); ++k) row.push_back(c.cup.entries(r, k));
    entries.push_back(row);
  }
  json cup = {{"modulus", c.cup.entries.modulus()},
              {"rows", c.cup.row_labels},
              {"columns", c.cup.col_labels},
              {"entries", entries},
              {"rank", c.cup_rank}};

  json ramification = json::array();
  for (const auto& [q, r] : c.ramification) ramification.push_back({{"prime", q}, {"ramifies", r}});

  const Verdicts& v = c.verdicts;
  json verdicts = {{"vdim_zero", v.vdim_zero},
                   {"drop_one", v.drop_one},
                   {"shape_ok", v.shape_ok},
                   {"rank_full", v.rank_full},
                   {"vv_block_zero", v.vv_block_zero},
                   {"mild", v.mild},
                   {"cd2", v.cd2},
                   {"kpi1", v.kpi1},
                   {"ramified_everywhere", v.ramified_everywhere},
                   {"local_realization_claim", v.local_realization_claim}};
  json claims = {{"local_realization", {{"holds", v.local_realization_claim}, {"status", kClaimStatus}}},
                 {"free_product_of_decomposition_groups",
                  {{"holds", v.local_realization_claim}, {"status", kClaimStatus}}}};

  return {{"format", c.format},
          {"version", c.version},
          {"conventions", {{"pairing", kPairingConvention}, {"symbol", kSymbolConvention}}},
          {"inputs", inputs},
          {"seeker", seeker},
          {"roots", roots},
          {"linking_table", table},
          {"characters", characters},
          {"psi_evaluations", psi_eval},
          {"cup_matrix", cup},
          {"profile", profile_json(c.profile)},
          {"auxiliary_profile", profile_json(c.auxiliary)},
          {"ramification", ramification},
          {"verdicts", verdicts},
          {"claims", claims}};
}

void diff_into(const json& a, const json& b, const std::string& path, std::vector<std::string>& out) {
  if (a == b) return;
  if (a.is_object() && b.is_object()) {
    for (const auto& [key, value] : a.items()) {
      const std::string sub = path.empty() ? key : path + "." + key;
      if (!b.contains(key)) {
        out.push_back(sub);
      } else {
        diff_into(value, b.at(key), sub, out);
      }
    }
    for (const auto& [key, value] : b.items()) {
      if (!a.contains(key)) out.push_back(path.empty() ? key : path + "." + key);
    }
    return;
  }
  out.push_back(path);
}

}  // namespace

std::string serialize(const Certificate& cert) { return to_json_value(cert).dump(2) + "\n"; }

Certificate parse_certificate(const std::string& text) {
  try {
    const json j = json::parse(text);
    Certificate c;
    c.format = j.at("format").get<std::string>();
    if (c.format != kCertificateFormat) throw Error("unsupported certificate format '" + c.format + "'");
    c.version = j.at("version").get<std::string>();

    const json& in = j.at("inputs");
    c.inputs.p = in.at("p").get<Integer>();
    c.inputs.S = make_prime_set(in.at("S").get<std::vector<Integer>>());
    c.inputs.T = make_prime_set(in.at("T").get<std::vector<Integer>>());
    c.inputs.avoid.exclude_p_divisors = in.at("avoid").at("divisors_of_p").get<bool>();
    c.inputs.avoid.explicit_primes = in.at("avoid").at("primes").get<std::vector<Integer>>();
    for (const auto& k : in.at("avoid").at("congruences")) {
      c.inputs.avoid.congruences.push_back({k.at("residue").get<Integer>(), k.at("modulus").get<Integer>()});
    }
    c.inputs.cfg.max_prime = in.at("max_prime").get<Integer>();
    c.inputs.cfg.max_candidates_per_slot = in.at("max_candidates_per_slot").get<std::size_t>();

    const json& s = j.at("seeker");
    c.seeker.p = c.inputs.p;
    c.seeker.marking = s.at("marking").get<PrimeSet>();
    c.seeker.T0 = s.at("T0").get<PrimeSet>();
    c.seeker.S0 = s.at("S0").get<std::vector<Integer>>();
    c.seeker.Q = s.at("Q").get<std::vector<Integer>>();
    c.seeker.trace = trace_from(s.at("trace"));

    for (const auto& r : j.at("roots")) c.roots[r.at("prime").get<Integer>()] = r.at("root").get<Integer>();

    const json& t = j.at("linking_table");
    const Integer tp = t.at("p").get<Integer>();
    std::vector<TamePrime> places;
    for (const auto& pl : t.at("places")) places.push_back({pl.at("prime").get<Integer>(), tp, pl.at("root").get<Integer>()});
    std::map<std::pair<Integer, Integer>, Integer> symbols;
    for (const auto& e : t.at("symbols")) {
      symbols[{e.at("a").get<Integer>(), e.at("q").get<Integer>()}] = e.at("value").get<Integer>();
    }
    c.table = LinkingTable::from_records(tp, std::move(places), t.at("marking").get<PrimeSet>(), std::move(symbols));

    const json& ch = j.at("characters");
    c.characters.m = ch.at("m").get<std::size_t>();
    c.characters.chi = vectors_from(ch.at("chi"));
    c.characters.psi = vectors_from(ch.at("psi"));
    c.characters.eta = vectors_from(ch.at("eta"));

    for (const auto& e : j.at("psi_evaluations")) {
      c.psi_evaluations.push_back({e.at("frob_s0").get<Integer>(), e.at("frob_q").get<Integer>()});
    }

    const json& cup = j.at("cup_matrix");
    const Integer modulus = cup.at("modulus").get<Integer>();
    const json& entries = cup.at("entries");
    const std::size_t rows = entries.size();
    const std::size_t cols = rows == 0 ? 0 : entries.at(0).size();
    c.cup = CupMatrix(modulus);
    c.cup.entries = FpMatrix(idx(rows), idx(cols), modulus);
    for (std::size_t r = 0; r < rows; ++r) {
      if (entries.at(r).size() != cols) throw Error("cup matrix rows have unequal length");
      for (std::size_t k = 0; k < cols; ++k) c.cup.entries.set(idx(r), idx(k), entries.at(r).at(k).get<Integer>());
    }
    c.cup.row_labels = cup.at("rows").get<std::vector<std::string>>();
    c.cup.col_labels = cup.at("columns").get<std::vector<std::string>>();
    c.cup_rank = cup.at("rank").get<std::size_t>();

    c.profile = profile_from(j.at("profile"));
    c.auxiliary = profile_from(j.at("auxiliary_profile"));
    for (const auto& r : j.at("ramification")) c.ramification[r.at("prime").get<Integer>()] = r.at("ramifies").get<bool>();

    const json& v = j.at("verdicts");
    c.verdicts.vdim_zero = v.at("vdim_zero").get<bool>();
    c.verdicts.drop_one = v.at("drop_one").get<bool>();
    c.verdicts.shape_ok = v.at("shape_ok").get<bool>();
    c.verdicts.rank_full = v.at("rank_full").get<bool>();
    c.verdicts.vv_block_zero = v.at("vv_block_zero").get<bool>();
    c.verdicts.mild = v.at("mild").get<bool>();
    c.verdicts.cd2 = v.at("cd2").get<bool>();
    c.verdicts.kpi1 = v.at("kpi1").get<bool>();
    c.verdicts.ramified_everywhere = v.at("ramified_everywhere").get<bool>();
    c.verdicts.local_realization_claim = v.at("local_realization_claim").get<bool>();
    return c;
  } catch (const json::exception& e) {
    throw Error(std::string("malformed certificate: ") + e.what());
  }
}

std::vector<std::string> certificate_field_diff(const Certificate& a, const Certificate& b) {
  std::vector<std::string> out;
  diff_into(to_json_value(a), to_json_value(b), "", out);
  return out;
}

std::string summarize(const Certificate& c) {
  std::ostringstream out;
  out << "mildcert " << c.version << " (" << c.format << ")\n";
  out << "p=" << c.inputs.p << " S=" << format_prime_set(c.inputs.S) << " T=" << format_prime_set(c.inputs.T)
      << " avoid=" << c.inputs.avoid.describe() << "\n";
  out << "S0=" << format_prime_set(make_prime_set(c.seeker.S0)) << " Q=";
  out << "{";
  for (std::size_t i = 0; i < c.seeker.Q.size(); ++i) out << (i ? "," : "") << c.seeker.Q[i];
  out << "} m=" << c.m() << "\n";
  out << "cup matrix (rank " << c.cup_rank << "):\n";
  for (Eigen::Index r = 0; r < c.cup.entries.rows(); ++r) {
    out << "  " << c.cup.row_labels[static_cast<std::size_t>(r)] << ":";
    for (Eigen::Index k = 0; k < c.cup.entries.cols(); ++k) out << " " << c.cup.entries(r, k);
    out << "\n";
  }
  const auto& pr = c.profile;
  out << "profile h=(" << pr.h[0] << "," << pr.h[1] << "," << pr.h[2] << "," << pr.h[3] << ") chi=" << pr.chi
      << " vdim=" << pr.vdim << "\n";
  const Verdicts& v = c.verdicts;
  const auto yn = [](bool b) { return b ? "yes" : "no"; };
  out << "vdim_zero=" << yn(v.vdim_zero) << " drop_one=" << yn(v.drop_one) << " shape_ok=" << yn(v.shape_ok)
      << " rank_full=" << yn(v.rank_full) << " vv_block_zero=" << yn(v.vv_block_zero) << "\n";
  out << "mild=" << yn(v.mild) << " cd2=" << yn(v.cd2) << " kpi1=" << yn(v.kpi1)
      << " ramified_everywhere=" << yn(v.ramified_everywhere) << "\n";
  out << "local_realization_claim=" << yn(v.local_realization_claim) << " (" << kClaimStatus << ")\n";
  out << "pairing: " << kPairingConvention << "\n";
  return out.str();
}

}  // namespace mildcert
