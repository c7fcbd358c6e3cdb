#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "mildcert/certificate.hpp"
#include "mildcert/certificate_io.hpp"
#include "mildcert/cohomology.hpp"
#include "mildcert/error.hpp"
#include "mildcert/kummer.hpp"
#include "mildcert/mildness.hpp"
#include "mildcert/seeker.hpp"

namespace mildcert::cli {

namespace {

using nlohmann::json;

struct Options {
  Integer p = 0;
  std::string S;
  std::string T;
  std::string avoid = "none";
  Integer max_prime = 0;
  Integer max_candidates = 0;
  std::string out_path;
  std::string in_path;
  std::string format = "text";
  std::string roots = "smallest";
  std::string places;
  std::string extra;
  bool mild_split = false;
};

SearchConfig config_from(const Options& o) {
  SearchConfig cfg = search_config_from_environment();
  if (o.max_prime > 0) cfg.max_prime = o.max_prime;
  if (o.max_candidates > 0) cfg.max_candidates_per_slot = static_cast<std::size_t>(o.max_candidates);
  return cfg;
}

RootChoice roots_from(const Options& o) {
  return o.roots == "second" ? RootChoice::second_smallest() : RootChoice::smallest();
}

json tagged(json body) {
  body["version"] = std::string(kToolVersion);
  return body;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error("cannot write " + path);
  file << text;
}

std::string format_h(const CohomologyProfile& pr) {
  std::ostringstream s;
  s << "h=(" << pr.h[0] << "," << pr.h[1] << "," << pr.h[2] << "," << pr.h[3] << "), chi=" << pr.chi;
  return s.str();
}

int cmd_cohomology(const Options& o, std::ostream& out) {
  const PrimeSet S = parse_prime_set(o.S);
  const PrimeSet T = parse_prime_set(o.T);
  const auto pr = global_profile(S, T, o.p);
  if (o.format == "structured") {
    out << tagged({{"p", pr.p}, {"S", pr.S}, {"T", pr.T}, {"h", pr.h}, {"chi", pr.chi},
                   {"theta", pr.theta}, {"vdim", pr.vdim}})
               .dump(2)
        << "\n";
  } else {
    out << format_h(pr) << "\n";
    out << "theta=" << pr.theta << " vdim=" << pr.vdim << " S=" << format_prime_set(pr.S)
        << " T=" << format_prime_set(pr.T) << " p=" << pr.p << "\n";
  }
  return kExitOk;
}

int cmd_kummer(const Options& o, std::ostream& out) {
  const PrimeSet S = parse_prime_set(o.S);
  const PrimeSet T = parse_prime_set(o.T);
  const auto v = kummer_group(S, T, o.p);
  json basis = json::array();
  for (const auto& b : v.basis) {
    json row = json::array();
    for (Eigen::Index i = 0; i < b.size(); ++i) row.push_back(b(i));
    basis.push_back(row);
  }
  if (o.format == "structured") {
    out << tagged({{"p", o.p}, {"S", S}, {"T", T}, {"dim", v.dim}, {"basis", basis}}).dump(2) << "\n";
  } else {
    out << "dim V=" << v.dim << " (generators " << format_prime_set(T) << ")\n";
    for (const auto& row : basis) out << "  " << row.dump() << "\n";
  }
  return kExitOk;
}

int cmd_find_s0(const Options& o, std::ostream& out) {
  const PrimeSet S = parse_prime_set(o.S);
  const PrimeSet T = parse_prime_set(o.T);
  require_disjoint(S, T);
  SeekerTrace trace;
  const auto S0 = find_S0_killing_V(set_union(S, T), AvoidanceSet::parse(o.avoid), o.p, config_from(o), &trace);
  if (o.format == "structured") {
    out << tagged({{"p", o.p}, {"marking", set_union(S, T)}, {"S0", S0}, {"trace", describe_trace(trace)}}).dump(2)
        << "\n";
  } else {
    out << "S0=" << format_prime_set(make_prime_set(S0)) << "\n";
    for (const auto& line : describe_trace(trace)) out << "  " << line << "\n";
  }
  return kExitOk;
}

int cmd_linking(const Options& o, std::ostream& out) {
  const PrimeSet T = parse_prime_set(o.T);
  const std::string place_text = o.places.empty() ? o.S : o.places;
  std::vector<Integer> places;
  std::stringstream items(place_text);
  std::string item;
  while (std::getline(items, item, ',')) {
    if (!item.empty()) places.push_back(std::stoll(item));
  }
  const auto table = build_linking_table(places, T, o.p, roots_from(o));

  json symbols = json::array();
  for (const auto& [key, value] : table.symbols()) symbols.push_back({{"a", key.first}, {"q", key.second}, {"value", value}});
  json roots = json::array();
  for (const auto& t : table.places()) roots.push_back({{"prime", t.q}, {"root", t.g}});
  json body = {{"p", o.p}, {"places", places}, {"marking", T}, {"roots", roots}, {"symbols", symbols}};

  std::optional<MildSplit> split;
  if (o.mild_split) {
    split = find_coordinate_mild_split(table);
    body["mild_split"] = nullptr;
    if (split) {
      json U = json::array();
      json V = json::array();
      for (const auto& u : split->U) U.push_back(std::vector<Integer>(u.data(), u.data() + u.size()));
      for (const auto& v : split->V) V.push_back(std::vector<Integer>(v.data(), v.data() + v.size()));
      body["mild_split"] = {{"U", U}, {"V", V}};
    }
  }

  if (o.format == "structured") {
    out << tagged(body).dump(2) << "\n";
    return kExitOk;
  }
  out << "p=" << o.p << " marking=" << format_prime_set(T) << "\n";
  out << "a\\q";
  for (const auto& t : table.places()) out << "\t" << t.q << "(g=" << t.g << ")";
  out << "\n";
  std::vector<Integer> rows = places;
  rows.insert(rows.end(), T.begin(), T.end());
  for (Integer a : rows) {
    out << a;
    for (const auto& t : table.places()) out << "\t" << (t.q == a ? std::string("-") : std::to_string(table.symbol(a, t.q)));
    out << "\n";
  }
  if (o.mild_split) {
    if (split) {
      out << "mild split found: |U|=" << split->U.size() << " |V|=" << split->V.size() << "\n";
      for (const auto& v : split->V) out << "  V " << json(std::vector<Integer>(v.data(), v.data() + v.size())).dump() << "\n";
      for (const auto& u : split->U) out << "  U " << json(std::vector<Integer>(u.data(), u.data() + u.size())).dump() << "\n";
    } else {
      out << "no coordinate split satisfies the criterion\n";
    }
  }
  return kExitOk;
}

int cmd_certify(const Options& o, std::ostream& out) {
  CertificateInputs in;
  in.p = o.p;
  require_odd_prime(in.p);
  in.S = parse_prime_set(o.S);
  in.T = parse_prime_set(o.T);
  in.avoid = AvoidanceSet::parse(o.avoid);
  in.cfg = config_from(o);
  const Certificate cert = certify(in, roots_from(o));
  const std::string canonical = serialize(cert);
  if (!o.out_path.empty()) {
    write_text(o.out_path, canonical, out);
    if (o.format == "text") out << summarize(cert);
  } else {
    out << (o.format == "structured" ? canonical : summarize(cert));
  }
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const Certificate cert = parse_certificate(read_file(o.in_path));
  const auto report = verify_report(cert);
  if (o.format == "structured") {
    out << tagged({{"ok", report.ok}, {"mismatches", report.mismatches}}).dump(2) << "\n";
  } else if (report.ok) {
    out << "verify: ok (" << cert.format << ", m=" << cert.m() << ")\n";
  } else {
    out << "verify: FAILED\n";
    for (const auto& m : report.mismatches) out << "  mismatch: " << m << "\n";
  }
  return report.ok ? kExitOk : kExitDomain;
}

int cmd_enlarge(const Options& o, std::ostream& out) {
  const Certificate cert = parse_certificate(read_file(o.in_path));
  const auto report = enlargement_check(cert, parse_prime_set(o.extra));
  if (o.format == "structured") {
    json primes = json::array();
    for (const auto& e : report.primes) {
      primes.push_back({{"prime", e.q}, {"already_inside", e.already_inside}, {"nonzero_frobenius", e.nonzero}});
    }
    out << tagged({{"verdict", std::string(verdict_name(report.verdict))},
                   {"characters", report.character_count},
                   {"primes", primes}})
               .dump(2)
        << "\n";
  } else {
    out << "verdict: " << verdict_name(report.verdict) << " (" << report.character_count << " characters)\n";
    for (const auto& e : report.primes) {
      out << "  " << e.q << ": "
          << (e.already_inside ? "already in S" : e.nonzero ? "nonzero Frobenius" : "Frobenius trivial on all characters")
          << "\n";
    }
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"mildcert: restricted-ramification p-extensions of Q, auxiliary prime search and mildness certificates"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));
  Options o;

  const auto add_field = [&o](CLI::App* sub) {
    sub->add_option("--p", o.p, "odd prime")->required();
    sub->add_option("--S", o.S, "comma-separated primes of S");
    sub->add_option("--T", o.T, "comma-separated primes of T");
  };
  const auto add_format = [&o](CLI::App* sub) {
    sub->add_option("--format", o.format, "text or structured")->check(CLI::IsMember({"text", "structured"}));
  };
  const auto add_search = [&o](CLI::App* sub) {
    sub->add_option("--avoid", o.avoid, "divisors-of-p, none, a prime list or 'r mod m'; join with ';'");
    sub->add_option("--max-prime", o.max_prime, "largest prime scanned")->check(CLI::PositiveNumber);
    sub->add_option("--max-candidates", o.max_candidates, "candidates per search step")->check(CLI::PositiveNumber);
  };
  const auto add_roots = [&o](CLI::App* sub) {
    sub->add_option("--roots", o.roots, "primitive roots: smallest or second")->check(CLI::IsMember({"smallest", "second"}));
  };

  auto* cohomology = app.add_subcommand("cohomology", "dimensions h^0..h^3 and Euler characteristic");
  add_field(cohomology);
  add_format(cohomology);

  auto* kummer = app.add_subcommand("kummer", "the Kummer group V_S^T");
  add_field(kummer);
  add_format(kummer);

  auto* find_s0 = app.add_subcommand("find-s0", "search S0 killing V against the marking S u T");
  add_field(find_s0);
  add_format(find_s0);
  add_search(find_s0);

  auto* linking = app.add_subcommand("linking", "linking symbols over a list of tame places");
  add_field(linking);
  add_format(linking);
  add_roots(linking);
  linking->add_option("--places", o.places, "places (default: S)");
  linking->add_flag("--mild-split", o.mild_split, "search a U/V split of the character basis");

  auto* certify_cmd = app.add_subcommand("certify", "build a certificate");
  add_field(certify_cmd);
  add_format(certify_cmd);
  add_search(certify_cmd);
  add_roots(certify_cmd);
  certify_cmd->add_option("--out", o.out_path, "write the canonical certificate here");

  auto* verify_cmd = app.add_subcommand("verify", "recompute a certificate and compare");
  verify_cmd->add_option("certificate", o.in_path, "certificate file")->required();
  add_format(verify_cmd);

  auto* enlarge = app.add_subcommand("enlarge", "sufficient test for adding primes to S");
  enlarge->add_option("certificate", o.in_path, "certificate file")->required();
  enlarge->add_option("--extra", o.extra, "comma-separated primes")->required();
  add_format(enlarge);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*cohomology) return cmd_cohomology(o, out);
    if (*kummer) return cmd_kummer(o, out);
    if (*find_s0) return cmd_find_s0(o, out);
    if (*linking) return cmd_linking(o, out);
    if (*certify_cmd) return cmd_certify(o, out);
    if (*verify_cmd) return cmd_verify(o, out);
    if (*enlarge) return cmd_enlarge(o, out);
  } catch (const SearchExhausted& e) {
    err << "error: " << e.what() << "\n";
    for (const auto& line : e.trace()) err << "  trace: " << line << "\n";
    return kExitDomain;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace mildcert::cli
