#include "mildcert/seeker.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "mildcert/cohomology.hpp"
#include "mildcert/error.hpp"
#include "mildcert/kummer.hpp"

namespace mildcert {

namespace {

Integer env_integer(const char* name, Integer fallback) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return fallback;
  char* end = nullptr;
  const long long v = std::strtoll(raw, &end, 10);
  if (*end != '\0' || v <= 0) throw Error(std::string(name) + " must be a positive integer");
  return v;
}

PrimeSet as_set(std::vector<Integer> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

SearchConfig search_config_from_environment() {
  SearchConfig cfg;
  cfg.max_prime = env_integer("MILDCERT_MAX_PRIME", cfg.max_prime);
  cfg.max_candidates_per_slot = static_cast<std::size_t>(
      env_integer("MILDCERT_MAX_CANDIDATES", static_cast<Integer>(cfg.max_candidates_per_slot)));
  return cfg;
}

std::vector<Integer> SeekerResult::places() const {
  std::vector<Integer> out = S0;
  out.insert(out.end(), Q.begin(), Q.end());
  return out;
}

std::size_t s0_defect(const PrimeSet& S0, const PrimeSet& T, Integer p) {
  const std::size_t vdim = kummer_dimension(S0, T, p);
  std::size_t coloops = 0;
  for (Integer q : S0) {
    if (kummer_dimension(set_difference(S0, {q}), T, p) > vdim) ++coloops;
  }
  const std::size_t h1 = global_profile(S0, T, p).h[1];
  return 3 * vdim + coloops + (h1 < 2 ? 2 - h1 : 0);
}

std::vector<Integer> find_S0_killing_V(const PrimeSet& T, const AvoidanceSet& avoid, Integer p,
                                       const SearchConfig& cfg, SeekerTrace* trace) {
  require_odd_prime(p);
  avoid.validate(p);
  SeekerTrace local;
  if (trace == nullptr) trace = &local;
  std::vector<Integer> chosen;
  std::size_t defect = s0_defect({}, T, p);
  trace->initial_defect = defect;

  TamePrimeStream stream(p, avoid);
  std::size_t scanned = 0;
  std::size_t scanned_since_accept = 0;
  while (defect > 0) {
    const auto q = stream.next(cfg.max_prime);
    if (!q || scanned_since_accept >= cfg.max_candidates_per_slot) {
      throw SearchExhausted("search bound exceeded while killing V (defect " +
                                std::to_string(defect) + " after " + std::to_string(scanned) +
                                " candidates)",
                            describe_trace(*trace));
    }
    ++scanned;
    ++scanned_since_accept;
    if (contains(T, *q)) continue;
    auto trial = chosen;
    trial.push_back(*q);
    const std::size_t trial_defect = s0_defect(as_set(trial), T, p);
    if (trial_defect < defect) {
      chosen = std::move(trial);
      defect = trial_defect;
      trace->s0_steps.push_back({*q, scanned, defect});
      scanned_since_accept = 0;
    }
  }
  return chosen;
}

std::vector<Integer> find_linking_primes(const std::vector<Integer>& S0, const PrimeSet& T,
                                         const AvoidanceSet& avoid, Integer p,
                                         const SearchConfig& cfg, SeekerTrace* trace) {
  require_odd_prime(p);
  avoid.validate(p);
  if (!drop_one_holds(as_set(S0), T, p)) {
    throw Error("linking-prime search needs the drop-one condition on S0");
  }
  SeekerTrace local;
  if (trace == nullptr) trace = &local;
  std::vector<TamePrime> slots;
  for (Integer q : S0) slots.push_back(make_tame_prime(q, p));

  std::vector<TamePrime> chosen;
  for (std::size_t a = 0; a < slots.size(); ++a) {
    const ConditionBa condition(a, slots, T, chosen);
    SlotStep step;
    step.slot = a;
    TamePrimeStream stream(p, avoid);
    bool filled = false;
    while (step.candidates_scanned < cfg.max_candidates_per_slot) {
      const auto q = stream.next(cfg.max_prime);
      if (!q) break;
      const auto taken = [&](Integer x) {
        return contains(T, x) || std::find(S0.begin(), S0.end(), x) != S0.end() ||
               std::any_of(chosen.begin(), chosen.end(), [x](const TamePrime& c) { return c.q == x; });
      };
      if (taken(*q)) continue;
      ++step.candidates_scanned;
      const auto outcome = condition.evaluate(*q);
      if (outcome.satisfied) {
        step.prime = *q;
        chosen.push_back(make_tame_prime(*q, p));
        filled = true;
        break;
      }
      ++step.failures[static_cast<std::size_t>(outcome.first_failure)];
    }
    trace->slot_steps.push_back(step);
    if (!filled) {
      const auto worst = std::max_element(step.failures.begin(), step.failures.end());
      const auto clause = static_cast<BaClause>(worst - step.failures.begin());
      std::ostringstream msg;
      msg << "search bound exceeded in linking slot " << a + 1 << " after "
          << step.candidates_scanned << " candidates; most frequent failure: "
          << clause_name(clause);
      throw SearchExhausted(msg.str(), describe_trace(*trace));
    }
  }
  std::vector<Integer> out;
  for (const auto& c : chosen) out.push_back(c.q);
  return out;
}

SeekerResult seek_certified_set(const PrimeSet& S, const PrimeSet& T, const AvoidanceSet& avoid,
                                Integer p, const SearchConfig& cfg) {
  require_odd_prime(p);
  require_disjoint(S, T);
  for (Integer q : avoid.explicit_primes) {
    if (contains(S, q) || contains(T, q)) throw Error("avoidance list must be disjoint from S and T");
  }
  if (cfg.max_prime < 2 || cfg.max_candidates_per_slot == 0) throw Error("search bounds must be positive");

  SeekerResult out;
  out.p = p;
  out.marking = set_union(S, T);
  out.S0 = find_S0_killing_V(out.marking, avoid, p, cfg, &out.trace);
  out.Q = find_linking_primes(out.S0, out.marking, avoid, p, cfg, &out.trace);
  return out;
}

std::vector<std::string> describe_trace(const SeekerTrace& trace) {
  std::vector<std::string> lines;
  lines.push_back("initial defect " + std::to_string(trace.initial_defect));
  for (const auto& s : trace.s0_steps) {
    lines.push_back("accept " + std::to_string(s.prime) + " into S0 after " +
                    std::to_string(s.candidates_scanned) + " candidates, defect " +
                    std::to_string(s.defect_after));
  }
  for (const auto& s : trace.slot_steps) {
    std::string line = "slot " + std::to_string(s.slot + 1) + ": ";
    line += s.prime ? "q=" + std::to_string(s.prime) : std::string("unfilled");
    line += " after " + std::to_string(s.candidates_scanned) + " candidates; failures";
    for (std::size_t c = 0; c < kBaClauseCount; ++c) {
      line += " " + std::string(clause_name(static_cast<BaClause>(c))) + "=" +
              std::to_string(s.failures[c]);
    }
    lines.push_back(line);
  }
  return lines;
}

}  // namespace mildcert
