// Acceptance suite: one PASS/FAIL line per criterion.
//
//   asgrs_acceptance          run all criteria
//   asgrs_acceptance 5 7      run the listed criteria
//
// Exit status is 0 iff every selected criterion passed.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "asgrs/asg.hpp"
#include "asgrs/attack.hpp"
#include "asgrs/complexity.hpp"
#include "asgrs/errors.hpp"
#include "asgrs/registers.hpp"
#include "asgrs/sampling.hpp"
#include "asgrs/sequence_analysis.hpp"

using namespace asgrs;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  const char* title;
  double time_limit_seconds;
  std::function<Outcome()> run;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

// ---------------------------------------------------------------- criteria

Outcome model_reduction() {
  std::mt19937_64 rng(1001);
  std::size_t mismatching_keys = 0, total = 0;
  for (const auto& [l, m, n] : {std::array<std::size_t, 3>{3, 3, 4}, std::array<std::size_t, 3>{5, 5, 7}}) {
    const AsgParams p = default_params(l, m, n);
    for (int i = 0; i < 100; ++i) {
      const AsgKey k = random_key(p, rng);
      ++total;
      if (classical_asg_keystream(reduce(p, k), 1000) != keystream(p, k, 1000)) ++mismatching_keys;
    }
  }
  return {mismatching_keys == 0, fmt("%zu/%zu keys with a mismatch over 1000 bits", mismatching_keys, total)};
}

Outcome period_claim() {
  std::mt19937_64 rng(1002);
  const AsgParams p = default_params(3, 3, 4);
  std::size_t good = 0;
  std::set<std::size_t> seen;
  for (int i = 0; i < 20; ++i) {
    const auto period = measure_period(keystream(p, random_key(p, rng), 2 * 840 + 64));
    if (period) seen.insert(*period);
    good += period == 840u ? 1 : 0;
  }
  std::ostringstream periods;
  for (auto v : seen) periods << v << ' ';
  return {good == 20, fmt("%zu/20 keys with period 840 (observed: %s)", good, periods.str().c_str())};
}

Outcome linear_complexity_bound() {
  std::mt19937_64 rng(1003);
  const AsgParams p = default_params(3, 3, 4);
  std::size_t good = 0, lo = 1000, hi = 0;
  for (int i = 0; i < 20; ++i) {
    const std::size_t L = berlekamp_massey(keystream(p, random_key(p, rng), 2 * 840)).linear_complexity;
    lo = std::min(lo, L);
    hi = std::max(hi, L);
    good += (L > 28 && L <= 56) ? 1 : 0;
  }
  return {good == 20, fmt("%zu/20 keys with 28 < L <= 56 (range %zu..%zu)", good, lo, hi)};
}

Outcome decimation_theorem() {
  const LfsrSpec spec(default_primitive_polynomial(4));
  const BitSequence base = output_sequence(spec, RegisterState{BitVector::from_mask(1, 4)}, 14 * 15 * 3);
  std::set<std::size_t> failing;
  bool iff = true;
  for (std::size_t r = 1; r <= 14; ++r) {
    const auto period = measure_period(decimate(base, r));
    const bool full = period == 15u;
    iff = iff && (full == (std::gcd(r, std::size_t{15}) == 1));
    if (!full) failing.insert(r);
  }
  const bool ok = iff && failing == std::set<std::size_t>{3, 5, 6, 9, 10, 12};
  std::ostringstream os;
  for (auto r : failing) os << r << ' ';
  return {ok, fmt("failing r: { %s}", os.str().c_str())};
}

Outcome end_to_end() {
  std::mt19937_64 rng(1005);
  const AsgParams p = default_params(8, 7, 5);
  const std::size_t supplied = recommended_keystream_bits(p);
  std::size_t held_out_ok = 0, reported = 0, reported_ok = 0;
  const int trials = 50;
  for (int i = 0; i < trials; ++i) {
    const AsgKey k = random_key(p, rng);
    const BitSequence all = keystream(p, k, supplied + 1000);
    const AttackReport rep = run_attack(AttackConfig::with_defaults(p, all.slice(0, supplied)));
    bool held = false;
    for (const AsgKey& key : rep.recovered_keys) {
      const BitSequence regen = keystream(p, key, supplied + 1000);
      ++reported;
      reported_ok += regen.slice(0, supplied) == all.slice(0, supplied) ? 1 : 0;
      held = held || regen == all;
    }
    held_out_ok += held ? 1 : 0;
  }
  const bool ok = held_out_ok * 100 >= 95 * static_cast<std::size_t>(trials) && reported_ok == reported;
  return {ok, fmt("%zu/%d trials regenerate 1000 held-out bits; %zu/%zu reported keys regenerate the supplied %zu bits",
                  held_out_ok, trials, reported_ok, reported, supplied)};
}

Outcome minimum_length() {
  std::mt19937_64 rng(1006);
  const AsgParams p = default_params(3, 3, 4);
  const std::size_t mklr = minimum_keystream_bits(p);
  std::size_t rejected = 0, checked = 0;
  for (std::size_t len = 0; len < mklr; ++len) {
    ++checked;
    try {
      run_attack(AttackConfig::with_defaults(p, keystream(p, random_key(p, rng), len)));
    } catch (const ConfigError&) {
      ++rejected;
    }
  }
  std::size_t success = 0;
  for (int i = 0; i < 30; ++i) {
    const AsgKey k = random_key(p, rng);
    const BitSequence all = keystream(p, k, mklr + 1000);
    const AttackReport rep = run_attack(AttackConfig::with_defaults(p, all.slice(0, mklr)));
    const bool hit = std::any_of(rep.recovered_keys.begin(), rep.recovered_keys.end(),
                                 [&](const AsgKey& key) { return keystream(p, key, all.size()) == all; });
    success += hit ? 1 : 0;
  }
  return {rejected == checked && success * 2 >= 30,
          fmt("%zu/%zu short lengths rejected; %zu/30 succeed at exactly %zu bits (held-out check)", rejected,
              checked, success, mklr)};
}

Outcome trace_recovery() {
  std::mt19937_64 rng(1007);
  const std::size_t m = 7;
  const FieldContext f(default_primitive_polynomial(m));
  std::size_t cases = 0, exact = 0, equivalent = 0, full_rank = 0;
  for (std::uint64_t r : admissible_jumps(m)) {
    const std::uint64_t gamma = f.power(f.alpha().bits(), r);
    full_rank += rank(trace_system(f, gamma)) == m ? 1 : 0;
    for (int i = 0; i < 20; ++i) {
      const std::uint64_t u = 1 + uniform_below(rng, mersenne(m));
      BitSequence obs(3 * m);
      std::uint64_t w = u;
      for (std::size_t t = 0; t < obs.size(); ++t) {
        obs.set(t, f.trace(w));
        w = f.multiply(w, gamma);
      }
      ++cases;
      const auto rec = recover_decimation(f, obs, 2 * m);
      if (!rec) continue;
      exact += (rec->r == r && rec->u.bits() == u) ? 1 : 0;
      // Same decimated sequence over a full period.
      const std::uint64_t g2 = f.power(f.alpha().bits(), rec->r);
      std::uint64_t a = u, b = rec->u.bits();
      bool same = true;
      for (std::uint64_t t = 0; t < mersenne(m) && same; ++t) {
        same = f.trace(a) == f.trace(b);
        a = f.multiply(a, gamma);
        b = f.multiply(b, g2);
      }
      equivalent += same ? 1 : 0;
    }
  }
  const std::size_t exponents = admissible_jumps(m).size();
  return {exact == cases && full_rank == exponents,
          fmt("exact (r,u) in %zu/%zu cases; sequence-equivalent (r',u') in %zu/%zu; full rank %zu/%zu exponents. "
              "(r,u) and (2r mod 127, u^2) yield the same sequence, so only coset leaders can be returned exactly",
              exact, cases, equivalent, cases, full_rank, exponents)};
}

Outcome oracle_equivalence() {
  std::mt19937_64 rng(1008);
  const AsgParams p = default_params(3, 3, 4);
  const std::size_t len = recommended_keystream_bits(p);
  std::size_t subset_ok = 0, class_ok = 0;
  for (int i = 0; i < 30; ++i) {
    const AsgKey k = random_key(p, rng);
    const BitSequence z = keystream(p, k, len);
    const auto all = brute_force_oracle(p, z);
    const AttackReport rep = run_attack(AttackConfig::with_defaults(p, z));
    const bool subset = std::all_of(rep.recovered_keys.begin(), rep.recovered_keys.end(), [&](const AsgKey& key) {
      return std::find(all.begin(), all.end(), key) != all.end();
    });
    // Equivalence over two full periods.
    const BitSequence truth = keystream(p, k, 2 * 840);
    const bool represented = std::any_of(rep.recovered_keys.begin(), rep.recovered_keys.end(),
                                         [&](const AsgKey& key) { return keystream(p, key, 2 * 840) == truth; });
    subset_ok += subset ? 1 : 0;
    class_ok += represented ? 1 : 0;
  }
  return {subset_ok == 30 && class_ok == 30,
          fmt("recovered keys within the oracle set in %zu/30; true key's class represented in %zu/30", subset_ok,
              class_ok)};
}

Outcome complexity_tables() {
  const ComplexityInputs in{64, 64, 64};
  std::size_t t1_ok = 0;
  const auto c1 = check_against_published(estimate_table1(in), published_table1_64());
  for (const auto& c : c1) t1_ok += c.consistent ? 1 : 0;
  std::size_t t2_ok = 0;
  std::vector<std::string> flagged;
  const auto c2 = check_against_published(estimate_table2(in), published_table2_64());
  for (const auto& c : c2) {
    if (c.consistent) ++t2_ok;
    else flagged.push_back(c.attack_name);
  }
  const std::vector<std::string> expected_flags{"Clock Control Guessing Attack", "Khazaei's Reduced Complexity Attack",
                                                "Johansson's Reduced Complexity Attacks"};
  const bool ok = c1.size() == 9 && t1_ok == 9 && c2.size() == 9 && t2_ok == 6 && flagged == expected_flags;
  return {ok, fmt("table 1: %zu/9 within 0.5; table 2: %zu/6 consistent rows within 0.5, %zu rows flagged "
                  "(clock control guessing, Khazaei, Johansson)",
                  t1_ok, t2_ok, flagged.size())};
}

Outcome counter_scaling() {
  std::mt19937_64 rng(1010);
  std::vector<std::uint64_t> tried;
  bool exact = true;
  for (std::size_t l = 6; l <= 10; ++l) {
    const AsgParams p = default_params(l, 7, 5);
    const AsgKey k = random_key(p, rng);
    const AttackReport rep =
        run_attack(AttackConfig::with_defaults(p, keystream(p, k, recommended_keystream_bits(p))));
    tried.push_back(rep.counters.a_states_tried);
    exact = exact && rep.counters.a_states_tried == (std::uint64_t{1} << l);
  }
  for (std::size_t i = 1; i < tried.size(); ++i) exact = exact && tried[i] == 2 * tried[i - 1];
  std::ostringstream os;
  for (auto v : tried) os << v << ' ';
  return {exact, fmt("a_states_tried for l=6..10: %s(full-scale l=m=n=64 run not reproducible at desk scale; "
                     "substitute counter scaling)",
                     os.str().c_str())};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all{
      {1, "model-reduction equivalence", 5, model_reduction},
      {2, "period 2^l(2^m-1)(2^n-1) at (3,3,4)", 5, period_claim},
      {3, "linear-complexity bound at (3,3,4)", 10, linear_complexity_bound},
      {4, "decimation keeps the m-sequence iff gcd(r,15)=1", 1, decimation_theorem},
      {5, "end-to-end attack at (8,7,5)", 600, end_to_end},
      {6, "minimum keystream length 3(m+n)", 60, minimum_length},
      {7, "trace recovery returns exactly (r,u) at m=7", 30, trace_recovery},
      {8, "attack output within brute-force oracle at (3,3,4)", 300, oracle_equivalence},
      {9, "complexity tables at l=m=n=64", 1, complexity_tables},
      {10, "desk-scale substitute: a_states_tried doubles per unit l", 120, counter_scaling},
  };

  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));

  bool all_pass = true;
  for (const Criterion& c : all) {
    if (!selected.empty() && !selected.count(c.id)) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs <= c.time_limit_seconds;
    const bool pass = out.pass && in_time;
    all_pass = all_pass && pass;
    std::printf("[%s] %2d %s: %s [%.2fs, limit %.0fs%s]\n", pass ? "PASS" : "FAIL", c.id, c.title,
                out.detail.c_str(), secs, c.time_limit_seconds, in_time ? "" : ", TOO SLOW");
    std::fflush(stdout);
  }
  return all_pass ? 0 : 1;
}
