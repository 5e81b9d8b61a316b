#include "asgrs/attack.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <string>
#include <thread>

#include "asgrs/errors.hpp"
#include "asgrs/registers.hpp"

namespace asgrs {

std::size_t minimum_keystream_bits(const AsgParams& params) { return 3 * (params.m + params.n); }

std::size_t minimum_verify_margin(const AsgParams& params) { return params.l + 20; }

std::size_t recommended_keystream_bits(const AsgParams& params) {
  return 4 * (params.m + params.n) + params.l + 20;
}

AttackConfig AttackConfig::with_defaults(AsgParams params, BitSequence keystream) {
  AttackConfig config;
  config.verify_margin = minimum_verify_margin(params);
  config.params = std::move(params);
  config.keystream = std::move(keystream);
  return config;
}

void validate_config(const AttackConfig& config) {
  const auto violations = validate_params(config.params);
  if (!violations.empty()) {
    throw ConfigError("invalid parameters: " + describe(violations));
  }
  const std::size_t need = minimum_keystream_bits(config.params);
  if (config.keystream.size() < need) {
    throw ConfigError("keystream has " + std::to_string(config.keystream.size()) +
                      " bits; the attack needs at least 3(m+n) = " + std::to_string(need));
  }
  if (config.verify_margin < minimum_verify_margin(config.params)) {
    throw ConfigError("verify_margin " + std::to_string(config.verify_margin) + " is below l+20 = " +
                      std::to_string(minimum_verify_margin(config.params)));
  }
  if (config.worker_count == 0) {
    throw ConfigError("worker_count must be positive");
  }
  if (config.max_candidates == 0) {
    throw ConfigError("max_candidates must be positive");
  }
}

// ------------------------------------------------------ stream reconstruction

ReconstructedStreams reconstruct_streams_until(const BitSequence& a_seq, const BitSequence& keystream, bool beta0,
                                               std::size_t beta_bits, std::size_t lambda_bits) {
  ReconstructedStreams out;
  if (keystream.empty()) {
    return out;
  }
  if (a_seq.size() + 1 < keystream.size()) {
    throw ContractViolation("reconstruct_streams: control sequence shorter than keystream - 1");
  }
  bool beta = beta0;
  bool lambda = keystream[0] != beta0;
  out.beta.push_back(beta);
  out.lambda.push_back(lambda);
  std::size_t t = 0;
  while (t + 1 < keystream.size() && (out.beta.size() < beta_bits || out.lambda.size() < lambda_bits)) {
    const bool diff = keystream[t] != keystream[t + 1];
    if (a_seq[t]) {
      beta ^= diff;
      out.beta.push_back(beta);
    } else {
      lambda ^= diff;
      out.lambda.push_back(lambda);
    }
    ++t;
  }
  out.keystream_bits_used = t + 1;
  return out;
}

ReconstructedStreams reconstruct_streams(const BitSequence& a_seq, const BitSequence& keystream, bool beta0) {
  const std::size_t all = keystream.size() + 1;
  return reconstruct_streams_until(a_seq, keystream, beta0, all, all);
}

// ------------------------------------------------------------------ fitting

namespace {

bool fit_reproduces(const LfsrFit& fit, const BitSequence& prefix) {
  return fit.generate(prefix.size()) == prefix;
}

}  // namespace

FitResult fit_streams(const AsgParams& params, const BitSequence& a_seq, const BitSequence& keystream,
                      const BitVector& a_init, bool beta0) {
  FitResult result;
  const std::size_t beta_need = 2 * params.m;
  const std::size_t lambda_need = 2 * params.n;
  const ReconstructedStreams streams =
      reconstruct_streams_until(a_seq, keystream, beta0, beta_need, lambda_need);
  if (streams.beta.size() < beta_need || streams.lambda.size() < lambda_need) {
    result.status = FitStatus::insufficient_bits;
    return result;
  }

  LfsrFit beta_fit = berlekamp_massey(streams.beta.slice(0, beta_need));
  LfsrFit lambda_fit = berlekamp_massey(streams.lambda.slice(0, lambda_need));
  result.bm_runs = 2;
  const bool within_cap = beta_fit.linear_complexity >= 1 && beta_fit.linear_complexity <= params.m &&
                          lambda_fit.linear_complexity >= 1 && lambda_fit.linear_complexity <= params.n;
  // The stream that filled up first may carry extra bits; the fit must explain them too.
  if (!within_cap || !fit_reproduces(beta_fit, streams.beta) || !fit_reproduces(lambda_fit, streams.lambda)) {
    result.status = FitStatus::rejected;
    return result;
  }
  result.status = FitStatus::fitted;
  result.model = CandidateModel{a_init, beta0, std::move(beta_fit), std::move(lambda_fit),
                                streams.keystream_bits_used};
  return result;
}

FitResult fit_candidate(const AttackConfig& config, const BitVector& a_init, bool beta0) {
  const DeBruijnRegister control(LfsrSpec(config.params.poly_a), RegisterState{a_init});
  const std::size_t len = config.keystream.empty() ? 0 : config.keystream.size() - 1;
  return fit_streams(config.params, control_sequence(control, len), config.keystream, a_init, beta0);
}

bool verify_candidate(const AttackConfig& config, const CandidateModel& candidate) {
  const ReducedModel model{
      candidate.beta_fit.to_spec(),
      candidate.beta_fit.to_register_state(),
      candidate.lambda_fit.to_spec(),
      candidate.lambda_fit.to_register_state(),
      DeBruijnRegister(LfsrSpec(config.params.poly_a), RegisterState{candidate.a_init}),
  };
  AsgGenerator gen(model);
  for (std::size_t t = 0; t < config.keystream.size(); ++t) {
    if (gen.next() != config.keystream[t]) {
      return false;
    }
  }
  return true;
}

// ------------------------------------------------------ decimation recovery

namespace {

std::uint64_t times_alpha(const FieldContext& field, std::uint64_t y) {
  return field.multiply(y, field.alpha().bits());
}

}  // namespace

BitMatrix trace_system(const FieldContext& field, std::uint64_t gamma) {
  const std::size_t m = field.degree();
  BitMatrix a(m, m);
  std::uint64_t gamma_t = 1;
  for (std::size_t t = 0; t < m; ++t) {
    std::uint64_t y = gamma_t;  // alpha^i * gamma^t
    for (std::size_t i = 0; i < m; ++i) {
      if (field.trace(y)) {
        a.set(t, i);
      }
      y = times_alpha(field, y);
    }
    gamma_t = field.multiply(gamma_t, gamma);
  }
  return a;
}

std::vector<std::uint64_t> admissible_jumps(std::size_t k) {
  std::vector<std::uint64_t> out;
  const std::uint64_t period = mersenne(k);
  for (std::uint64_t r = 1; r <= period - 1; ++r) {
    if (std::gcd(r, period) == 1) {
      out.push_back(r);
    }
  }
  return out;
}

std::optional<DecimationRecovery> recover_decimation(const FieldContext& field, const BitSequence& observed,
                                                     std::size_t verify_bits, const DecimationOptions& options,
                                                     DecimationSearchStats* stats) {
  const std::size_t m = field.degree();
  if (observed.size() < m + verify_bits) {
    throw ContractViolation("recover_decimation: need m + verify_bits = " + std::to_string(m + verify_bits) +
                            " observed bits, got " + std::to_string(observed.size()));
  }
  DecimationSearchStats local;
  DecimationSearchStats& st = stats != nullptr ? *stats : local;
  const BitVector rhs = observed.slice(0, m);
  const std::uint64_t alpha = field.alpha().bits();

  for (std::uint64_t r : admissible_jumps(m)) {
    ++st.exponents_tried;
    const std::uint64_t gamma = field.power(alpha, r);
    if (options.required_minimal_polynomial &&
        minimal_polynomial(field.element(gamma)) != *options.required_minimal_polynomial) {
      continue;
    }
    const SolveResult solved = solve_linear_system(trace_system(field, gamma), rhs);
    ++st.systems_solved;
    if (solved.status != SolveStatus::unique) {
      ++st.rank_deficient;
      continue;
    }
    const std::uint64_t u = solved.solution.to_mask();
    if (u == 0) {
      continue;
    }
    std::uint64_t w = u;  // u * gamma^t
    bool match = true;
    for (std::size_t t = 0; t < m + verify_bits; ++t) {
      if (t >= m && field.trace(w) != observed[t]) {
        match = false;
        break;
      }
      w = field.multiply(w, gamma);
    }
    if (!match) {
      continue;
    }
    BitVector init(m);
    std::uint64_t v = u;  // u * alpha^t
    for (std::size_t t = 0; t < m; ++t) {
      init.set(t, field.trace(v));
      v = times_alpha(field, v);
    }
    return DecimationRecovery{r, field.element(u), std::move(init)};
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- run_attack

AttackCounters& AttackCounters::operator+=(const AttackCounters& other) {
  a_states_tried += other.a_states_tried;
  beta0_guesses += other.beta0_guesses;
  insufficient_bits += other.insufficient_bits;
  bm_runs += other.bm_runs;
  fit_rejections += other.fit_rejections;
  verified_candidates += other.verified_candidates;
  trace_solves += other.trace_solves;
  decimation_failures += other.decimation_failures;
  short_verification += other.short_verification;
  keys_dropped += other.keys_dropped;
  return *this;
}

namespace {

struct PartialReport {
  std::vector<AsgKey> keys;
  AttackCounters counters;
};

struct SearchContext {
  const AttackConfig& config;
  FieldContext field_b;
  FieldContext field_c;
  LfsrSpec spec_a;
};

std::optional<DecimationRecovery> recover_from_fit(const SearchContext& ctx, const FieldContext& field,
                                                   const LfsrFit& fit, AttackCounters& counters) {
  const std::size_t m = field.degree();
  const std::size_t verify_bits = 2 * m;
  DecimationOptions options;
  if (ctx.config.minpoly_prefilter) {
    options.required_minimal_polynomial = fit.characteristic();
  }
  DecimationSearchStats stats;
  auto found = recover_decimation(field, fit.generate(m + verify_bits), verify_bits, options, &stats);
  counters.trace_solves += stats.systems_solved;
  return found;
}

void search_control_state(const SearchContext& ctx, std::uint64_t a_bits, PartialReport& out) {
  const AttackConfig& config = ctx.config;
  const AsgParams& params = config.params;
  const BitVector a_init = BitVector::from_mask(a_bits, params.l);
  const BitSequence a_seq =
      control_sequence(DeBruijnRegister(ctx.spec_a, RegisterState{a_init}), config.keystream.size() - 1);
  ++out.counters.a_states_tried;

  for (const bool beta0 : {false, true}) {
    ++out.counters.beta0_guesses;
    FitResult fit = fit_streams(params, a_seq, config.keystream, a_init, beta0);
    out.counters.bm_runs += fit.bm_runs;
    if (fit.status == FitStatus::insufficient_bits) {
      ++out.counters.insufficient_bits;
      continue;
    }
    if (fit.status == FitStatus::rejected) {
      ++out.counters.fit_rejections;
      continue;
    }
    const CandidateModel& cand = *fit.model;
    if (!verify_candidate(config, cand)) {
      continue;
    }
    ++out.counters.verified_candidates;
    if (config.keystream.size() - cand.fit_window < config.verify_margin) {
      ++out.counters.short_verification;
    }

    const auto rb = recover_from_fit(ctx, ctx.field_b, cand.beta_fit, out.counters);
    const auto rc = rb ? recover_from_fit(ctx, ctx.field_c, cand.lambda_fit, out.counters) : std::nullopt;
    if (!rb || !rc) {
      ++out.counters.decimation_failures;
      continue;
    }
    AsgKey key{a_init, state_from_output_prefix(rb->init).cells, state_from_output_prefix(rc->init).cells, rb->r,
               rc->r};
    if (keystream(params, key, config.keystream.size()) == config.keystream) {
      out.keys.push_back(std::move(key));
    } else {
      ++out.counters.decimation_failures;
    }
  }
}

}  // namespace

AttackReport run_attack(const AttackConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  validate_config(config);
  const SearchContext ctx{config, FieldContext(config.params.poly_b), FieldContext(config.params.poly_c),
                          LfsrSpec(config.params.poly_a)};

  const std::uint64_t total = std::uint64_t{1} << config.params.l;
  const std::size_t workers = static_cast<std::size_t>(std::min<std::uint64_t>(config.worker_count, total));
  std::vector<PartialReport> partial(workers);
  auto work = [&](std::size_t w) {
    const std::uint64_t begin = total * w / workers;
    const std::uint64_t end = total * (w + 1) / workers;
    for (std::uint64_t a = begin; a < end; ++a) {
      search_control_state(ctx, a, partial[w]);
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      threads.emplace_back(work, w);
    }
  }

  AttackReport report;
  for (PartialReport& p : partial) {
    report.counters += p.counters;
    for (AsgKey& key : p.keys) {
      if (report.recovered_keys.size() < config.max_candidates) {
        report.recovered_keys.push_back(std::move(key));
      } else {
        ++report.counters.keys_dropped;
      }
    }
  }
  report.wall_time_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

// --------------------------------------------------------------- the oracle

double oracle_work(const AsgParams& params) {
  const double phi1 = static_cast<double>(admissible_jumps(params.m).size());
  const double phi2 = static_cast<double>(admissible_jumps(params.n).size());
  return std::ldexp(phi1 * phi2, static_cast<int>(params.l + params.m + params.n));
}

std::vector<AsgKey> brute_force_oracle(const AsgParams& params, const BitSequence& keystream) {
  const auto violations = validate_params(params);
  if (!violations.empty()) {
    throw ValidationError(describe(violations));
  }
  if (params.l + params.m + params.n > 40 || oracle_work(params) > kOracleWorkCap) {
    throw UnsupportedParameter("brute-force oracle refuses work above 2^26 (2^l 2^m 2^n Phi_1 Phi_2)");
  }
  std::vector<AsgKey> matches;
  const std::uint64_t a_count = std::uint64_t{1} << params.l;
  const std::uint64_t b_count = std::uint64_t{1} << params.m;
  const std::uint64_t c_count = std::uint64_t{1} << params.n;

  for (std::uint64_t r : admissible_jumps(params.m)) {
    for (std::uint64_t s : admissible_jumps(params.n)) {
      AsgKey probe{BitVector(params.l), BitVector::from_mask(1, params.m), BitVector::from_mask(1, params.n), r, s};
      const AsgGenerator base(params, probe);
      for (std::uint64_t a = 0; a < a_count; ++a) {
        const BitVector state_a = BitVector::from_mask(a, params.l);
        for (std::uint64_t b = 1; b < b_count; ++b) {
          const BitVector state_b = BitVector::from_mask(b, params.m);
          for (std::uint64_t c = 1; c < c_count; ++c) {
            const BitVector state_c = BitVector::from_mask(c, params.n);
            AsgGenerator gen = base.rekeyed(state_a, state_b, state_c);
            bool match = true;
            for (std::size_t t = 0; t < keystream.size(); ++t) {
              if (gen.next() != keystream[t]) {
                match = false;
                break;
              }
            }
            if (match) {
              matches.push_back(AsgKey{state_a, state_b, state_c, r, s});
            }
          }
        }
      }
    }
  }
  return matches;
}

}  // namespace asgrs
