#include <cstdio>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "asgrs/asg.hpp"
#include "asgrs/attack.hpp"
#include "asgrs/complexity.hpp"
#include "asgrs/errors.hpp"
#include "asgrs/formats.hpp"
#include "asgrs/sampling.hpp"
#include "asgrs/sequence_analysis.hpp"

namespace {

using namespace asgrs;
using nlohmann::json;

constexpr int kOk = 0;
constexpr int kDomainFailure = 1;
constexpr int kUsage = 2;

struct Options {
  std::string params_path;
  std::string key_path;
  std::string in_path;
  std::string out_path;
  std::size_t count = 0;
  std::string format = "text";
  std::uint64_t seed = 0;
  std::size_t workers = 1;
  std::size_t max_candidates = 16;
  std::optional<bool> strict;
  std::size_t l = 0, m = 0, n = 0;
  bool exact_phi = false;
};

// --- I/O helpers

void emit(const Options& opt, std::string_view data) {
  if (opt.out_path.empty() || opt.out_path == "-") {
    std::cout << data;
    std::cout.flush();
  } else {
    write_file(opt.out_path, data);
  }
}

std::string input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  return read_file(path);
}

AsgParams load_params(const Options& opt) {
  AsgParams p = params_from_json(read_file(opt.params_path));
  if (opt.strict) {
    p.strict = *opt.strict;
  }
  const auto violations = validate_params(p);
  if (!violations.empty()) {
    throw ValidationError(describe(violations));
  }
  return p;
}

AsgKey load_key(const Options& opt, const AsgParams& p) {
  AsgKey key = key_from_json(read_file(opt.key_path), p);
  require_valid(p, key);
  return key;
}

// --- subcommands

int cmd_params(const Options& opt) {
  const AsgParams p = default_params(opt.l, opt.m, opt.n, opt.strict.value_or(true));
  const auto violations = validate_params(p);
  if (!violations.empty()) {
    throw ValidationError(describe(violations));
  }
  emit(opt, params_to_json(p));
  return kOk;
}

int cmd_keygen(const Options& opt) {
  const AsgParams p = load_params(opt);
  std::mt19937_64 rng(opt.seed);
  emit(opt, key_to_json(random_key(p, rng)));
  return kOk;
}

int cmd_keystream(const Options& opt) {
  const AsgParams p = load_params(opt);
  const AsgKey key = load_key(opt, p);
  emit(opt, encode_bits(keystream(p, key, opt.count), parse_bit_format(opt.format)));
  return kOk;
}

int cmd_attack(const Options& opt) {
  const AsgParams p = load_params(opt);
  AttackConfig config = AttackConfig::with_defaults(p, decode_bits(input(opt.in_path)));
  config.worker_count = opt.workers;
  config.max_candidates = opt.max_candidates;
  const AttackReport report = run_attack(config);
  emit(opt, report_to_json(report));
  if (report.recovered_keys.empty()) {
    std::cerr << "asgrs: no key recovered\n";
    return kDomainFailure;
  }
  return kOk;
}

int cmd_analyze(const Options& opt) {
  const BitSequence bits = decode_bits(input(opt.in_path));
  const LfsrFit fit = berlekamp_massey(bits);
  const auto period = measure_period(bits);
  json j{{"length", bits.size()},
         {"linear_complexity", fit.linear_complexity},
         {"connection", fit.connection.to_string()},
         {"characteristic", fit.characteristic().to_string()},
         {"period", period ? json(*period) : json(nullptr)}};
  emit(opt, j.dump(2) + "\n");
  return kOk;
}

std::string format_table(const std::string& title, const std::vector<EstimateRow>& rows,
                         const std::vector<PublishedValue>* published) {
  std::ostringstream os;
  os << title << "\n";
  os << std::left << std::setw(42) << "attack" << std::right << std::setw(10) << "MKLR" << std::setw(12)
     << "log2 cost";
  if (published) {
    os << std::setw(12) << "published" << "  check";
  }
  os << "\n" << std::fixed << std::setprecision(2);
  const auto checks = published ? check_against_published(rows, *published) : std::vector<RowCheck>{};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const EstimateRow& row = rows[i];
    os << std::left << std::setw(42) << row.attack_name << std::right << std::setw(10);
    if (row.mklr_log2) {
      os << *row.mklr_log2;
    } else {
      os << "-";
    }
    os << std::setw(12) << row.complexity_log2;
    if (published) {
      for (const RowCheck& c : checks) {
        if (c.attack_name == row.attack_name) {
          os << std::setw(12) << c.published_log2 << "  " << (c.consistent ? "ok" : "INCONSISTENT");
        }
      }
    }
    os << "\n";
  }
  return os.str();
}

int cmd_estimate(const Options& opt) {
  const ComplexityInputs in{opt.l, opt.m, opt.n, opt.exact_phi};
  const bool reference = opt.l == 64 && opt.m == 64 && opt.n == 64 && !opt.exact_phi;
  std::ostringstream os;
  os << "l=" << opt.l << " m=" << opt.m << " n=" << opt.n << (opt.exact_phi ? " (exact Phi)" : "") << "\n\n";
  os << format_table("Original ASG", estimate_table1(in), reference ? &published_table1_64() : nullptr) << "\n";
  os << format_table("ASG(r,s)", estimate_table2(in), reference ? &published_table2_64() : nullptr);
  emit(opt, os.str());
  return kOk;
}

int cmd_oracle(const Options& opt) {
  const AsgParams p = load_params(opt);
  const BitSequence bits = decode_bits(input(opt.in_path));
  emit(opt, keys_to_json(brute_force_oracle(p, bits)));
  return kOk;
}

int cmd_reduce(const Options& opt) {
  const AsgParams p = load_params(opt);
  const AsgKey key = load_key(opt, p);
  const ReducedModel model = reduce(p, key);
  const std::size_t count = opt.count == 0 ? 1000 : opt.count;
  const BitSequence direct = keystream(p, key, count);
  const BitSequence classical = classical_asg_keystream(model, count);
  std::size_t mismatches = 0;
  for (std::size_t t = 0; t < count; ++t) {
    mismatches += direct[t] != classical[t] ? 1 : 0;
  }
  json j = json::parse(reduced_model_to_json(model));
  j["checked_bits"] = count;
  j["mismatches"] = mismatches;
  j["equivalent"] = mismatches == 0;
  emit(opt, j.dump(2) + "\n");
  return mismatches == 0 ? kOk : kDomainFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Alternating step generator ASG(r,s): simulation, key recovery and cost estimates"};
  app.require_subcommand(1);
  Options opt;

  auto add_strict = [&](CLI::App* sub) {
    sub->add_flag_callback("--strict", [&] { opt.strict = true; }, "Require gcd(m, n) = 1 (default)");
    sub->add_flag_callback("--no-strict", [&] { opt.strict = false; }, "Allow gcd(m, n) > 1");
  };
  auto add_out = [&](CLI::App* sub) { sub->add_option("--out", opt.out_path, "Output file (default stdout)"); };

  auto* params = app.add_subcommand("params", "Write a params file with default primitive polynomials");
  params->add_option("--l", opt.l, "Length of A")->required();
  params->add_option("--m", opt.m, "Length of B")->required();
  params->add_option("--n", opt.n, "Length of C")->required();
  add_strict(params);
  add_out(params);

  auto* keygen = app.add_subcommand("keygen", "Sample a valid key");
  keygen->add_option("--params", opt.params_path, "Params JSON")->required();
  keygen->add_option("--seed", opt.seed, "RNG seed");
  add_strict(keygen);
  add_out(keygen);

  auto* ks = app.add_subcommand("keystream", "Generate keystream bits");
  ks->add_option("--params", opt.params_path, "Params JSON")->required();
  ks->add_option("--key", opt.key_path, "Key JSON")->required();
  ks->add_option("--count", opt.count, "Number of bits")->required();
  ks->add_option("--format", opt.format, "text or binary")->check(CLI::IsMember({"text", "binary"}));
  add_strict(ks);
  add_out(ks);

  auto* attack = app.add_subcommand("attack", "Recover a key from keystream");
  attack->add_option("--params", opt.params_path, "Params JSON")->required();
  attack->add_option("--in", opt.in_path, "Keystream file (default stdin)");
  attack->add_option("--workers", opt.workers, "Worker threads")->check(CLI::PositiveNumber);
  attack->add_option("--max-candidates", opt.max_candidates, "Report at most this many keys")
      ->check(CLI::PositiveNumber);
  add_strict(attack);
  add_out(attack);

  auto* analyze = app.add_subcommand("analyze", "Linear complexity and period of a bitstream");
  analyze->add_option("--in", opt.in_path, "Bitstream file (default stdin)");
  add_out(analyze);

  auto* estimate = app.add_subcommand("estimate", "Attack cost tables in log2");
  estimate->add_option("--l", opt.l, "Length of A")->required()->check(CLI::Range(2, 4096));
  estimate->add_option("--m", opt.m, "Length of B")->required()->check(CLI::Range(2, 4096));
  estimate->add_option("--n", opt.n, "Length of C")->required()->check(CLI::Range(2, 4096));
  estimate->add_flag("--exact-phi", opt.exact_phi, "Count admissible jumps exactly (m, n <= 24)");
  add_out(estimate);

  auto* oracle = app.add_subcommand("oracle", "Brute-force every key matching a keystream (small sizes)");
  oracle->add_option("--params", opt.params_path, "Params JSON")->required();
  oracle->add_option("--in", opt.in_path, "Keystream file (default stdin)");
  add_strict(oracle);
  add_out(oracle);

  auto* red = app.add_subcommand("reduce", "Classical-ASG model of a key, with an equivalence check");
  red->add_option("--params", opt.params_path, "Params JSON")->required();
  red->add_option("--key", opt.key_path, "Key JSON")->required();
  red->add_option("--count", opt.count, "Bits to compare (default 1000)");
  add_strict(red);
  add_out(red);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*params) return cmd_params(opt);
    if (*keygen) return cmd_keygen(opt);
    if (*ks) return cmd_keystream(opt);
    if (*attack) return cmd_attack(opt);
    if (*analyze) return cmd_analyze(opt);
    if (*estimate) return cmd_estimate(opt);
    if (*oracle) return cmd_oracle(opt);
    if (*red) return cmd_reduce(opt);
  } catch (const std::exception& e) {
    std::cerr << "asgrs: " << e.what() << "\n";
    return kDomainFailure;
  }
  return kUsage;
}
