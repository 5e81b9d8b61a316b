#include "asgrs/formats.hpp"

#include <cstdint>
#include <fstream>
#include <iterator>
#include <sstream>

#include <json.hpp>

#include "asgrs/errors.hpp"

namespace asgrs {

using nlohmann::json;

namespace {

constexpr std::string_view kMagic = "ASGB";

std::string hex_of(std::uint64_t mask) {
  std::ostringstream os;
  os << "0x" << std::hex << mask;
  return os.str();
}

std::string hex_of(const BitVector& bits) {
  if (bits.size() > 64) {
    throw FormatError("cannot encode a state wider than 64 cells");
  }
  return hex_of(bits.to_mask());
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
}

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) {
    throw FormatError(std::string("missing field '") + name + "'");
  }
  return j.at(name);
}

std::uint64_t parse_hex(const json& j, const char* name) {
  if (!j.is_string()) {
    throw FormatError(std::string("field '") + name + "' must be a hex string");
  }
  std::string s = j.get<std::string>();
  if (s.rfind("0x", 0) == 0 || s.rfind("0X", 0) == 0) {
    s = s.substr(2);
  }
  if (s.empty() || s.size() > 16 || s.find_first_not_of("0123456789abcdefABCDEF") != std::string::npos) {
    throw FormatError(std::string("field '") + name + "' is not a hex mask: " + j.get<std::string>());
  }
  return std::stoull(s, nullptr, 16);
}

std::uint64_t parse_uint(const json& j, const char* name) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0)) {
    throw FormatError(std::string("field '") + name + "' must be a non-negative integer");
  }
  return j.get<std::uint64_t>();
}

BitVector parse_state(const json& j, const char* name, std::size_t length) {
  const std::uint64_t mask = parse_hex(j, name);
  if (length > 64 || (length < 64 && (mask >> length) != 0)) {
    throw FormatError(std::string("field '") + name + "' = " + hex_of(mask) + " does not fit " +
                      std::to_string(length) + " cells");
  }
  return BitVector::from_mask(mask, length);
}

json key_json(const AsgKey& key) {
  return json{{"state_a", hex_of(key.state_a)},
              {"state_b", hex_of(key.state_b)},
              {"state_c", hex_of(key.state_c)},
              {"r", key.r},
              {"s", key.s}};
}

AsgKey key_of(const json& j, const AsgParams& params) {
  AsgKey key;
  key.state_a = parse_state(field(j, "state_a"), "state_a", params.l);
  key.state_b = parse_state(field(j, "state_b"), "state_b", params.m);
  key.state_c = parse_state(field(j, "state_c"), "state_c", params.n);
  key.r = parse_uint(field(j, "r"), "r");
  key.s = parse_uint(field(j, "s"), "s");
  return key;
}

std::vector<AsgKey> keys_of(const json& arr, const AsgParams& params) {
  if (!arr.is_array()) {
    throw FormatError("key list must be a JSON array");
  }
  std::vector<AsgKey> keys;
  for (const json& k : arr) {
    keys.push_back(key_of(k, params));
  }
  return keys;
}

json counters_json(const AttackCounters& c) {
  return json{{"a_states_tried", c.a_states_tried},
              {"beta0_guesses", c.beta0_guesses},
              {"insufficient_bits", c.insufficient_bits},
              {"bm_runs", c.bm_runs},
              {"fit_rejections", c.fit_rejections},
              {"verified_candidates", c.verified_candidates},
              {"trace_solves", c.trace_solves},
              {"decimation_failures", c.decimation_failures},
              {"short_verification", c.short_verification},
              {"keys_dropped", c.keys_dropped}};
}

AttackCounters counters_of(const json& j) {
  AttackCounters c;
  c.a_states_tried = parse_uint(field(j, "a_states_tried"), "a_states_tried");
  c.beta0_guesses = parse_uint(field(j, "beta0_guesses"), "beta0_guesses");
  c.insufficient_bits = parse_uint(field(j, "insufficient_bits"), "insufficient_bits");
  c.bm_runs = parse_uint(field(j, "bm_runs"), "bm_runs");
  c.fit_rejections = parse_uint(field(j, "fit_rejections"), "fit_rejections");
  c.verified_candidates = parse_uint(field(j, "verified_candidates"), "verified_candidates");
  c.trace_solves = parse_uint(field(j, "trace_solves"), "trace_solves");
  c.decimation_failures = parse_uint(field(j, "decimation_failures"), "decimation_failures");
  c.short_verification = parse_uint(field(j, "short_verification"), "short_verification");
  c.keys_dropped = parse_uint(field(j, "keys_dropped"), "keys_dropped");
  return c;
}

}  // namespace

std::string params_to_json(const AsgParams& p) {
  const json j{{"l", p.l},
               {"m", p.m},
               {"n", p.n},
               {"poly_a", p.poly_a.to_hex()},
               {"poly_b", p.poly_b.to_hex()},
               {"poly_c", p.poly_c.to_hex()},
               {"strict", p.strict}};
  return j.dump(2) + "\n";
}

AsgParams params_from_json(std::string_view text) {
  const json j = parse_json(text);
  AsgParams p;
  p.l = parse_uint(field(j, "l"), "l");
  p.m = parse_uint(field(j, "m"), "m");
  p.n = parse_uint(field(j, "n"), "n");
  p.poly_a = BinaryPolynomial::from_mask(parse_hex(field(j, "poly_a"), "poly_a"));
  p.poly_b = BinaryPolynomial::from_mask(parse_hex(field(j, "poly_b"), "poly_b"));
  p.poly_c = BinaryPolynomial::from_mask(parse_hex(field(j, "poly_c"), "poly_c"));
  if (j.contains("strict")) {
    if (!j.at("strict").is_boolean()) {
      throw FormatError("field 'strict' must be a boolean");
    }
    p.strict = j.at("strict").get<bool>();
  }
  return p;
}

std::string key_to_json(const AsgKey& key) { return key_json(key).dump(2) + "\n"; }

AsgKey key_from_json(std::string_view text, const AsgParams& params) { return key_of(parse_json(text), params); }

std::string keys_to_json(const std::vector<AsgKey>& keys) {
  json arr = json::array();
  for (const AsgKey& k : keys) {
    arr.push_back(key_json(k));
  }
  return json{{"keys", arr}}.dump(2) + "\n";
}

std::vector<AsgKey> keys_from_json(std::string_view text, const AsgParams& params) {
  return keys_of(field(parse_json(text), "keys"), params);
}

std::string report_to_json(const AttackReport& report) {
  json keys = json::array();
  for (const AsgKey& k : report.recovered_keys) {
    keys.push_back(key_json(k));
  }
  const json j{{"recovered_keys", keys},
               {"counters", counters_json(report.counters)},
               {"wall_time_seconds", report.wall_time_seconds}};
  return j.dump(2) + "\n";
}

AttackReport report_from_json(std::string_view text, const AsgParams& params) {
  const json j = parse_json(text);
  AttackReport report;
  report.recovered_keys = keys_of(field(j, "recovered_keys"), params);
  report.counters = counters_of(field(j, "counters"));
  const json& wall = field(j, "wall_time_seconds");
  if (!wall.is_number()) {
    throw FormatError("field 'wall_time_seconds' must be a number");
  }
  report.wall_time_seconds = wall.get<double>();
  return report;
}

std::string reduced_model_to_json(const ReducedModel& model) {
  const json j{{"beta_poly", model.beta_spec.feedback().to_hex()},
               {"beta_state", hex_of(model.beta_state.cells)},
               {"lambda_poly", model.lambda_spec.feedback().to_hex()},
               {"lambda_state", hex_of(model.lambda_state.cells)},
               {"control_state", hex_of(model.control.state().cells)}};
  return j.dump(2) + "\n";
}

// ---------------------------------------------------------------- bitstreams

BitFormat parse_bit_format(std::string_view name) {
  if (name == "text") {
    return BitFormat::text;
  }
  if (name == "binary") {
    return BitFormat::binary;
  }
  throw FormatError("unknown bitstream format '" + std::string(name) + "' (expected text or binary)");
}

std::string encode_bits(const BitSequence& bits, BitFormat format) {
  if (format == BitFormat::text) {
    std::string out = bits.to_string();
    out.push_back('\n');
    return out;
  }
  std::string out(kMagic);
  const std::uint64_t count = bits.size();
  for (int i = 0; i < 8; ++i) {
    out.push_back(static_cast<char>((count >> (8 * i)) & 0xff));
  }
  std::string payload((bits.size() + 7) / 8, '\0');
  for (std::size_t t = 0; t < bits.size(); ++t) {
    if (bits[t]) {
      payload[t / 8] = static_cast<char>(static_cast<unsigned char>(payload[t / 8]) | (1u << (t % 8)));
    }
  }
  return out + payload;
}

BitSequence decode_bits(std::string_view data) {
  if (data.substr(0, kMagic.size()) != kMagic) {
    return BitVector::from_string(data);
  }
  if (data.size() < 12) {
    throw FormatError("binary bitstream truncated in header");
  }
  std::uint64_t count = 0;
  for (int i = 0; i < 8; ++i) {
    count |= std::uint64_t{static_cast<unsigned char>(data[4 + i])} << (8 * i);
  }
  const std::string_view payload = data.substr(12);
  if (payload.size() != (count + 7) / 8) {
    throw FormatError("binary bitstream declares " + std::to_string(count) + " bits but carries " +
                      std::to_string(payload.size()) + " payload bytes");
  }
  BitSequence bits(count);
  for (std::size_t t = 0; t < count; ++t) {
    bits.set(t, (static_cast<unsigned char>(payload[t / 8]) >> (t % 8)) & 1u);
  }
  return bits;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw FormatError("cannot open " + path.string());
  }
  return std::string(std::istreambuf_iterator<char>(in), {});
}

void write_file(const std::filesystem::path& path, std::string_view data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw FormatError("cannot write " + path.string());
  }
  out.write(data.data(), static_cast<std::streamsize>(data.size()));
  if (!out) {
    throw FormatError("write failed for " + path.string());
  }
}

}  // namespace asgrs
