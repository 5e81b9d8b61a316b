#pragma once

// File formats shared by the CLI and the tests.
//
// Params/key JSON: l, m, n, poly_a, poly_b, poly_c, strict, state_a, state_b,
// state_c, r, s. Polynomials and states are hex masks ("0x13"), bit i being the
// coefficient of x^i or cell i. A key file may also carry the params fields.
//
// Bitstreams are either text ('0'/'1', whitespace ignored) or binary: "ASGB",
// 8-byte little-endian bit count, then bits packed LSB-first.

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "asgrs/asg.hpp"
#include "asgrs/attack.hpp"
#include "asgrs/gf2.hpp"

namespace asgrs {

std::string params_to_json(const AsgParams& params);
/// Fields are checked for presence and type only; use validate_params for the rest.
AsgParams params_from_json(std::string_view text);

std::string key_to_json(const AsgKey& key);
/// State lengths come from params. Masks wider than the register are a FormatError.
AsgKey key_from_json(std::string_view text, const AsgParams& params);

std::string keys_to_json(const std::vector<AsgKey>& keys);
std::vector<AsgKey> keys_from_json(std::string_view text, const AsgParams& params);

std::string report_to_json(const AttackReport& report);
AttackReport report_from_json(std::string_view text, const AsgParams& params);

std::string reduced_model_to_json(const ReducedModel& model);

enum class BitFormat { text, binary };

BitFormat parse_bit_format(std::string_view name);
std::string encode_bits(const BitSequence& bits, BitFormat format);
/// Binary when the data starts with the magic, text otherwise.
BitSequence decode_bits(std::string_view data);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view data);

}  // namespace asgrs
