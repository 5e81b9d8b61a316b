#pragma once

// Default parameters and seeded key sampling.
//
// Sampling uses mt19937_64 with mask-and-reject, so a seed gives the same key
// on every platform (std::uniform_int_distribution is implementation-defined).

#include <cstddef>
#include <cstdint>
#include <random>

#include "asgrs/asg.hpp"
#include "asgrs/gf2.hpp"

namespace asgrs {

/// A fixed primitive polynomial of each degree 1..24.
BinaryPolynomial default_primitive_polynomial(std::size_t degree);

/// Lengths (l, m, n) with the default polynomials. strict defaults to true.
AsgParams default_params(std::size_t l, std::size_t m, std::size_t n, bool strict = true);

/// Uniform in [0, bound). bound must be positive.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

/// Uniform over valid keys: any A state, nonzero B/C states, r and s in
/// [1, 2^k - 2] coprime to 2^k - 1. params must validate.
AsgKey random_key(const AsgParams& params, std::mt19937_64& rng);

/// Uniform random bits.
BitSequence random_bits(std::size_t count, std::mt19937_64& rng);

}  // namespace asgrs
