#include "asgrs/asg.hpp"

#include <numeric>
#include <sstream>
#include <utility>

#include "asgrs/errors.hpp"
#include "asgrs/finite_field.hpp"

namespace asgrs {

namespace {

void check_register(std::vector<Violation>& out, char name, std::size_t length, const BinaryPolynomial& poly) {
  const std::string reg(1, name);
  const auto deg = poly.degree();
  if (!deg || *deg != length) {
    out.push_back({ViolationKind::degree_mismatch, "poly_" + std::string(1, static_cast<char>(name + 32)) +
                                                       " has degree " + (deg ? std::to_string(*deg) : "-inf") +
                                                       ", register " + reg + " has length " +
                                                       std::to_string(length)});
    return;
  }
  if (length > kMaxFieldDegree) {
    out.push_back({ViolationKind::unsupported_degree,
                   "register " + reg + " length " + std::to_string(length) + " exceeds " +
                       std::to_string(kMaxFieldDegree)});
    return;
  }
  if (!is_primitive(poly)) {
    out.push_back({ViolationKind::not_primitive, "feedback of register " + reg + " (" + poly.to_string() +
                                                     ") is not primitive"});
  }
}

void check_jump(std::vector<Violation>& out, const char* name, std::uint64_t value, std::size_t length) {
  if (length < 2 || length > kMaxFieldDegree) {
    return;  // already reported against the register length
  }
  const std::uint64_t period = mersenne(length);
  const std::uint64_t reduced = value % period;
  if (reduced == 0) {
    out.push_back({ViolationKind::jump_out_of_range, std::string(name) + " = " + std::to_string(value) +
                                                         " is 0 mod " + std::to_string(period)});
    return;
  }
  const std::uint64_t g = std::gcd(reduced, period);
  if (g != 1) {
    out.push_back({ViolationKind::jump_not_coprime, "gcd(" + std::string(name) + ", " + std::to_string(period) +
                                                        ") = " + std::to_string(g)});
  }
}

}  // namespace

std::vector<Violation> validate_params(const AsgParams& params) {
  std::vector<Violation> out;
  if (params.l < 1) {
    out.push_back({ViolationKind::bad_length, "l must be at least 1"});
  }
  if (params.m < 2 || params.n < 2) {
    out.push_back({ViolationKind::bad_length, "m and n must be at least 2"});
  }
  if (params.l >= 1) {
    check_register(out, 'A', params.l, params.poly_a);
  }
  if (params.m >= 2) {
    check_register(out, 'B', params.m, params.poly_b);
  }
  if (params.n >= 2) {
    check_register(out, 'C', params.n, params.poly_c);
  }
  if (params.strict && params.m >= 1 && params.n >= 1 && std::gcd(params.m, params.n) != 1) {
    out.push_back({ViolationKind::lengths_not_coprime,
                   "gcd(m, n) = gcd(" + std::to_string(params.m) + ", " + std::to_string(params.n) +
                       ") = " + std::to_string(std::gcd(params.m, params.n))});
  }
  return out;
}

std::vector<Violation> validate(const AsgParams& params, const AsgKey& key) {
  std::vector<Violation> out = validate_params(params);
  auto check_state = [&](const char* name, const BitVector& state, std::size_t length, bool nonzero) {
    if (state.size() != length) {
      out.push_back({ViolationKind::state_length, std::string(name) + " has " + std::to_string(state.size()) +
                                                      " bits, expected " + std::to_string(length)});
    } else if (nonzero && state.none()) {
      out.push_back({ViolationKind::zero_state, std::string(name) + " is all-zero"});
    }
  };
  check_state("state_a", key.state_a, params.l, false);
  check_state("state_b", key.state_b, params.m, true);
  check_state("state_c", key.state_c, params.n, true);
  check_jump(out, "r", key.r, params.m);
  check_jump(out, "s", key.s, params.n);
  return out;
}

std::string describe(const std::vector<Violation>& violations) {
  std::ostringstream os;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    if (i != 0) {
      os << "; ";
    }
    os << violations[i].message;
  }
  return os.str();
}

void require_valid(const AsgParams& params, const AsgKey& key) {
  const auto violations = validate(params, key);
  if (!violations.empty()) {
    throw ValidationError(describe(violations));
  }
}

AsgKey canonical_key(const AsgParams& params, AsgKey key) {
  key.r %= mersenne(params.m);
  key.s %= mersenne(params.n);
  return key;
}

// ------------------------------------------------------------- AsgGenerator

AsgGenerator::Clocked::Clocked(LfsrSpec s, BitVector c, std::uint64_t k)
    : spec(std::move(s)), cells(std::move(c)), jump(k) {
  const std::uint64_t len = spec.length();
  if (jump >= len * len) {
    jump_matrix = mat_pow(transition_matrix(spec), jump);
  }
}

void AsgGenerator::Clocked::advance() {
  if (jump_matrix) {
    cells = vec_mul(cells, *jump_matrix);
  } else {
    for (std::uint64_t i = 0; i < jump; ++i) {
      step_in_place(spec, cells);
    }
  }
  ++jumps;
}

namespace {

DeBruijnRegister validated_control(const AsgParams& params, const AsgKey& key) {
  require_valid(params, key);
  return DeBruijnRegister(LfsrSpec(params.poly_a), RegisterState{key.state_a});
}

RegisterState nonzero_state(const RegisterState& state, const char* name) {
  if (state.is_zero()) {
    throw DegenerateState(std::string("all-zero ") + name + " register in reduced model");
  }
  return state;
}

}  // namespace

AsgGenerator::AsgGenerator(const AsgParams& params, const AsgKey& key)
    : control_(validated_control(params, key)),
      beta_(LfsrSpec(params.poly_b), key.state_b, key.r % mersenne(params.m)),
      lambda_(LfsrSpec(params.poly_c), key.state_c, key.s % mersenne(params.n)) {}

AsgGenerator::AsgGenerator(const ReducedModel& model)
    : control_(model.control),
      beta_(model.beta_spec, nonzero_state(model.beta_state, "beta").cells, 1),
      lambda_(model.lambda_spec, nonzero_state(model.lambda_state, "lambda").cells, 1) {}

bool AsgGenerator::next() {
  if (started_) {
    const bool a = control_.next();
    last_control_ = a;
    if (a) {
      beta_.advance();
    } else {
      lambda_.advance();
    }
  }
  started_ = true;
  return beta_.output() != lambda_.output();
}

BitSequence AsgGenerator::take(std::size_t count) {
  BitSequence out(count);
  for (std::size_t t = 0; t < count; ++t) {
    out.set(t, next());
  }
  return out;
}

AsgGenerator AsgGenerator::rekeyed(const BitVector& state_a, const BitVector& state_b,
                                   const BitVector& state_c) const {
  if (state_b.size() != beta_.spec.length() || state_c.size() != lambda_.spec.length()) {
    throw ContractViolation("rekeyed: state length mismatch");
  }
  if (state_b.none() || state_c.none()) {
    throw DegenerateState("rekeyed: all-zero generating register state");
  }
  AsgGenerator out = *this;
  out.control_ = DeBruijnRegister(control_.base(), RegisterState{state_a});
  out.beta_.cells = state_b;
  out.beta_.jumps = 0;
  out.lambda_.cells = state_c;
  out.lambda_.jumps = 0;
  out.started_ = false;
  out.last_control_.reset();
  return out;
}

BitSequence keystream(const AsgParams& params, const AsgKey& key, std::size_t count) {
  AsgGenerator gen(params, key);
  return gen.take(count);
}

// ----------------------------------------------------------------- reduce

namespace {

// First len outputs of `spec` from `cells` when clocked `jump` steps between outputs.
BitVector decimated_prefix(const LfsrSpec& spec, const BitVector& cells, std::uint64_t jump) {
  const BitMatrix step = mat_pow(transition_matrix(spec), jump);
  BitVector state = cells;
  BitVector out(spec.length());
  for (std::size_t t = 0; t < spec.length(); ++t) {
    out.set(t, state[spec.length() - 1]);
    state = vec_mul(state, step);
  }
  return out;
}

}  // namespace

ReducedModel reduce(const AsgParams& params, const AsgKey& key) {
  require_valid(params, key);
  const AsgKey canon = canonical_key(params, key);

  const FieldContext field_b(params.poly_b);
  const FieldContext field_c(params.poly_c);
  LfsrSpec beta_spec(minimal_polynomial(ff_pow(field_b.alpha(), canon.r)));
  LfsrSpec lambda_spec(minimal_polynomial(ff_pow(field_c.alpha(), canon.s)));

  const BitVector beta_prefix = decimated_prefix(LfsrSpec(params.poly_b), key.state_b, canon.r);
  const BitVector lambda_prefix = decimated_prefix(LfsrSpec(params.poly_c), key.state_c, canon.s);

  return ReducedModel{
      std::move(beta_spec),
      state_from_output_prefix(beta_prefix),
      std::move(lambda_spec),
      state_from_output_prefix(lambda_prefix),
      DeBruijnRegister(LfsrSpec(params.poly_a), RegisterState{key.state_a}),
  };
}

BitSequence classical_asg_keystream(const ReducedModel& model, std::size_t count) {
  AsgGenerator gen(model);
  return gen.take(count);
}

}  // namespace asgrs
