#include "asgrs/registers.hpp"

#include <string>

#include "asgrs/errors.hpp"
#include "asgrs/finite_field.hpp"

namespace asgrs {

namespace {

std::size_t spec_length(const BinaryPolynomial& feedback) {
  const auto deg = feedback.degree();
  if (!deg || *deg == 0) {
    throw ContractViolation("LFSR feedback polynomial must have degree >= 1, got " + feedback.to_string());
  }
  return *deg;
}

void require_length(const LfsrSpec& spec, const BitVector& cells) {
  if (cells.size() != spec.length()) {
    throw ContractViolation("register state has " + std::to_string(cells.size()) +
                            " cells, spec expects " + std::to_string(spec.length()));
  }
}

// Shift every cell up by one and insert `bit` at cell 0; the top cell falls off.
void shift_in(BitVector& cells, bool bit) {
  auto words = cells.words();
  BitVector::Word carry = bit ? 1 : 0;
  for (auto& w : words) {
    const BitVector::Word out = w >> (BitVector::kWordBits - 1);
    w = (w << 1) | carry;
    carry = out;
  }
  const std::size_t used = cells.size() % BitVector::kWordBits;
  if (used != 0) {
    words.back() &= (BitVector::Word{1} << used) - 1;
  }
}

}  // namespace

LfsrSpec::LfsrSpec(BinaryPolynomial feedback)
    : length_(spec_length(feedback)), feedback_(std::move(feedback)), taps_(length_), primitive_(false) {
  for (std::size_t i = 0; i < length_; ++i) {
    taps_.set(i, feedback_.coefficient(length_ - 1 - i));
  }
  primitive_ = length_ <= kMaxFieldDegree && asgrs::is_primitive(feedback_);
}

RegisterState state_from_output_prefix(const BitVector& prefix) { return RegisterState{prefix.reversed()}; }

BitVector output_prefix(const RegisterState& state) { return state.cells.reversed(); }

void step_in_place(const LfsrSpec& spec, BitVector& cells) {
  require_length(spec, cells);
  shift_in(cells, cells.dot(spec.taps()));
}

BitMatrix transition_matrix(const LfsrSpec& spec) {
  const std::size_t len = spec.length();
  BitMatrix t(len, len);
  for (std::size_t i = 0; i < len; ++i) {
    if (spec.taps()[i]) {
      t.set(i, 0);
    }
    if (i + 1 < len) {
      t.set(i, i + 1);
    }
  }
  return t;
}

RegisterState lfsr_step(const LfsrSpec& spec, const RegisterState& state, std::uint64_t k) {
  require_length(spec, state.cells);
  const std::uint64_t len = spec.length();
  if (k >= len * len) {
    return RegisterState{vec_mul(state.cells, mat_pow(transition_matrix(spec), k))};
  }
  RegisterState out = state;
  for (std::uint64_t i = 0; i < k; ++i) {
    step_in_place(spec, out.cells);
  }
  return out;
}

BitSequence output_sequence(const LfsrSpec& spec, const RegisterState& init, std::size_t count) {
  require_length(spec, init.cells);
  if (spec.is_primitive() && init.is_zero()) {
    throw DegenerateState("all-zero initial state for primitive register " + spec.feedback().to_string());
  }
  BitSequence out(count);
  BitVector cells = init.cells;
  const std::size_t top = spec.length() - 1;
  for (std::size_t t = 0; t < count; ++t) {
    out.set(t, cells[top]);
    step_in_place(spec, cells);
  }
  return out;
}

BitSequence decimate(const BitSequence& seq, std::size_t r) {
  if (r == 0) {
    throw ContractViolation("decimation factor must be positive");
  }
  BitSequence out;
  for (std::size_t i = 0; i < seq.size(); i += r) {
    out.push_back(seq[i]);
  }
  return out;
}

// ---------------------------------------------------------- DeBruijnRegister

DeBruijnRegister::DeBruijnRegister(LfsrSpec base, RegisterState state)
    : base_(std::move(base)), state_(std::move(state)) {
  require_length(base_, state_.cells);
  if (!base_.is_primitive()) {
    throw ContractViolation("de Bruijn base polynomial must be primitive: " + base_.feedback().to_string());
  }
}

bool DeBruijnRegister::next() {
  BitVector& cells = state_.cells;
  const bool out = cells[0];
  bool feedback = cells.dot(base_.taps());
  // Cells 0..l-2 become cells 1..l-1 of the next state.
  bool retained_zero = true;
  for (std::size_t i = 0; i + 1 < cells.size(); ++i) {
    if (cells[i]) {
      retained_zero = false;
      break;
    }
  }
  feedback ^= retained_zero;
  shift_in(cells, feedback);
  return out;
}

std::pair<bool, DeBruijnRegister> de_bruijn_step(DeBruijnRegister reg) {
  const bool bit = reg.next();
  return {bit, std::move(reg)};
}

BitSequence control_sequence(const DeBruijnRegister& reg, std::size_t count) {
  DeBruijnRegister copy = reg;
  BitSequence out(count);
  for (std::size_t t = 0; t < count; ++t) {
    out.set(t, copy.next());
  }
  return out;
}

}  // namespace asgrs
