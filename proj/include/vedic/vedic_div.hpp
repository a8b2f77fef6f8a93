#pragma once

// Straight ("at sight") division.
//
// Only the leading digit of the divisor (the main digit) is ever divided
// into; the remaining low digits (the flag) are charged against each
// partial dividend as q * flag once the next dividend digits come down.
// An overestimated quotient digit is repaired by ADJUST, which moves one
// unit of the quotient back into the running remainder until the next
// partial dividend is non-negative.
//
// For a two-digit divisor y0 y1 in base 10 this is the familiar hand method:
//
//   35001 / 77:  K=35  q=5 r=0  -> ADJUST -> q=4 r=7,  next K = 70 - 7*4 = 42
//                K=42  q=6 r=0  -> ADJUST -> q=5 r=7,  next K = 70 - 7*5 = 35
//                K=35  q=5 r=0  -> ADJUST -> q=4 r=7,  remainder 71 - 7*4 = 43
//
// Longer divisors treat the whole tail as one multi-digit flag value. When
// the main digit is below radix/2 both operands are scaled by the smallest
// single digit that lifts it, which keeps ADJUST to at most two corrections
// per quotient digit; the remainder is scaled back at the end.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "vedic/numeral.hpp"

namespace vedic {

struct DivResult {
  Natural quotient;
  Natural remainder;

  friend bool operator==(const DivResult&, const DivResult&) = default;
};

struct SplitDivisor {
  Digit main = 0;
  // Low divisor digits, little-endian, exact width (may include zeros).
  std::vector<Digit> flags;
  std::uint32_t scale = 1;
  Base base = Base::hex;

  std::size_t flag_width() const noexcept { return flags.size(); }
  Natural flag_value() const;
  // main * radix^flag_width + flag, i.e. the scaled divisor.
  Natural normalized() const;
};

// State carried through one quotient digit.
struct StepState {
  Digit q = 0;           // quotient digit estimate
  std::uint64_t r = 0;   // remainder of the main-digit division
  Natural next_digits;   // the flag_width dividend digits brought down
};

struct AdjustOutcome {
  StepState state;
  unsigned iterations = 0;
};

struct DivisionStep {
  Natural partial;          // K, the value divided by the main digit
  Digit estimate = 0;       // q before ADJUST
  Digit quotient_digit = 0; // q after ADJUST
  std::uint64_t remainder = 0;  // r after ADJUST
  Natural next_digits;
  unsigned adjust_iterations = 0;
  Natural next_partial;     // r * radix^w + next_digits - q * flag
};

struct TracedDivision {
  DivResult result;
  SplitDivisor divisor;
  std::vector<DivisionStep> steps;

  unsigned max_adjust_iterations() const noexcept;
};

// Throws DivisionByZero for a zero divisor.
SplitDivisor split_and_normalize(const Natural& divisor);

// While r * radix^w + next_digits < q * flag: q -= 1, r += main.
AdjustOutcome adjust(StepState state, const SplitDivisor& divisor);

DivResult divide(const Natural& dividend, const Natural& divisor);

TracedDivision divide_traced(const Natural& dividend, const Natural& divisor);

// One line per quotient digit:
//   step=<i> K=<K> q_est=<q> q=<q> r=<r> adjust=<n> next=<K'>
// followed by "q=<quotient> r=<remainder> scale=<s>". Values are printed in
// the operating base.
std::string format_trace(const TracedDivision& traced);

}  // namespace vedic
