#pragma once

// Conventional bit-serial arithmetic used as comparison baselines.
//
// All three routines convert their operands to base 2 on entry, run the
// textbook register-level algorithm one bit per step, and convert the result
// back to the caller's base.

#include <cstddef>

#include "vedic/numeral.hpp"
#include "vedic/vedic_div.hpp"

namespace vedic {

struct BaselineDivision {
  DivResult result;
  // Restoring: one trial subtraction per dividend bit. Non-restoring: one
  // add-or-subtract per dividend bit.
  std::size_t subtract_attempts = 0;
  // Restoring: add-backs after a negative trial. Non-restoring: 0 or 1 final
  // remainder fix-up.
  std::size_t corrections = 0;
};

BaselineDivision restoring_divide_counted(const Natural& dividend, const Natural& divisor);
BaselineDivision nonrestoring_divide_counted(const Natural& dividend, const Natural& divisor);

DivResult restoring_divide(const Natural& dividend, const Natural& divisor);
DivResult nonrestoring_divide(const Natural& dividend, const Natural& divisor);

// For each set multiplier bit, add the correspondingly shifted multiplicand
// into the accumulator.
Natural shift_add_multiply(const Natural& x, const Natural& y);

}  // namespace vedic
