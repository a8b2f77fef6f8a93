#include "vedic/baseline_arith.hpp"

#include <vector>

#include "vedic/errors.hpp"

namespace vedic {

namespace {

// Fixed-width little-endian bit register with wrap-around arithmetic.
using Register = std::vector<Digit>;

std::vector<Digit> bits_of(const Natural& x) {
  const Natural b = rebase(x, Base::binary);
  return {b.digits().begin(), b.digits().end()};
}

void shift_in(Register& reg, Digit bit) {
  for (std::size_t j = reg.size() - 1; j > 0; --j) reg[j] = reg[j - 1];
  reg[0] = bit;
}

// reg -= operand; returns the borrow out of the top bit.
bool subtract_in_place(Register& reg, const std::vector<Digit>& operand) {
  unsigned borrow = 0;
  for (std::size_t j = 0; j < reg.size(); ++j) {
    const unsigned o = j < operand.size() ? operand[j] : 0u;
    const int d = int{reg[j]} - static_cast<int>(o) - static_cast<int>(borrow);
    reg[j] = static_cast<Digit>(d & 1);
    borrow = d < 0 ? 1u : 0u;
  }
  return borrow != 0;
}

// reg += operand; returns the carry out of the top bit.
bool add_in_place(Register& reg, const std::vector<Digit>& operand) {
  unsigned carry = 0;
  for (std::size_t j = 0; j < reg.size(); ++j) {
    const unsigned o = j < operand.size() ? operand[j] : 0u;
    const unsigned s = reg[j] + o + carry;
    reg[j] = static_cast<Digit>(s & 1u);
    carry = s >> 1;
  }
  return carry != 0;
}

DivResult finish(std::vector<Digit> quotient_bits, Register remainder_bits, Base base) {
  return {rebase(Natural(std::move(quotient_bits), Base::binary), base),
          rebase(Natural(std::move(remainder_bits), Base::binary), base)};
}

}  // namespace

BaselineDivision restoring_divide_counted(const Natural& dividend, const Natural& divisor) {
  require_same_base(dividend, divisor);
  if (divisor.is_zero()) throw DivisionByZero();
  const auto x = bits_of(dividend);
  const auto d = bits_of(divisor);

  // Partial remainder stays below the divisor, so after the shift it fits in
  // one extra bit.
  Register reg(d.size() + 1, 0);
  std::vector<Digit> q(x.size(), 0);
  BaselineDivision out;
  for (std::size_t i = x.size(); i-- > 0;) {
    shift_in(reg, x[i]);
    ++out.subtract_attempts;
    if (subtract_in_place(reg, d)) {
      add_in_place(reg, d);  // restore
      ++out.corrections;
    } else {
      q[i] = 1;
    }
  }
  out.result = finish(std::move(q), std::move(reg), dividend.base());
  return out;
}

BaselineDivision nonrestoring_divide_counted(const Natural& dividend, const Natural& divisor) {
  require_same_base(dividend, divisor);
  if (divisor.is_zero()) throw DivisionByZero();
  const auto x = bits_of(dividend);
  const auto d = bits_of(divisor);

  // Two's complement register. The partial remainder lives in [-D, D), so
  // 2R + bit needs one bit beyond the divisor plus a sign bit.
  Register reg(d.size() + 2, 0);
  const auto negative = [&reg] { return reg.back() != 0; };
  std::vector<Digit> q(x.size(), 0);
  BaselineDivision out;
  for (std::size_t i = x.size(); i-- > 0;) {
    const bool was_negative = negative();
    shift_in(reg, x[i]);
    ++out.subtract_attempts;
    if (was_negative) {
      add_in_place(reg, d);
    } else {
      subtract_in_place(reg, d);
    }
    q[i] = negative() ? 0 : 1;
  }
  if (negative()) {
    add_in_place(reg, d);
    ++out.corrections;
  }
  out.result = finish(std::move(q), std::move(reg), dividend.base());
  return out;
}

DivResult restoring_divide(const Natural& dividend, const Natural& divisor) {
  return restoring_divide_counted(dividend, divisor).result;
}

DivResult nonrestoring_divide(const Natural& dividend, const Natural& divisor) {
  return nonrestoring_divide_counted(dividend, divisor).result;
}

Natural shift_add_multiply(const Natural& x, const Natural& y) {
  require_same_base(x, y);
  if (x.is_zero() || y.is_zero()) return Natural(x.base());
  const auto a = bits_of(x);
  const auto b = bits_of(y);
  std::vector<Digit> acc(a.size() + b.size(), 0);
  for (std::size_t j = 0; j < b.size(); ++j) {
    if (b[j] == 0) continue;
    unsigned carry = 0;
    std::size_t k = 0;
    for (; k < a.size(); ++k) {
      const unsigned s = acc[j + k] + a[k] + carry;
      acc[j + k] = static_cast<Digit>(s & 1u);
      carry = s >> 1;
    }
    for (; carry != 0; ++k) {
      const unsigned s = acc[j + k] + carry;
      acc[j + k] = static_cast<Digit>(s & 1u);
      carry = s >> 1;
    }
  }
  return rebase(Natural(std::move(acc), Base::binary), x.base());
}

}  // namespace vedic
