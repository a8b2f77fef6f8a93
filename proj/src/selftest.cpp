#include "vedic/selftest.hpp"

#include "vedic/baseline_arith.hpp"
#include "vedic/rsa.hpp"
#include "vedic/vedic_div.hpp"
#include "vedic/vedic_mul.hpp"

namespace vedic {

namespace {

void record(SelftestSuite& suite, bool ok) {
  if (ok) {
    ++suite.passed;
  } else {
    ++suite.failed;
  }
}

SelftestSuite multiplier_suite() {
  SelftestSuite suite{"multiply: vedic = shift_add = native, all pairs < 256"};
  for (std::uint64_t a = 0; a < 256; ++a) {
    const Natural x = Natural::from_u64(a, Base::hex);
    for (std::uint64_t b = 0; b < 256; ++b) {
      const Natural y = Natural::from_u64(b, Base::hex);
      const Natural expected = Natural::from_u64(a * b, Base::hex);
      record(suite, multiply(x, y) == expected && shift_add_multiply(x, y) == expected);
    }
  }
  return suite;
}

SelftestSuite division_suite() {
  SelftestSuite suite{"divide: vedic = restoring = nonrestoring = native, x < 2^12, y in 1..64"};
  for (std::uint64_t y = 1; y <= 64; ++y) {
    const Natural divisor = Natural::from_u64(y, Base::hex);
    for (std::uint64_t x = 0; x < 4096; ++x) {
      const Natural dividend = Natural::from_u64(x, Base::hex);
      const DivResult expected{Natural::from_u64(x / y, Base::hex),
                               Natural::from_u64(x % y, Base::hex)};
      record(suite, divide(dividend, divisor) == expected &&
                        restoring_divide(dividend, divisor) == expected &&
                        nonrestoring_divide(dividend, divisor) == expected);
    }
  }
  return suite;
}

SelftestSuite golden_trace_suite() {
  SelftestSuite suite{"divide: 35001 / 77 step trace (base 10)"};
  const auto traced = divide_traced(parse("35001", Base::decimal), parse("77", Base::decimal));
  record(suite, traced.result.quotient == parse("454", Base::decimal));
  record(suite, traced.result.remainder == parse("43", Base::decimal));
  bool saw_adjusted_step = false;
  for (const auto& step : traced.steps) {
    if (step.partial == parse("35", Base::decimal) && step.estimate == 5 &&
        step.quotient_digit == 4 && step.remainder == 7 &&
        step.next_partial == parse("42", Base::decimal)) {
      saw_adjusted_step = true;
    }
  }
  record(suite, saw_adjusted_step);
  return suite;
}

SelftestSuite rsa_suite() {
  SelftestSuite suite{"rsa: decrypt(encrypt(m)) = m for all m < 3233, key (61, 53, 17)"};
  const KeyPair keys = keygen(Natural::from_u64(61), Natural::from_u64(53), Natural::from_u64(17));
  record(suite, keys.private_key.exponent == Natural::from_u64(2753));
  for (std::uint64_t m = 0; m < 3233; ++m) {
    const Natural message = Natural::from_u64(m);
    record(suite, decrypt(encrypt(message, keys.public_key), keys.private_key) == message);
  }
  return suite;
}

}  // namespace

std::vector<SelftestSuite> run_selftest() {
  return {multiplier_suite(), division_suite(), golden_trace_suite(), rsa_suite()};
}

}  // namespace vedic
