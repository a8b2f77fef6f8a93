#include "vedic/vedic_div.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "vedic/errors.hpp"
#include "vedic/vedic_mul.hpp"

namespace vedic {

namespace {

Natural digit_value(std::uint64_t v, Base base) { return Natural::from_u64(v, base); }

// r * radix^w + next_digits
Natural adjust_lhs(std::uint64_t r, const Natural& next_digits, std::size_t width) {
  const Base base = next_digits.base();
  return add(shift_digits(digit_value(r, base), static_cast<std::ptrdiff_t>(width)), next_digits);
}

Natural flag_subtrahend(Digit q, const Natural& flag) {
  return multiply(digit_value(q, flag.base()), flag);
}

DivResult run_division(const Natural& dividend, const Natural& divisor,
                       TracedDivision* trace) {
  require_same_base(dividend, divisor);
  SplitDivisor split = split_and_normalize(divisor);
  const Base base = dividend.base();
  const std::uint64_t beta = radix(base);
  const std::size_t width = split.flag_width();
  const Natural flag = split.flag_value();

  const Natural scaled =
      split.scale == 1 ? dividend : multiply(dividend, digit_value(split.scale, base));
  const std::size_t n = scaled.size();

  std::vector<Digit> quotient_msf;  // most significant first
  // The top `width` digits seed the first partial; each remaining digit
  // yields one quotient digit.
  const std::size_t steps = n > width ? n - width : 0;
  Natural partial = steps > 0 ? shift_digits(scaled, -static_cast<std::ptrdiff_t>(steps)) : scaled;

  for (std::size_t pos = steps; pos-- > 0;) {
    const Natural brought = add(shift_digits(partial, 1), digit_value(scaled.digit(pos), base));
    const Natural head = shift_digits(brought, -static_cast<std::ptrdiff_t>(width));
    const Natural tail = low_digits(brought, width);

    const std::uint64_t k = head.to_u64();
    const std::uint64_t estimate = std::min(beta - 1, k / split.main);
    StepState state{static_cast<Digit>(estimate), k - estimate * split.main, tail};

    const AdjustOutcome adjusted = adjust(std::move(state), split);
    const StepState& s = adjusted.state;
    Natural next = sub(adjust_lhs(s.r, s.next_digits, width), flag_subtrahend(s.q, flag));

    if (trace != nullptr) {
      trace->steps.push_back({head, static_cast<Digit>(estimate), s.q, s.r, s.next_digits,
                              adjusted.iterations, next});
    }
    quotient_msf.push_back(s.q);
    partial = std::move(next);
  }

  DivResult result;
  result.quotient = Natural(std::vector<Digit>(quotient_msf.rbegin(), quotient_msf.rend()), base);
  if (split.scale == 1) {
    result.remainder = std::move(partial);
  } else {
    auto [descaled, rest] = divide_small(partial, split.scale);
    assert(rest == 0);
    result.remainder = std::move(descaled);
  }
  if (trace != nullptr) trace->divisor = std::move(split);
  return result;
}

}  // namespace

Natural SplitDivisor::flag_value() const { return Natural(flags, base); }

Natural SplitDivisor::normalized() const {
  std::vector<Digit> digits = flags;
  digits.push_back(main);
  return Natural(std::move(digits), base);
}

unsigned TracedDivision::max_adjust_iterations() const noexcept {
  unsigned most = 0;
  for (const auto& step : steps) most = std::max(most, step.adjust_iterations);
  return most;
}

SplitDivisor split_and_normalize(const Natural& divisor) {
  if (divisor.is_zero()) throw DivisionByZero();
  const Base base = divisor.base();
  const std::uint32_t half = radix(base) / 2;

  Natural scaled = divisor;
  std::uint32_t scale = 1;
  if (divisor.leading_digit() < half) {
    // Smallest single-digit multiplier that keeps the length and lifts the
    // leading digit to at least radix/2. floor(radix / (lead + 1)) always
    // qualifies, so the search terminates below it.
    for (scale = 2; scale < radix(base); ++scale) {
      scaled = multiply(divisor, Natural::from_u64(scale, base));
      if (scaled.size() == divisor.size() && scaled.leading_digit() >= half) break;
    }
  }

  const auto digits = scaled.digits();
  SplitDivisor split;
  split.main = digits.back();
  split.flags.assign(digits.begin(), digits.end() - 1);
  split.scale = scale;
  split.base = base;
  return split;
}

AdjustOutcome adjust(StepState state, const SplitDivisor& divisor) {
  const Natural flag = divisor.flag_value();
  const std::size_t width = divisor.flag_width();
  unsigned iterations = 0;
  while (state.q > 0 &&
         compare(adjust_lhs(state.r, state.next_digits, width), flag_subtrahend(state.q, flag)) < 0) {
    --state.q;
    state.r += divisor.main;
    ++iterations;
  }
  return {std::move(state), iterations};
}

DivResult divide(const Natural& dividend, const Natural& divisor) {
  return run_division(dividend, divisor, nullptr);
}

TracedDivision divide_traced(const Natural& dividend, const Natural& divisor) {
  TracedDivision traced;
  traced.result = run_division(dividend, divisor, &traced);
  return traced;
}

std::string format_trace(const TracedDivision& traced) {
  std::ostringstream out;
  const Base base = traced.divisor.base;
  std::size_t index = 1;
  for (const auto& step : traced.steps) {
    out << "step=" << index++ << " K=" << format(step.partial)
        << " q_est=" << format(Natural::from_u64(step.estimate, base))
        << " q=" << format(Natural::from_u64(step.quotient_digit, base))
        << " r=" << format(Natural::from_u64(step.remainder, base))
        << " adjust=" << step.adjust_iterations << " next=" << format(step.next_partial) << '\n';
  }
  out << "q=" << format(traced.result.quotient) << " r=" << format(traced.result.remainder)
      << " scale=" << traced.divisor.scale << '\n';
  return out.str();
}

}  // namespace vedic
