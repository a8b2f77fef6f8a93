#include "vedic/modexp.hpp"

#include <algorithm>
#include <sstream>

#include "vedic/baseline_arith.hpp"
#include "vedic/errors.hpp"
#include "vedic/vedic_mul.hpp"

namespace vedic {

std::string_view to_string(Multiplier m) noexcept {
  switch (m) {
    case Multiplier::vedic: return "vedic";
    case Multiplier::shift_add: return "shift_add";
  }
  return "?";
}

std::string_view to_string(Divider d) noexcept {
  switch (d) {
    case Divider::vedic: return "vedic";
    case Divider::restoring: return "restoring";
    case Divider::nonrestoring: return "nonrestoring";
  }
  return "?";
}

Multiplier parse_multiplier(std::string_view name) {
  if (name == "vedic") return Multiplier::vedic;
  if (name == "shift_add") return Multiplier::shift_add;
  throw UsageError("unknown multiplier '" + std::string(name) + "' (expected vedic|shift_add)");
}

Divider parse_divider(std::string_view name) {
  if (name == "vedic") return Divider::vedic;
  if (name == "restoring") return Divider::restoring;
  if (name == "nonrestoring") return Divider::nonrestoring;
  throw UsageError("unknown divider '" + std::string(name) +
                   "' (expected vedic|restoring|nonrestoring)");
}

std::vector<Strategy> all_strategies() {
  std::vector<Strategy> out;
  for (auto m : {Multiplier::vedic, Multiplier::shift_add}) {
    for (auto d : {Divider::vedic, Divider::restoring, Divider::nonrestoring}) {
      out.push_back({m, d});
    }
  }
  return out;
}

Natural strategy_multiply(const Natural& a, const Natural& b, Strategy strategy) {
  switch (strategy.multiplier) {
    case Multiplier::vedic: return multiply(a, b);
    case Multiplier::shift_add: return shift_add_multiply(a, b);
  }
  throw UsageError("invalid multiplier");
}

DivResult strategy_divide(const Natural& a, const Natural& b, Strategy strategy) {
  switch (strategy.divider) {
    case Divider::vedic: return divide(a, b);
    case Divider::restoring: return restoring_divide(a, b);
    case Divider::nonrestoring: return nonrestoring_divide(a, b);
  }
  throw UsageError("invalid divider");
}

std::size_t ExponentScan::popcount() const noexcept {
  return static_cast<std::size_t>(std::count(bits.begin(), bits.end(), true));
}

ExponentScan scan_exponent(const Natural& exponent) {
  const Natural binary = rebase(exponent, Base::binary);
  const auto digits = binary.digits();
  ExponentScan scan;
  scan.bits.reserve(digits.size());
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) scan.bits.push_back(*it != 0);
  return scan;
}

Natural mod_reduce(const Natural& a, const Natural& n, Strategy strategy) {
  require_same_base(a, n);
  if (n.is_zero()) throw DivisionByZero();
  if (compare(a, n) < 0) return a;
  return strategy_divide(a, n, strategy).remainder;
}

Natural mod_mul(const Natural& a, const Natural& b, const Natural& n, Strategy strategy) {
  const Natural ar = mod_reduce(a, n, strategy);
  const Natural br = mod_reduce(b, n, strategy);
  return mod_reduce(strategy_multiply(ar, br, strategy), n, strategy);
}

namespace {

ModPowTrace run_mod_pow(const Natural& a, const Natural& b, const Natural& n,
                        Strategy strategy, LoopVariant variant, bool record) {
  require_same_base(a, n);
  require_same_base(b, n);
  if (compare(n, Natural::from_u64(1, n.base())) <= 0) {
    throw ArithmeticError("modulus must be greater than 1");
  }
  const Natural base_value = mod_reduce(a, n, strategy);
  const ExponentScan scan = scan_exponent(b);
  const std::size_t top = scan.bits.empty() ? 0 : scan.bits.size() - 1;

  ModPowTrace trace;
  Natural m = Natural::from_u64(1, n.base());
  const auto log = [&](std::size_t j, ModPowOp op, std::optional<std::uint64_t> l) {
    if (record) trace.steps.push_back({j, op, m, l});
  };

  if (variant == LoopVariant::literal) {
    std::uint64_t l = 0;
    for (std::size_t pos = 0; pos < scan.bits.size(); ++pos) {
      const std::size_t j = top - pos;
      l = 2 * static_cast<std::uint64_t>(j);
      m = mod_mul(m, m, n, strategy);
      ++trace.squarings;
      log(j, ModPowOp::square, l);
      if (scan.bits[pos]) {
        l = l + 1;
        m = mod_mul(m, base_value, n, strategy);
        ++trace.multiplications;
        log(j, ModPowOp::multiply, l);
      }
    }
  } else if (!scan.bits.empty()) {
    m = base_value;
    log(top, ModPowOp::init, std::nullopt);
    for (std::size_t pos = 1; pos < scan.bits.size(); ++pos) {
      const std::size_t j = top - pos;
      m = mod_mul(m, m, n, strategy);
      ++trace.squarings;
      log(j, ModPowOp::square, std::nullopt);
      if (scan.bits[pos]) {
        m = mod_mul(m, base_value, n, strategy);
        ++trace.multiplications;
        log(j, ModPowOp::multiply, std::nullopt);
      }
    }
  }
  trace.value = std::move(m);
  return trace;
}

}  // namespace

ModPowTrace mod_pow_traced(const Natural& a, const Natural& b, const Natural& n,
                           Strategy strategy, LoopVariant variant) {
  return run_mod_pow(a, b, n, strategy, variant, true);
}

Natural mod_pow(const Natural& a, const Natural& b, const Natural& n, Strategy strategy) {
  return run_mod_pow(a, b, n, strategy, LoopVariant::optimized, false).value;
}

std::string format_trace(const ModPowTrace& trace) {
  std::ostringstream out;
  for (const auto& step : trace.steps) {
    out << "bit=" << step.bit_index << " op="
        << (step.op == ModPowOp::init ? "init" : step.op == ModPowOp::square ? "square" : "multiply")
        << " m=" << format(step.m);
    if (step.l) out << " l=" << *step.l;
    out << '\n';
  }
  out << "result=" << format(trace.value) << " squarings=" << trace.squarings
      << " multiplications=" << trace.multiplications << '\n';
  return out.str();
}

}  // namespace vedic
