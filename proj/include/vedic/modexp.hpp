#pragma once

// Modular reduction, modular multiplication and left-to-right
// square-and-multiply exponentiation, parameterised by which multiplier and
// divider carry the arithmetic.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vedic/numeral.hpp"
#include "vedic/vedic_div.hpp"

namespace vedic {

enum class Multiplier { vedic, shift_add };
enum class Divider { vedic, restoring, nonrestoring };

struct Strategy {
  Multiplier multiplier = Multiplier::vedic;
  Divider divider = Divider::vedic;

  friend bool operator==(const Strategy&, const Strategy&) = default;
};

std::string_view to_string(Multiplier m) noexcept;
std::string_view to_string(Divider d) noexcept;
// Throw UsageError for unknown names.
Multiplier parse_multiplier(std::string_view name);
Divider parse_divider(std::string_view name);

// Every multiplier x divider combination.
std::vector<Strategy> all_strategies();

Natural strategy_multiply(const Natural& a, const Natural& b, Strategy strategy);
DivResult strategy_divide(const Natural& a, const Natural& b, Strategy strategy);

// Exponent bits, most significant first. Empty for a zero exponent; otherwise
// the first bit is 1.
struct ExponentScan {
  std::vector<bool> bits;

  std::size_t popcount() const noexcept;
};

ExponentScan scan_exponent(const Natural& exponent);

// a mod n. Throws DivisionByZero when n is zero.
Natural mod_reduce(const Natural& a, const Natural& n, Strategy strategy = {});

// (a * b) mod n; operands are reduced first.
Natural mod_mul(const Natural& a, const Natural& b, const Natural& n, Strategy strategy = {});

// a^b mod n. Throws ArithmeticError when n <= 1.
Natural mod_pow(const Natural& a, const Natural& b, const Natural& n, Strategy strategy = {});

enum class LoopVariant {
  // Starts from m = a at the leading exponent bit: bitlen(b)-1 squarings and
  // popcount(b)-1 multiplications.
  optimized,
  // m = 1 and a squaring before every bit, including the leading one; also
  // tracks the loop's l counter as written (l = 2*j, then l+1 on set bits),
  // which never affects m.
  literal,
};

enum class ModPowOp { init, square, multiply };

struct ModPowStep {
  std::size_t bit_index = 0;
  ModPowOp op = ModPowOp::init;
  Natural m;
  std::optional<std::uint64_t> l;  // literal variant only
};

struct ModPowTrace {
  Natural value;
  std::size_t squarings = 0;
  std::size_t multiplications = 0;
  std::vector<ModPowStep> steps;
};

ModPowTrace mod_pow_traced(const Natural& a, const Natural& b, const Natural& n,
                           Strategy strategy = {}, LoopVariant variant = LoopVariant::optimized);

// "bit=<j> op=<init|square|multiply> m=<m>[ l=<l>]" per step, then
// "result=<m> squarings=<s> multiplications=<k>".
std::string format_trace(const ModPowTrace& trace);

}  // namespace vedic
