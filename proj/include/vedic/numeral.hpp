#pragma once

// Digit-sequence natural numbers.
//
// A Natural is a little-endian sequence of digits in one of a small set of
// radices. Zero is the empty sequence and the most significant stored digit is
// never zero, so structural equality is value equality. Operations never mix
// radices: combining a base-10 value with a base-16 value is a UsageError.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace vedic {

using Digit = std::uint8_t;

enum class Base : std::uint16_t {
  binary = 2,
  quaternary = 4,
  decimal = 10,
  hex = 16,
  byte = 256,
};

constexpr std::uint32_t radix(Base base) noexcept {
  return static_cast<std::uint32_t>(base);
}

// Throws UsageError for anything outside {2, 4, 10, 16, 256}.
Base base_from_radix(std::uint32_t value);

// Bits per digit for power-of-two bases, 0 for base 10.
constexpr unsigned digit_bits(Base base) noexcept {
  switch (base) {
    case Base::binary: return 1;
    case Base::quaternary: return 2;
    case Base::hex: return 4;
    case Base::byte: return 8;
    case Base::decimal: return 0;
  }
  return 0;
}

class Natural {
 public:
  Natural() = default;
  explicit Natural(Base base) : base_(base) {}

  // Validates every digit against the radix and strips most-significant zeros.
  Natural(std::vector<Digit> digits, Base base);

  static Natural from_u64(std::uint64_t value, Base base = Base::hex);

  Base base() const noexcept { return base_; }
  std::uint32_t radix() const noexcept { return vedic::radix(base_); }

  std::span<const Digit> digits() const noexcept { return digits_; }
  std::size_t size() const noexcept { return digits_.size(); }
  bool is_zero() const noexcept { return digits_.empty(); }

  // Positions past the canonical length read as zero.
  Digit digit(std::size_t index) const noexcept {
    return index < digits_.size() ? digits_[index] : Digit{0};
  }

  Digit leading_digit() const noexcept {
    return digits_.empty() ? Digit{0} : digits_.back();
  }

  bool fits_u64() const noexcept;
  // Throws ArithmeticError if the value does not fit.
  std::uint64_t to_u64() const;

  friend bool operator==(const Natural&, const Natural&) = default;

 private:
  std::vector<Digit> digits_;
  Base base_ = Base::hex;
};

// Lowercase hex for bases 16 and 256 (256 groups hex pairs from the right),
// binary for 2, base-4 digits for 4, decimal for 10. Leading zeros are
// absorbed. Throws ParseError naming the offending offset.
Natural parse(std::string_view text, Base base = Base::hex);

// "0" for zero. parse(format(x), x.base()) == x.
std::string format(const Natural& x);

std::strong_ordering compare(const Natural& a, const Natural& b);

Natural add(const Natural& a, const Natural& b);

// Throws Underflow when a < b.
Natural sub(const Natural& a, const Natural& b);

// k > 0 multiplies by radix^k, k < 0 floor-divides by radix^|k|.
Natural shift_digits(const Natural& x, std::ptrdiff_t k);

// x mod radix^count.
Natural low_digits(const Natural& x, std::size_t count);

// Short division by a small positive integer (< 2^24). Throws DivisionByZero.
std::pair<Natural, std::uint32_t> divide_small(const Natural& x, std::uint32_t divisor);

// Same value in another radix.
Natural rebase(const Natural& x, Base target);

// Number of significant bits; 0 for zero.
std::size_t bit_length(const Natural& x);

void require_same_base(const Natural& a, const Natural& b);

}  // namespace vedic
