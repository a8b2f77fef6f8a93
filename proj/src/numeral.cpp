#include "vedic/numeral.hpp"

#include <algorithm>
#include <bit>

#include "vedic/errors.hpp"

namespace vedic {

namespace {

void trim(std::vector<Digit>& digits) {
  while (!digits.empty() && digits.back() == 0) digits.pop_back();
}

constexpr char kDigitChars[] = "0123456789abcdef";

int char_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

// Radix of a single text character for the given base.
std::uint32_t text_radix(Base base) {
  return base == Base::byte ? 16 : radix(base);
}

std::string base_name(Base base) {
  return "base " + std::to_string(radix(base));
}

// Unpacks power-of-two digits into a little-endian bit vector.
std::vector<Digit> to_bit_vector(const Natural& x) {
  const unsigned width = digit_bits(x.base());
  std::vector<Digit> bits;
  bits.reserve(x.size() * width);
  for (Digit d : x.digits()) {
    for (unsigned b = 0; b < width; ++b) bits.push_back(static_cast<Digit>((d >> b) & 1u));
  }
  return bits;
}

Natural from_bit_vector(std::span<const Digit> bits, Base target) {
  const unsigned width = digit_bits(target);
  std::vector<Digit> digits((bits.size() + width - 1) / width, 0);
  for (std::size_t i = 0; i < bits.size(); ++i) {
    digits[i / width] = static_cast<Digit>(digits[i / width] | (bits[i] << (i % width)));
  }
  return Natural(std::move(digits), target);
}

}  // namespace

Base base_from_radix(std::uint32_t value) {
  switch (value) {
    case 2: return Base::binary;
    case 4: return Base::quaternary;
    case 10: return Base::decimal;
    case 16: return Base::hex;
    case 256: return Base::byte;
    default:
      throw UsageError("unsupported base " + std::to_string(value) +
                       " (expected one of 2, 4, 10, 16, 256)");
  }
}

Natural::Natural(std::vector<Digit> digits, Base base)
    : digits_(std::move(digits)), base_(base) {
  const std::uint32_t r = vedic::radix(base_);
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    if (digits_[i] >= r) {
      throw UsageError("digit " + std::to_string(digits_[i]) + " at position " +
                       std::to_string(i) + " is out of range for " + base_name(base_));
    }
  }
  trim(digits_);
}

Natural Natural::from_u64(std::uint64_t value, Base base) {
  std::vector<Digit> digits;
  const std::uint64_t r = vedic::radix(base);
  while (value != 0) {
    digits.push_back(static_cast<Digit>(value % r));
    value /= r;
  }
  Natural out(base);
  out.digits_ = std::move(digits);
  return out;
}

bool Natural::fits_u64() const noexcept {
  std::uint64_t value = 0;
  const std::uint64_t r = radix();
  for (auto it = digits_.rbegin(); it != digits_.rend(); ++it) {
    if (value > (UINT64_MAX - *it) / r) return false;
    value = value * r + *it;
  }
  return true;
}

std::uint64_t Natural::to_u64() const {
  if (!fits_u64()) throw ArithmeticError("value does not fit in 64 bits");
  std::uint64_t value = 0;
  const std::uint64_t r = radix();
  for (auto it = digits_.rbegin(); it != digits_.rend(); ++it) value = value * r + *it;
  return value;
}

void require_same_base(const Natural& a, const Natural& b) {
  if (a.base() != b.base()) {
    throw UsageError("operands in different bases (" + base_name(a.base()) + " vs " +
                     base_name(b.base()) + ")");
  }
}

Natural parse(std::string_view text, Base base) {
  if (text.empty()) throw ParseError("empty numeral", 0);
  const std::uint32_t char_radix = text_radix(base);
  std::vector<Digit> chars;  // most significant first
  chars.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const int v = char_value(text[i]);
    if (v < 0 || static_cast<std::uint32_t>(v) >= char_radix) {
      throw ParseError("invalid character '" + std::string(1, text[i]) + "' at offset " +
                           std::to_string(i) + " for " + base_name(base),
                       i);
    }
    chars.push_back(static_cast<Digit>(v));
  }

  std::vector<Digit> digits;
  if (base == Base::byte) {
    digits.reserve(chars.size() / 2 + 1);
    for (std::size_t end = chars.size(); end > 0;) {
      const Digit lo = chars[end - 1];
      const Digit hi = end >= 2 ? chars[end - 2] : Digit{0};
      digits.push_back(static_cast<Digit>(hi * 16 + lo));
      end = end >= 2 ? end - 2 : 0;
    }
  } else {
    digits.assign(chars.rbegin(), chars.rend());
  }
  return Natural(std::move(digits), base);
}

std::string format(const Natural& x) {
  if (x.is_zero()) return "0";
  std::string out;
  const auto digits = x.digits();
  if (x.base() == Base::byte) {
    out.reserve(digits.size() * 2);
    const Digit top = digits.back();
    if (top >= 16) out.push_back(kDigitChars[top >> 4]);
    out.push_back(kDigitChars[top & 0xf]);
    for (std::size_t i = digits.size() - 1; i-- > 0;) {
      out.push_back(kDigitChars[digits[i] >> 4]);
      out.push_back(kDigitChars[digits[i] & 0xf]);
    }
    return out;
  }
  out.reserve(digits.size());
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) out.push_back(kDigitChars[*it]);
  return out;
}

std::strong_ordering compare(const Natural& a, const Natural& b) {
  require_same_base(a, b);
  if (a.size() != b.size()) return a.size() <=> b.size();
  const auto da = a.digits();
  const auto db = b.digits();
  for (std::size_t i = da.size(); i-- > 0;) {
    if (da[i] != db[i]) return da[i] <=> db[i];
  }
  return std::strong_ordering::equal;
}

Natural add(const Natural& a, const Natural& b) {
  require_same_base(a, b);
  const std::uint32_t r = a.radix();
  const std::size_t n = std::max(a.size(), b.size());
  std::vector<Digit> out;
  out.reserve(n + 1);
  std::uint32_t carry = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint32_t s = std::uint32_t{a.digit(i)} + b.digit(i) + carry;
    out.push_back(static_cast<Digit>(s % r));
    carry = s / r;
  }
  if (carry != 0) out.push_back(static_cast<Digit>(carry));
  return Natural(std::move(out), a.base());
}

Natural sub(const Natural& a, const Natural& b) {
  if (compare(a, b) < 0) throw Underflow();
  const std::int32_t r = static_cast<std::int32_t>(a.radix());
  std::vector<Digit> out;
  out.reserve(a.size());
  std::int32_t borrow = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::int32_t d = std::int32_t{a.digit(i)} - b.digit(i) - borrow;
    borrow = d < 0 ? 1 : 0;
    if (d < 0) d += r;
    out.push_back(static_cast<Digit>(d));
  }
  return Natural(std::move(out), a.base());
}

Natural shift_digits(const Natural& x, std::ptrdiff_t k) {
  if (x.is_zero() || k == 0) return x;
  const auto digits = x.digits();
  std::vector<Digit> out;
  if (k > 0) {
    out.assign(static_cast<std::size_t>(k), 0);
    out.insert(out.end(), digits.begin(), digits.end());
  } else {
    const auto drop = static_cast<std::size_t>(-k);
    if (drop >= digits.size()) return Natural(x.base());
    out.assign(digits.begin() + static_cast<std::ptrdiff_t>(drop), digits.end());
  }
  return Natural(std::move(out), x.base());
}

Natural low_digits(const Natural& x, std::size_t count) {
  if (count >= x.size()) return x;
  const auto digits = x.digits();
  return Natural(std::vector<Digit>(digits.begin(), digits.begin() + static_cast<std::ptrdiff_t>(count)),
                 x.base());
}

std::pair<Natural, std::uint32_t> divide_small(const Natural& x, std::uint32_t divisor) {
  if (divisor == 0) throw DivisionByZero();
  if (divisor >= (1u << 24)) throw UsageError("divide_small divisor must be below 2^24");
  const std::uint32_t r = x.radix();
  const auto digits = x.digits();
  std::vector<Digit> q(digits.size(), 0);
  std::uint32_t rem = 0;
  for (std::size_t i = digits.size(); i-- > 0;) {
    const std::uint32_t cur = rem * r + digits[i];
    q[i] = static_cast<Digit>(cur / divisor);
    rem = cur % divisor;
  }
  return {Natural(std::move(q), x.base()), rem};
}

Natural rebase(const Natural& x, Base target) {
  if (x.base() == target) return x;
  if (digit_bits(x.base()) != 0 && digit_bits(target) != 0) {
    const auto bits = to_bit_vector(x);
    return from_bit_vector(bits, target);
  }
  // Horner evaluation in the target radix: acc = acc * source_radix + digit.
  const std::uint32_t src = x.radix();
  const std::uint32_t dst = radix(target);
  std::vector<std::uint32_t> acc;
  const auto digits = x.digits();
  for (std::size_t i = digits.size(); i-- > 0;) {
    std::uint32_t carry = digits[i];
    for (auto& d : acc) {
      const std::uint32_t v = d * src + carry;
      d = v % dst;
      carry = v / dst;
    }
    while (carry != 0) {
      acc.push_back(carry % dst);
      carry /= dst;
    }
  }
  return Natural(std::vector<Digit>(acc.begin(), acc.end()), target);
}

std::size_t bit_length(const Natural& x) {
  if (x.is_zero()) return 0;
  const unsigned width = digit_bits(x.base());
  if (width == 0) return bit_length(rebase(x, Base::binary));
  return (x.size() - 1) * width + static_cast<std::size_t>(std::bit_width(unsigned{x.leading_digit()}));
}

}  // namespace vedic
