#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "vedic/errors.hpp"
#include "vedic/numeral.hpp"

namespace vedic {
namespace {

constexpr Base kAllBases[] = {Base::binary, Base::quaternary, Base::decimal, Base::hex, Base::byte};

TEST(Numeral, ParseStoresLittleEndianDigits) {
  const Natural x = parse("35001", Base::decimal);
  const std::vector<Digit> expected{1, 0, 0, 5, 3};
  EXPECT_EQ(std::vector<Digit>(x.digits().begin(), x.digits().end()), expected);
  EXPECT_EQ(x.to_u64(), 35001u);
}

TEST(Numeral, ByteBaseGroupsHexPairsFromTheRight) {
  const Natural x = parse("abcde", Base::byte);
  const std::vector<Digit> expected{0xde, 0xbc, 0x0a};
  EXPECT_EQ(std::vector<Digit>(x.digits().begin(), x.digits().end()), expected);
  EXPECT_EQ(format(x), "abcde");
}

TEST(Numeral, ZeroIsEmptyAndFormatsAsZero) {
  for (Base b : kAllBases) {
    const Natural z = parse("000", b);
    EXPECT_TRUE(z.is_zero());
    EXPECT_EQ(z.size(), 0u);
    EXPECT_EQ(format(z), "0");
    EXPECT_EQ(z, Natural(b));
  }
}

TEST(Numeral, LeadingZerosAreAbsorbed) {
  EXPECT_EQ(parse("000ff", Base::hex), parse("ff", Base::hex));
  EXPECT_EQ(format(parse("0042", Base::decimal)), "42");
  EXPECT_EQ(Natural({3, 0, 0}, Base::decimal).size(), 1u);
}

TEST(Numeral, ParseErrorReportsOffset) {
  try {
    parse("12z4", Base::decimal);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 2u);
  }
  EXPECT_THROW(parse("12", Base::binary), ParseError);
  EXPECT_THROW(parse("a", Base::decimal), ParseError);
  EXPECT_THROW(parse("", Base::hex), ParseError);
  EXPECT_THROW(parse("4", Base::quaternary), ParseError);
}

TEST(Numeral, DigitOutOfRangeIsRejected) {
  EXPECT_THROW(Natural({10}, Base::decimal), UsageError);
  EXPECT_THROW(Natural({2}, Base::binary), UsageError);
}

TEST(Numeral, UnsupportedRadixIsRejected) {
  EXPECT_THROW(base_from_radix(8), UsageError);
  EXPECT_EQ(base_from_radix(256), Base::byte);
}

TEST(Numeral, MixedBasesAreRejected) {
  const Natural a = parse("10", Base::decimal);
  const Natural b = parse("10", Base::hex);
  EXPECT_THROW(add(a, b), UsageError);
  EXPECT_THROW(sub(a, b), UsageError);
  EXPECT_THROW(compare(a, b), UsageError);
}

TEST(Numeral, SubUnderflowThrows) {
  EXPECT_THROW(sub(parse("7", Base::decimal), parse("8", Base::decimal)), Underflow);
  EXPECT_TRUE(sub(parse("8", Base::decimal), parse("8", Base::decimal)).is_zero());
}

TEST(Numeral, ShiftAndLowDigits) {
  const Natural x = parse("35001", Base::decimal);
  EXPECT_EQ(format(shift_digits(x, 2)), "3500100");
  EXPECT_EQ(format(shift_digits(x, -3)), "35");
  EXPECT_TRUE(shift_digits(x, -9).is_zero());
  EXPECT_EQ(format(low_digits(x, 2)), "1");
  EXPECT_EQ(format(low_digits(x, 4)), "5001");
}

TEST(Numeral, ExhaustiveSmallArithmeticAgainstNative) {
  for (Base b : kAllBases) {
    for (std::uint64_t x = 0; x < 256; ++x) {
      const Natural nx = Natural::from_u64(x, b);
      for (std::uint64_t y = 0; y < 256; ++y) {
        const Natural ny = Natural::from_u64(y, b);
        ASSERT_EQ(add(nx, ny).to_u64(), x + y);
        ASSERT_TRUE(compare(nx, ny) == (x <=> y));
        if (x >= y) {
          ASSERT_EQ(sub(nx, ny).to_u64(), x - y);
        } else {
          ASSERT_THROW(sub(nx, ny), Underflow);
        }
      }
    }
  }
}

TEST(Numeral, FormatParseRoundTrip) {
  std::mt19937_64 gen(11);
  for (Base b : kAllBases) {
    for (int i = 0; i < 2000; ++i) {
      const Natural x = oracle::random_natural(gen, 40, b);
      ASSERT_EQ(parse(format(x), b), x);
    }
  }
}

TEST(Numeral, RebasePreservesValue) {
  std::mt19937_64 gen(12);
  for (int i = 0; i < 500; ++i) {
    for (Base from : kAllBases) {
      const Natural x = oracle::random_natural(gen, 30, from);
      const auto value = oracle::to_big(x);
      for (Base to : kAllBases) {
        const Natural y = rebase(x, to);
        ASSERT_EQ(y.base(), to);
        ASSERT_EQ(oracle::to_big(y), value);
      }
    }
  }
}

TEST(Numeral, AdditionPropertiesOnLargeValues) {
  std::mt19937_64 gen(13);
  for (int i = 0; i < 2000; ++i) {
    const Natural a = oracle::random_natural(gen, 64);
    const Natural b = oracle::random_natural(gen, 64);
    const Natural c = oracle::random_natural(gen, 64);
    ASSERT_EQ(add(a, b), add(b, a));
    ASSERT_EQ(add(add(a, b), c), add(a, add(b, c)));
    ASSERT_EQ(sub(add(a, b), b), a);
    ASSERT_EQ(oracle::to_big(add(a, b)), oracle::to_big(a) + oracle::to_big(b));
  }
}

TEST(Numeral, DivideSmallAndBitLength) {
  const auto [q, r] = divide_small(parse("35001", Base::decimal), 77);
  EXPECT_EQ(q.to_u64(), 35001u / 77);
  EXPECT_EQ(r, 35001u % 77);
  EXPECT_THROW(divide_small(parse("1", Base::decimal), 0), DivisionByZero);
  EXPECT_EQ(bit_length(Natural(Base::hex)), 0u);
  EXPECT_EQ(bit_length(parse("1", Base::hex)), 1u);
  EXPECT_EQ(bit_length(parse("35001", Base::decimal)), 16u);
  EXPECT_EQ(bit_length(parse("100", Base::byte)), 9u);
}

TEST(Numeral, ToU64OverflowThrows) {
  const Natural big = parse("10000000000000000", Base::hex);
  EXPECT_FALSE(big.fits_u64());
  EXPECT_THROW(big.to_u64(), ArithmeticError);
  EXPECT_EQ(parse("ffffffffffffffff", Base::hex).to_u64(), UINT64_MAX);
}

}  // namespace
}  // namespace vedic
