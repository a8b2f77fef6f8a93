#pragma once

// Urdhva Tiryakbhyam ("vertically and crosswise") multiplication.
//
// The product of an m-digit x and an n-digit y is assembled from m+n-1
// column sums, column c collecting every digit product x[i]*y[j] with i+j=c.
// Each digit product stands for one embedded d x d multiply module; with
// base 16 and four-digit operands this is exactly the 16x16-bit decomposition
// into sixteen 4x4 modules and seven cross-product columns. A single
// left-to-right carry sweep turns the column sums into digits.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "vedic/numeral.hpp"

namespace vedic {

struct ColumnSum {
  std::size_t column_index = 0;
  // Pre-carry accumulator. Bounded by (#pairs in the column) * (radix-1)^2,
  // which stays far below 2^64 for any operand that fits in memory.
  std::uint64_t value = 0;

  friend bool operator==(const ColumnSum&, const ColumnSum&) = default;
};

struct StructureReport {
  unsigned operand_bits = 0;
  unsigned group_bits = 0;
  std::size_t module_count = 0;
  std::size_t column_count = 0;

  friend bool operator==(const StructureReport&, const StructureReport&) = default;
};

// One d x d multiply module.
constexpr std::uint32_t embedded_product(Digit a, Digit b) noexcept {
  return std::uint32_t{a} * std::uint32_t{b};
}

// Sum of x[i]*y[j] over i+j == column. Columns outside 0..m+n-2 are zero.
ColumnSum cross_column(const Natural& x, const Natural& y, std::size_t column);

// All m+n-1 column sums, lowest column first. Empty if either operand is zero.
std::vector<ColumnSum> cross_columns(const Natural& x, const Natural& y);

// Positional accumulation of column sums: each column emits value mod radix
// and forwards the quotient into the next column.
Natural resolve_carries(std::span<const ColumnSum> columns, Base base);

Natural multiply(const Natural& x, const Natural& y);

// Module and column counts for an operand_bits x operand_bits multiply built
// from group_bits x group_bits modules. group_bits must be 1, 2, 4 or 8 and
// operand_bits a positive multiple of it.
StructureReport structure_report(unsigned operand_bits, unsigned group_bits);

}  // namespace vedic
