#include "vedic/vedic_mul.hpp"

#include <algorithm>
#include <string>

#include "vedic/errors.hpp"

namespace vedic {

namespace {

std::uint64_t column_value(std::span<const Digit> x, std::span<const Digit> y, std::size_t c) {
  // i ranges over x indices with 0 <= c-i < |y|.
  const std::size_t lo = c >= y.size() ? c - y.size() + 1 : 0;
  const std::size_t hi = std::min(c + 1, x.size());
  std::uint64_t sum = 0;
  for (std::size_t i = lo; i < hi; ++i) sum += embedded_product(x[i], y[c - i]);
  return sum;
}

}  // namespace

ColumnSum cross_column(const Natural& x, const Natural& y, std::size_t column) {
  require_same_base(x, y);
  return {column, column_value(x.digits(), y.digits(), column)};
}

std::vector<ColumnSum> cross_columns(const Natural& x, const Natural& y) {
  require_same_base(x, y);
  if (x.is_zero() || y.is_zero()) return {};
  const std::size_t count = x.size() + y.size() - 1;
  std::vector<ColumnSum> columns;
  columns.reserve(count);
  for (std::size_t c = 0; c < count; ++c) {
    columns.push_back({c, column_value(x.digits(), y.digits(), c)});
  }
  return columns;
}

Natural resolve_carries(std::span<const ColumnSum> columns, Base base) {
  const std::uint64_t r = radix(base);
  std::vector<Digit> digits;
  digits.reserve(columns.size() + 4);
  std::uint64_t carry = 0;
  std::size_t expected = 0;
  for (const ColumnSum& col : columns) {
    if (col.column_index != expected) {
      throw UsageError("column sums must be contiguous from column 0");
    }
    ++expected;
    const std::uint64_t v = col.value + carry;
    digits.push_back(static_cast<Digit>(v % r));
    carry = v / r;
  }
  while (carry != 0) {
    digits.push_back(static_cast<Digit>(carry % r));
    carry /= r;
  }
  return Natural(std::move(digits), base);
}

Natural multiply(const Natural& x, const Natural& y) {
  const auto columns = cross_columns(x, y);
  return resolve_carries(columns, x.base());
}

StructureReport structure_report(unsigned operand_bits, unsigned group_bits) {
  if (group_bits != 1 && group_bits != 2 && group_bits != 4 && group_bits != 8) {
    throw UsageError("group width must be 1, 2, 4 or 8 bits, got " + std::to_string(group_bits));
  }
  if (operand_bits == 0 || operand_bits % group_bits != 0) {
    throw UsageError("operand width " + std::to_string(operand_bits) +
                     " is not a positive multiple of " + std::to_string(group_bits));
  }
  const std::size_t groups = operand_bits / group_bits;
  return {operand_bits, group_bits, groups * groups, 2 * groups - 1};
}

}  // namespace vedic
