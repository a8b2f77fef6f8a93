#pragma once

// Paired-workload timing harness.
//
// For every (operation, width) the operand stream is derived only from the
// seed, the operation and the width, so every algorithm measured at that
// point consumes exactly the same inputs; the operand checksum on each record
// makes that checkable. Timings are relative software measurements on the
// build machine and have no relation to gate-level delay figures.

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace vedic {

struct BenchConfig {
  std::vector<unsigned> widths{64, 256, 1024};
  std::size_t iterations = 1000;
  std::uint64_t seed = 1;
  // Subset of vedic, shift_add, restoring, nonrestoring.
  std::vector<std::string> algorithms{"vedic", "shift_add", "restoring", "nonrestoring"};
  // Subset of mul, div, modpow, rsa_encrypt.
  std::vector<std::string> operations{"mul", "div"};
};

struct BenchRecord {
  std::string operation;
  std::string algorithm;
  unsigned operand_bits = 0;
  std::size_t iterations = 0;
  std::chrono::nanoseconds total_time{0};
  std::chrono::duration<double, std::nano> time_per_op{0};
  std::uint64_t operand_checksum = 0;
  std::uint64_t result_checksum = 0;
};

// Throws UsageError: widths must be positive multiples of 4 (at least 16 for
// rsa_encrypt), iterations >= 1, names from the sets above.
void validate(const BenchConfig& config);

// JSON object with any of: widths, iterations, seed, algorithms, operations.
BenchConfig parse_bench_config(std::string_view json_text);

// Which algorithms apply to an operation. mul: vedic, shift_add. div: vedic,
// restoring, nonrestoring. modpow and rsa_encrypt: all four, naming the
// divider used under the vedic multiplier (shift_add pairs the shift-add
// multiplier with restoring division).
bool applies(std::string_view operation, std::string_view algorithm);

// One record per applicable (operation, width, algorithm), in config order.
std::vector<BenchRecord> bench_suite(const BenchConfig& config);

inline constexpr std::string_view kBenchCsvHeader =
    "operation,algorithm,bits,iterations,total_ns,ns_per_op";

std::string format_csv_row(const BenchRecord& record);
void write_csv(std::ostream& out, const std::vector<BenchRecord>& records);

std::string_view bench_banner() noexcept;

}  // namespace vedic
