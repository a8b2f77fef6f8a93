// Acceptance gate. Prints one PASS/FAIL line per criterion and exits nonzero
// if any fails. Usage: acceptance_test <path-to-vedic-binary>

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <tuple>

#include "oracle.hpp"
#include "vedic/baseline_arith.hpp"
#include "vedic/bench.hpp"
#include "vedic/modexp.hpp"
#include "vedic/rsa.hpp"
#include "vedic/vedic_div.hpp"
#include "vedic/vedic_mul.hpp"

namespace {

using namespace vedic;
using Clock = std::chrono::steady_clock;
using Seconds = std::chrono::duration<double>;

struct Outcome {
  bool ok = true;
  std::string detail;
};

// Runs a shell command and captures stdout.
std::string capture(const std::string& command, int& status) {
  std::string out;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) {
    status = -1;
    return out;
  }
  std::array<char, 256> buf{};
  while (std::fgets(buf.data(), buf.size(), pipe) != nullptr) out += buf.data();
  status = pclose(pipe);
  return out;
}

Natural dec(std::uint64_t v) { return Natural::from_u64(v, Base::decimal); }

Outcome c1_cli_division(const std::string& binary) {
  int status = 0;
  const std::string out = capture(binary + " div 35001 77 --base 10 --algo vedic", status);
  return {status == 0 && out == "q=454 r=43\n", "output=\"" + out.substr(0, out.find('\n')) + "\""};
}

Outcome c2_golden_trace() {
  const TracedDivision t = divide_traced(parse("35001", Base::decimal), parse("77", Base::decimal));
  for (const auto& s : t.steps) {
    if (s.partial == dec(35) && s.estimate == 5 && s.quotient_digit == 4 && s.remainder == 7 &&
        s.adjust_iterations >= 1 && s.next_partial == dec(42)) {
      return {true, "K=35 q 5->4 r=7 next K=42"};
    }
  }
  return {false, "step not found in trace:\n" + format_trace(t)};
}

Outcome c3_multiplier_equivalence() {
  std::size_t mismatches = 0;
  for (std::uint64_t a = 0; a < 256; ++a) {
    const Natural na = Natural::from_u64(a, Base::hex);
    for (std::uint64_t b = 0; b < 256; ++b) {
      const Natural nb = Natural::from_u64(b, Base::hex);
      const Natural v = multiply(na, nb);
      const Natural s = shift_add_multiply(na, nb);
      if (v.to_u64() != a * b || s != v) ++mismatches;
    }
  }
  return {mismatches == 0, "pairs=65536 mismatches=" + std::to_string(mismatches)};
}

Outcome c4_division_agreement(unsigned& max_adjust_hex) {
  std::size_t mismatches = 0;
  max_adjust_hex = 0;
  for (std::uint64_t y = 1; y <= 64; ++y) {
    const Natural ny = Natural::from_u64(y, Base::hex);
    for (std::uint64_t x = 0; x < (1u << 12); ++x) {
      const Natural nx = Natural::from_u64(x, Base::hex);
      const auto [q, r] = oracle::repeated_subtraction(x, y);
      const TracedDivision t = divide_traced(nx, ny);
      max_adjust_hex = std::max(max_adjust_hex, t.max_adjust_iterations());
      const bool agree = t.result.quotient.to_u64() == q && t.result.remainder.to_u64() == r &&
                         restoring_divide(nx, ny) == t.result &&
                         nonrestoring_divide(nx, ny) == t.result;
      if (!agree) ++mismatches;
    }
  }

  std::size_t identity_failures = 0;
  std::mt19937_64 gen(2024);
  for (int i = 0; i < 100000; ++i) {
    const Natural x = oracle::random_natural(gen, 64);
    const Natural y = oracle::random_nonzero(gen, 64);
    const DivResult d = divide(x, y);
    const bool ok = add(multiply(d.quotient, y), d.remainder) == x && compare(d.remainder, y) < 0 &&
                    oracle::to_big(d.quotient) == oracle::to_big(x) / oracle::to_big(y);
    if (!ok) ++identity_failures;
  }
  return {mismatches == 0 && identity_failures == 0,
          "exhaustive mismatches=" + std::to_string(mismatches) +
              " random identity failures=" + std::to_string(identity_failures) + "/100000"};
}

Outcome c5_modexp() {
  std::mt19937_64 gen(5);
  std::uniform_int_distribution<std::uint64_t> modulus(2, 1023);
  std::uniform_int_distribution<std::uint64_t> value(0, 1023);
  std::size_t mismatches = 0;
  for (int i = 0; i < 10000; ++i) {
    const std::uint64_t n = modulus(gen);
    const std::uint64_t a = value(gen);
    const std::uint64_t b = value(gen);
    const std::uint64_t expected = oracle::naive_mod_pow(a, b, n);
    for (const Strategy s : all_strategies()) {
      if (mod_pow(dec(a), dec(b), dec(n), s).to_u64() != expected) ++mismatches;
    }
  }

  std::size_t identity_failures = 0;
  for (int i = 0; i < 10000; ++i) {
    const Natural a = oracle::random_natural(gen, 24);
    const Natural b = oracle::random_natural(gen, 24);
    const Natural n = oracle::random_nonzero(gen, 8);
    const Natural lhs = mod_mul(mod_reduce(a, n), mod_reduce(b, n), n);
    if (lhs != mod_reduce(multiply(a, b), n) ||
        oracle::to_big(lhs) != oracle::to_big(a) * oracle::to_big(b) % oracle::to_big(n)) {
      ++identity_failures;
    }
  }
  return {mismatches == 0 && identity_failures == 0,
          "triples=10000 strategies=6 mismatches=" + std::to_string(mismatches) +
              " identity failures=" + std::to_string(identity_failures) + "/10000"};
}

Outcome c6_rsa_roundtrip() {
  // Independent check of the private exponent before trusting the key.
  const auto [g, inverse] = [] {
    long long r0 = 3120, r1 = 17, t0 = 0, t1 = 1;
    while (r1 != 0) {
      const long long q = r0 / r1;
      std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
      std::tie(t0, t1) = std::make_pair(t1, t0 - q * t1);
    }
    return std::make_pair(r0, ((t0 % 3120) + 3120) % 3120);
  }();
  const KeyPair k = keygen(dec(61), dec(53), dec(17));
  const bool key_ok = g == 1 && inverse == 2753 && (17 * 2753) % 3120 == 1 &&
                      k.public_key.modulus == dec(3233) &&
                      k.private_key.exponent == dec(static_cast<std::uint64_t>(inverse));
  std::size_t failures = 0;
  for (std::uint64_t m = 0; m < 3233; ++m) {
    if (decrypt(encrypt(dec(m), k.public_key), k.private_key) != dec(m)) ++failures;
  }
  return {key_ok && failures == 0,
          "N=" + format(k.public_key.modulus) + " I=" + format(k.private_key.exponent) +
              " roundtrip failures=" + std::to_string(failures) + "/3233"};
}

Outcome c7_structure_report() {
  bool ok = structure_report(16, 4).module_count == 16 && structure_report(16, 4).column_count == 7;
  std::ostringstream detail;
  for (unsigned n : {8u, 16u, 32u, 64u}) {
    const unsigned groups = n / 4;
    std::size_t modules = 0;
    std::set<unsigned> columns;
    for (unsigned i = 0; i < groups; ++i) {
      for (unsigned j = 0; j < groups; ++j) {
        ++modules;
        columns.insert(i + j);
      }
    }
    const StructureReport r = structure_report(n, 4);
    ok = ok && r.module_count == modules && r.column_count == columns.size();
    detail << n << ":" << r.module_count << "/" << r.column_count << " ";
  }
  return {ok, detail.str() + "(modules/columns)"};
}

Outcome c8_bench() {
  BenchConfig config;
  config.widths = {64, 256, 1024};
  config.iterations = 1000;
  config.seed = 1;
  const auto records = bench_suite(config);

  std::ostringstream csv;
  write_csv(csv, records);
  std::istringstream lines(csv.str());
  std::string line;
  std::getline(lines, line);
  bool ok = line == kBenchCsvHeader;
  std::size_t rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
    ok = ok && std::count(line.begin(), line.end(), ',') == 5;
  }
  ok = ok && rows == records.size() && !records.empty();

  std::map<std::pair<std::string, unsigned>, std::uint64_t> operands;
  std::map<std::pair<std::string, std::string>, double> last;
  std::string detail;
  for (const auto& r : records) {
    ok = ok && r.iterations >= 1000;
    const auto [it, inserted] = operands.emplace(std::make_pair(r.operation, r.operand_bits),
                                                 r.operand_checksum);
    if (!inserted && it->second != r.operand_checksum) {
      ok = false;
      detail += " unpaired:" + r.operation + "/" + r.algorithm;
    }
    const auto key = std::make_pair(r.operation, r.algorithm);
    const auto prev = last.find(key);
    if (prev != last.end() && r.time_per_op.count() < prev->second) {
      ok = false;
      detail += " decreasing:" + r.operation + "/" + r.algorithm + "@" + std::to_string(r.operand_bits);
    }
    last[key] = r.time_per_op.count();
  }
  return {ok, "rows=" + std::to_string(rows) + detail};
}

Outcome c9_adjust_bound(unsigned max_adjust_hex) {
  return {max_adjust_hex <= 2, "max ADJUST iterations=" + std::to_string(max_adjust_hex) + " (limit 2)"};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance_test <path-to-vedic-binary>\n";
    return 2;
  }
  const std::string binary = argv[1];
  unsigned max_adjust_hex = 0;

  struct Criterion {
    int id;
    std::string name;
    double limit_seconds;  // 0: no runtime limit
    std::function<Outcome()> check;
  };
  const std::vector<Criterion> criteria{
      {1, "cli div 35001 77 prints q=454 r=43", 1.0, [&] { return c1_cli_division(binary); }},
      {2, "golden division trace", 0, c2_golden_trace},
      {3, "multiplier equivalence, all pairs < 256", 60.0, c3_multiplier_equivalence},
      {4, "division agreement and Euclidean identity", 300.0,
       [&] { return c4_division_agreement(max_adjust_hex); }},
      {5, "modular exponentiation, 6 strategies", 120.0, c5_modexp},
      {6, "RSA roundtrip N=3233", 120.0, c6_rsa_roundtrip},
      {7, "multiplier structure report", 0, c7_structure_report},
      {8, "benchmark CSV, paired operands, monotone ns_per_op", 0, c8_bench},
      {9, "ADJUST at most 2 per digit (base 16)", 0, [&] { return c9_adjust_bound(max_adjust_hex); }},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    Outcome o = c.check();
    const double elapsed = Seconds(Clock::now() - start).count();
    std::ostringstream timing;
    timing.setf(std::ios::fixed);
    timing.precision(3);
    timing << elapsed << "s";
    if (c.limit_seconds > 0) {
      timing << " (limit " << c.limit_seconds << "s)";
      if (elapsed >= c.limit_seconds) o.ok = false;
    }
    if (!o.ok) ++failures;
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name << " | "
              << o.detail << " | " << timing.str() << std::endl;
  }
  std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " FAILED") << std::endl;
  return failures == 0 ? 0 : 1;
}
