#include "vedic/bench.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <ostream>
#include <random>

#include "json.hpp"
#include "vedic/baseline_arith.hpp"
#include "vedic/errors.hpp"
#include "vedic/modexp.hpp"
#include "vedic/rsa.hpp"
#include "vedic/vedic_div.hpp"
#include "vedic/vedic_mul.hpp"

namespace vedic {

namespace {

constexpr std::string_view kOperations[] = {"mul", "div", "modpow", "rsa_encrypt"};
constexpr std::string_view kAlgorithms[] = {"vedic", "shift_add", "restoring", "nonrestoring"};

bool known(std::span<const std::string_view> names, std::string_view name) {
  return std::find(names.begin(), names.end(), name) != names.end();
}

std::size_t operation_index(std::string_view op) {
  return static_cast<std::size_t>(
      std::find(std::begin(kOperations), std::end(kOperations), op) - std::begin(kOperations));
}

// FNV-1a over the digits of every value fed in.
class Checksum {
 public:
  void add(const Natural& x) {
    for (Digit d : x.digits()) mix(d);
    mix(0xff);  // separator, so [1,2][3] and [1][2,3] differ
    mix(static_cast<std::uint8_t>(x.size() & 0xff));
  }
  std::uint64_t value() const noexcept { return hash_; }

 private:
  void mix(std::uint8_t byte) {
    hash_ ^= byte;
    hash_ *= 1099511628211ULL;
  }
  std::uint64_t hash_ = 14695981039346656037ULL;
};

// Exactly `bits` bits (top bit set), base 16.
Natural random_operand(std::mt19937_64& gen, unsigned bits) {
  std::vector<Digit> digits((bits + 3) / 4);
  for (auto& d : digits) d = static_cast<Digit>(gen() & 0xf);
  const unsigned top_bits = bits - 4 * static_cast<unsigned>(digits.size() - 1);
  digits.back() = static_cast<Digit>((digits.back() & ((1u << top_bits) - 1)) | (1u << (top_bits - 1)));
  return Natural(std::move(digits), Base::hex);
}

std::mt19937_64 stream_for(const BenchConfig& config, std::string_view operation, unsigned width) {
  std::seed_seq seq{static_cast<std::uint32_t>(config.seed),
                    static_cast<std::uint32_t>(config.seed >> 32), width,
                    static_cast<std::uint32_t>(operation_index(operation))};
  return std::mt19937_64(seq);
}

Strategy strategy_for(std::string_view algorithm) {
  if (algorithm == "shift_add") return {Multiplier::shift_add, Divider::restoring};
  return {Multiplier::vedic, parse_divider(algorithm)};
}

struct Workload {
  std::vector<Natural> first;
  std::vector<Natural> second;
  std::vector<Natural> third;  // modpow modulus
  RsaPublicKey key;    // rsa_encrypt
};

Workload make_workload(const BenchConfig& config, std::string_view operation, unsigned width) {
  auto gen = stream_for(config, operation, width);
  Workload w;
  w.first.reserve(config.iterations);
  w.second.reserve(config.iterations);
  if (operation == "rsa_encrypt") {
    w.key = keygen_random(width, config.seed).public_key;
    for (std::size_t i = 0; i < config.iterations; ++i) {
      w.first.push_back(random_operand(gen, width - 1));
    }
    return w;
  }
  for (std::size_t i = 0; i < config.iterations; ++i) {
    if (operation == "mul") {
      w.first.push_back(random_operand(gen, width));
      w.second.push_back(random_operand(gen, width));
    } else if (operation == "div") {
      w.first.push_back(random_operand(gen, width));
      w.second.push_back(random_operand(gen, std::max(1u, width / 2)));
    } else {  // modpow: base < modulus, modulus odd
      Natural n = random_operand(gen, width);
      n = add(n, Natural::from_u64(n.digit(0) % 2 == 0 ? 1 : 0, Base::hex));
      w.first.push_back(random_operand(gen, width - 1));
      w.second.push_back(random_operand(gen, width));
      w.third.push_back(std::move(n));
    }
  }
  return w;
}

BenchRecord time_one(std::string_view operation, std::string_view algorithm, unsigned width,
                     const Workload& w, std::size_t iterations) {
  Checksum operands;
  for (std::size_t i = 0; i < iterations; ++i) {
    operands.add(w.first[i]);
    if (!w.second.empty()) operands.add(w.second[i]);
    if (!w.third.empty()) operands.add(w.third[i]);
  }
  if (operation == "rsa_encrypt") {
    operands.add(w.key.modulus);
    operands.add(w.key.exponent);
  }

  Checksum results;
  std::function<void(std::size_t)> body;
  if (operation == "mul") {
    if (algorithm == "vedic") {
      body = [&](std::size_t i) { results.add(multiply(w.first[i], w.second[i])); };
    } else {
      body = [&](std::size_t i) { results.add(shift_add_multiply(w.first[i], w.second[i])); };
    }
  } else if (operation == "div") {
    const Divider divider = parse_divider(algorithm);
    body = [&, divider](std::size_t i) {
      const DivResult r = strategy_divide(w.first[i], w.second[i], {Multiplier::vedic, divider});
      results.add(r.quotient);
      results.add(r.remainder);
    };
  } else if (operation == "modpow") {
    const Strategy s = strategy_for(algorithm);
    body = [&, s](std::size_t i) { results.add(mod_pow(w.first[i], w.second[i], w.third[i], s)); };
  } else {
    const Strategy s = strategy_for(algorithm);
    body = [&, s](std::size_t i) { results.add(encrypt(w.first[i], w.key, s)); };
  }

  const auto start = std::chrono::steady_clock::now();
  for (std::size_t i = 0; i < iterations; ++i) body(i);
  const auto stop = std::chrono::steady_clock::now();

  BenchRecord record;
  record.operation = std::string(operation);
  record.algorithm = std::string(algorithm);
  record.operand_bits = width;
  record.iterations = iterations;
  record.total_time = std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start);
  record.time_per_op = std::chrono::duration<double, std::nano>(
      static_cast<double>(record.total_time.count()) / static_cast<double>(iterations));
  record.operand_checksum = operands.value();
  record.result_checksum = results.value();
  return record;
}

}  // namespace

bool applies(std::string_view operation, std::string_view algorithm) {
  if (operation == "mul") return algorithm == "vedic" || algorithm == "shift_add";
  if (operation == "div") return algorithm != "shift_add" && known(kAlgorithms, algorithm);
  return known(kOperations, operation) && known(kAlgorithms, algorithm);
}

void validate(const BenchConfig& config) {
  if (config.iterations < 1) throw UsageError("iterations must be at least 1");
  if (config.widths.empty()) throw UsageError("at least one width is required");
  for (const auto& op : config.operations) {
    if (!known(kOperations, op)) {
      throw UsageError("unknown operation '" + op + "' (expected mul|div|modpow|rsa_encrypt)");
    }
  }
  for (const auto& algo : config.algorithms) {
    if (!known(kAlgorithms, algo)) {
      throw UsageError("unknown algorithm '" + algo +
                       "' (expected vedic|shift_add|restoring|nonrestoring)");
    }
  }
  const bool wants_rsa = std::find(config.operations.begin(), config.operations.end(),
                                   "rsa_encrypt") != config.operations.end();
  for (unsigned w : config.widths) {
    if (w == 0 || w % 4 != 0) {
      throw UsageError("width " + std::to_string(w) + " is not a positive multiple of 4");
    }
    if (wants_rsa && w < 16) throw UsageError("rsa_encrypt needs widths of at least 16 bits");
  }
}

BenchConfig parse_bench_config(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError(std::string("bench config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw UsageError("bench config must be a JSON object");
  BenchConfig config;
  try {
    for (const auto& [key, value] : doc.items()) {
      if (key == "widths") {
        config.widths = value.get<std::vector<unsigned>>();
      } else if (key == "iterations") {
        config.iterations = value.get<std::size_t>();
      } else if (key == "seed") {
        config.seed = value.get<std::uint64_t>();
      } else if (key == "algorithms") {
        config.algorithms = value.get<std::vector<std::string>>();
      } else if (key == "operations") {
        config.operations = value.get<std::vector<std::string>>();
      } else {
        throw UsageError("unknown bench config key '" + key + "'");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("bench config has a mistyped value: ") + e.what());
  }
  validate(config);
  return config;
}

std::vector<BenchRecord> bench_suite(const BenchConfig& config) {
  validate(config);
  std::vector<BenchRecord> records;
  for (const auto& op : config.operations) {
    for (unsigned width : config.widths) {
      const Workload workload = make_workload(config, op, width);
      for (const auto& algo : config.algorithms) {
        if (!applies(op, algo)) continue;
        records.push_back(time_one(op, algo, width, workload, config.iterations));
      }
    }
  }
  return records;
}

std::string format_csv_row(const BenchRecord& r) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, r.time_per_op.count(),
                                 std::chars_format::fixed, 3);
  return r.operation + ',' + r.algorithm + ',' + std::to_string(r.operand_bits) + ',' +
         std::to_string(r.iterations) + ',' + std::to_string(r.total_time.count()) + ',' +
         std::string(buf, res.ptr);
}

void write_csv(std::ostream& out, const std::vector<BenchRecord>& records) {
  out << kBenchCsvHeader << '\n';
  for (const auto& r : records) out << format_csv_row(r) << '\n';
}

std::string_view bench_banner() noexcept {
  return "# relative software timings on this machine; not comparable to FPGA gate-delay "
         "or LUT-area figures";
}

}  // namespace vedic
