#include "vedic/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>
#include <vector>

#include "CLI11.hpp"
#include "vedic/baseline_arith.hpp"
#include "vedic/bench.hpp"
#include "vedic/errors.hpp"
#include "vedic/key_file.hpp"
#include "vedic/modexp.hpp"
#include "vedic/rsa.hpp"
#include "vedic/selftest.hpp"
#include "vedic/vedic_div.hpp"
#include "vedic/vedic_mul.hpp"

namespace vedic::cli {

namespace {

struct Options {
  unsigned base = 10;
  std::string algo = "vedic";
  std::string mul = "vedic";
  std::string div = "vedic";
  bool trace = false;
  bool literal = false;
  bool text = false;
  std::vector<std::string> operands;

  std::string p, q, j;
  unsigned bits = 0;
  std::uint64_t seed = 0;
  std::string public_path = "rsa.pub";
  std::string private_path = "rsa.key";
  std::string key_path;

  std::string config_path;
  std::vector<unsigned> widths;
  std::size_t iterations = 0;
  std::vector<std::string> algorithms;
  std::vector<std::string> operations;
};

Natural number(const std::string& text, Base base) { return parse(text, base); }

int cmd_mul(const Options& o, std::ostream& out) {
  const Base base = base_from_radix(o.base);
  const Natural a = number(o.operands.at(0), base);
  const Natural b = number(o.operands.at(1), base);
  out << format(strategy_multiply(a, b, {parse_multiplier(o.algo), Divider::vedic})) << '\n';
  return kExitOk;
}

int cmd_div(const Options& o, std::ostream& out) {
  const Base base = base_from_radix(o.base);
  const Natural x = number(o.operands.at(0), base);
  const Natural y = number(o.operands.at(1), base);
  const Divider divider = parse_divider(o.algo);
  if (o.trace) {
    if (divider != Divider::vedic) throw UsageError("--trace is only available with --algo vedic");
    out << format_trace(divide_traced(x, y));
    return kExitOk;
  }
  const DivResult r = strategy_divide(x, y, {Multiplier::vedic, divider});
  out << "q=" << format(r.quotient) << " r=" << format(r.remainder) << '\n';
  return kExitOk;
}

int cmd_modpow(const Options& o, std::ostream& out) {
  const Base base = base_from_radix(o.base);
  const Natural a = number(o.operands.at(0), base);
  const Natural b = number(o.operands.at(1), base);
  const Natural n = number(o.operands.at(2), base);
  const Strategy strategy{parse_multiplier(o.mul), parse_divider(o.div)};
  const LoopVariant variant = o.literal ? LoopVariant::literal : LoopVariant::optimized;
  if (o.trace) {
    out << format_trace(mod_pow_traced(a, b, n, strategy, variant));
  } else {
    out << format(mod_pow_traced(a, b, n, strategy, variant).value) << '\n';
  }
  return kExitOk;
}

int cmd_keygen(const Options& o, std::ostream& out) {
  const Base base = base_from_radix(o.base);
  const bool explicit_primes = !o.p.empty() || !o.q.empty() || !o.j.empty();
  KeyPair keys;
  if (o.bits != 0) {
    if (explicit_primes) throw UsageError("use either --p/--q/--j or --bits/--seed, not both");
    keys = keygen_random(o.bits, o.seed, base);
  } else {
    if (o.p.empty() || o.q.empty() || o.j.empty()) {
      throw UsageError("keygen needs --p, --q and --j, or --bits and --seed");
    }
    keys = keygen(number(o.p, base), number(o.q, base), number(o.j, base));
  }
  save_text_file(o.public_path, write_key_file(keys.public_key));
  save_text_file(o.private_path, write_key_file(keys.private_key));
  out << "n=" << format(keys.public_key.modulus) << '\n'
      << "k=" << format(keys.totient) << '\n'
      << "j=" << format(keys.public_key.exponent) << '\n'
      << "i=" << format(keys.private_key.exponent) << '\n';
  return kExitOk;
}

int cmd_crypt(const Options& o, bool encrypting, std::ostream& out) {
  const Base base = base_from_radix(o.base);
  const KeyFile key = load_key_file(o.key_path);
  const Base key_base = key.modulus.base();
  const Strategy strategy{parse_multiplier(o.mul), parse_divider(o.div)};
  const std::string& value = o.operands.at(0);

  Natural input = o.text && encrypting ? encode_message(value, key_base)
                                       : rebase(number(value, base), key_base);
  const Natural output = encrypting ? encrypt(input, key.as_public(), strategy)
                                    : decrypt(input, key.as_private(), strategy);
  if (o.text && !encrypting) {
    out << decode_message(output) << '\n';
  } else {
    out << format(rebase(output, base)) << '\n';
  }
  return kExitOk;
}

int cmd_selftest(std::ostream& out) {
  std::size_t passed = 0;
  std::size_t failed = 0;
  bool ok = true;
  for (const auto& suite : run_selftest()) {
    out << (suite.ok() ? "PASS " : "FAIL ") << suite.name << ": passed=" << suite.passed
        << " failed=" << suite.failed << '\n';
    passed += suite.passed;
    failed += suite.failed;
    ok = ok && suite.ok();
  }
  out << "total: passed=" << passed << " failed=" << failed << '\n';
  return ok ? kExitOk : kExitDomainError;
}

int cmd_bench(const Options& o, std::ostream& out, std::ostream& err) {
  BenchConfig config;
  if (!o.config_path.empty()) {
    std::ifstream in(o.config_path);
    if (!in) throw UsageError("cannot open bench config " + o.config_path);
    std::ostringstream text;
    text << in.rdbuf();
    config = parse_bench_config(text.str());
  }
  if (!o.widths.empty()) config.widths = o.widths;
  if (o.iterations != 0) config.iterations = o.iterations;
  if (o.seed != 0) config.seed = o.seed;
  if (!o.algorithms.empty()) config.algorithms = o.algorithms;
  if (!o.operations.empty()) config.operations = o.operations;

  err << bench_banner() << '\n';
  const auto records = bench_suite(config);
  write_csv(out, records);
  for (const auto& r : records) {
    err << "# checksum " << r.operation << ',' << r.algorithm << ',' << r.operand_bits
        << " operands=" << std::hex << r.operand_checksum << " results=" << r.result_checksum
        << std::dec << '\n';
  }
  return kExitOk;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Digit-level Vedic arithmetic and RSA toolkit", "vedic"};
  app.require_subcommand(1);
  Options o;

  const auto add_base = [&o](CLI::App* cmd) {
    cmd->add_option("--base", o.base, "Radix of numeric arguments and results (2, 4, 10, 16, 256)")
        ->capture_default_str();
  };
  const auto add_strategy = [&o](CLI::App* cmd) {
    cmd->add_option("--mul", o.mul, "Multiplier: vedic|shift_add")->capture_default_str();
    cmd->add_option("--div", o.div, "Divider: vedic|restoring|nonrestoring")->capture_default_str();
  };

  auto* mul = app.add_subcommand("mul", "Multiply two numbers");
  mul->add_option("operands", o.operands, "a b")->expected(2)->required();
  mul->add_option("--algo", o.algo, "vedic|shift_add")->capture_default_str();
  add_base(mul);

  auto* div = app.add_subcommand("div", "Divide x by y, printing q=<quotient> r=<remainder>");
  div->add_option("operands", o.operands, "x y")->expected(2)->required();
  div->add_option("--algo", o.algo, "vedic|restoring|nonrestoring")->capture_default_str();
  div->add_flag("--trace", o.trace, "Print the per-digit straight-division trace");
  add_base(div);

  auto* modpow = app.add_subcommand("modpow", "Compute a^b mod n");
  modpow->add_option("operands", o.operands, "a b n")->expected(3)->required();
  modpow->add_flag("--literal", o.literal, "Use the m = 1, square-every-bit loop");
  modpow->add_flag("--trace", o.trace, "Print every square/multiply step");
  add_strategy(modpow);
  add_base(modpow);

  auto* keygen_cmd = app.add_subcommand("keygen", "Generate an RSA key pair and write key files");
  keygen_cmd->add_option("--p", o.p, "First prime");
  keygen_cmd->add_option("--q", o.q, "Second prime");
  keygen_cmd->add_option("--j", o.j, "Public exponent");
  keygen_cmd->add_option("--bits", o.bits, "Modulus size for seeded random generation");
  keygen_cmd->add_option("--seed", o.seed, "Generator seed for --bits");
  keygen_cmd->add_option("--public", o.public_path, "Public key output file")->capture_default_str();
  keygen_cmd->add_option("--private", o.private_path, "Private key output file")->capture_default_str();
  add_base(keygen_cmd);

  CLI::App* crypt_cmds[2];
  for (int i = 0; i < 2; ++i) {
    auto* cmd = app.add_subcommand(i == 0 ? "encrypt" : "decrypt",
                                   i == 0 ? "Encrypt a residue with a public key file"
                                          : "Decrypt a residue with a private key file");
    cmd->add_option("--key", o.key_path, "Key file")->required();
    cmd->add_option("value", o.operands, "Residue (or byte string with --text)")->expected(1)->required();
    cmd->add_flag("--text", o.text, "Treat the message as a big-endian byte string");
    add_strategy(cmd);
    add_base(cmd);
    crypt_cmds[i] = cmd;
  }

  auto* selftest = app.add_subcommand("selftest", "Run the exhaustive small-domain checks");

  auto* bench = app.add_subcommand("bench", "Time the algorithms on paired random operands (CSV)");
  bench->add_option("--config", o.config_path, "JSON bench configuration");
  bench->add_option("--widths", o.widths, "Operand widths in bits")->delimiter(',');
  bench->add_option("--iterations", o.iterations, "Runs per record");
  bench->add_option("--seed", o.seed, "Operand stream seed");
  bench->add_option("--algorithms", o.algorithms, "vedic,shift_add,restoring,nonrestoring")->delimiter(',');
  bench->add_option("--operations", o.operations, "mul,div,modpow,rsa_encrypt")->delimiter(',');

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsageError;
  }

  try {
    if (mul->parsed()) return cmd_mul(o, out);
    if (div->parsed()) return cmd_div(o, out);
    if (modpow->parsed()) return cmd_modpow(o, out);
    if (keygen_cmd->parsed()) return cmd_keygen(o, out);
    if (crypt_cmds[0]->parsed()) return cmd_crypt(o, true, out);
    if (crypt_cmds[1]->parsed()) return cmd_crypt(o, false, out);
    if (selftest->parsed()) return cmd_selftest(out);
    if (bench->parsed()) return cmd_bench(o, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomainError;
  }
  return kExitUsageError;
}

}  // namespace vedic::cli
