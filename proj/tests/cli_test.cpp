#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>
#include <vector>

#include "vedic/cli.hpp"

namespace vedic::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, DivideTwoDigitExample) {
  const Result r = call({"div", "35001", "77", "--base", "10", "--algo", "vedic"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "q=454 r=43\n");
  for (const char* algo : {"restoring", "nonrestoring"}) {
    EXPECT_EQ(call({"div", "35001", "77", "--algo", algo}).out, "q=454 r=43\n");
  }
}

TEST(Cli, DivideTrace) {
  const Result r = call({"div", "35001", "77", "--trace"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("K=35 q_est=5 q=4 r=7 adjust=1 next=42"), std::string::npos);
  EXPECT_EQ(call({"div", "35001", "77", "--trace", "--algo", "restoring"}).code, kExitUsageError);
}

TEST(Cli, Multiply) {
  EXPECT_EQ(call({"mul", "ffff", "ffff", "--base", "16"}).out, "fffe0001\n");
  EXPECT_EQ(call({"mul", "454", "77", "--algo", "shift_add"}).out, "34958\n");
}

TEST(Cli, ModPow) {
  EXPECT_EQ(call({"modpow", "7", "10", "11"}).out, "1\n");
  EXPECT_EQ(call({"modpow", "65", "17", "3233", "--mul", "shift_add", "--div", "nonrestoring"}).out,
            "2790\n");
  const Result t = call({"modpow", "65", "17", "3233", "--literal", "--trace"});
  EXPECT_NE(t.out.find("result=2790 squarings=5 multiplications=2"), std::string::npos);
}

TEST(Cli, KeygenEncryptDecrypt) {
  const auto dir = std::filesystem::temp_directory_path() / "vedic_cli_test";
  std::filesystem::create_directories(dir);
  const std::string pub = (dir / "k.pub").string();
  const std::string priv = (dir / "k.key").string();

  const Result k = call({"keygen", "--p", "61", "--q", "53", "--j", "17", "--public", pub,
                         "--private", priv});
  EXPECT_EQ(k.code, kExitOk);
  EXPECT_EQ(k.out, "n=3233\nk=3120\nj=17\ni=2753\n");

  EXPECT_EQ(call({"encrypt", "--key", pub, "65"}).out, "2790\n");
  EXPECT_EQ(call({"decrypt", "--key", priv, "2790"}).out, "65\n");
  EXPECT_EQ(call({"encrypt", "--key", pub, "41", "--base", "16"}).out, "ae6\n");
  EXPECT_EQ(call({"encrypt", "--key", pub, "4000"}).code, kExitDomainError);
  EXPECT_EQ(call({"decrypt", "--key", pub, "2790"}).code, kExitDomainError);

  const Result s = call({"keygen", "--bits", "32", "--seed", "5", "--public", pub, "--private",
                         priv});
  EXPECT_EQ(s.code, kExitOk);
  const Result c = call({"encrypt", "--key", pub, "--text", "Hi"});
  ASSERT_EQ(c.code, kExitOk);
  std::string cipher = c.out;
  cipher.pop_back();
  EXPECT_EQ(call({"decrypt", "--key", priv, "--text", cipher}).out, "Hi\n");

  std::filesystem::remove_all(dir);
}

TEST(Cli, KeygenErrors) {
  EXPECT_EQ(call({"keygen", "--p", "61", "--q", "61", "--j", "17", "--public", "/nonexistent/x",
                  "--private", "/nonexistent/y"})
                .code,
            kExitDomainError);
  EXPECT_EQ(call({"keygen", "--p", "61"}).code, kExitUsageError);
}

TEST(Cli, ErrorsAndExitCodes) {
  EXPECT_EQ(call({"div", "12z", "7"}).code, kExitUsageError);
  EXPECT_EQ(call({"div", "12", "0"}).code, kExitDomainError);
  EXPECT_EQ(call({"div", "12", "7", "--base", "8"}).code, kExitUsageError);
  EXPECT_EQ(call({"mul", "1"}).code, kExitUsageError);
  EXPECT_EQ(call({"frobnicate"}).code, kExitUsageError);
  EXPECT_EQ(call({}).code, kExitUsageError);
  EXPECT_EQ(call({"modpow", "3", "3", "1"}).code, kExitDomainError);
  EXPECT_EQ(call({"encrypt", "--key", "/nonexistent/key", "1"}).code, kExitDomainError);
  EXPECT_EQ(call({"--help"}).code, kExitOk);
}

TEST(Cli, BenchWritesCsv) {
  const Result r = call({"bench", "--widths", "16,32", "--iterations", "2", "--algorithms",
                         "vedic,restoring", "--operations", "div"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')),
            "operation,algorithm,bits,iterations,total_ns,ns_per_op");
  std::istringstream lines(r.out);
  std::string line;
  int rows = 0;
  while (std::getline(lines, line)) ++rows;
  EXPECT_EQ(rows, 1 + 4);
  EXPECT_NE(r.err.find("# checksum"), std::string::npos);
  EXPECT_EQ(call({"bench", "--widths", "10"}).code, kExitUsageError);
}

}  // namespace
}  // namespace vedic::cli
