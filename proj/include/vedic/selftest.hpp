#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace vedic {

struct SelftestSuite {
  std::string name;
  std::size_t passed = 0;
  std::size_t failed = 0;

  bool ok() const noexcept { return failed == 0 && passed > 0; }
};

// Exhaustive small-domain checks against native machine arithmetic:
//   - vedic and shift-add multiply on every pair of values below 256 (base 16)
//   - vedic, restoring and non-restoring divide for dividends below 2^12 and
//     divisors 1..64 (base 16)
//   - the 35001 / 77 base-10 step trace
//   - RSA round trip for every message under the (61, 53, 17) key
std::vector<SelftestSuite> run_selftest();

}  // namespace vedic
