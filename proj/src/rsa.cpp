#include "vedic/rsa.hpp"

#include <array>
#include <random>
#include <utility>
#include <vector>

#include "vedic/baseline_arith.hpp"
#include "vedic/errors.hpp"
#include "vedic/vedic_div.hpp"
#include "vedic/vedic_mul.hpp"

namespace vedic {

namespace {

constexpr std::array<std::uint32_t, 12> kWitnesses = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

constexpr std::array<std::uint32_t, 5> kPublicExponents = {3, 5, 17, 257, 65537};

using Lcg = std::linear_congruential_engine<std::uint64_t, 6364136223846793005ULL,
                                            1442695040888963407ULL, 0ULL>;

bool is_prime_u64_trial(std::uint64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint32_t> small_primes() {
  std::vector<std::uint32_t> primes;
  for (std::uint32_t c = 2; c < 1000; ++c) {
    if (is_prime_u64_trial(c)) primes.push_back(c);
  }
  return primes;
}

Natural one(Base base) { return Natural::from_u64(1, base); }

bool miller_rabin(const Natural& n) {
  const Base base = n.base();
  const Natural n_minus_1 = sub(n, one(base));
  Natural d = n_minus_1;
  std::size_t s = 0;
  while (true) {
    auto [half, rem] = divide_small(d, 2);
    if (rem != 0) break;
    d = std::move(half);
    ++s;
  }
  for (std::uint32_t w : kWitnesses) {
    Natural x = mod_pow(Natural::from_u64(w, base), d, n);
    if (x == one(base) || x == n_minus_1) continue;
    bool composite = true;
    for (std::size_t i = 1; i < s; ++i) {
      x = mod_mul(x, x, n);
      if (x == n_minus_1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

SignedNatural make_signed(bool negative, Natural magnitude) {
  if (magnitude.is_zero()) negative = false;
  return {negative, std::move(magnitude)};
}

// a - b over signed naturals.
SignedNatural signed_sub(const SignedNatural& a, const SignedNatural& b) {
  if (a.negative != b.negative) {
    // (+a) - (-b) = a + b; (-a) - (+b) = -(a + b)
    return make_signed(a.negative, add(a.magnitude, b.magnitude));
  }
  if (compare(a.magnitude, b.magnitude) >= 0) {
    return make_signed(a.negative, sub(a.magnitude, b.magnitude));
  }
  return make_signed(!a.negative, sub(b.magnitude, a.magnitude));
}

SignedNatural scale(const SignedNatural& a, const Natural& factor) {
  return make_signed(a.negative, multiply(a.magnitude, factor));
}

std::vector<Digit> random_bit_vector(Lcg& gen, std::size_t count) {
  std::vector<Digit> bits(count, 0);
  std::uint64_t word = 0;
  for (std::size_t i = 0; i < count; ++i) {
    if (i % 32 == 0) word = gen() >> 32;
    bits[i] = static_cast<Digit>(word & 1u);
    word >>= 1;
  }
  return bits;
}

Natural random_bits(Lcg& gen, std::size_t count, Base base) {
  return rebase(Natural(random_bit_vector(gen, count), Base::binary), base);
}

// Odd, with the top two bits set.
Natural random_prime(Lcg& gen, unsigned bits, Base base) {
  while (true) {
    std::vector<Digit> digits = random_bit_vector(gen, bits);
    digits[0] = 1;
    digits[bits - 1] = 1;
    digits[bits - 2] = 1;
    Natural value = rebase(Natural(std::move(digits), Base::binary), base);
    if (is_prime(value)) return value;
  }
}

void require_below_modulus(const Natural& value, const Natural& modulus, const char* what) {
  require_same_base(value, modulus);
  if (compare(value, modulus) >= 0) {
    throw KeyError(std::string(what) + " must be smaller than the modulus");
  }
}

}  // namespace

bool is_prime(const Natural& n) {
  if (n.fits_u64() && n.to_u64() < (std::uint64_t{1} << 32)) {
    return is_prime_u64_trial(n.to_u64());
  }
  static const std::vector<std::uint32_t> primes = small_primes();
  for (std::uint32_t p : primes) {
    if (divide_small(n, p).second == 0) return false;
  }
  return miller_rabin(n);
}

ExtendedGcd extended_gcd(const Natural& a, const Natural& b) {
  require_same_base(a, b);
  if (a.is_zero() && b.is_zero()) throw ArithmeticError("extended_gcd(0, 0) is undefined");
  const Base base = a.base();
  Natural old_r = a;
  Natural r = b;
  SignedNatural old_s{false, one(base)};
  SignedNatural s{false, Natural(base)};
  SignedNatural old_t{false, Natural(base)};
  SignedNatural t{false, one(base)};
  while (!r.is_zero()) {
    DivResult qr = divide(old_r, r);
    old_r = std::exchange(r, std::move(qr.remainder));
    SignedNatural next_s = signed_sub(old_s, scale(s, qr.quotient));
    old_s = std::exchange(s, std::move(next_s));
    SignedNatural next_t = signed_sub(old_t, scale(t, qr.quotient));
    old_t = std::exchange(t, std::move(next_t));
  }
  return {std::move(old_r), std::move(old_s), std::move(old_t)};
}

Natural mod_inverse(const Natural& a, const Natural& m) {
  const ExtendedGcd eg = extended_gcd(a, m);
  if (eg.gcd != one(m.base())) {
    throw KeyError(format(a) + " is not invertible modulo " + format(m));
  }
  const Natural reduced = divide(eg.x.magnitude, m).remainder;
  if (!eg.x.negative || reduced.is_zero()) return reduced;
  return sub(m, reduced);
}

KeyPair keygen(const Natural& p, const Natural& q, const Natural& j) {
  require_same_base(p, q);
  require_same_base(p, j);
  const Base base = p.base();
  if (!is_prime(p)) throw KeyError("p = " + format(p) + " is not prime");
  if (!is_prime(q)) throw KeyError("q = " + format(q) + " is not prime");
  if (p == q) throw KeyError("p and q must be distinct primes");

  const Natural n = multiply(p, q);
  const Natural k = multiply(sub(p, one(base)), sub(q, one(base)));
  if (compare(j, one(base)) <= 0 || compare(j, k) >= 0) {
    throw KeyError("public exponent must satisfy 1 < J < K = " + format(k));
  }
  if (extended_gcd(j, k).gcd != one(base)) {
    throw KeyError("public exponent " + format(j) + " is not coprime to K = " + format(k));
  }
  const Natural i = mod_inverse(j, k);

  if (divide(multiply(j, i), k).remainder != one(base) || compare(i, one(base)) <= 0) {
    throw KeyError("derived private exponent failed verification");
  }
  if (shift_add_multiply(p, q) != n) {
    throw KeyError("modulus verification failed");
  }
  return {{n, j}, {n, i}, p, q, k};
}

KeyPair keygen_random(unsigned bits, std::uint64_t seed, Base base) {
  if (bits < 16 || bits % 2 != 0) {
    throw UsageError("key size must be an even number of bits, at least 16");
  }
  Lcg gen(seed);
  const unsigned half = bits / 2;
  const Natural p = random_prime(gen, half, base);
  Natural q = random_prime(gen, half, base);
  while (q == p) q = random_prime(gen, half, base);

  const Natural k = multiply(sub(p, one(base)), sub(q, one(base)));
  const auto usable = [&](const Natural& j) {
    return compare(j, one(base)) > 0 && compare(j, k) < 0 && extended_gcd(j, k).gcd == one(base);
  };
  for (std::uint32_t candidate : kPublicExponents) {
    const Natural j = Natural::from_u64(candidate, base);
    if (usable(j)) return keygen(p, q, j);
  }
  const std::size_t k_bits = bit_length(k);
  while (true) {
    const Natural j = random_bits(gen, k_bits, base);
    if (usable(j)) return keygen(p, q, j);
  }
}

Natural encrypt(const Natural& message, const RsaPublicKey& key, Strategy strategy) {
  require_below_modulus(message, key.modulus, "message");
  return mod_pow(message, key.exponent, key.modulus, strategy);
}

Natural decrypt(const Natural& cipher, const RsaPrivateKey& key, Strategy strategy) {
  require_below_modulus(cipher, key.modulus, "ciphertext");
  return mod_pow(cipher, key.exponent, key.modulus, strategy);
}

Natural encode_message(std::string_view bytes, Base base) {
  std::vector<Digit> digits(bytes.rbegin(), bytes.rend());
  return rebase(Natural(std::move(digits), Base::byte), base);
}

std::string decode_message(const Natural& value) {
  const Natural bytes = rebase(value, Base::byte);
  return std::string(bytes.digits().rbegin(), bytes.digits().rend());
}

}  // namespace vedic
