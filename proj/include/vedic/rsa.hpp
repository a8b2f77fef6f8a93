#pragma once

// Textbook RSA over digit-level naturals: key generation from two distinct
// primes, L = M^J mod N to encrypt and M = L^I mod N to decrypt. No padding,
// no blocking, no side-channel hardening; messages are single residues.

#include <cstdint>
#include <string>
#include <string_view>

#include "vedic/modexp.hpp"
#include "vedic/numeral.hpp"

namespace vedic {

struct RsaPublicKey {
  Natural modulus;   // N
  Natural exponent;  // J

  friend bool operator==(const RsaPublicKey&, const RsaPublicKey&) = default;
};

struct RsaPrivateKey {
  Natural modulus;   // N
  Natural exponent;  // I

  friend bool operator==(const RsaPrivateKey&, const RsaPrivateKey&) = default;
};

struct KeyPair {
  RsaPublicKey public_key;
  RsaPrivateKey private_key;
  Natural p;
  Natural q;
  Natural totient;  // K = (p-1)(q-1)

  friend bool operator==(const KeyPair&, const KeyPair&) = default;
};

// Exact primality. Trial division below 2^32; above that, small-prime sieving
// followed by Miller-Rabin with the witnesses 2..37, which is deterministic
// for every n below 3.3e24.
bool is_prime(const Natural& n);

struct SignedNatural {
  bool negative = false;
  Natural magnitude;

  friend bool operator==(const SignedNatural&, const SignedNatural&) = default;
};

struct ExtendedGcd {
  Natural gcd;
  SignedNatural x;  // x*a + y*b == gcd
  SignedNatural y;
};

// Throws ArithmeticError when both inputs are zero.
ExtendedGcd extended_gcd(const Natural& a, const Natural& b);

// The inverse of a modulo m in [0, m). Throws KeyError if gcd(a, m) != 1.
Natural mod_inverse(const Natural& a, const Natural& m);

// Validates p, q prime and distinct, 1 < j < K and gcd(j, K) == 1, then
// derives N, K and I. Throws KeyError naming the failed precondition.
KeyPair keygen(const Natural& p, const Natural& q, const Natural& j);

// Draws two bits/2-bit primes (top two bits set, so N has exactly `bits`
// bits) from a 64-bit linear congruential generator
//   x' = 6364136223846793005 * x + 1442695040888963407  (mod 2^64)
// seeded with `seed`, using the high 32 bits of each output. J is the first
// of 3, 5, 17, 257, 65537 that is valid for K, else a random draw.
// bits must be even and at least 16.
KeyPair keygen_random(unsigned bits, std::uint64_t seed, Base base = Base::hex);

// Throw KeyError when the input is not below the modulus.
Natural encrypt(const Natural& message, const RsaPublicKey& key, Strategy strategy = {});
Natural decrypt(const Natural& cipher, const RsaPrivateKey& key, Strategy strategy = {});

// Big-endian byte string <-> natural.
Natural encode_message(std::string_view bytes, Base base = Base::hex);
std::string decode_message(const Natural& value);

}  // namespace vedic
