#pragma once

// Text key files, one `name=value` item per line:
//
//   base=16
//   n=ca1
//   exp=11
//   kind=public
//
// Numbers are written in the declared base. Blank lines are ignored; unknown,
// duplicate or missing items are rejected with KeyFormatError.

#include <filesystem>
#include <string>
#include <string_view>

#include "vedic/rsa.hpp"

namespace vedic {

enum class KeyKind { public_key, private_key };

struct KeyFile {
  KeyKind kind = KeyKind::public_key;
  Natural modulus;
  Natural exponent;

  // Throw KeyFormatError when the kind does not match.
  RsaPublicKey as_public() const;
  RsaPrivateKey as_private() const;
};

std::string write_key_file(const RsaPublicKey& key);
std::string write_key_file(const RsaPrivateKey& key);

KeyFile read_key_file(std::string_view text);

KeyFile load_key_file(const std::filesystem::path& path);
void save_text_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace vedic
