#include "vedic/key_file.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "vedic/errors.hpp"

namespace vedic {

namespace {

std::string render(const Natural& modulus, const Natural& exponent, std::string_view kind) {
  std::ostringstream out;
  out << "base=16\n"
      << "n=" << format(rebase(modulus, Base::hex)) << '\n'
      << "exp=" << format(rebase(exponent, Base::hex)) << '\n'
      << "kind=" << kind << '\n';
  return out.str();
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  return s;
}

}  // namespace

RsaPublicKey KeyFile::as_public() const {
  if (kind != KeyKind::public_key) throw KeyFormatError("expected a public key file");
  return {modulus, exponent};
}

RsaPrivateKey KeyFile::as_private() const {
  if (kind != KeyKind::private_key) throw KeyFormatError("expected a private key file");
  return {modulus, exponent};
}

std::string write_key_file(const RsaPublicKey& key) {
  return render(key.modulus, key.exponent, "public");
}

std::string write_key_file(const RsaPrivateKey& key) {
  return render(key.modulus, key.exponent, "private");
}

KeyFile read_key_file(std::string_view text) {
  std::map<std::string, std::string, std::less<>> items;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const std::size_t eol = text.find('\n');
    const std::string_view raw = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty()) continue;

    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw KeyFormatError("line " + std::to_string(line_no) + ": expected name=value");
    }
    const std::string name(trim(line.substr(0, eq)));
    if (name != "base" && name != "n" && name != "exp" && name != "kind") {
      throw KeyFormatError("line " + std::to_string(line_no) + ": unknown item '" + name + "'");
    }
    if (!items.emplace(name, std::string(trim(line.substr(eq + 1)))).second) {
      throw KeyFormatError("line " + std::to_string(line_no) + ": duplicate item '" + name + "'");
    }
  }
  for (const char* required : {"base", "n", "exp", "kind"}) {
    if (!items.contains(required)) {
      throw KeyFormatError(std::string("missing item '") + required + "'");
    }
  }

  KeyFile key;
  const std::string& kind = items["kind"];
  if (kind == "public") {
    key.kind = KeyKind::public_key;
  } else if (kind == "private") {
    key.kind = KeyKind::private_key;
  } else {
    throw KeyFormatError("kind must be public or private, got '" + kind + "'");
  }
  const std::string& base_text = items["base"];
  std::uint32_t radix_value = 0;
  const auto [end, ec] =
      std::from_chars(base_text.data(), base_text.data() + base_text.size(), radix_value);
  if (ec != std::errc{} || end != base_text.data() + base_text.size()) {
    throw KeyFormatError("malformed base '" + base_text + "'");
  }
  try {
    const Base base = base_from_radix(radix_value);
    key.modulus = parse(items["n"], base);
    key.exponent = parse(items["exp"], base);
  } catch (const std::logic_error& e) {
    throw KeyFormatError(std::string("malformed key value: ") + e.what());
  }
  return key;
}

KeyFile load_key_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw KeyFormatError("cannot open key file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return read_key_file(buffer.str());
}

void save_text_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw KeyFormatError("cannot write " + path.string());
  out << contents;
  if (!out) throw KeyFormatError("failed writing " + path.string());
}

}  // namespace vedic
