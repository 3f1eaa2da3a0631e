#include "secdds/pem.hpp"

#include <openssl/evp.h>

#include "secdds/errors.hpp"

namespace secdds {

std::string pem_encode(const std::string& label, ConstSpan der) {
  Bytes b64(((der.size() + 2) / 3) * 4 + 1);
  int n = EVP_EncodeBlock(b64.data(), der.data(), static_cast<int>(der.size()));
  std::string body(reinterpret_cast<const char*>(b64.data()),
                   static_cast<std::size_t>(n));

  std::string out = "-----BEGIN " + label + "-----\n";
  for (std::size_t i = 0; i < body.size(); i += 64) {
    out += body.substr(i, 64);
    out += '\n';
  }
  out += "-----END " + label + "-----\n";
  return out;
}

PemBlock pem_decode(std::string_view text, std::string_view expected_label) {
  auto begin_pos = text.find("-----BEGIN ");
  if (begin_pos == std::string_view::npos)
    fail(Errc::malformed_pem, "no BEGIN marker");
  auto label_start = begin_pos + 11;
  auto label_end = text.find("-----", label_start);
  if (label_end == std::string_view::npos)
    fail(Errc::malformed_pem, "unterminated BEGIN line");
  std::string label(text.substr(label_start, label_end - label_start));

  std::string end_marker = "-----END " + label + "-----";
  auto body_start = label_end + 5;
  auto end_pos = text.find(end_marker, body_start);
  if (end_pos == std::string_view::npos)
    fail(Errc::malformed_pem, "missing END marker for " + label);

  if (!expected_label.empty() && label != expected_label)
    fail(Errc::malformed_pem,
         "expected " + std::string(expected_label) + ", found " + label);

  std::string body;
  std::size_t padding = 0;
  for (char c : text.substr(body_start, end_pos - body_start)) {
    if (c == '\n' || c == '\r' || c == ' ' || c == '\t') continue;
    if (c == '=') ++padding;
    body.push_back(c);
  }
  if (body.size() % 4 != 0) fail(Errc::malformed_pem, "bad base64 length");

  Bytes der((body.size() / 4) * 3 + 3);
  int n = EVP_DecodeBlock(der.data(),
                          reinterpret_cast<const unsigned char*>(body.data()),
                          static_cast<int>(body.size()));
  if (n < 0) fail(Errc::malformed_pem, "bad base64 in " + label);
  der.resize(static_cast<std::size_t>(n) - padding);
  return {label, std::move(der)};
}

}  // namespace secdds
