#pragma once

#include <string>

#include "secdds/bytes.hpp"

namespace secdds {

/// Privacy-enhanced-mail framing: base64 body between BEGIN/END lines.
std::string pem_encode(const std::string& label, ConstSpan der);

struct PemBlock {
  std::string label;
  Bytes der;
};

/// Decodes the first PEM block in `text`. Throws Error(malformed_pem) when
/// there is no block or the base64 is damaged. When `expected_label` is
/// non-empty the block's label must match.
PemBlock pem_decode(std::string_view text, std::string_view expected_label = {});

}  // namespace secdds
