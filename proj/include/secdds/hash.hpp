#pragma once

#include "secdds/bytes.hpp"

namespace secdds {

using Digest = std::array<std::uint8_t, 32>;

Digest sha256(ConstSpan msg);
Digest hmac_sha256(ConstSpan key, ConstSpan msg);

Digest sha256_file(const std::string& path);  // Error(file_not_found)

}  // namespace secdds
