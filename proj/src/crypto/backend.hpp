// Internal OpenSSL plumbing shared by keys.cpp and openssl_provider.cpp.
// Key encodings are self-describing: one algorithm tag byte followed by the
// canonical fields. Not installed.
#pragma once

#include <openssl/bn.h>
#include <openssl/ec.h>
#include <openssl/objects.h>

#include <memory>

#include "secdds/bytes.hpp"
#include "secdds/crypto/provider.hpp"
#include "secdds/errors.hpp"

namespace secdds::crypto::backend {

struct BnFree {
  void operator()(BIGNUM* b) const { BN_clear_free(b); }
};
struct BnCtxFree {
  void operator()(BN_CTX* c) const { BN_CTX_free(c); }
};
struct PointFree {
  void operator()(EC_POINT* p) const { EC_POINT_free(p); }
};

using Bn = std::unique_ptr<BIGNUM, BnFree>;
using BnCtx = std::unique_ptr<BN_CTX, BnCtxFree>;
using Point = std::unique_ptr<EC_POINT, PointFree>;

inline Bn bn_new() { return Bn(BN_new()); }
inline BnCtx ctx_new() { return BnCtx(BN_CTX_new()); }

inline Bn bn_from(ConstSpan b) {
  return Bn(BN_bin2bn(b.data(), static_cast<int>(b.size()), nullptr));
}

inline Bytes bn_to(const BIGNUM* v, std::size_t width) {
  Bytes out(width);
  if (BN_bn2binpad(v, out.data(), static_cast<int>(width)) < 0)
    fail(Errc::malformed_key, "value wider than field");
  return out;
}

/// prime256v1; shared instance, never freed.
const EC_GROUP* p256();
/// Group order of p256.
const BIGNUM* p256_order();
/// RFC 3526 2048-bit MODP prime; generator is 2.
const BIGNUM* modp2048();

constexpr std::size_t kEcPointLen = 65;   // uncompressed SEC1
constexpr std::size_t kEcScalarLen = 32;
constexpr std::size_t kRsaModLen = 256;   // 2048-bit modulus
constexpr std::size_t kDhElemLen = 256;

// ---- tagged encodings ------------------------------------------------

Bytes encode_ec_public(SignAlgorithm tag_space, const EC_POINT* q);
Bytes encode_agree_public(AgreeAlgorithm alg, ConstSpan payload);

struct RsaPrivate {
  Bn n, e, d;
};
struct RsaPublic {
  Bn n, e;
};

Bytes encode_rsa_private(const BIGNUM* n, const BIGNUM* e, const BIGNUM* d);
Bytes encode_rsa_public(const BIGNUM* n, const BIGNUM* e);
RsaPrivate parse_rsa_private(ConstSpan key);
RsaPublic parse_rsa_public(ConstSpan key);

/// Tag-checked parse of an EC scalar private key (sign or agree spaces).
Bn parse_scalar(ConstSpan key, std::uint8_t expected_tag);
/// Parses an uncompressed point after the tag byte; must lie on the curve.
Point parse_point(ConstSpan encoded, std::uint8_t expected_tag, Errc on_bad);

inline std::uint8_t key_tag(ConstSpan key) {
  if (key.empty()) fail(Errc::malformed_key, "empty key bytes");
  return key[0];
}

// ---- EMSA-PSS (salt length = digest length, SHA-256, MGF1-SHA-256) ----

Bytes mgf1_sha256(ConstSpan seed, std::size_t len);
Bytes pss_encode(const Digest& m_hash, ConstSpan salt, std::size_t em_bits);
bool pss_verify(const Digest& m_hash, ConstSpan em, std::size_t em_bits);

}  // namespace secdds::crypto::backend
