#include "secdds/crypto/keys.hpp"

#include <openssl/evp.h>

#include "backend.hpp"
#include "secdds/pem.hpp"

namespace secdds::crypto {

using namespace backend;

namespace {

constexpr const char* kPlainLabel = "SECDDS PRIVATE KEY";
constexpr const char* kEncryptedLabel = "SECDDS ENCRYPTED PRIVATE KEY";

Bn random_scalar_mod(const BIGNUM* order, RandomSource& rng) {
  auto ctx = ctx_new();
  for (;;) {
    Bytes raw = rng.bytes(kEcScalarLen);
    Bn d = bn_from(raw);
    Bn reduced = bn_new();
    BN_mod(reduced.get(), d.get(), order, ctx.get());
    if (!BN_is_zero(reduced.get())) return reduced;
  }
}

Bn random_prime_1024(RandomSource& rng, BN_CTX* ctx, const BIGNUM* e) {
  for (;;) {
    Bytes cand = rng.bytes(128);
    cand[0] |= 0xc0;   // keep the product at full 2048 bits
    cand[127] |= 0x01;
    Bn p = bn_from(cand);
    if (BN_check_prime(p.get(), ctx, nullptr) != 1) continue;
    Bn pm1 = bn_new(), g = bn_new();
    BN_sub(pm1.get(), p.get(), BN_value_one());
    BN_gcd(g.get(), pm1.get(), e, ctx);
    if (BN_is_one(g.get())) return p;
  }
}

SigningKeyPair generate_rsa(RandomSource& rng) {
  auto ctx = ctx_new();
  Bn e = bn_new();
  BN_set_word(e.get(), 65537);
  Bn p = random_prime_1024(rng, ctx.get(), e.get());
  Bn q = random_prime_1024(rng, ctx.get(), e.get());

  Bn n = bn_new();
  BN_mul(n.get(), p.get(), q.get(), ctx.get());

  Bn pm1 = bn_new(), qm1 = bn_new(), phi = bn_new(), g = bn_new(), lambda = bn_new();
  BN_sub(pm1.get(), p.get(), BN_value_one());
  BN_sub(qm1.get(), q.get(), BN_value_one());
  BN_mul(phi.get(), pm1.get(), qm1.get(), ctx.get());
  BN_gcd(g.get(), pm1.get(), qm1.get(), ctx.get());
  BN_div(lambda.get(), nullptr, phi.get(), g.get(), ctx.get());

  Bn d(BN_mod_inverse(nullptr, e.get(), lambda.get(), ctx.get()));
  if (!d) fail(Errc::malformed_key, "no modular inverse for chosen primes");

  return {SignAlgorithm::rsassa_pss_2048,
          encode_rsa_private(n.get(), e.get(), d.get()),
          encode_rsa_public(n.get(), e.get())};
}

SigningKeyPair generate_ecdsa(RandomSource& rng) {
  Bn d = random_scalar_mod(p256_order(), rng);
  auto ctx = ctx_new();
  Point q(EC_POINT_new(p256()));
  EC_POINT_mul(p256(), q.get(), d.get(), nullptr, nullptr, ctx.get());

  Bytes priv;
  priv.push_back(static_cast<std::uint8_t>(SignAlgorithm::ecdsa_p256));
  Bytes scalar = bn_to(d.get(), kEcScalarLen);
  priv.insert(priv.end(), scalar.begin(), scalar.end());
  return {SignAlgorithm::ecdsa_p256, std::move(priv),
          encode_ec_public(SignAlgorithm::ecdsa_p256, q.get())};
}

Bytes derive_wrap_key(std::string_view passphrase, ConstSpan salt) {
  Bytes key(32);
  PKCS5_PBKDF2_HMAC(passphrase.data(), static_cast<int>(passphrase.size()),
                    salt.data(), static_cast<int>(salt.size()), 10000,
                    EVP_sha256(), 32, key.data());
  return key;
}

Bytes gcm_wrap(ConstSpan key, ConstSpan nonce, ConstSpan plaintext, Bytes& tag_out) {
  EVP_CIPHER_CTX* c = EVP_CIPHER_CTX_new();
  EVP_EncryptInit_ex(c, EVP_aes_256_gcm(), nullptr, key.data(), nonce.data());
  Bytes ct(plaintext.size());
  int len = 0;
  EVP_EncryptUpdate(c, ct.data(), &len, plaintext.data(),
                    static_cast<int>(plaintext.size()));
  int fin = 0;
  EVP_EncryptFinal_ex(c, ct.data() + len, &fin);
  tag_out.resize(16);
  EVP_CIPHER_CTX_ctrl(c, EVP_CTRL_GCM_GET_TAG, 16, tag_out.data());
  EVP_CIPHER_CTX_free(c);
  return ct;
}

Bytes gcm_unwrap(ConstSpan key, ConstSpan nonce, ConstSpan ct, ConstSpan tag) {
  EVP_CIPHER_CTX* c = EVP_CIPHER_CTX_new();
  EVP_DecryptInit_ex(c, EVP_aes_256_gcm(), nullptr, key.data(), nonce.data());
  Bytes pt(ct.size());
  int len = 0;
  EVP_DecryptUpdate(c, pt.data(), &len, ct.data(), static_cast<int>(ct.size()));
  EVP_CIPHER_CTX_ctrl(c, EVP_CTRL_GCM_SET_TAG, static_cast<int>(tag.size()),
                      const_cast<std::uint8_t*>(tag.data()));
  int fin = 0;
  int ok = EVP_DecryptFinal_ex(c, pt.data() + len, &fin);
  EVP_CIPHER_CTX_free(c);
  if (ok != 1) fail(Errc::malformed_pem, "wrong passphrase or damaged key file");
  return pt;
}

SigningKeyPair keypair_from_private(ConstSpan priv) {
  switch (key_tag(priv)) {
    case static_cast<std::uint8_t>(SignAlgorithm::ecdsa_p256): {
      Bn d = parse_scalar(priv, static_cast<std::uint8_t>(SignAlgorithm::ecdsa_p256));
      auto ctx = ctx_new();
      Point q(EC_POINT_new(p256()));
      EC_POINT_mul(p256(), q.get(), d.get(), nullptr, nullptr, ctx.get());
      return {SignAlgorithm::ecdsa_p256, Bytes(priv.begin(), priv.end()),
              encode_ec_public(SignAlgorithm::ecdsa_p256, q.get())};
    }
    case static_cast<std::uint8_t>(SignAlgorithm::rsassa_pss_2048): {
      RsaPrivate k = parse_rsa_private(priv);
      return {SignAlgorithm::rsassa_pss_2048, Bytes(priv.begin(), priv.end()),
              encode_rsa_public(k.n.get(), k.e.get())};
    }
    default:
      fail(Errc::unsupported_algorithm, "unknown private key tag");
  }
}

}  // namespace

SigningKeyPair generate_signing_keypair(SignAlgorithm alg, RandomSource& rng) {
  switch (alg) {
    case SignAlgorithm::ecdsa_p256: return generate_ecdsa(rng);
    case SignAlgorithm::rsassa_pss_2048: return generate_rsa(rng);
  }
  fail(Errc::unsupported_algorithm, "unknown signing algorithm");
}

EphemeralKeyPair generate_ephemeral_keypair(AgreeAlgorithm alg, RandomSource& rng) {
  if (alg == AgreeAlgorithm::ecdh_p256) {
    Bn d = random_scalar_mod(p256_order(), rng);
    auto ctx = ctx_new();
    Point q(EC_POINT_new(p256()));
    EC_POINT_mul(p256(), q.get(), d.get(), nullptr, nullptr, ctx.get());

    Bytes priv;
    priv.push_back(static_cast<std::uint8_t>(AgreeAlgorithm::ecdh_p256));
    Bytes scalar = bn_to(d.get(), kEcScalarLen);
    priv.insert(priv.end(), scalar.begin(), scalar.end());

    Bytes point(kEcPointLen);
    EC_POINT_point2oct(p256(), q.get(), POINT_CONVERSION_UNCOMPRESSED, point.data(),
                       point.size(), ctx.get());
    return {AgreeAlgorithm::ecdh_p256, std::move(priv),
            encode_agree_public(AgreeAlgorithm::ecdh_p256, point)};
  }

  // 2048-bit MODP group, generator 2, 256-bit exponent
  auto ctx = ctx_new();
  Bytes raw = rng.bytes(32);
  raw[0] |= 0x40;  // keep the exponent well away from trivial values
  Bn x = bn_from(raw);
  Bn g = bn_new(), y = bn_new();
  BN_set_word(g.get(), 2);
  BN_mod_exp(y.get(), g.get(), x.get(), modp2048(), ctx.get());

  Bytes priv;
  priv.push_back(static_cast<std::uint8_t>(AgreeAlgorithm::dh_2048_modp));
  Bytes xb = bn_to(x.get(), 32);
  priv.insert(priv.end(), xb.begin(), xb.end());
  return {AgreeAlgorithm::dh_2048_modp, std::move(priv),
          encode_agree_public(AgreeAlgorithm::dh_2048_modp, bn_to(y.get(), kDhElemLen))};
}

std::string signing_key_to_pem(const SigningKeyPair& kp, std::string_view passphrase,
                               RandomSource* rng) {
  if (passphrase.empty()) return pem_encode(kPlainLabel, kp.private_key);

  OsRandom fallback;
  RandomSource& r = rng ? *rng : fallback;
  Bytes salt = r.bytes(16);
  Bytes nonce = r.bytes(12);
  Bytes wrap_key = derive_wrap_key(passphrase, salt);
  Bytes tag;
  Bytes ct = gcm_wrap(wrap_key, nonce, kp.private_key, tag);

  ByteWriter w;
  w.raw(salt);
  w.raw(nonce);
  w.field(ct);
  w.raw(tag);
  return pem_encode(kEncryptedLabel, w.bytes());
}

SigningKeyPair signing_key_from_pem(std::string_view pem, std::string_view passphrase) {
  PemBlock block = pem_decode(pem);
  if (block.label == kPlainLabel) return keypair_from_private(block.der);
  if (block.label != kEncryptedLabel)
    fail(Errc::malformed_pem, "not a private key file: " + block.label);

  if (passphrase.empty())
    fail(Errc::malformed_pem, "key file is passphrase-protected");
  ByteReader rd(block.der);
  Bytes salt = rd.raw(16);
  Bytes nonce = rd.raw(12);
  Bytes ct = rd.field();
  Bytes tag = rd.raw(16);
  Bytes wrap_key = derive_wrap_key(passphrase, salt);
  return keypair_from_private(gcm_unwrap(wrap_key, nonce, ct, tag));
}

SignAlgorithm public_key_algorithm(ConstSpan public_key) {
  switch (key_tag(public_key)) {
    case static_cast<std::uint8_t>(SignAlgorithm::ecdsa_p256):
      return SignAlgorithm::ecdsa_p256;
    case static_cast<std::uint8_t>(SignAlgorithm::rsassa_pss_2048):
      return SignAlgorithm::rsassa_pss_2048;
    default:
      fail(Errc::unsupported_algorithm, "unknown public key tag");
  }
}

}  // namespace secdds::crypto
