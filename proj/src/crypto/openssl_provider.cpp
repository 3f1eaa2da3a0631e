#include "secdds/crypto/openssl_provider.hpp"

#include <openssl/evp.h>

#include "backend.hpp"

namespace secdds::crypto {

using namespace backend;

namespace {

constexpr std::size_t kPssEmBits = 2047;  // modulus bits - 1
constexpr std::size_t kPssSaltLen = 32;   // salt length = digest length

const EVP_CIPHER* gcm_cipher(std::size_t key_len) {
  return key_len == 16 ? EVP_aes_128_gcm() : EVP_aes_256_gcm();
}

void check_aead_key(const AeadKey& key) {
  if (key.bytes.size() != key_size(key.kind))
    fail(Errc::malformed_key, "AEAD key length does not match kind");
}

/// Deterministic ECDSA nonce: an HMAC chain over the private scalar and the
/// message digest. Reproducible, and independent of the entropy source.
Bn ecdsa_nonce(ConstSpan scalar, const Digest& z, std::uint32_t attempt) {
  ByteWriter w;
  w.raw(z);
  w.u32be(attempt);
  Digest t = hmac_sha256(scalar, w.bytes());

  auto ctx = ctx_new();
  Bn k = bn_from(t);
  Bn reduced = bn_new();
  BN_mod(reduced.get(), k.get(), p256_order(), ctx.get());
  return reduced;
}

Bytes ecdsa_sign(ConstSpan priv, ConstSpan message) {
  Bn d = parse_scalar(priv, static_cast<std::uint8_t>(SignAlgorithm::ecdsa_p256));
  Digest zd = sha256(message);
  Bn z = bn_from(zd);
  auto ctx = ctx_new();
  const BIGNUM* n = p256_order();

  for (std::uint32_t attempt = 0;; ++attempt) {
    Bn k = ecdsa_nonce(priv.subspan(1), zd, attempt);
    if (BN_is_zero(k.get())) continue;

    Point rp(EC_POINT_new(p256()));
    EC_POINT_mul(p256(), rp.get(), k.get(), nullptr, nullptr, ctx.get());
    Bn x = bn_new(), y = bn_new();
    EC_POINT_get_affine_coordinates(p256(), rp.get(), x.get(), y.get(), ctx.get());

    Bn r = bn_new();
    BN_mod(r.get(), x.get(), n, ctx.get());
    if (BN_is_zero(r.get())) continue;

    // s = k^-1 (z + r d) mod n
    Bn rd = bn_new(), sum = bn_new(), s = bn_new();
    BN_mod_mul(rd.get(), r.get(), d.get(), n, ctx.get());
    BN_mod_add(sum.get(), z.get(), rd.get(), n, ctx.get());
    Bn kinv(BN_mod_inverse(nullptr, k.get(), n, ctx.get()));
    if (!kinv) continue;
    BN_mod_mul(s.get(), kinv.get(), sum.get(), n, ctx.get());
    if (BN_is_zero(s.get())) continue;

    Bytes sig = bn_to(r.get(), 32);
    Bytes sb = bn_to(s.get(), 32);
    sig.insert(sig.end(), sb.begin(), sb.end());
    return sig;
  }
}

bool ecdsa_verify(ConstSpan pub, ConstSpan message, ConstSpan signature) {
  if (signature.size() != 64) return false;
  Point qa = parse_point(pub, static_cast<std::uint8_t>(SignAlgorithm::ecdsa_p256),
                         Errc::malformed_key);
  auto ctx = ctx_new();
  const BIGNUM* n = p256_order();
  Bn r = bn_from(signature.subspan(0, 32));
  Bn s = bn_from(signature.subspan(32, 32));
  if (BN_is_zero(r.get()) || BN_is_zero(s.get())) return false;
  if (BN_cmp(r.get(), n) >= 0 || BN_cmp(s.get(), n) >= 0) return false;

  Digest zd = sha256(message);
  Bn z = bn_from(zd);

  // w = s^-1, u1 = z w, u2 = r w, (x, y) = u1 G + u2 Qa
  Bn w(BN_mod_inverse(nullptr, s.get(), n, ctx.get()));
  if (!w) return false;
  Bn u1 = bn_new(), u2 = bn_new();
  BN_mod_mul(u1.get(), z.get(), w.get(), n, ctx.get());
  BN_mod_mul(u2.get(), r.get(), w.get(), n, ctx.get());

  Point point(EC_POINT_new(p256()));
  if (EC_POINT_mul(p256(), point.get(), u1.get(), qa.get(), u2.get(), ctx.get()) != 1)
    return false;
  if (EC_POINT_is_at_infinity(p256(), point.get())) return false;

  Bn x = bn_new(), y = bn_new();
  EC_POINT_get_affine_coordinates(p256(), point.get(), x.get(), y.get(), ctx.get());
  Bn xr = bn_new();
  BN_mod(xr.get(), x.get(), n, ctx.get());
  return BN_cmp(xr.get(), r.get()) == 0;
}

Bytes rsa_pss_sign(ConstSpan priv, ConstSpan message, RandomSource& rng) {
  RsaPrivate key = parse_rsa_private(priv);
  Bytes salt = rng.bytes(kPssSaltLen);
  Bytes em = pss_encode(sha256(message), salt, kPssEmBits);

  auto ctx = ctx_new();
  Bn m = bn_from(em);
  Bn s = bn_new();
  BN_mod_exp(s.get(), m.get(), key.d.get(), key.n.get(), ctx.get());
  return bn_to(s.get(), kRsaModLen);
}

bool rsa_pss_verify(ConstSpan pub, ConstSpan message, ConstSpan signature) {
  RsaPublic key = parse_rsa_public(pub);
  if (signature.size() != kRsaModLen) return false;
  auto ctx = ctx_new();
  Bn s = bn_from(signature);
  if (BN_cmp(s.get(), key.n.get()) >= 0) return false;
  Bn m = bn_new();
  BN_mod_exp(m.get(), s.get(), key.e.get(), key.n.get(), ctx.get());
  return pss_verify(sha256(message), bn_to(m.get(), kRsaModLen), kPssEmBits);
}

std::string origin_id(ConstSpan public_bytes) {
  Digest d = sha256(public_bytes);
  return to_hex(ConstSpan(d).subspan(0, 4));
}

}  // namespace

OpensslProvider::OpensslProvider(std::shared_ptr<RandomSource> rng)
    : rng_(rng ? std::move(rng) : std::make_shared<OsRandom>()) {}

Bytes OpensslProvider::sign(const SigningKeyPair& key, ConstSpan message) {
  if (key.private_key.empty()) fail(Errc::malformed_key, "private half missing");
  switch (key.algorithm) {
    case SignAlgorithm::ecdsa_p256:
      return ecdsa_sign(key.private_key, message);
    case SignAlgorithm::rsassa_pss_2048:
      return rsa_pss_sign(key.private_key, message, *rng_);
  }
  fail(Errc::unsupported_algorithm, "unknown signing algorithm");
}

bool OpensslProvider::verify(ConstSpan public_key, ConstSpan message,
                             ConstSpan signature) {
  switch (key_tag(public_key)) {
    case static_cast<std::uint8_t>(SignAlgorithm::ecdsa_p256):
      return ecdsa_verify(public_key, message, signature);
    case static_cast<std::uint8_t>(SignAlgorithm::rsassa_pss_2048):
      return rsa_pss_verify(public_key, message, signature);
    default:
      fail(Errc::unsupported_algorithm, "unknown public key tag");
  }
}

SharedSecret OpensslProvider::key_agree(const EphemeralKeyPair& mine,
                                        ConstSpan peer_public) {
  SharedSecret out;
  out.origin = {origin_id(mine.public_key), origin_id(peer_public)};

  if (mine.algorithm == AgreeAlgorithm::ecdh_p256) {
    Bn d = parse_scalar(mine.private_key,
                        static_cast<std::uint8_t>(AgreeAlgorithm::ecdh_p256));
    Point qb = parse_point(peer_public,
                           static_cast<std::uint8_t>(AgreeAlgorithm::ecdh_p256),
                           Errc::invalid_peer_public);
    auto ctx = ctx_new();
    Point shared(EC_POINT_new(p256()));
    if (EC_POINT_mul(p256(), shared.get(), nullptr, qb.get(), d.get(), ctx.get()) != 1 ||
        EC_POINT_is_at_infinity(p256(), shared.get()))
      fail(Errc::invalid_peer_public, "degenerate agreement result");
    Bn x = bn_new(), y = bn_new();
    EC_POINT_get_affine_coordinates(p256(), shared.get(), x.get(), y.get(), ctx.get());
    // the raw x coordinate is hashed before use
    out.bytes = sha256(bn_to(x.get(), 32));
    return out;
  }

  if (mine.algorithm != AgreeAlgorithm::dh_2048_modp)
    fail(Errc::unsupported_algorithm, "unknown agreement algorithm");
  if (peer_public.empty() ||
      peer_public[0] != static_cast<std::uint8_t>(AgreeAlgorithm::dh_2048_modp) ||
      peer_public.size() != 1 + kDhElemLen)
    fail(Errc::invalid_peer_public, "bad MODP element encoding");

  auto ctx = ctx_new();
  const BIGNUM* p = modp2048();
  Bn y = bn_from(peer_public.subspan(1));
  Bn pm1 = bn_new();
  BN_sub(pm1.get(), p, BN_value_one());
  Bn two = bn_new();
  BN_set_word(two.get(), 2);
  if (BN_cmp(y.get(), two.get()) < 0 || BN_cmp(y.get(), pm1.get()) >= 0)
    fail(Errc::invalid_peer_public, "element outside [2, p-2]");

  if (mine.private_key.size() != 33 ||
      mine.private_key[0] != static_cast<std::uint8_t>(AgreeAlgorithm::dh_2048_modp))
    fail(Errc::malformed_key, "bad MODP private key");
  Bn x = bn_from(ConstSpan(mine.private_key).subspan(1));
  Bn shared = bn_new();
  BN_mod_exp(shared.get(), y.get(), x.get(), p, ctx.get());
  out.bytes = sha256(bn_to(shared.get(), kDhElemLen));
  return out;
}

AeadResult OpensslProvider::aead_encrypt(const AeadKey& key, const Nonce& nonce,
                                         ConstSpan aad, ConstSpan plaintext) {
  if (!is_gcm(key.kind))
    fail(Errc::wrong_kind, "aead_encrypt needs a GCM transformation kind");
  check_aead_key(key);

  EVP_CIPHER_CTX* c = EVP_CIPHER_CTX_new();
  EVP_EncryptInit_ex(c, gcm_cipher(key.bytes.size()), nullptr, key.bytes.data(),
                     nonce.data());
  int len = 0;
  if (!aad.empty()) EVP_EncryptUpdate(c, nullptr, &len, aad.data(),
                                      static_cast<int>(aad.size()));
  AeadResult out;
  out.ciphertext.resize(plaintext.size());
  if (!plaintext.empty())
    EVP_EncryptUpdate(c, out.ciphertext.data(), &len, plaintext.data(),
                      static_cast<int>(plaintext.size()));
  int fin = 0;
  EVP_EncryptFinal_ex(c, out.ciphertext.data() + out.ciphertext.size(), &fin);
  EVP_CIPHER_CTX_ctrl(c, EVP_CTRL_GCM_GET_TAG, 16, out.tag.data());
  EVP_CIPHER_CTX_free(c);
  return out;
}

Bytes OpensslProvider::aead_decrypt(const AeadKey& key, const Nonce& nonce,
                                    ConstSpan aad, ConstSpan ciphertext,
                                    const Tag& tag) {
  if (!is_gcm(key.kind))
    fail(Errc::wrong_kind, "aead_decrypt needs a GCM transformation kind");
  check_aead_key(key);

  EVP_CIPHER_CTX* c = EVP_CIPHER_CTX_new();
  EVP_DecryptInit_ex(c, gcm_cipher(key.bytes.size()), nullptr, key.bytes.data(),
                     nonce.data());
  int len = 0;
  if (!aad.empty()) EVP_DecryptUpdate(c, nullptr, &len, aad.data(),
                                      static_cast<int>(aad.size()));
  Bytes plaintext(ciphertext.size());
  if (!ciphertext.empty())
    EVP_DecryptUpdate(c, plaintext.data(), &len, ciphertext.data(),
                      static_cast<int>(ciphertext.size()));
  EVP_CIPHER_CTX_ctrl(c, EVP_CTRL_GCM_SET_TAG, 16,
                      const_cast<std::uint8_t*>(tag.data()));
  int fin = 0;
  int ok = EVP_DecryptFinal_ex(c, plaintext.data() + plaintext.size(), &fin);
  EVP_CIPHER_CTX_free(c);
  if (ok != 1)
    fail(Errc::authentication_failed, "tag does not authenticate the input");
  return plaintext;
}

Tag OpensslProvider::gmac(const AeadKey& key, const Nonce& nonce, ConstSpan aad) {
  if (!is_gmac(key.kind))
    fail(Errc::wrong_kind, "gmac needs a GMAC transformation kind");
  check_aead_key(key);

  EVP_CIPHER_CTX* c = EVP_CIPHER_CTX_new();
  EVP_EncryptInit_ex(c, gcm_cipher(key.bytes.size()), nullptr, key.bytes.data(),
                     nonce.data());
  int len = 0;
  if (!aad.empty()) EVP_EncryptUpdate(c, nullptr, &len, aad.data(),
                                      static_cast<int>(aad.size()));
  std::uint8_t dummy[1];
  int fin = 0;
  EVP_EncryptFinal_ex(c, dummy, &fin);
  Tag tag{};
  EVP_CIPHER_CTX_ctrl(c, EVP_CTRL_GCM_GET_TAG, 16, tag.data());
  EVP_CIPHER_CTX_free(c);
  return tag;
}

Digest OpensslProvider::digest(ConstSpan message) { return sha256(message); }

Digest OpensslProvider::mac(ConstSpan key, ConstSpan message) {
  if (key.empty()) fail(Errc::empty_key, "HMAC key must be non-empty");
  return hmac_sha256(key, message);
}

}  // namespace secdds::crypto
