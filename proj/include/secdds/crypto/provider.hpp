#pragma once

#include <array>
#include <string>
#include <utility>

#include "secdds/bytes.hpp"
#include "secdds/hash.hpp"

namespace secdds::crypto {

enum class SignAlgorithm : std::uint8_t {
  rsassa_pss_2048 = 0x01,
  ecdsa_p256 = 0x02,
};

enum class AgreeAlgorithm : std::uint8_t {
  dh_2048_modp = 0x11,
  ecdh_p256 = 0x12,
};

/// The five transformation kinds from the builtin mapping table. The 4-byte
/// wire values live in codec/builtin.hpp.
enum class TransformationKind : std::uint8_t {
  none = 0,
  aes128_gmac = 1,
  aes128_gcm = 2,
  aes256_gmac = 3,
  aes256_gcm = 4,
};

constexpr bool is_gcm(TransformationKind k) {
  return k == TransformationKind::aes128_gcm || k == TransformationKind::aes256_gcm;
}
constexpr bool is_gmac(TransformationKind k) {
  return k == TransformationKind::aes128_gmac || k == TransformationKind::aes256_gmac;
}
constexpr std::size_t key_size(TransformationKind k) {
  return (k == TransformationKind::aes128_gcm || k == TransformationKind::aes128_gmac) ? 16 : 32;
}

/// Long-term signing identity. Key bytes are self-describing: the first byte
/// is the algorithm tag, so a public key travelling inside a certificate or
/// token can be verified without side information.
struct SigningKeyPair {
  SignAlgorithm algorithm;
  Bytes private_key;  // tag || scalar (ECDSA) or tag || n,e,d fields (RSA)
  Bytes public_key;   // tag || uncompressed point, or tag || n,e fields
};

/// Session-only agreement keypair; the honest stack never persists these and
/// erases the private half once key material is derived.
struct EphemeralKeyPair {
  AgreeAlgorithm algorithm;
  Bytes private_key;
  Bytes public_key;

  void wipe_private() {
    std::fill(private_key.begin(), private_key.end(), 0);
    private_key.clear();
  }
};

struct SharedSecret {
  std::array<std::uint8_t, 32> bytes{};
  /// Short identifiers of the two public halves that produced the secret.
  std::pair<std::string, std::string> origin;
};

struct AeadKey {
  Bytes bytes;  // 16 for the AES128 kinds, 32 for AES256
  TransformationKind kind = TransformationKind::none;
};

using Nonce = std::array<std::uint8_t, 12>;
using Tag = std::array<std::uint8_t, 16>;

struct AeadResult {
  Bytes ciphertext;
  Tag tag{};
};

enum class Primitive : std::uint8_t {
  sign,
  verify,
  key_agree,
  aead_encrypt,
  aead_decrypt,
  gmac,
  digest,
  mac,
};

/// All primitive operations behind one swappable boundary, mirroring how a
/// middleware security plugin treats its crypto library as a black box.
/// Implementations are immutable after construction and safe to share across
/// sessions.
class Provider {
public:
  virtual ~Provider() = default;

  virtual Bytes sign(const SigningKeyPair& key, ConstSpan message) = 0;
  virtual bool verify(ConstSpan public_key, ConstSpan message, ConstSpan signature) = 0;
  virtual SharedSecret key_agree(const EphemeralKeyPair& mine, ConstSpan peer_public) = 0;
  virtual AeadResult aead_encrypt(const AeadKey& key, const Nonce& nonce,
                                  ConstSpan aad, ConstSpan plaintext) = 0;
  virtual Bytes aead_decrypt(const AeadKey& key, const Nonce& nonce, ConstSpan aad,
                             ConstSpan ciphertext, const Tag& tag) = 0;
  virtual Tag gmac(const AeadKey& key, const Nonce& nonce, ConstSpan aad) = 0;
  virtual Digest digest(ConstSpan message) = 0;
  virtual Digest mac(ConstSpan key, ConstSpan message) = 0;
};

inline const char* primitive_name(Primitive p) {
  switch (p) {
    case Primitive::sign: return "SIGN";
    case Primitive::verify: return "VERIFY";
    case Primitive::key_agree: return "KEY_AGREE";
    case Primitive::aead_encrypt: return "AEAD_ENCRYPT";
    case Primitive::aead_decrypt: return "AEAD_DECRYPT";
    case Primitive::gmac: return "GMAC";
    case Primitive::digest: return "DIGEST";
    case Primitive::mac: return "MAC";
  }
  return "?";
}

}  // namespace secdds::crypto
