#pragma once

#include <memory>

#include "secdds/crypto/provider.hpp"
#include "secdds/rng.hpp"

namespace secdds::crypto {

/// Production provider backed by libcrypto primitives. The signature padding
/// and agreement math run at the bignum/EC level so every random draw (PSS
/// salt) comes from the injected source; ECDSA nonces are derived from the
/// key and message, never from entropy.
class OpensslProvider : public Provider {
public:
  explicit OpensslProvider(std::shared_ptr<RandomSource> rng = nullptr);

  Bytes sign(const SigningKeyPair& key, ConstSpan message) override;
  bool verify(ConstSpan public_key, ConstSpan message, ConstSpan signature) override;
  SharedSecret key_agree(const EphemeralKeyPair& mine, ConstSpan peer_public) override;
  AeadResult aead_encrypt(const AeadKey& key, const Nonce& nonce, ConstSpan aad,
                          ConstSpan plaintext) override;
  Bytes aead_decrypt(const AeadKey& key, const Nonce& nonce, ConstSpan aad,
                     ConstSpan ciphertext, const Tag& tag) override;
  Tag gmac(const AeadKey& key, const Nonce& nonce, ConstSpan aad) override;
  Digest digest(ConstSpan message) override;
  Digest mac(ConstSpan key, ConstSpan message) override;

private:
  std::shared_ptr<RandomSource> rng_;
};

}  // namespace secdds::crypto
