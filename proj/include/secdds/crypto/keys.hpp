#pragma once

#include "secdds/crypto/provider.hpp"
#include "secdds/rng.hpp"

namespace secdds::crypto {

/// Key generation draws all randomness from the supplied source, so fixture
/// trees and handshakes are reproducible under a fixed seed.
SigningKeyPair generate_signing_keypair(SignAlgorithm alg, RandomSource& rng);
EphemeralKeyPair generate_ephemeral_keypair(AgreeAlgorithm alg, RandomSource& rng);

/// Private-key files on disk ("SECDDS PRIVATE KEY" / "SECDDS ENCRYPTED
/// PRIVATE KEY" PEM blocks). Certificates carry the public halves.
std::string signing_key_to_pem(const SigningKeyPair& kp,
                               std::string_view passphrase = {},
                               RandomSource* rng = nullptr);
SigningKeyPair signing_key_from_pem(std::string_view pem,
                                    std::string_view passphrase = {});

/// Structural check + algorithm of a self-describing public key encoding.
SignAlgorithm public_key_algorithm(ConstSpan public_key);

}  // namespace secdds::crypto
