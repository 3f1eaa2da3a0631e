#pragma once

#include <stdexcept>
#include <string>

namespace secdds {

enum class Errc {
  // crypto
  unsupported_algorithm,
  malformed_key,
  invalid_peer_public,
  wrong_kind,
  authentication_failed,
  empty_key,
  // codec
  bad_magic,
  truncated_submessage,
  length_mismatch,
  nonce_exhausted,
  wrong_kind_for_level,
  missing_prefix,
  missing_postfix,
  unknown_key_id,
  unknown_builtin,
  unknown_pid,
  // auth
  bad_signature,
  expired,
  unknown_issuer,
  bad_token_signature,
  state_violation,
  challenge_mismatch,
  // config
  malformed_xml,
  missing_required_key,
  file_not_found,
  malformed_pem,
  // attestation
  index_out_of_range,
  // harness / cli
  fixture_missing,
  transport_failure,
  key_not_found,
  io_error,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::unsupported_algorithm: return "UnsupportedAlgorithm";
    case Errc::malformed_key: return "MalformedKey";
    case Errc::invalid_peer_public: return "InvalidPeerPublic";
    case Errc::wrong_kind: return "WrongKind";
    case Errc::authentication_failed: return "AuthenticationFailed";
    case Errc::empty_key: return "EmptyKey";
    case Errc::bad_magic: return "BadMagic";
    case Errc::truncated_submessage: return "TruncatedSubmessage";
    case Errc::length_mismatch: return "LengthMismatch";
    case Errc::nonce_exhausted: return "NonceExhausted";
    case Errc::wrong_kind_for_level: return "WrongKindForLevel";
    case Errc::missing_prefix: return "MissingPrefix";
    case Errc::missing_postfix: return "MissingPostfix";
    case Errc::unknown_key_id: return "UnknownKeyId";
    case Errc::unknown_builtin: return "UnknownBuiltin";
    case Errc::unknown_pid: return "UnknownPid";
    case Errc::bad_signature: return "BadSignature";
    case Errc::expired: return "Expired";
    case Errc::unknown_issuer: return "UnknownIssuer";
    case Errc::bad_token_signature: return "BadTokenSignature";
    case Errc::state_violation: return "StateViolation";
    case Errc::challenge_mismatch: return "ChallengeMismatch";
    case Errc::malformed_xml: return "MalformedXml";
    case Errc::missing_required_key: return "MissingRequiredKey";
    case Errc::file_not_found: return "FileNotFound";
    case Errc::malformed_pem: return "MalformedPem";
    case Errc::index_out_of_range: return "IndexOutOfRange";
    case Errc::fixture_missing: return "FixtureMissing";
    case Errc::transport_failure: return "TransportFailure";
    case Errc::key_not_found: return "KeyNotFound";
    case Errc::io_error: return "IoError";
  }
  return "Error";
}

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  Errc code() const { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace secdds
