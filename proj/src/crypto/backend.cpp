#include "backend.hpp"

namespace secdds::crypto::backend {

const EC_GROUP* p256() {
  static EC_GROUP* group = EC_GROUP_new_by_curve_name(NID_X9_62_prime256v1);
  return group;
}

const BIGNUM* p256_order() {
  static const BIGNUM* order = [] {
    Bn n = bn_new();
    EC_GROUP_get_order(p256(), n.get(), nullptr);
    return n.release();
  }();
  return order;
}

const BIGNUM* modp2048() {
  // RFC 3526 group 14
  static const char* hex =
      "ffffffffffffffffc90fdaa22168c234c4c6628b80dc1cd129024e088a67cc74"
      "020bbea63b139b22514a08798e3404ddef9519b3cd3a431b302b0a6df25f1437"
      "4fe1356d6d51c245e485b576625e7ec6f44c42e9a637ed6b0bff5cb6f406b7ed"
      "ee386bfb5a899fa5ae9f24117c4b1fe649286651ece45b3dc2007cb8a163bf05"
      "98da48361c55d39a69163fa8fd24cf5f83655d23dca3ad961c62f356208552bb"
      "9ed529077096966d670c354e4abc9804f1746c08ca18217c32905e462e36ce3b"
      "e39e772c180e86039b2783a2ec07a28fb5c55df06f4c52c9de2bcbf695581718"
      "3995497cea956ae515d2261898fa051015728e5a8aacaa68ffffffffffffffff";
  static const BIGNUM* p = [] {
    BIGNUM* v = nullptr;
    BN_hex2bn(&v, hex);
    return v;
  }();
  return p;
}

Bytes encode_ec_public(SignAlgorithm tag_space, const EC_POINT* q) {
  Bytes out(1 + kEcPointLen);
  out[0] = static_cast<std::uint8_t>(tag_space);
  auto ctx = ctx_new();
  if (EC_POINT_point2oct(p256(), q, POINT_CONVERSION_UNCOMPRESSED, out.data() + 1,
                         kEcPointLen, ctx.get()) != kEcPointLen)
    fail(Errc::malformed_key, "point serialization failed");
  return out;
}

Bytes encode_agree_public(AgreeAlgorithm alg, ConstSpan payload) {
  Bytes out;
  out.push_back(static_cast<std::uint8_t>(alg));
  out.insert(out.end(), payload.begin(), payload.end());
  return out;
}

Bytes encode_rsa_private(const BIGNUM* n, const BIGNUM* e, const BIGNUM* d) {
  ByteWriter w;
  w.u8(static_cast<std::uint8_t>(SignAlgorithm::rsassa_pss_2048));
  w.field(bn_to(n, kRsaModLen));
  w.field(bn_to(e, static_cast<std::size_t>(BN_num_bytes(e))));
  w.field(bn_to(d, kRsaModLen));
  return w.take();
}

Bytes encode_rsa_public(const BIGNUM* n, const BIGNUM* e) {
  ByteWriter w;
  w.u8(static_cast<std::uint8_t>(SignAlgorithm::rsassa_pss_2048));
  w.field(bn_to(n, kRsaModLen));
  w.field(bn_to(e, static_cast<std::size_t>(BN_num_bytes(e))));
  return w.take();
}

RsaPrivate parse_rsa_private(ConstSpan key) {
  if (key_tag(key) != static_cast<std::uint8_t>(SignAlgorithm::rsassa_pss_2048))
    fail(Errc::malformed_key, "not an RSA private key");
  try {
    ByteReader r(key.subspan(1));
    Bytes n = r.field(), e = r.field(), d = r.field();
    if (!r.done() || n.size() != kRsaModLen) throw Error(Errc::malformed_key, "");
    return {bn_from(n), bn_from(e), bn_from(d)};
  } catch (const Error&) {
    fail(Errc::malformed_key, "damaged RSA private key fields");
  }
}

RsaPublic parse_rsa_public(ConstSpan key) {
  if (key_tag(key) != static_cast<std::uint8_t>(SignAlgorithm::rsassa_pss_2048))
    fail(Errc::malformed_key, "not an RSA public key");
  try {
    ByteReader r(key.subspan(1));
    Bytes n = r.field(), e = r.field();
    if (!r.done() || n.size() != kRsaModLen) throw Error(Errc::malformed_key, "");
    return {bn_from(n), bn_from(e)};
  } catch (const Error&) {
    fail(Errc::malformed_key, "damaged RSA public key fields");
  }
}

Bn parse_scalar(ConstSpan key, std::uint8_t expected_tag) {
  if (key_tag(key) != expected_tag) fail(Errc::malformed_key, "algorithm tag mismatch");
  if (key.size() != 1 + kEcScalarLen) fail(Errc::malformed_key, "bad scalar length");
  return bn_from(key.subspan(1));
}

Point parse_point(ConstSpan encoded, std::uint8_t expected_tag, Errc on_bad) {
  if (encoded.empty() || encoded[0] != expected_tag)
    fail(on_bad, "algorithm tag mismatch");
  if (encoded.size() != 1 + kEcPointLen) fail(on_bad, "bad point length");
  auto ctx = ctx_new();
  Point q(EC_POINT_new(p256()));
  if (EC_POINT_oct2point(p256(), q.get(), encoded.data() + 1, kEcPointLen,
                         ctx.get()) != 1)
    fail(on_bad, "point not on curve");
  if (EC_POINT_is_on_curve(p256(), q.get(), ctx.get()) != 1 ||
      EC_POINT_is_at_infinity(p256(), q.get()))
    fail(on_bad, "point not on curve");
  return q;
}

Bytes mgf1_sha256(ConstSpan seed, std::size_t len) {
  Bytes out;
  out.reserve(len + 32);
  for (std::uint32_t counter = 0; out.size() < len; ++counter) {
    ByteWriter w;
    w.raw(seed);
    w.u32be(counter);
    Digest block = sha256(w.bytes());
    out.insert(out.end(), block.begin(), block.end());
  }
  out.resize(len);
  return out;
}

Bytes pss_encode(const Digest& m_hash, ConstSpan salt, std::size_t em_bits) {
  const std::size_t em_len = (em_bits + 7) / 8;
  const std::size_t h_len = 32, s_len = salt.size();
  const std::size_t ps_len = em_len - s_len - h_len - 2;

  ByteWriter mprime;
  mprime.raw(Bytes(8, 0));
  mprime.raw(m_hash);
  mprime.raw(salt);
  Digest h = sha256(mprime.bytes());

  Bytes db(ps_len, 0);
  db.push_back(0x01);
  db.insert(db.end(), salt.begin(), salt.end());

  Bytes mask = mgf1_sha256(h, db.size());
  for (std::size_t i = 0; i < db.size(); ++i) db[i] ^= mask[i];
  db[0] &= static_cast<std::uint8_t>(0xff >> (8 * em_len - em_bits));

  Bytes em = std::move(db);
  em.insert(em.end(), h.begin(), h.end());
  em.push_back(0xbc);
  return em;
}

bool pss_verify(const Digest& m_hash, ConstSpan em, std::size_t em_bits) {
  const std::size_t em_len = (em_bits + 7) / 8;
  const std::size_t h_len = 32, s_len = 32;
  if (em.size() != em_len || em_len < h_len + s_len + 2) return false;
  if (em[em_len - 1] != 0xbc) return false;

  const std::size_t db_len = em_len - h_len - 1;
  ConstSpan masked_db = em.subspan(0, db_len);
  ConstSpan h = em.subspan(db_len, h_len);
  const std::uint8_t top_mask =
      static_cast<std::uint8_t>(0xff >> (8 * em_len - em_bits));
  if (masked_db[0] & ~top_mask) return false;

  Bytes mask = mgf1_sha256(h, db_len);
  Bytes db(masked_db.begin(), masked_db.end());
  for (std::size_t i = 0; i < db_len; ++i) db[i] ^= mask[i];
  db[0] &= top_mask;

  const std::size_t ps_len = em_len - h_len - s_len - 2;
  for (std::size_t i = 0; i < ps_len; ++i)
    if (db[i] != 0) return false;
  if (db[ps_len] != 0x01) return false;

  ConstSpan salt = ConstSpan(db).subspan(ps_len + 1, s_len);
  ByteWriter mprime;
  mprime.raw(Bytes(8, 0));
  mprime.raw(m_hash);
  mprime.raw(salt);
  Digest expected = sha256(mprime.bytes());
  return std::equal(expected.begin(), expected.end(), h.begin());
}

}  // namespace secdds::crypto::backend
