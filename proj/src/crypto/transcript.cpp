#include "secdds/crypto/transcript.hpp"

#include <fstream>

#include "secdds/errors.hpp"

namespace secdds::crypto {

namespace {

void encode_fields(ByteWriter& w,
                   const std::vector<std::pair<std::string, Bytes>>& fields) {
  w.u32le(static_cast<std::uint32_t>(fields.size()));
  for (const auto& [name, bytes] : fields) {
    w.field(name);
    w.field(bytes);
  }
}

std::vector<std::pair<std::string, Bytes>> decode_fields(ByteReader& r) {
  std::uint32_t n = r.u32le();
  std::vector<std::pair<std::string, Bytes>> out;
  out.reserve(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    std::string name = to_string(r.field());
    out.emplace_back(std::move(name), r.field());
  }
  return out;
}

}  // namespace

Bytes encode_record(const CryptoCallRecord& rec) {
  ByteWriter w;
  w.u64le(rec.sequence);
  w.u8(static_cast<std::uint8_t>(rec.primitive));
  w.u64le(rec.wall_time_us);
  encode_fields(w, rec.inputs);
  encode_fields(w, rec.outputs);
  return w.take();
}

CryptoCallRecord decode_record(ConstSpan bytes) {
  ByteReader r(bytes);
  CryptoCallRecord rec;
  rec.sequence = r.u64le();
  rec.primitive = static_cast<Primitive>(r.u8());
  rec.wall_time_us = r.u64le();
  rec.inputs = decode_fields(r);
  rec.outputs = decode_fields(r);
  return rec;
}

void write_record_hexdump(std::ostream& os, const CryptoCallRecord& rec) {
  os << "# " << rec.sequence << " " << primitive_name(rec.primitive) << " t="
     << rec.wall_time_us << "\n";
  for (const auto& [name, bytes] : rec.inputs)
    os << name << ": " << to_hex(bytes) << "\n";
  for (const auto& [name, bytes] : rec.outputs)
    os << name << ": " << to_hex(bytes) << "\n";
}

void MemorySink::append(const CryptoCallRecord& rec) {
  std::lock_guard lock(mu_);
  records_.push_back(rec);
}

std::vector<CryptoCallRecord> MemorySink::drain() {
  std::lock_guard lock(mu_);
  return std::exchange(records_, {});
}

std::vector<CryptoCallRecord> MemorySink::snapshot() const {
  std::lock_guard lock(mu_);
  return records_;
}

BinaryFileSink::BinaryFileSink(std::string path) : path_(std::move(path)) {
  std::ofstream out(path_, std::ios::binary | std::ios::trunc);
  if (!out) fail(Errc::io_error, "cannot open transcript " + path_);
}

void BinaryFileSink::append(const CryptoCallRecord& rec) {
  std::lock_guard lock(mu_);
  Bytes body = encode_record(rec);
  ByteWriter w;
  w.u32le(static_cast<std::uint32_t>(body.size()));
  w.raw(body);
  std::ofstream out(path_, std::ios::binary | std::ios::app);
  if (!out) fail(Errc::io_error, "cannot append to transcript " + path_);
  out.write(reinterpret_cast<const char*>(w.bytes().data()),
            static_cast<std::streamsize>(w.bytes().size()));
}

std::vector<CryptoCallRecord> load_transcript(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::file_not_found, path);
  Bytes all((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());

  std::vector<CryptoCallRecord> records;
  std::size_t pos = 0;
  while (pos + 4 <= all.size()) {
    std::uint32_t len = 0;
    for (int i = 3; i >= 0; --i) len = (len << 8) | all[pos + i];
    if (pos + 4 + len > all.size()) break;  // truncated tail
    records.push_back(decode_record(ConstSpan(all).subspan(pos + 4, len)));
    pos += 4 + len;
  }
  return records;
}

void save_transcript_hexdump(const std::string& path,
                             const std::vector<CryptoCallRecord>& records) {
  std::ofstream out(path);
  if (!out) fail(Errc::io_error, "cannot write " + path);
  for (const auto& rec : records) write_record_hexdump(out, rec);
}

}  // namespace secdds::crypto
