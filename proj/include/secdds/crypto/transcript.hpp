#pragma once

#include <functional>
#include <mutex>
#include <ostream>
#include <string>
#include <vector>

#include "secdds/bytes.hpp"
#include "secdds/crypto/provider.hpp"

namespace secdds::crypto {

/// One primitive invocation as observed at the provider boundary. Inputs and
/// outputs are verbatim copies of what crossed it, key bytes included.
struct CryptoCallRecord {
  std::uint64_t sequence = 0;
  Primitive primitive = Primitive::digest;
  std::uint64_t wall_time_us = 0;
  std::vector<std::pair<std::string, Bytes>> inputs;
  std::vector<std::pair<std::string, Bytes>> outputs;
};

Bytes encode_record(const CryptoCallRecord& rec);
CryptoCallRecord decode_record(ConstSpan bytes);

/// Field-per-line hex dump of one record: a title line, then `name: bytes`.
void write_record_hexdump(std::ostream& os, const CryptoCallRecord& rec);

class RecordSink {
public:
  virtual ~RecordSink() = default;
  virtual void append(const CryptoCallRecord& rec) = 0;
};

class MemorySink : public RecordSink {
public:
  void append(const CryptoCallRecord& rec) override;
  std::vector<CryptoCallRecord> drain();
  std::vector<CryptoCallRecord> snapshot() const;

private:
  mutable std::mutex mu_;
  std::vector<CryptoCallRecord> records_;
};

/// Length-prefixed binary records appended to a file; the transcript format
/// consumed by offline decryption.
class BinaryFileSink : public RecordSink {
public:
  explicit BinaryFileSink(std::string path);
  void append(const CryptoCallRecord& rec) override;

private:
  std::mutex mu_;
  std::string path_;
};

/// Fan-out to several sinks.
class TeeSink : public RecordSink {
public:
  explicit TeeSink(std::vector<std::shared_ptr<RecordSink>> sinks)
      : sinks_(std::move(sinks)) {}
  void append(const CryptoCallRecord& rec) override {
    for (auto& s : sinks_) s->append(rec);
  }

private:
  std::vector<std::shared_ptr<RecordSink>> sinks_;
};

/// Reads a length-prefixed transcript file. A truncated tail (for example a
/// capture cut mid-record) yields the records that fully parse.
std::vector<CryptoCallRecord> load_transcript(const std::string& path);

void save_transcript_hexdump(const std::string& path,
                             const std::vector<CryptoCallRecord>& records);

}  // namespace secdds::crypto
