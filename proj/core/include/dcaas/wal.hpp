// Copyright 2026 the dcaas-sim authors. Licensed under the Apache License,
// Version 2.0; see http://www.apache.org/licenses/LICENSE-2.0
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dcaas {

class CorruptLog : public std::runtime_error {
  public:
    explicit CorruptLog(const std::string& what) : std::runtime_error("corrupt WAL: " + what) {}
};

// Framing for write-ahead log records: one line per record, prefixed with
// the payload byte length and a CRC-32 of the payload. Stable across runs.
//
//   <length> <crc32-hex> <payload>\n
std::string frame_wal_record(std::string_view payload);

// Decodes every complete, intact record. A truncated final record (torn
// write) is tolerated and ignored; a checksum or framing error on any
// earlier record throws CorruptLog.
std::vector<std::string> parse_wal(std::string_view bytes);

}  // namespace dcaas
