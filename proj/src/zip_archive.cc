// Copyright 2026 The AAL Toolkit Authors. All rights reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "aal/zip_archive.h"

#include <zlib.h>

#include <algorithm>

#include "aal/error.h"

namespace aal {

namespace {

constexpr uint32_t kEndOfCentralDirSig = 0x06054b50;
constexpr uint32_t kCentralDirSig = 0x02014b50;
constexpr uint32_t kLocalHeaderSig = 0x04034b50;
constexpr size_t kEndOfCentralDirSize = 22;
constexpr size_t kCentralDirHeaderSize = 46;
constexpr size_t kLocalHeaderSize = 30;

uint16_t Le16(std::span<const uint8_t> d, size_t at) {
  if (at + 2 > d.size()) throw FormatError("zip: truncated archive");
  return static_cast<uint16_t>(d[at] | d[at + 1] << 8);
}

uint32_t Le32(std::span<const uint8_t> d, size_t at) {
  if (at + 4 > d.size()) throw FormatError("zip: truncated archive");
  return static_cast<uint32_t>(d[at]) | static_cast<uint32_t>(d[at + 1]) << 8 |
         static_cast<uint32_t>(d[at + 2]) << 16 | static_cast<uint32_t>(d[at + 3]) << 24;
}

}  // namespace

ZipReader::ZipReader(std::span<const uint8_t> archive) : data_(archive) {
  if (data_.size() < kEndOfCentralDirSize) throw FormatError("zip: too small to be an archive");
  // The end record sits at the tail, followed by at most a 64 KiB comment.
  size_t lowest = data_.size() > 0xffff + kEndOfCentralDirSize
                      ? data_.size() - 0xffff - kEndOfCentralDirSize
                      : 0;
  size_t eocd = SIZE_MAX;
  for (size_t pos = data_.size() - kEndOfCentralDirSize + 1; pos-- > lowest;) {
    if (Le32(data_, pos) == kEndOfCentralDirSig) {
      eocd = pos;
      break;
    }
  }
  if (eocd == SIZE_MAX) throw FormatError("zip: end of central directory not found");

  uint16_t count = Le16(data_, eocd + 10);
  uint32_t dir_size = Le32(data_, eocd + 12);
  uint32_t dir_offset = Le32(data_, eocd + 16);
  if (count == 0xffff || dir_offset == 0xffffffff) throw FormatError("zip: zip64 archives are not supported");
  if (static_cast<uint64_t>(dir_offset) + dir_size > eocd) {
    throw FormatError("zip: central directory out of bounds");
  }

  size_t pos = dir_offset;
  entries_.reserve(count);
  for (uint16_t i = 0; i < count; ++i) {
    if (Le32(data_, pos) != kCentralDirSig) throw FormatError("zip: bad central directory entry");
    ZipEntry entry;
    uint16_t flags = Le16(data_, pos + 8);
    entry.method = Le16(data_, pos + 10);
    entry.crc32 = Le32(data_, pos + 16);
    entry.compressed_size = Le32(data_, pos + 20);
    entry.uncompressed_size = Le32(data_, pos + 24);
    uint16_t name_len = Le16(data_, pos + 28);
    uint16_t extra_len = Le16(data_, pos + 30);
    uint16_t comment_len = Le16(data_, pos + 32);
    entry.local_header_offset = Le32(data_, pos + 42);
    if (flags & 0x1) throw FormatError("zip: encrypted entries are not supported");
    size_t name_at = pos + kCentralDirHeaderSize;
    if (name_at + name_len > data_.size()) throw FormatError("zip: truncated entry name");
    entry.name.assign(reinterpret_cast<const char*>(data_.data() + name_at), name_len);
    entries_.push_back(std::move(entry));
    pos = name_at + name_len + extra_len + comment_len;
  }
}

std::vector<uint8_t> ZipReader::Extract(const ZipEntry& entry) const {
  size_t at = entry.local_header_offset;
  if (Le32(data_, at) != kLocalHeaderSig) {
    throw FormatError("zip: bad local header for '" + entry.name + "'");
  }
  size_t payload = at + kLocalHeaderSize + Le16(data_, at + 26) + Le16(data_, at + 28);
  if (payload + entry.compressed_size > data_.size()) {
    throw FormatError("zip: entry '" + entry.name + "' out of bounds");
  }
  std::span<const uint8_t> raw = data_.subspan(payload, entry.compressed_size);

  std::vector<uint8_t> out;
  if (entry.method == 0) {
    out.assign(raw.begin(), raw.end());
  } else if (entry.method == 8) {
    out.resize(entry.uncompressed_size);
    z_stream zs{};
    if (inflateInit2(&zs, -MAX_WBITS) != Z_OK) throw FormatError("zip: inflateInit failed");
    zs.next_in = const_cast<Bytef*>(raw.data());
    zs.avail_in = static_cast<uInt>(raw.size());
    zs.next_out = out.data();
    zs.avail_out = static_cast<uInt>(out.size());
    int rc = inflate(&zs, Z_FINISH);
    uLong produced = zs.total_out;
    inflateEnd(&zs);
    if (rc != Z_STREAM_END || produced != entry.uncompressed_size) {
      throw FormatError("zip: corrupt deflate stream in '" + entry.name + "'");
    }
  } else {
    throw FormatError("zip: unsupported compression method " + std::to_string(entry.method) +
                      " for '" + entry.name + "'");
  }
  if (out.size() != entry.uncompressed_size) {
    throw FormatError("zip: size mismatch in '" + entry.name + "'");
  }
  uint32_t crc = static_cast<uint32_t>(::crc32(0L, out.data(), static_cast<uInt>(out.size())));
  if (crc != entry.crc32) throw FormatError("zip: CRC mismatch in '" + entry.name + "'");
  return out;
}

}  // namespace aal
