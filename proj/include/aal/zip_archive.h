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

#ifndef AAL_ZIP_ARCHIVE_H_
#define AAL_ZIP_ARCHIVE_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace aal {

struct ZipEntry {
  std::string name;
  uint16_t method = 0;  // 0 stored, 8 deflated
  uint32_t crc32 = 0;
  uint32_t compressed_size = 0;
  uint32_t uncompressed_size = 0;
  uint32_t local_header_offset = 0;
};

// Read-only view over an in-memory zip archive (jar, apk). The archive bytes
// must outlive the reader. Throws FormatError on structural corruption.
class ZipReader {
 public:
  explicit ZipReader(std::span<const uint8_t> archive);

  // Central-directory order.
  const std::vector<ZipEntry>& entries() const { return entries_; }

  // Inflates (or copies) one entry and checks its CRC.
  std::vector<uint8_t> Extract(const ZipEntry& entry) const;

 private:
  std::span<const uint8_t> data_;
  std::vector<ZipEntry> entries_;
};

}  // namespace aal

#endif  // AAL_ZIP_ARCHIVE_H_
