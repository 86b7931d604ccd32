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
//
// Canonical snapshot files: the toolkit's interchange format.
//
//   #aal v1 kind=<JAR|XML|TXT|CSV|DEVICE> level=<N>
//   <canonical line>[\t<sidecar>]
//   ...
//
// UTF-8, LF line endings, lines sorted bytewise. The optional sidecar column
// carries per-API metadata:
//   CSV          <flag>,<flag>,...            (sorted)
//   XML          since=<N>[,deprecated=<N>][,removed=<N>]
//   JAR, DEVICE  vis=<public|protected|package|private>
//
// Device inventories additionally carry the class universe the dump tried to
// load, as a "#universe" section of binary class names that precedes an
// "#apis" section holding the API lines.

#ifndef AAL_CANONICAL_IO_H_
#define AAL_CANONICAL_IO_H_

#include <iosfwd>
#include <string>
#include <string_view>

#include "aal/snapshot.h"

namespace aal {

std::string CanonicalHeader(SourceKind kind, int api_level);

std::string FormatSnapshot(const AalSnapshot& snapshot, bool with_metadata = true);
std::string FormatDeviceInventory(const DeviceInventory& inventory);

// Both readers throw ParseError with the 1-based line number.
AalSnapshot ParseSnapshot(std::istream& in);
AalSnapshot ParseSnapshot(std::string_view text);
DeviceInventory ParseDeviceInventory(std::istream& in);
DeviceInventory ParseDeviceInventory(std::string_view text);

}  // namespace aal

#endif  // AAL_CANONICAL_IO_H_
