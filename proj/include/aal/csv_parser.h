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

#ifndef AAL_CSV_PARSER_H_
#define AAL_CSV_PARSER_H_

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

#include "aal/error.h"
#include "aal/snapshot.h"

namespace aal {

// Parses one JNI member signature, "Lpkg/Cls;->name:I" or
// "Lpkg/Cls;->name(I)V". Throws DescriptorError.
ApiRef ParseJniMemberSignature(std::string_view signature);

// Parses hiddenapi-flags.csv: one "<signature>,<flag>(,<flag>)*" per line.
// Declaring classes of all members are added to the class set; classes that
// only exist without members cannot be represented in this format. Repeated
// members have their flags unioned (with a diagnostic when they differ).
// Throws ParseError with the line number on malformed signatures.
AalSnapshot ParseCsv(std::istream& in, int api_level, const ParseOptions& options = {},
                     Diagnostics* diagnostics = nullptr);
AalSnapshot ParseCsv(std::string_view text, int api_level, const ParseOptions& options = {},
                     Diagnostics* diagnostics = nullptr);

// Member lines of a hiddenapi-flags.csv text and how many of them the
// synthesized-API rules (<clinit> included) drop, counted line by line.
struct SynthesizedShare {
  size_t lines = 0;
  size_t synthesized = 0;
  double fraction() const { return lines ? static_cast<double>(synthesized) / static_cast<double>(lines) : 0.0; }
};

// Throws ParseError on malformed lines. |filter| nullptr: default heuristics.
SynthesizedShare MeasureSynthesized(std::string_view text, const SynthesizedFilter* filter = nullptr);

// One pre-CSV list file (API level 28 shipped several), each line a JNI
// signature; every entry receives |flag|.
struct LegacyList {
  std::string flag;
  std::string_view contents;
};

// Merges legacy list files into CSV text accepted by ParseCsv. Members that
// appear in several lists get the union of their flags; output lines are
// sorted bytewise.
std::string MergeLegacyLists(std::span<const LegacyList> lists);

}  // namespace aal

#endif  // AAL_CSV_PARSER_H_
