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

#ifndef AAL_JAR_PARSER_H_
#define AAL_JAR_PARSER_H_

#include <cstdint>
#include <span>

#include "aal/class_file.h"
#include "aal/error.h"
#include "aal/snapshot.h"

namespace aal {

// Builds a JAR snapshot from a stub archive such as android.jar. Every
// ".class" entry outside META-INF/ contributes its class (memberless ones
// included) plus its declared fields and methods, with visibility taken from
// access flags. module-info and package-info entries are skipped. A class
// file that fails to parse is reported through |diagnostics| and skipped;
// a corrupt archive throws FormatError.
AalSnapshot ParseArchive(std::span<const uint8_t> archive, int api_level,
                         const ParseOptions& options = {}, Diagnostics* diagnostics = nullptr);

// Adds one parsed class to |snapshot| (shared with fixture tooling).
void AddParsedClass(const ParsedClass& cls, const ParseOptions& options, AalSnapshot* snapshot);

}  // namespace aal

#endif  // AAL_JAR_PARSER_H_
