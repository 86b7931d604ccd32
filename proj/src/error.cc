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

#include "aal/error.h"

namespace aal {

namespace {

std::string Locate(const std::string& message, int line, int column) {
  if (line <= 0 && column <= 0) return message;
  std::string out;
  if (line > 0) out += "line " + std::to_string(line);
  if (column > 0) out += (out.empty() ? "column " : ":") + std::to_string(column);
  return out + ": " + message;
}

}  // namespace

ParseError::ParseError(const std::string& message, int line, int column)
    : Error(Locate(message, line, column)), line_(line), column_(column) {}

}  // namespace aal
