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

#ifndef AAL_ERROR_H_
#define AAL_ERROR_H_

#include <stdexcept>
#include <string>
#include <vector>

namespace aal {

// Base class of every error thrown by the toolkit. The CLI maps these to
// exit code 1 (data error).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A name, descriptor or type that violates the identity model's lexical rules.
class InvalidIdentity : public Error {
 public:
  using Error::Error;
};

// Malformed JVM field/method descriptor.
class DescriptorError : public Error {
 public:
  using Error::Error;
};

// A text-format parse failure carrying a 1-based position. column is 0 when
// only the line is known.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line, int column = 0);

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// Binary-format failure (class file, DEX, zip).
class FormatError : public Error {
 public:
  using Error::Error;
};

// Inputs that are individually valid but cannot be combined, such as a Venn
// over snapshots at different API levels.
class MismatchError : public Error {
 public:
  using Error::Error;
};

// Non-fatal findings collected while parsing. Parsers never throw for these.
struct Diagnostic {
  int line = 0;  // 0 when not tied to a line
  std::string message;
};

class Diagnostics {
 public:
  void Add(std::string message, int line = 0) {
    entries_.push_back(Diagnostic{line, std::move(message)});
  }
  const std::vector<Diagnostic>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  size_t size() const { return entries_.size(); }

 private:
  std::vector<Diagnostic> entries_;
};

}  // namespace aal

#endif  // AAL_ERROR_H_
