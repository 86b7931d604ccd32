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

#ifndef AAL_SYNTHESIZED_H_
#define AAL_SYNTHESIZED_H_

#include <regex>
#include <string>
#include <string_view>
#include <vector>

#include "aal/api_ref.h"

namespace aal {

// Name heuristics for compiler-generated APIs. The built-in rules are:
//  - methods named <clinit>;
//  - a class short name or method name containing "$$Lambda$" followed by a
//    digit, having a '$'-separated segment that ends in "Lambda" plus digits,
//    or (methods only) starting with "lambda$";
//  - field or method names of the form "access$" plus digits.
// Extra ECMAScript regexes can be added; a class pattern is searched in the
// declaring class's short name, a member pattern in the member name.
class SynthesizedFilter {
 public:
  SynthesizedFilter() = default;

  void AddClassPattern(const std::string& pattern);
  void AddMemberPattern(const std::string& pattern);

  bool Matches(const ApiRef& api) const;

  static const SynthesizedFilter& Default();

 private:
  std::vector<std::regex> class_patterns_;
  std::vector<std::regex> member_patterns_;
};

// Default()-based shorthand.
bool IsSynthesized(const ApiRef& api);

// Exposed for tests.
bool HasLambdaMarker(std::string_view name);
bool IsAccessorName(std::string_view name);

}  // namespace aal

#endif  // AAL_SYNTHESIZED_H_
