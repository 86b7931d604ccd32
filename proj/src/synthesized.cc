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

#include "aal/synthesized.h"

namespace aal {

namespace {

bool IsDigit(char ch) { return ch >= '0' && ch <= '9'; }

// "...Lambda<digits>" with at least one digit.
bool EndsWithLambdaCounter(std::string_view segment) {
  size_t i = segment.size();
  while (i > 0 && IsDigit(segment[i - 1])) --i;
  if (i == segment.size()) return false;
  return segment.substr(0, i).ends_with("Lambda");
}

}  // namespace

bool HasLambdaMarker(std::string_view name) {
  constexpr std::string_view kMarker = "$$Lambda$";
  for (size_t at = name.find(kMarker); at != std::string_view::npos;
       at = name.find(kMarker, at + 1)) {
    size_t next = at + kMarker.size();
    if (next < name.size() && IsDigit(name[next])) return true;
  }
  size_t start = 0;
  while (start <= name.size()) {
    size_t end = name.find('$', start);
    if (end == std::string_view::npos) end = name.size();
    if (EndsWithLambdaCounter(name.substr(start, end - start))) return true;
    start = end + 1;
  }
  return false;
}

bool IsAccessorName(std::string_view name) {
  constexpr std::string_view kPrefix = "access$";
  if (!name.starts_with(kPrefix) || name.size() == kPrefix.size()) return false;
  for (char ch : name.substr(kPrefix.size())) {
    if (!IsDigit(ch)) return false;
  }
  return true;
}

void SynthesizedFilter::AddClassPattern(const std::string& pattern) {
  class_patterns_.emplace_back(pattern, std::regex::ECMAScript | std::regex::optimize);
}

void SynthesizedFilter::AddMemberPattern(const std::string& pattern) {
  member_patterns_.emplace_back(pattern, std::regex::ECMAScript | std::regex::optimize);
}

bool SynthesizedFilter::Matches(const ApiRef& api) const {
  std::string_view short_name = api.declaring_class().simple_name();
  if (HasLambdaMarker(short_name)) return true;
  for (const std::regex& re : class_patterns_) {
    if (std::regex_search(short_name.begin(), short_name.end(), re)) return true;
  }
  if (!api.is_member()) return false;

  const std::string& name = api.name();
  if (api.kind() == ApiKind::kMethod) {
    if (name == "<clinit>") return true;
    if (name.starts_with("lambda$") || HasLambdaMarker(name)) return true;
  }
  if (IsAccessorName(name)) return true;
  for (const std::regex& re : member_patterns_) {
    if (std::regex_search(name, re)) return true;
  }
  return false;
}

const SynthesizedFilter& SynthesizedFilter::Default() {
  static const SynthesizedFilter kDefault;
  return kDefault;
}

bool IsSynthesized(const ApiRef& api) { return SynthesizedFilter::Default().Matches(api); }

}  // namespace aal
