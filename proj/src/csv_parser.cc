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

#include "aal/csv_parser.h"

#include <istream>
#include <map>
#include <set>
#include <sstream>

#include "aal/descriptor.h"

namespace aal {

namespace {

void SplitFlags(std::string_view text, std::set<std::string>* flags) {
  size_t start = 0;
  while (start < text.size()) {
    size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view flag = text.substr(start, comma - start);
    if (!flag.empty()) flags->emplace(flag);
    start = comma + 1;
  }
}

std::string_view StripCr(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return line;
}

}  // namespace

ApiRef ParseJniMemberSignature(std::string_view signature) {
  size_t arrow = signature.find(";->");
  if (arrow == std::string_view::npos) {
    throw DescriptorError("missing '->' in member signature '" + std::string(signature) + "'");
  }
  ClassId cls = ClassIdFromDescriptor(signature.substr(0, arrow + 1));
  std::string_view member = signature.substr(arrow + 3);
  size_t paren = member.find('(');
  size_t colon = member.find(':');
  if (paren != std::string_view::npos && (colon == std::string_view::npos || paren < colon)) {
    std::string name(member.substr(0, paren));
    if (!IsValidMemberName(name, ApiKind::kMethod)) {
      throw DescriptorError("invalid method name in '" + std::string(signature) + "'");
    }
    MethodDescriptor desc = ParseMethodDescriptor(member.substr(paren));
    return ApiRef::Method(std::move(cls), std::move(name), std::move(desc.params));
  }
  if (colon == std::string_view::npos) {
    throw DescriptorError("member signature lacks type '" + std::string(signature) + "'");
  }
  std::string name(member.substr(0, colon));
  if (!IsValidMemberName(name, ApiKind::kField)) {
    throw DescriptorError("invalid field name in '" + std::string(signature) + "'");
  }
  TypeName type = JniTypeToTypeName(member.substr(colon + 1));
  if (type.is_primitive() && type.primitive() == PrimitiveKind::kVoid) {
    throw DescriptorError("void field in '" + std::string(signature) + "'");
  }
  return ApiRef::Field(std::move(cls), std::move(name));
}

AalSnapshot ParseCsv(std::istream& in, int api_level, const ParseOptions& options,
                     Diagnostics* diagnostics) {
  AalSnapshot snapshot;
  snapshot.kind = SourceKind::kCsv;
  snapshot.api_level = api_level;

  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = StripCr(raw);
    if (line.empty()) continue;
    size_t comma = line.find(',');
    std::string_view signature = line.substr(0, comma);
    ApiRef member = [&] {
      try {
        return ParseJniMemberSignature(signature);
      } catch (const Error& e) {
        throw ParseError(e.what(), line_no);
      }
    }();
    RestrictionPolicy policy;
    if (comma != std::string_view::npos) SplitFlags(line.substr(comma + 1), &policy.flags);

    ApiRef cls = ApiRef::Class(member.declaring_class());
    if (options.Keeps(cls)) snapshot.apis.insert(cls);
    if (!options.Keeps(member)) continue;

    snapshot.apis.insert(member);
    if (policy.flags.empty()) continue;
    auto [pit, fresh] = snapshot.policy.try_emplace(member, policy);
    if (!fresh && pit->second != policy) {
      if (diagnostics) {
        diagnostics->Add("conflicting flags for " + member.canonical() + "; flags unioned",
                         line_no);
      }
      pit->second.flags.insert(policy.flags.begin(), policy.flags.end());
    }
  }
  return snapshot;
}

AalSnapshot ParseCsv(std::string_view text, int api_level, const ParseOptions& options,
                     Diagnostics* diagnostics) {
  std::istringstream in{std::string(text)};
  return ParseCsv(in, api_level, options, diagnostics);
}

SynthesizedShare MeasureSynthesized(std::string_view text, const SynthesizedFilter* filter) {
  ParseOptions options;
  options.filter = filter;
  SynthesizedShare share;
  int line_no = 0;
  while (!text.empty()) {
    size_t nl = text.find('\n');
    std::string_view line = StripCr(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view() : text.substr(nl + 1);
    ++line_no;
    if (line.empty()) continue;
    ApiRef member = [&] {
      try {
        return ParseJniMemberSignature(line.substr(0, line.find(',')));
      } catch (const Error& e) {
        throw ParseError(e.what(), line_no);
      }
    }();
    ++share.lines;
    if (!options.Keeps(member)) ++share.synthesized;
  }
  return share;
}

std::string MergeLegacyLists(std::span<const LegacyList> lists) {
  std::map<std::string, std::set<std::string>> merged;
  for (const LegacyList& list : lists) {
    std::string_view rest = list.contents;
    while (!rest.empty()) {
      size_t nl = rest.find('\n');
      std::string_view line = StripCr(rest.substr(0, nl));
      rest = nl == std::string_view::npos ? std::string_view() : rest.substr(nl + 1);
      if (line.empty()) continue;
      size_t comma = line.find(',');
      std::set<std::string>& flags = merged[std::string(line.substr(0, comma))];
      if (!list.flag.empty()) flags.insert(list.flag);
      if (comma != std::string_view::npos) SplitFlags(line.substr(comma + 1), &flags);
    }
  }
  std::string out;
  for (const auto& [signature, flags] : merged) {
    out += signature;
    for (const std::string& flag : flags) {
      out += ',';
      out += flag;
    }
    out += '\n';
  }
  return out;
}

}  // namespace aal
