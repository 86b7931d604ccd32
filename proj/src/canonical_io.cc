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

#include "aal/canonical_io.h"

#include <charconv>
#include <istream>
#include <sstream>

#include "aal/error.h"

namespace aal {

namespace {

std::string Sidecar(const AalSnapshot& snapshot, const ApiRef& api) {
  if (auto it = snapshot.policy.find(api); it != snapshot.policy.end()) {
    return it->second.JoinedFlags();
  }
  if (auto it = snapshot.lifetime.find(api); it != snapshot.lifetime.end()) {
    const Lifetime& life = it->second;
    std::string out = "since=" + std::to_string(life.since);
    if (life.deprecated) out += ",deprecated=" + std::to_string(*life.deprecated);
    if (life.removed) out += ",removed=" + std::to_string(*life.removed);
    return out;
  }
  if (auto it = snapshot.visibility.find(api); it != snapshot.visibility.end()) {
    return "vis=" + std::string(VisibilityName(it->second));
  }
  return {};
}

void AppendApis(const AalSnapshot& snapshot, bool with_metadata, std::string& out) {
  for (const ApiRef& api : snapshot.apis) {
    out += api.canonical();
    if (with_metadata) {
      std::string extra = Sidecar(snapshot, api);
      if (!extra.empty()) {
        out += '\t';
        out += extra;
      }
    }
    out += '\n';
  }
}

bool ParseInt(std::string_view text, int* value) {
  if (text.empty()) return false;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), *value);
  return ec == std::errc() && ptr == text.data() + text.size();
}

void ParseHeader(std::string_view line, AalSnapshot* snapshot) {
  constexpr std::string_view kPrefix = "#aal v1 kind=";
  if (!line.starts_with(kPrefix)) throw ParseError("missing '#aal v1' header", 1);
  std::string_view rest = line.substr(kPrefix.size());
  size_t space = rest.find(' ');
  if (space == std::string_view::npos) throw ParseError("header lacks level", 1);
  auto kind = SourceKindFromName(rest.substr(0, space));
  if (!kind) throw ParseError("unknown kind in header", 1);
  std::string_view level = rest.substr(space + 1);
  if (!level.starts_with("level=") || !ParseInt(level.substr(6), &snapshot->api_level) ||
      snapshot->api_level < 1) {
    throw ParseError("bad level in header", 1);
  }
  snapshot->kind = *kind;
}

void ParseSidecar(std::string_view text, const ApiRef& api, int line_no, AalSnapshot* snapshot) {
  if (text.starts_with("vis=")) {
    auto vis = VisibilityFromName(text.substr(4));
    if (!vis) throw ParseError("bad visibility '" + std::string(text) + "'", line_no);
    snapshot->visibility[api] = *vis;
    return;
  }
  if (text.starts_with("since=")) {
    Lifetime life;
    bool saw_since = false;
    size_t start = 0;
    while (start <= text.size()) {
      size_t comma = text.find(',', start);
      if (comma == std::string_view::npos) comma = text.size();
      std::string_view item = text.substr(start, comma - start);
      size_t eq = item.find('=');
      int value = 0;
      if (eq == std::string_view::npos || !ParseInt(item.substr(eq + 1), &value)) {
        throw ParseError("bad lifetime item '" + std::string(item) + "'", line_no);
      }
      std::string_view key = item.substr(0, eq);
      if (key == "since") {
        life.since = value;
        saw_since = true;
      } else if (key == "deprecated") {
        life.deprecated = value;
      } else if (key == "removed") {
        life.removed = value;
      } else {
        throw ParseError("unknown lifetime key '" + std::string(key) + "'", line_no);
      }
      start = comma + 1;
    }
    if (!saw_since) throw ParseError("lifetime without since", line_no);
    snapshot->lifetime[api] = life;
    return;
  }
  RestrictionPolicy policy;
  size_t start = 0;
  while (start <= text.size()) {
    size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view flag = text.substr(start, comma - start);
    if (flag.empty()) throw ParseError("empty flag", line_no);
    policy.flags.emplace(flag);
    start = comma + 1;
  }
  snapshot->policy[api] = std::move(policy);
}

enum class Section { kApis, kUniverse };

DeviceInventory ParseAny(std::istream& in, bool device) {
  DeviceInventory result;
  AalSnapshot& snapshot = result.snapshot;
  std::string line;
  int line_no = 0;
  Section section = Section::kApis;
  bool saw_universe = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line_no == 1) {
      ParseHeader(line, &snapshot);
      continue;
    }
    if (line.empty()) continue;
    if (line.front() == '#') {
      if (line == "#universe") {
        section = Section::kUniverse;
        saw_universe = true;
      } else if (line == "#apis") {
        section = Section::kApis;
      }
      continue;  // other '#' lines are comments
    }
    if (section == Section::kUniverse) {
      if (!ClassId::IsValid(line)) throw ParseError("bad universe class '" + line + "'", line_no);
      result.universe.emplace(line);
      continue;
    }
    std::string_view view(line);
    size_t tab = view.find('\t');
    std::string_view api_text = view.substr(0, tab);
    try {
      ApiRef api = ParseCanonicalLine(api_text);
      snapshot.apis.insert(api);
      if (tab != std::string_view::npos) ParseSidecar(view.substr(tab + 1), api, line_no, &snapshot);
    } catch (const ParseError& e) {
      if (e.line() > 0) throw;
      throw ParseError(e.what(), line_no, e.column());
    } catch (const InvalidIdentity& e) {
      throw ParseError(e.what(), line_no);
    }
  }
  if (line_no == 0) throw ParseError("empty file", 1);
  if (device && !saw_universe) {
    // Without an explicit universe the dump is taken to have attempted exactly
    // the classes it reports.
    for (const ApiRef& api : snapshot.apis) result.universe.insert(api.declaring_class());
  }
  return result;
}

}  // namespace

std::string CanonicalHeader(SourceKind kind, int api_level) {
  return "#aal v1 kind=" + std::string(SourceKindName(kind)) + " level=" +
         std::to_string(api_level);
}

std::string FormatSnapshot(const AalSnapshot& snapshot, bool with_metadata) {
  std::string out = CanonicalHeader(snapshot.kind, snapshot.api_level) + "\n";
  AppendApis(snapshot, with_metadata, out);
  return out;
}

std::string FormatDeviceInventory(const DeviceInventory& inventory) {
  std::string out = CanonicalHeader(inventory.snapshot.kind, inventory.snapshot.api_level) + "\n";
  out += "#universe\n";
  for (const ClassId& cls : inventory.universe) out += cls.binary_name() + "\n";
  out += "#apis\n";
  AppendApis(inventory.snapshot, true, out);
  return out;
}

AalSnapshot ParseSnapshot(std::istream& in) { return ParseAny(in, false).snapshot; }

AalSnapshot ParseSnapshot(std::string_view text) {
  std::istringstream in{std::string(text)};
  return ParseSnapshot(in);
}

DeviceInventory ParseDeviceInventory(std::istream& in) { return ParseAny(in, true); }

DeviceInventory ParseDeviceInventory(std::string_view text) {
  std::istringstream in{std::string(text)};
  return ParseDeviceInventory(in);
}

}  // namespace aal
