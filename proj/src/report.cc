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

#include "aal/report.h"

#include <algorithm>
#include <vector>

namespace aal {

namespace {

constexpr ApiKind kKinds[] = {ApiKind::kClass, ApiKind::kField, ApiKind::kMethod};

void Section(std::string* out, const std::string& header, const std::set<ApiRef>& apis) {
  *out += "[" + header + "]\n";
  // ApiRef order is canonical-line order.
  for (const ApiRef& api : apis) *out += api.canonical() + "\n";
}

std::string Row(std::initializer_list<std::string> cells) {
  std::string row;
  for (const std::string& cell : cells) {
    if (!row.empty()) row += '\t';
    row += cell;
  }
  return row + "\n";
}

std::string N(size_t n) { return std::to_string(n); }

}  // namespace

std::string CountsTsv(std::span<const LabeledSnapshot> snapshots) {
  std::string out = Row({"source", "level", "classes", "fields", "methods"});
  for (const LabeledSnapshot& s : snapshots) {
    AalSnapshot::Counts c = s.snapshot->CountByKind();
    out += Row({s.label, std::to_string(s.snapshot->api_level), N(c.classes), N(c.fields), N(c.methods)});
  }
  return out;
}

std::string VennTsv(const VennPartition& venn) {
  std::string out = Row({"cell", "classes", "fields", "methods"});
  for (SourceMask mask : venn.OrderedMasks()) {
    out += Row({venn.CellLabel(mask), N(venn.Count(mask, ApiKind::kClass)),
                N(venn.Count(mask, ApiKind::kField)), N(venn.Count(mask, ApiKind::kMethod))});
  }
  return out;
}

std::string VennListing(const VennPartition& venn) {
  std::string out;
  for (SourceMask mask : venn.OrderedMasks()) Section(&out, venn.CellLabel(mask), venn.cells.at(mask));
  return out;
}

std::string EvolutionTsv(const AalSnapshot& prev, const AalSnapshot& next,
                         const EvolutionDelta& delta) {
  AalSnapshot::Counts p = prev.CountByKind();
  AalSnapshot::Counts n = next.CountByKind();
  AalSnapshot::Counts added = CountByKind(delta.added);
  AalSnapshot::Counts removed = CountByKind(delta.removed);
  std::string out = Row({"kind", "prev", "next", "added", "removed", "added_with_class", "removed_with_class"});
  for (ApiKind kind : kKinds) {
    std::string with_added = "-";
    std::string with_removed = "-";
    if (kind != ApiKind::kClass) {
      with_added = N(AttributeMembersToClasses(delta.added, kind).in_class_delta.size());
      with_removed = N(AttributeMembersToClasses(delta.removed, kind).in_class_delta.size());
    }
    out += Row({std::string(ApiKindName(kind)), N(p.of(kind)), N(n.of(kind)), N(added.of(kind)),
                N(removed.of(kind)), with_added, with_removed});
  }
  return out;
}

std::string EvolutionListing(const EvolutionDelta& delta) {
  std::string out;
  Section(&out, "added", delta.added);
  Section(&out, "removed", delta.removed);
  return out;
}

std::string BreakdownTsv(const std::map<NamespaceCategory, size_t>& counts) {
  std::string out = Row({"category", "count"});
  for (const auto& [category, count] : counts) {
    out += Row({std::string(NamespaceCategoryName(category)), N(count)});
  }
  return out;
}

std::string DeviceComparisonTsv(const DeviceComparison& comparison) {
  std::string out = Row({"row", "classes", "fields", "methods"});
  for (const std::string& source : comparison.sources) {
    AalSnapshot::Counts c = CountByKind(comparison.missing_per_source.at(source));
    out += Row({"missing:" + source, N(c.classes), N(c.fields), N(c.methods)});
  }
  auto split = [&](ApiKind kind) {
    DeviceComparison::Split s = comparison.NonAalSplit(kind);
    return N(s.public_count) + "/" + N(s.total);
  };
  out += Row({"non-aal", split(ApiKind::kClass), split(ApiKind::kField), split(ApiKind::kMethod)});
  return out;
}

std::string DeviceComparisonListing(const DeviceComparison& comparison) {
  std::string out;
  for (const std::string& source : comparison.sources) {
    Section(&out, "missing:" + source, comparison.missing_per_source.at(source));
  }
  Section(&out, "non-aal", comparison.non_aal);
  return out;
}

std::string UsageTsv(const UsageReport& report) {
  std::string out = Row({"section", "count"});
  out += Row({"direct", N(report.direct.size())});
  out += Row({"extra", N(report.extra.size())});
  out += Row({"reflect", N(report.reflect.size())});
  out += Row({"reflect_unresolved", N(report.reflect_unresolved.size())});
  return out;
}

}  // namespace aal
