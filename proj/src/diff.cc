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

#include "aal/diff.h"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "aal/error.h"

namespace aal {

std::string VennPartition::CellLabel(SourceMask mask) const {
  std::string out;
  for (size_t i = 0; i < sources.size(); ++i) {
    if (mask & (SourceMask{1} << i)) {
      if (!out.empty()) out += '+';
      out += sources[i];
    }
  }
  return out;
}

size_t VennPartition::Count(SourceMask mask, ApiKind kind) const {
  auto it = cells.find(mask);
  if (it == cells.end()) return 0;
  return static_cast<size_t>(std::count_if(it->second.begin(), it->second.end(),
                                           [kind](const ApiRef& api) { return api.kind() == kind; }));
}

std::vector<SourceMask> VennPartition::OrderedMasks() const {
  std::vector<SourceMask> masks;
  for (const auto& [mask, unused] : cells) masks.push_back(mask);
  std::stable_sort(masks.begin(), masks.end(), [](SourceMask a, SourceMask b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa > pb : a < b;
  });
  return masks;
}

VennPartition ComputeVenn(std::span<const LabeledSnapshot> snapshots) {
  if (snapshots.size() < 2 || snapshots.size() > kMaxVennSources) {
    throw std::invalid_argument("venn needs 2 to 6 sources");
  }
  int level = snapshots.front().snapshot->api_level;
  VennPartition partition;
  for (const LabeledSnapshot& s : snapshots) {
    if (s.snapshot->api_level != level) {
      throw MismatchError("API level mismatch: " + s.label + " is at level " +
                          std::to_string(s.snapshot->api_level) + ", expected " +
                          std::to_string(level));
    }
    partition.sources.push_back(s.label);
  }
  std::map<ApiRef, SourceMask> membership;
  for (size_t i = 0; i < snapshots.size(); ++i) {
    for (const ApiRef& api : snapshots[i].snapshot->apis) membership[api] |= SourceMask{1} << i;
  }
  for (const auto& [api, mask] : membership) partition.cells[mask].insert(api);
  return partition;
}

EvolutionDelta ComputeEvolution(const AalSnapshot& prev, const AalSnapshot& next) {
  if (prev.kind != next.kind) {
    throw MismatchError("cannot diff a " + std::string(SourceKindName(prev.kind)) +
                        " snapshot against a " + std::string(SourceKindName(next.kind)) + " one");
  }
  EvolutionDelta delta;
  delta.from_level = prev.api_level;
  delta.to_level = next.api_level;
  std::set_difference(next.apis.begin(), next.apis.end(), prev.apis.begin(), prev.apis.end(),
                      std::inserter(delta.added, delta.added.end()));
  std::set_difference(prev.apis.begin(), prev.apis.end(), next.apis.begin(), next.apis.end(),
                      std::inserter(delta.removed, delta.removed.end()));
  return delta;
}

double Attribution::fraction() const {
  size_t total = in_class_delta.size() + outside.size();
  return total == 0 ? 0.0 : static_cast<double>(in_class_delta.size()) / static_cast<double>(total);
}

namespace {

Attribution Attribute(const std::set<ApiRef>& delta, const ApiKind* kind) {
  Attribution out;
  for (const ApiRef& api : delta) {
    if (!api.is_member() || (kind && api.kind() != *kind)) continue;
    if (delta.contains(ApiRef::Class(api.declaring_class()))) {
      out.in_class_delta.insert(api);
    } else {
      out.outside.insert(api);
    }
  }
  return out;
}

}  // namespace

Attribution AttributeMembersToClasses(const std::set<ApiRef>& delta) {
  return Attribute(delta, nullptr);
}

Attribution AttributeMembersToClasses(const std::set<ApiRef>& delta, ApiKind kind) {
  return Attribute(delta, &kind);
}

std::map<NamespaceCategory, size_t> Breakdown(const std::set<ApiRef>& apis) {
  std::map<NamespaceCategory, size_t> counts;
  for (const ApiRef& api : apis) ++counts[NamespaceCategoryOf(api.declaring_class())];
  return counts;
}

DeviceComparison::Split DeviceComparison::NonAalSplit(ApiKind kind) const {
  Split split;
  for (const ApiRef& api : non_aal) {
    if (api.kind() != kind) continue;
    ++split.total;
    auto it = non_aal_visibility.find(api);
    if (it != non_aal_visibility.end() && it->second == Visibility::kPublic) ++split.public_count;
  }
  return split;
}

DeviceComparison CompareDevice(std::span<const LabeledSnapshot> snapshots,
                               const DeviceInventory& inventory) {
  DeviceComparison out;
  const std::set<ApiRef>& device = inventory.snapshot.apis;
  std::set<ApiRef> all_lists;
  for (const LabeledSnapshot& s : snapshots) {
    out.sources.push_back(s.label);
    std::set<ApiRef>& missing = out.missing_per_source[s.label];
    for (const ApiRef& api : s.snapshot->apis) {
      all_lists.insert(api);
      if (inventory.universe.contains(api.declaring_class()) && !device.contains(api)) {
        missing.insert(api);
      }
    }
  }
  for (const ApiRef& api : device) {
    if (all_lists.contains(api)) continue;
    out.non_aal.insert(api);
    if (auto it = inventory.snapshot.visibility.find(api); it != inventory.snapshot.visibility.end()) {
      out.non_aal_visibility[api] = it->second;
    }
  }
  return out;
}

}  // namespace aal
