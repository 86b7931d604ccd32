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
//
// Set algebra over snapshots: cross-list Venn partitions, cross-level
// evolution deltas, namespace breakdowns and device-inventory comparison.

#ifndef AAL_DIFF_H_
#define AAL_DIFF_H_

#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "aal/namespace_category.h"
#include "aal/snapshot.h"

namespace aal {

struct LabeledSnapshot {
  std::string label;
  const AalSnapshot* snapshot;
};

// Bit i set <=> source i contains the API.
using SourceMask = uint32_t;

inline constexpr size_t kMaxVennSources = 6;

struct VennPartition {
  std::vector<std::string> sources;
  // Only nonempty cells are present.
  std::map<SourceMask, std::set<ApiRef>> cells;

  // "JAR+XML", sources in input order.
  std::string CellLabel(SourceMask mask) const;
  size_t Count(SourceMask mask, ApiKind kind) const;
  // Cells ordered for reporting: more sources first, then by mask.
  std::vector<SourceMask> OrderedMasks() const;
};

// Partitions the union of 2..6 snapshots by exact membership. Throws
// MismatchError when API levels differ and std::invalid_argument on a bad
// source count.
VennPartition ComputeVenn(std::span<const LabeledSnapshot> snapshots);

struct EvolutionDelta {
  int from_level = 0;
  int to_level = 0;
  std::set<ApiRef> added;
  std::set<ApiRef> removed;
};

// added = next \ prev, removed = prev \ next. Throws MismatchError when the
// snapshots are of different kinds.
EvolutionDelta ComputeEvolution(const AalSnapshot& prev, const AalSnapshot& next);

// Members of a delta split by whether their declaring class is itself in the
// class delta.
struct Attribution {
  std::set<ApiRef> in_class_delta;
  std::set<ApiRef> outside;

  // in_class_delta / all members; 0 when there are no members.
  double fraction() const;
};

// |delta| may mix classes and members; the classes in it form the class delta.
// With |kind| set, only members of that kind are attributed.
Attribution AttributeMembersToClasses(const std::set<ApiRef>& delta);
Attribution AttributeMembersToClasses(const std::set<ApiRef>& delta, ApiKind kind);

// Counts per namespace category of each API's declaring class. Categories
// with no APIs are absent.
std::map<NamespaceCategory, size_t> Breakdown(const std::set<ApiRef>& apis);

struct DeviceComparison {
  std::vector<std::string> sources;
  // APIs of each list absent on the device, limited to classes the device
  // inventory attempted.
  std::map<std::string, std::set<ApiRef>> missing_per_source;
  // APIs on the device in no list, with the device-reported visibility when
  // known.
  std::set<ApiRef> non_aal;
  std::map<ApiRef, Visibility> non_aal_visibility;

  struct Split {
    size_t public_count = 0;
    size_t total = 0;
  };
  Split NonAalSplit(ApiKind kind) const;
};

DeviceComparison CompareDevice(std::span<const LabeledSnapshot> snapshots,
                               const DeviceInventory& inventory);

}  // namespace aal

#endif  // AAL_DIFF_H_
