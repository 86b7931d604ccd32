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
// Text reports over diff and scan results. Tables are tab separated with a
// header row; listings are "[section]" headers followed by canonical lines
// sorted bytewise. Every report ends with a newline and depends only on its
// inputs.

#ifndef AAL_REPORT_H_
#define AAL_REPORT_H_

#include <map>
#include <span>
#include <string>

#include "aal/dex_scanner.h"
#include "aal/diff.h"

namespace aal {

// source  level  classes  fields  methods
std::string CountsTsv(std::span<const LabeledSnapshot> snapshots);

// cell  classes  fields  methods, cells ordered by OrderedMasks().
std::string VennTsv(const VennPartition& venn);
std::string VennListing(const VennPartition& venn);

// kind  prev  next  added  removed  added_with_class  removed_with_class
// The last two columns count members whose declaring class was itself added
// or removed; they are "-" on the class row.
std::string EvolutionTsv(const AalSnapshot& prev, const AalSnapshot& next,
                         const EvolutionDelta& delta);
std::string EvolutionListing(const EvolutionDelta& delta);

// category  count, in category order.
std::string BreakdownTsv(const std::map<NamespaceCategory, size_t>& counts);

// One "missing:<source>" row per source with per-kind counts, then a
// "non-aal" row of public/total pairs.
std::string DeviceComparisonTsv(const DeviceComparison& comparison);
std::string DeviceComparisonListing(const DeviceComparison& comparison);

// section  count for direct, extra, reflect and unresolved reflect lookups.
std::string UsageTsv(const UsageReport& report);

}  // namespace aal

#endif  // AAL_REPORT_H_
