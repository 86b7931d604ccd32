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

#ifndef AAL_XML_PARSER_H_
#define AAL_XML_PARSER_H_

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "aal/error.h"
#include "aal/snapshot.h"

namespace aal {

struct XmlMember {
  ApiRef api;
  Lifetime lifetime;
};

struct XmlClass {
  ClassId id;
  Lifetime lifetime;
  std::vector<ClassId> extends;     // diagnostics only
  std::vector<ClassId> implements;  // diagnostics only
  std::vector<XmlMember> members;
};

// Everything api-versions.xml says, before any level is chosen. <clinit>
// entries are not retained.
struct XmlApiModel {
  std::vector<XmlClass> classes;

  // Highest since/deprecated/removed level mentioned; 0 for an empty model.
  int MaxLevel() const;
};

// Reads api-versions.xml. Members without "since" inherit their class's; a
// class without "since" inherits the root's "min" (default 1). Members
// without "removed" inherit their class's. Throws ParseError on XML syntax
// errors and on descriptor errors (message includes the element path).
XmlApiModel ParseApiVersions(std::istream& in, Diagnostics* diagnostics = nullptr);
XmlApiModel ParseApiVersions(std::string_view text, Diagnostics* diagnostics = nullptr);

// APIs available at |api_level|: since <= level and not removed at or before
// it. Deprecated APIs stay. The lifetime sidecar is filled for every API.
AalSnapshot SnapshotAt(const XmlApiModel& model, int api_level, const ParseOptions& options = {});

}  // namespace aal

#endif  // AAL_XML_PARSER_H_
