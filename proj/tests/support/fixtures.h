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
// The committed binary fixtures under tests/data, built deterministically.

#ifndef AAL_TESTS_FIXTURES_H_
#define AAL_TESTS_FIXTURES_H_

#include <map>
#include <string>

#include "fixture_writers.h"

namespace aal::testing {

// Relative path under tests/data -> file bytes.
std::map<std::string, Bytes> BuildBinaryFixtures();

// Individual pieces, shared with tests that need them in memory.
std::map<std::string, Bytes> FixtureClassFiles();  // "classfiles/<name>.class"
Bytes FixtureJar();
Bytes FixtureDex(int index);  // 1 or 2
Bytes FixtureApk();

}  // namespace aal::testing

#endif  // AAL_TESTS_FIXTURES_H_
