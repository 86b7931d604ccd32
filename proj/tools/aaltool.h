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
// Entry point of the aaltool command line, callable in-process.

#ifndef AAL_TOOLS_AALTOOL_H_
#define AAL_TOOLS_AALTOOL_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace aal {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDataError = 1;
inline constexpr int kExitUsage = 2;

// |args| excludes the program name. Reports go to |out| unless -o is given;
// diagnostics and usage text go to |err|.
int RunAalTool(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace aal

#endif  // AAL_TOOLS_AALTOOL_H_
