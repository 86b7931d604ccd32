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

#ifndef AAL_TXT_PARSER_H_
#define AAL_TXT_PARSER_H_

#include <iosfwd>
#include <map>
#include <string>
#include <string_view>

#include "aal/api_ref.h"
#include "aal/error.h"
#include "aal/snapshot.h"

namespace aal {

// Type-parameter identifier -> erased bound. Unbounded parameters map to
// java.lang.Object.
using TypeBounds = std::map<std::string, TypeName, std::less<>>;

// Erases one source-level type: drops type arguments at every depth,
// substitutes type parameters from |bounds|, turns "..." into a trailing
// array dimension, strips annotations and nullability markers, and expands
// java.lang simple names. Dotted nested names ("android.view.View.OnClickListener")
// become '$'-nested binary names; without a package table the package ends
// before the first segment starting with an upper-case letter.
//
// Throws ParseError on unbalanced angle brackets or trailing tokens.
TypeName EraseType(std::string_view source_type, const TypeBounds& bounds = {},
                   Diagnostics* diagnostics = nullptr);

// Parses a current.txt-style signature file. Class-like headers (class,
// interface, @interface, enum) become classes; field and enum_constant lines
// become fields; method lines become methods and ctor lines become "<init>"
// methods, all with erased parameter types. property lines are accepted and
// produce nothing.
//
// Unqualified names outside java.lang resolve against classes declared in the
// same file (current package first, then a unique match elsewhere) and are
// otherwise kept verbatim with a diagnostic.
//
// Throws ParseError on syntax errors and unknown member keywords.
AalSnapshot ParseTxt(std::istream& in, int api_level, const ParseOptions& options = {},
                     Diagnostics* diagnostics = nullptr);
AalSnapshot ParseTxt(std::string_view text, int api_level, const ParseOptions& options = {},
                     Diagnostics* diagnostics = nullptr);

}  // namespace aal

#endif  // AAL_TXT_PARSER_H_
