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
// The canonical API identity model. Every parser produces ApiRefs and every
// analysis consumes them, so two APIs from different list formats compare
// equal exactly when their canonical lines are equal.
//
// Canonical line grammar:
//   C <class>
//   F <class> <name>
//   M <class> <name> (<type>,<type>,...)
// Class names are binary names (dotted package, '$' for nesting). Types are
// primitive keywords or binary names followed by one "[]" per dimension.

#ifndef AAL_API_REF_H_
#define AAL_API_REF_H_

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace aal {

// A binary class name such as "android.view.View$OnClickListener".
class ClassId {
 public:
  // Throws InvalidIdentity unless |binary_name| is nonempty, made of nonempty
  // '.'-separated segments, and free of '/', whitespace and the delimiter
  // characters used by the canonical grammar.
  explicit ClassId(std::string binary_name);

  static bool IsValid(std::string_view binary_name);

  const std::string& binary_name() const { return name_; }
  // Portion before the last '.', empty for the default package.
  std::string_view package() const;
  // Portion after the last '.', including any '$'-nested segments.
  std::string_view simple_name() const;

  bool operator==(const ClassId&) const = default;
  std::strong_ordering operator<=>(const ClassId&) const = default;

 private:
  std::string name_;
};

enum class PrimitiveKind : uint8_t {
  kBoolean,
  kByte,
  kChar,
  kShort,
  kInt,
  kLong,
  kFloat,
  kDouble,
  kVoid,
};

std::string_view PrimitiveKeyword(PrimitiveKind kind);
// Returns false when |keyword| is not one of the nine primitive keywords.
bool PrimitiveFromKeyword(std::string_view keyword, PrimitiveKind* kind);

// An erased parameter, field or return type.
class TypeName {
 public:
  static TypeName Primitive(PrimitiveKind kind, int array_dims = 0);
  static TypeName Reference(ClassId cls, int array_dims = 0);
  // Parses the canonical rendering ("int", "java.lang.Object[][]").
  static TypeName Parse(std::string_view text);

  bool is_primitive() const { return std::holds_alternative<PrimitiveKind>(base_); }
  PrimitiveKind primitive() const { return std::get<PrimitiveKind>(base_); }
  const ClassId& reference() const { return std::get<ClassId>(base_); }
  int array_dims() const { return array_dims_; }

  TypeName WithArrayDims(int dims) const;
  std::string ToString() const;

  bool operator==(const TypeName&) const = default;

 private:
  TypeName(std::variant<PrimitiveKind, ClassId> base, int array_dims);

  std::variant<PrimitiveKind, ClassId> base_;
  int array_dims_;
};

enum class ApiKind : uint8_t { kClass, kField, kMethod };

std::string_view ApiKindName(ApiKind kind);  // "class", "field", "method"

// Identity of a class, field or method. Methods are identified by declaring
// class, name and erased parameter list; the return type is not part of the
// identity. Constructors are methods named "<init>".
//
// Instances are immutable and carry their canonical line, which defines both
// equality and the (bytewise) total order.
class ApiRef {
 public:
  static ApiRef Class(ClassId cls);
  static ApiRef Field(ClassId cls, std::string name);
  static ApiRef Method(ClassId cls, std::string name, std::vector<TypeName> params);

  ApiKind kind() const { return kind_; }
  const ClassId& declaring_class() const { return class_; }
  // Empty for classes.
  const std::string& name() const { return name_; }
  // Empty unless kind() == kMethod.
  const std::vector<TypeName>& params() const { return params_; }
  bool is_member() const { return kind_ != ApiKind::kClass; }

  const std::string& canonical() const { return line_; }

  bool operator==(const ApiRef& other) const { return line_ == other.line_; }
  std::strong_ordering operator<=>(const ApiRef& other) const {
    int c = line_.compare(other.line_);
    return c < 0 ? std::strong_ordering::less
                 : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

 private:
  ApiRef(ApiKind kind, ClassId cls, std::string name, std::vector<TypeName> params);

  ApiKind kind_;
  ClassId class_;
  std::string name_;
  std::vector<TypeName> params_;
  std::string line_;
};

// True for names usable as a field or method name: nonempty, no whitespace or
// control characters, none of ". ; [ / ( ) ,", and '<'/'>' only in the two
// special method names.
bool IsValidMemberName(std::string_view name, ApiKind kind);

std::string CanonicalFormat(const ApiRef& api);

// Inverse of CanonicalFormat. Throws ParseError (line 0, 1-based column of the
// first offending character) on malformed input.
ApiRef ParseCanonicalLine(std::string_view line);

}  // namespace aal

#endif  // AAL_API_REF_H_
