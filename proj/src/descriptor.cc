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

#include "aal/descriptor.h"

#include <utility>

#include "aal/error.h"

namespace aal {

namespace {

[[noreturn]] void Fail(std::string_view desc, const std::string& what) {
  throw DescriptorError(what + " in descriptor '" + std::string(desc) + "'");
}

bool PrimitiveFromCode(char code, PrimitiveKind* kind) {
  switch (code) {
    case 'Z': *kind = PrimitiveKind::kBoolean; return true;
    case 'B': *kind = PrimitiveKind::kByte; return true;
    case 'C': *kind = PrimitiveKind::kChar; return true;
    case 'S': *kind = PrimitiveKind::kShort; return true;
    case 'I': *kind = PrimitiveKind::kInt; return true;
    case 'J': *kind = PrimitiveKind::kLong; return true;
    case 'F': *kind = PrimitiveKind::kFloat; return true;
    case 'D': *kind = PrimitiveKind::kDouble; return true;
    case 'V': *kind = PrimitiveKind::kVoid; return true;
    default: return false;
  }
}

char CodeFromPrimitive(PrimitiveKind kind) {
  static constexpr char kCodes[] = {'Z', 'B', 'C', 'S', 'I', 'J', 'F', 'D', 'V'};
  return kCodes[static_cast<size_t>(kind)];
}

ClassId InternalToClassId(std::string_view whole, std::string_view internal) {
  if (internal.empty()) Fail(whole, "empty class name");
  std::string dotted(internal);
  for (char& ch : dotted) {
    if (ch == '.') Fail(whole, "'.' in internal class name");
    if (ch == '/') ch = '.';
  }
  if (!ClassId::IsValid(dotted)) Fail(whole, "invalid class name '" + dotted + "'");
  return ClassId(std::move(dotted));
}

// Consumes one field type starting at |pos|; advances |pos| past it.
TypeName ReadType(std::string_view whole, std::string_view desc, size_t& pos, bool allow_void) {
  int dims = 0;
  while (pos < desc.size() && desc[pos] == '[') {
    ++dims;
    ++pos;
  }
  if (pos >= desc.size()) Fail(whole, "truncated type");
  char code = desc[pos];
  if (code == 'L') {
    size_t semi = desc.find(';', pos);
    if (semi == std::string_view::npos) Fail(whole, "unterminated class type");
    ClassId cls = InternalToClassId(whole, desc.substr(pos + 1, semi - pos - 1));
    pos = semi + 1;
    return TypeName::Reference(std::move(cls), dims);
  }
  PrimitiveKind kind;
  if (!PrimitiveFromCode(code, &kind)) Fail(whole, std::string("unknown type code '") + code + "'");
  if (kind == PrimitiveKind::kVoid && (dims > 0 || !allow_void)) Fail(whole, "misplaced void");
  ++pos;
  return TypeName::Primitive(kind, dims);
}

}  // namespace

TypeName JniTypeToTypeName(std::string_view desc) {
  size_t pos = 0;
  TypeName type = ReadType(desc, desc, pos, /*allow_void=*/true);
  if (pos != desc.size()) Fail(desc, "trailing characters");
  return type;
}

std::vector<TypeName> ParseParameterDescriptors(std::string_view params) {
  std::vector<TypeName> out;
  size_t pos = 0;
  while (pos < params.size()) out.push_back(ReadType(params, params, pos, false));
  return out;
}

MethodDescriptor ParseMethodDescriptor(std::string_view desc) {
  if (desc.empty() || desc.front() != '(') Fail(desc, "expected '('");
  size_t close = desc.find(')');
  if (close == std::string_view::npos) Fail(desc, "missing ')'");
  std::vector<TypeName> params;
  size_t pos = 1;
  while (pos < close) {
    params.push_back(ReadType(desc, desc.substr(0, close), pos, false));
  }
  pos = close + 1;
  TypeName ret = ReadType(desc, desc, pos, true);
  if (pos != desc.size()) Fail(desc, "trailing characters");
  return MethodDescriptor{std::move(params), std::move(ret)};
}

ClassId ClassIdFromInternalName(std::string_view internal_name) {
  return InternalToClassId(internal_name, internal_name);
}

ClassId ClassIdFromDescriptor(std::string_view desc) {
  if (desc.size() < 3 || desc.front() != 'L' || desc.back() != ';') {
    Fail(desc, "not a class descriptor");
  }
  std::string_view inner = desc.substr(1, desc.size() - 2);
  if (inner.find(';') != std::string_view::npos) Fail(desc, "trailing characters");
  return InternalToClassId(desc, inner);
}

std::string ClassIdToDescriptor(const ClassId& cls) {
  std::string out = "L" + cls.binary_name() + ";";
  for (char& ch : out) {
    if (ch == '.') ch = '/';
  }
  return out;
}

std::string TypeNameToJni(const TypeName& type) {
  std::string out(type.array_dims(), '[');
  if (type.is_primitive()) {
    out += CodeFromPrimitive(type.primitive());
  } else {
    out += ClassIdToDescriptor(type.reference());
  }
  return out;
}

}  // namespace aal
