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

#include "aal/api_ref.h"

#include <array>
#include <utility>

#include "aal/error.h"

namespace aal {

namespace {

constexpr std::array<std::string_view, 9> kPrimitiveKeywords = {
    "boolean", "byte", "char", "short", "int", "long", "float", "double", "void",
};

// Characters that can never appear in a class or member name because the
// canonical grammar or the descriptor grammar uses them.
bool IsReservedChar(unsigned char c) {
  if (c <= 0x20 || c == 0x7f) return true;
  switch (c) {
    case '/':
    case ';':
    case '[':
    case ']':
    case '(':
    case ')':
    case ',':
    case '<':
    case '>':
      return true;
    default:
      return false;
  }
}

}  // namespace

ClassId::ClassId(std::string binary_name) : name_(std::move(binary_name)) {
  if (!IsValid(name_)) {
    throw InvalidIdentity("invalid class name '" + name_ + "'");
  }
}

bool ClassId::IsValid(std::string_view name) {
  if (name.empty() || name.front() == '.' || name.back() == '.') return false;
  char prev = 0;
  for (char ch : name) {
    if (IsReservedChar(static_cast<unsigned char>(ch))) return false;
    if (ch == '.' && prev == '.') return false;
    prev = ch;
  }
  return true;
}

std::string_view ClassId::package() const {
  size_t dot = name_.rfind('.');
  return dot == std::string::npos ? std::string_view() : std::string_view(name_).substr(0, dot);
}

std::string_view ClassId::simple_name() const {
  size_t dot = name_.rfind('.');
  return dot == std::string::npos ? std::string_view(name_)
                                  : std::string_view(name_).substr(dot + 1);
}

std::string_view PrimitiveKeyword(PrimitiveKind kind) {
  return kPrimitiveKeywords[static_cast<size_t>(kind)];
}

bool PrimitiveFromKeyword(std::string_view keyword, PrimitiveKind* kind) {
  for (size_t i = 0; i < kPrimitiveKeywords.size(); ++i) {
    if (kPrimitiveKeywords[i] == keyword) {
      *kind = static_cast<PrimitiveKind>(i);
      return true;
    }
  }
  return false;
}

TypeName::TypeName(std::variant<PrimitiveKind, ClassId> base, int array_dims)
    : base_(std::move(base)), array_dims_(array_dims) {
  if (array_dims_ < 0 || array_dims_ > 255) {
    throw InvalidIdentity("array dimension out of range");
  }
  if (is_primitive() && primitive() == PrimitiveKind::kVoid && array_dims_ != 0) {
    throw InvalidIdentity("void cannot be an array element type");
  }
}

TypeName TypeName::Primitive(PrimitiveKind kind, int array_dims) {
  return TypeName(kind, array_dims);
}

TypeName TypeName::Reference(ClassId cls, int array_dims) {
  return TypeName(std::move(cls), array_dims);
}

TypeName TypeName::Parse(std::string_view text) {
  int dims = 0;
  while (text.size() >= 2 && text.substr(text.size() - 2) == "[]") {
    text.remove_suffix(2);
    ++dims;
  }
  PrimitiveKind kind;
  if (PrimitiveFromKeyword(text, &kind)) return Primitive(kind, dims);
  return Reference(ClassId(std::string(text)), dims);
}

TypeName TypeName::WithArrayDims(int dims) const { return TypeName(base_, dims); }

std::string TypeName::ToString() const {
  std::string out(is_primitive() ? std::string(PrimitiveKeyword(primitive()))
                                 : reference().binary_name());
  for (int i = 0; i < array_dims_; ++i) out += "[]";
  return out;
}

std::string_view ApiKindName(ApiKind kind) {
  switch (kind) {
    case ApiKind::kClass:
      return "class";
    case ApiKind::kField:
      return "field";
    case ApiKind::kMethod:
      return "method";
  }
  return "?";
}

bool IsValidMemberName(std::string_view name, ApiKind kind) {
  if (name.empty()) return false;
  if (kind == ApiKind::kMethod && (name == "<init>" || name == "<clinit>")) return true;
  for (char ch : name) {
    if (ch == '.' || IsReservedChar(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

ApiRef::ApiRef(ApiKind kind, ClassId cls, std::string name, std::vector<TypeName> params)
    : kind_(kind), class_(std::move(cls)), name_(std::move(name)), params_(std::move(params)) {
  if (kind_ != ApiKind::kClass && !IsValidMemberName(name_, kind_)) {
    throw InvalidIdentity("invalid " + std::string(ApiKindName(kind_)) + " name '" + name_ + "'");
  }
  switch (kind_) {
    case ApiKind::kClass:
      line_ = "C " + class_.binary_name();
      break;
    case ApiKind::kField:
      line_ = "F " + class_.binary_name() + " " + name_;
      break;
    case ApiKind::kMethod: {
      line_ = "M " + class_.binary_name() + " " + name_ + " (";
      for (size_t i = 0; i < params_.size(); ++i) {
        if (params_[i].is_primitive() && params_[i].primitive() == PrimitiveKind::kVoid) {
          throw InvalidIdentity("void parameter in method '" + name_ + "'");
        }
        if (i) line_ += ',';
        line_ += params_[i].ToString();
      }
      line_ += ')';
      break;
    }
  }
}

ApiRef ApiRef::Class(ClassId cls) { return ApiRef(ApiKind::kClass, std::move(cls), {}, {}); }

ApiRef ApiRef::Field(ClassId cls, std::string name) {
  return ApiRef(ApiKind::kField, std::move(cls), std::move(name), {});
}

ApiRef ApiRef::Method(ClassId cls, std::string name, std::vector<TypeName> params) {
  return ApiRef(ApiKind::kMethod, std::move(cls), std::move(name), std::move(params));
}

std::string CanonicalFormat(const ApiRef& api) { return api.canonical(); }

namespace {

class LineReader {
 public:
  explicit LineReader(std::string_view line) : line_(line) {}

  [[noreturn]] void Fail(const std::string& what, size_t pos) const {
    throw ParseError(what + " in '" + std::string(line_) + "'", 0, static_cast<int>(pos) + 1);
  }

  // Reads up to the next ' ' (or end); the token must be nonempty.
  std::string_view Token(const char* what) {
    size_t end = line_.find(' ', pos_);
    if (end == std::string_view::npos) end = line_.size();
    if (end == pos_) Fail(std::string("empty ") + what, pos_);
    std::string_view tok = line_.substr(pos_, end - pos_);
    start_ = pos_;
    pos_ = end;
    return tok;
  }

  void Space() {
    if (pos_ >= line_.size() || line_[pos_] != ' ') Fail("expected single space", pos_);
    ++pos_;
  }

  bool AtEnd() const { return pos_ == line_.size(); }
  size_t pos() const { return pos_; }
  size_t token_start() const { return start_; }
  std::string_view rest() const { return line_.substr(pos_); }
  void Skip(size_t n) { pos_ += n; }

 private:
  std::string_view line_;
  size_t pos_ = 0;
  size_t start_ = 0;
};

ClassId ReadClass(LineReader& in) {
  std::string_view tok = in.Token("class name");
  if (!ClassId::IsValid(tok)) in.Fail("invalid class name", in.token_start());
  return ClassId(std::string(tok));
}

}  // namespace

ApiRef ParseCanonicalLine(std::string_view line) {
  LineReader in(line);
  if (line.size() < 2) in.Fail("truncated line", line.size());
  char tag = line[0];
  if (tag != 'C' && tag != 'F' && tag != 'M') in.Fail("unknown record tag", 0);
  in.Skip(1);
  in.Space();
  ClassId cls = ReadClass(in);
  if (tag == 'C') {
    if (!in.AtEnd()) in.Fail("trailing characters", in.pos());
    return ApiRef::Class(std::move(cls));
  }
  in.Space();
  std::string_view name = in.Token("member name");
  ApiKind kind = tag == 'F' ? ApiKind::kField : ApiKind::kMethod;
  if (!IsValidMemberName(name, kind)) in.Fail("invalid member name", in.token_start());
  if (tag == 'F') {
    if (!in.AtEnd()) in.Fail("trailing characters", in.pos());
    return ApiRef::Field(std::move(cls), std::string(name));
  }
  in.Space();
  std::string_view rest = in.rest();
  size_t base = in.pos();
  if (rest.size() < 2 || rest.front() != '(') in.Fail("expected '('", base);
  if (rest.back() != ')') in.Fail("expected ')' at end of line", line.size() - 1);
  std::string_view list = rest.substr(1, rest.size() - 2);
  std::vector<TypeName> params;
  if (!list.empty()) {
    size_t start = 0;
    while (true) {
      size_t comma = list.find(',', start);
      std::string_view tok = list.substr(start, comma == std::string_view::npos ? list.npos
                                                                               : comma - start);
      size_t col = base + 1 + start;
      if (tok.empty()) in.Fail("empty type token", col);
      try {
        TypeName type = TypeName::Parse(tok);
        if (type.is_primitive() && type.primitive() == PrimitiveKind::kVoid) {
          in.Fail("void parameter type", col);
        }
        params.push_back(std::move(type));
      } catch (const InvalidIdentity&) {
        in.Fail("invalid type '" + std::string(tok) + "'", col);
      }
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  }
  return ApiRef::Method(std::move(cls), std::string(name), std::move(params));
}

}  // namespace aal
