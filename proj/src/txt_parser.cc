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
// Recursive descent parser for signature files. The parser keeps the
// current package, the current class and the active type-parameter bounds,
// and collects classes, fields and methods as it goes:
//
//   file       := package*
//   package    := "package" QualName "{" class* "}"
//   class      := Annotation* Modifier* ClassKw QualName TypeParams? Supers "{" member* "}"
//   member     := ("ctor" | "method" | "field" | "enum_constant" | "property") ... ";"
//   TypeParams := "<" Ident ("extends" Type ("&" Type)*)? ("," ...)* ">"

#include "aal/txt_parser.h"

#include <cctype>
#include <istream>
#include <iterator>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace aal {

namespace {

// Public types of java.lang; signature files write these without a package.
const std::set<std::string, std::less<>>& JavaLangNames() {
  static const std::set<std::string, std::less<>> kNames = {
      "AbstractMethodError", "Appendable", "ArithmeticException",
      "ArrayIndexOutOfBoundsException", "ArrayStoreException", "AssertionError",
      "AutoCloseable", "Boolean", "BootstrapMethodError", "Byte", "Character",
      "CharSequence", "Class", "ClassCastException", "ClassCircularityError",
      "ClassFormatError", "ClassLoader", "ClassNotFoundException", "ClassValue",
      "CloneNotSupportedException", "Cloneable", "Comparable", "Compiler", "Deprecated",
      "Double", "Enum", "EnumConstantNotPresentException", "Error", "Exception",
      "ExceptionInInitializerError", "Float", "FunctionalInterface", "IllegalAccessError",
      "IllegalAccessException", "IllegalArgumentException", "IllegalCallerException",
      "IllegalMonitorStateException", "IllegalStateException", "IllegalThreadStateException",
      "IncompatibleClassChangeError", "IndexOutOfBoundsException", "InheritableThreadLocal",
      "InstantiationError", "InstantiationException", "Integer", "InternalError",
      "InterruptedException", "Iterable", "LinkageError", "Long", "MatchException", "Math",
      "Module", "ModuleLayer", "NegativeArraySizeException", "NoClassDefFoundError",
      "NoSuchFieldError", "NoSuchFieldException", "NoSuchMethodError", "NoSuchMethodException",
      "NullPointerException", "Number", "NumberFormatException", "Object", "OutOfMemoryError",
      "Override", "Package", "Process", "ProcessBuilder", "ProcessHandle", "Readable", "Record",
      "ReflectiveOperationException", "Runnable", "Runtime", "RuntimeException",
      "RuntimePermission", "SafeVarargs", "SecurityException", "SecurityManager", "Short",
      "StackOverflowError", "StackTraceElement", "StackWalker", "StrictMath", "String",
      "StringBuffer", "StringBuilder", "StringIndexOutOfBoundsException", "SuppressWarnings",
      "System", "Thread", "ThreadDeath", "ThreadGroup", "ThreadLocal", "Throwable",
      "TypeNotPresentException", "UnknownError", "UnsatisfiedLinkError",
      "UnsupportedClassVersionError", "UnsupportedOperationException", "VerifyError",
      "VirtualMachineError", "Void",
  };
  return kNames;
}

bool IsClassKeyword(std::string_view word) {
  return word == "class" || word == "interface" || word == "enum" || word == "record";
}

bool IsMemberModifier(std::string_view word) {
  static const std::set<std::string, std::less<>> kModifiers = {
      "public", "protected", "private", "internal", "static", "final", "abstract",
      "native", "synchronized", "transient", "volatile", "default", "sealed", "strictfp",
      "deprecated", "open", "inline", "infix", "operator", "suspend", "tailrec", "external",
      "const", "lateinit", "value", "data", "fun",
  };
  return kModifiers.contains(word);
}

bool IsParamModifier(std::string_view word) {
  return word == "final" || word == "vararg" || word == "optional" || word == "noinline" ||
         word == "crossinline";
}

// ---------------------------------------------------------------------------
// Lexer

enum class TokenKind { kIdent, kNumber, kString, kPunct, kEllipsis, kEnd };

struct Token {
  TokenKind kind;
  std::string_view text;
  int line;
  int column;
};

bool IsIdentStart(unsigned char ch) { return std::isalpha(ch) || ch == '_' || ch == '$' || ch >= 0x80; }
bool IsIdentPart(unsigned char ch) { return IsIdentStart(ch) || std::isdigit(ch); }

std::vector<Token> Lex(std::string_view src) {
  std::vector<Token> out;
  size_t i = 0;
  int line = 1;
  size_t line_start = 0;
  auto column = [&](size_t pos) { return static_cast<int>(pos - line_start) + 1; };
  while (i < src.size()) {
    unsigned char ch = src[i];
    if (ch == '\n') {
      ++i;
      ++line;
      line_start = i;
      continue;
    }
    if (std::isspace(ch)) {
      ++i;
      continue;
    }
    if (ch == '/' && i + 1 < src.size() && src[i + 1] == '/') {
      while (i < src.size() && src[i] != '\n') ++i;
      continue;
    }
    if (ch == '/' && i + 1 < src.size() && src[i + 1] == '*') {
      size_t end = src.find("*/", i + 2);
      if (end == std::string_view::npos) throw ParseError("unterminated comment", line, column(i));
      for (size_t k = i; k < end; ++k) {
        if (src[k] == '\n') {
          ++line;
          line_start = k + 1;
        }
      }
      i = end + 2;
      continue;
    }
    size_t start = i;
    int col = column(i);
    if (IsIdentStart(ch)) {
      while (i < src.size() && IsIdentPart(src[i])) ++i;
      out.push_back({TokenKind::kIdent, src.substr(start, i - start), line, col});
    } else if (std::isdigit(ch)) {
      while (i < src.size()) {
        unsigned char c = src[i];
        if (std::isalnum(c) || c == '.' || c == '_') {
          ++i;
        } else if ((c == '+' || c == '-') &&
                   (src[i - 1] == 'e' || src[i - 1] == 'E' || src[i - 1] == 'p' ||
                    src[i - 1] == 'P')) {
          ++i;
        } else {
          break;
        }
      }
      out.push_back({TokenKind::kNumber, src.substr(start, i - start), line, col});
    } else if (ch == '"' || ch == '\'') {
      ++i;
      while (i < src.size() && src[i] != ch) {
        if (src[i] == '\\') ++i;
        if (i < src.size() && src[i] == '\n') throw ParseError("newline in literal", line, col);
        ++i;
      }
      if (i >= src.size()) throw ParseError("unterminated literal", line, col);
      ++i;
      out.push_back({TokenKind::kString, src.substr(start, i - start), line, col});
    } else if (src.substr(i, 3) == "...") {
      i += 3;
      out.push_back({TokenKind::kEllipsis, src.substr(start, 3), line, col});
    } else {
      ++i;
      out.push_back({TokenKind::kPunct, src.substr(start, 1), line, col});
    }
  }
  out.push_back({TokenKind::kEnd, {}, line, column(i)});
  return out;
}

// ---------------------------------------------------------------------------
// Types

// A type as written, before resolution: dotted segments plus array depth.
struct SourceType {
  std::vector<std::string> segments;
  int dims = 0;
  int line = 0;
  int column = 0;
};

std::string Join(const std::vector<std::string>& parts, size_t begin, size_t end, char sep) {
  std::string out;
  for (size_t i = begin; i < end; ++i) {
    if (i > begin) out += sep;
    out += parts[i];
  }
  return out;
}

// Maps written names onto binary class names.
class TypeResolver {
 public:
  void DeclarePackage(const std::string& pkg) { packages_.insert(pkg); }
  void DeclareTopLevel(const std::string& pkg, const std::string& simple) {
    top_level_[simple].insert(pkg);
  }

  ClassId Resolve(const SourceType& type, const std::string& current_package,
                  Diagnostics* diagnostics) const {
    const std::vector<std::string>& segs = type.segments;
    // Longest declared package prefix.
    for (size_t k = segs.size() - 1; k >= 1; --k) {
      std::string pkg = Join(segs, 0, k, '.');
      if (packages_.contains(pkg)) return Make(pkg, segs, k, type);
    }
    if (auto pkg = PackageOfSimple(segs[0], current_package)) return Make(*pkg, segs, 0, type);
    if (segs.size() > 1) {
      size_t first_upper = segs.size() - 1;
      for (size_t i = 0; i < segs.size(); ++i) {
        if (std::isupper(static_cast<unsigned char>(segs[i][0]))) {
          first_upper = i;
          break;
        }
      }
      if (first_upper > 0) return Make(Join(segs, 0, first_upper, '.'), segs, first_upper, type);
    }
    if (diagnostics) {
      diagnostics->Add("unresolved type name '" + Join(segs, 0, segs.size(), '.') + "' kept verbatim",
                       type.line);
    }
    return Make("", segs, 0, type);
  }

 private:
  std::optional<std::string> PackageOfSimple(const std::string& simple,
                                             const std::string& current_package) const {
    if (JavaLangNames().contains(simple)) return std::string("java.lang");
    auto it = top_level_.find(simple);
    if (it == top_level_.end()) return std::nullopt;
    if (it->second.contains(current_package)) return current_package;
    if (it->second.size() == 1) return *it->second.begin();
    return std::nullopt;
  }

  static ClassId Make(const std::string& pkg, const std::vector<std::string>& segs, size_t k,
                      const SourceType& type) {
    std::string name = pkg.empty() ? std::string() : pkg + ".";
    name += Join(segs, k, segs.size(), '$');
    if (!ClassId::IsValid(name)) {
      throw ParseError("invalid type name '" + name + "'", type.line, type.column);
    }
    return ClassId(std::move(name));
  }

  std::set<std::string, std::less<>> packages_;
  std::map<std::string, std::set<std::string>, std::less<>> top_level_;
};

TypeName ResolveType(const SourceType& type, const TypeBounds& bounds, const TypeResolver& resolver,
                     const std::string& current_package, Diagnostics* diagnostics) {
  if (type.segments.size() == 1) {
    const std::string& name = type.segments[0];
    PrimitiveKind kind;
    if (PrimitiveFromKeyword(name, &kind)) {
      if (kind == PrimitiveKind::kVoid && type.dims > 0) {
        throw ParseError("array of void", type.line, type.column);
      }
      return TypeName::Primitive(kind, type.dims);
    }
    if (auto it = bounds.find(name); it != bounds.end()) {
      return it->second.WithArrayDims(it->second.array_dims() + type.dims);
    }
  }
  return TypeName::Reference(resolver.Resolve(type, current_package, diagnostics), type.dims);
}

const TypeName& ObjectType() {
  static const TypeName kObject = TypeName::Reference(ClassId("java.lang.Object"));
  return kObject;
}

// ---------------------------------------------------------------------------
// Token cursor with the type grammar shared by file parsing and EraseType.

class Cursor {
 public:
  explicit Cursor(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  const Token& Peek(size_t ahead = 0) const {
    size_t i = pos_ + ahead;
    return i < tokens_.size() ? tokens_[i] : tokens_.back();
  }
  const Token& Next() {
    const Token& tok = Peek();
    if (tok.kind != TokenKind::kEnd) ++pos_;
    return tok;
  }
  bool AtEnd() const { return Peek().kind == TokenKind::kEnd; }
  bool IsPunct(char ch, size_t ahead = 0) const {
    const Token& tok = Peek(ahead);
    return tok.kind == TokenKind::kPunct && tok.text[0] == ch;
  }
  bool IsIdent(std::string_view word, size_t ahead = 0) const {
    const Token& tok = Peek(ahead);
    return tok.kind == TokenKind::kIdent && tok.text == word;
  }
  bool IsAnyIdent(size_t ahead = 0) const { return Peek(ahead).kind == TokenKind::kIdent; }

  [[noreturn]] void Fail(const std::string& message) const { Fail(message, Peek()); }
  [[noreturn]] static void Fail(const std::string& message, const Token& at) {
    std::string near = at.kind == TokenKind::kEnd ? "end of input" : "'" + std::string(at.text) + "'";
    throw ParseError(message + " near " + near, at.line, at.column);
  }

  void ExpectPunct(char ch) {
    if (!IsPunct(ch)) Fail(std::string("expected '") + ch + "'");
    Next();
  }
  std::string ExpectIdent(const char* what) {
    if (!IsAnyIdent()) Fail(std::string("expected ") + what);
    return std::string(Next().text);
  }

  // Ident ("." Ident)*
  std::vector<std::string> QualifiedName(const char* what) {
    std::vector<std::string> segs{ExpectIdent(what)};
    while (IsPunct('.') && IsAnyIdent(1)) {
      Next();
      segs.push_back(std::string(Next().text));
    }
    return segs;
  }

  // "@" QualName ("(" ... ")")? repeated. Leaves "@interface" alone.
  void SkipAnnotations() {
    while (IsPunct('@') && !IsIdent("interface", 1)) {
      Next();
      QualifiedName("annotation name");
      if (IsPunct('(')) SkipBalanced('(', ')');
    }
  }

  // Skips from an opening delimiter to its match.
  void SkipBalanced(char open, char close) {
    const Token& start = Peek();
    ExpectPunct(open);
    int depth = 1;
    while (depth > 0) {
      if (AtEnd()) Fail(std::string("unbalanced '") + open + "'", start);
      if (IsPunct(open)) ++depth;
      if (IsPunct(close)) --depth;
      Next();
    }
  }

  // Type arguments are deleted wholesale; only balance is checked.
  void SkipTypeArguments() {
    const Token& start = Peek();
    ExpectPunct('<');
    int depth = 1;
    while (depth > 0) {
      if (AtEnd() || IsPunct(';') || IsPunct('{') || IsPunct('}')) {
        Fail("unbalanced angle bracket", start);
      }
      if (IsPunct('<')) ++depth;
      if (IsPunct('>')) --depth;
      Next();
    }
  }

  void SkipNullability() {
    while (IsPunct('?') || IsPunct('!')) Next();
  }

  SourceType Type() {
    SkipAnnotations();
    SourceType type;
    type.line = Peek().line;
    type.column = Peek().column;
    type.segments.push_back(ExpectIdent("type name"));
    if (IsPunct('<')) SkipTypeArguments();
    while (IsPunct('.') && IsAnyIdent(1)) {
      Next();
      type.segments.push_back(std::string(Next().text));
      if (IsPunct('<')) SkipTypeArguments();
    }
    SkipNullability();
    while (true) {
      SkipAnnotations();
      if (IsPunct('[') && IsPunct(']', 1)) {
        Next();
        Next();
        ++type.dims;
        SkipNullability();
        continue;
      }
      break;
    }
    if (Peek().kind == TokenKind::kEllipsis) {
      Next();
      ++type.dims;
      SkipNullability();
    }
    return type;
  }

  struct TypeParam {
    std::string name;
    std::optional<SourceType> bound;  // first bound of an intersection
  };

  std::vector<TypeParam> TypeParams() {
    std::vector<TypeParam> params;
    ExpectPunct('<');
    while (true) {
      SkipAnnotations();
      while (IsAnyIdent(1) && (IsIdent("reified") || IsIdent("in") || IsIdent("out"))) Next();
      TypeParam param{ExpectIdent("type parameter"), std::nullopt};
      if (IsIdent("extends")) {
        Next();
        param.bound = Type();
        while (IsPunct('&')) {
          Next();
          Type();
        }
      }
      params.push_back(std::move(param));
      if (IsPunct(',')) {
        Next();
        continue;
      }
      if (IsPunct('>')) {
        Next();
        break;
      }
      Fail("malformed type parameter list");
    }
    return params;
  }

  // Skips to the next ';' outside any bracket and consumes it.
  void SkipStatement() {
    int depth = 0;
    while (true) {
      if (AtEnd()) Fail("expected ';'");
      if (depth == 0 && IsPunct(';')) {
        Next();
        return;
      }
      if (depth == 0 && IsPunct('}')) Fail("expected ';'");
      if (IsPunct('(') || IsPunct('{') || IsPunct('[')) ++depth;
      if (IsPunct(')') || IsPunct('}') || IsPunct(']')) --depth;
      Next();
    }
  }

 private:
  std::vector<Token> tokens_;
  size_t pos_ = 0;
};

TypeBounds BindTypeParams(const std::vector<Cursor::TypeParam>& params, const TypeBounds& outer,
                          const TypeResolver& resolver, const std::string& current_package,
                          Diagnostics* diagnostics) {
  TypeBounds bounds = outer;
  // Unbounded parameters erase to Object. Bounds are resolved twice so a
  // bound naming a later parameter of the same list sees its final value.
  for (const auto& param : params) bounds.insert_or_assign(param.name, ObjectType());
  for (int pass = 0; pass < 2; ++pass) {
    for (const auto& param : params) {
      if (param.bound) {
        bounds.insert_or_assign(
            param.name, ResolveType(*param.bound, bounds, resolver, current_package,
                                    pass == 1 ? diagnostics : nullptr));
      }
    }
  }
  return bounds;
}

// ---------------------------------------------------------------------------
// File parser

class TxtParser {
 public:
  TxtParser(std::string_view text, int api_level, const ParseOptions& options,
            Diagnostics* diagnostics)
      : cursor_(Lex(text)), options_(options), diagnostics_(diagnostics) {
    snapshot_.kind = SourceKind::kTxt;
    snapshot_.api_level = api_level;
    DeclareNames(Lex(text));
  }

  AalSnapshot Parse() {
    while (!cursor_.AtEnd()) {
      if (!cursor_.IsIdent("package")) cursor_.Fail("expected 'package'");
      Package();
    }
    return std::move(snapshot_);
  }

 private:
  // Pre-pass collecting declared packages and top-level class names so that
  // types referenced before their declaration resolve.
  void DeclareNames(const std::vector<Token>& tokens) {
    int depth = 0;
    std::string pkg;
    for (size_t i = 0; i < tokens.size(); ++i) {
      const Token& tok = tokens[i];
      if (tok.kind == TokenKind::kPunct) {
        if (tok.text == "{") ++depth;
        if (tok.text == "}") --depth;
        continue;
      }
      if (tok.kind != TokenKind::kIdent) continue;
      if (depth == 0 && tok.text == "package") {
        pkg.clear();
        size_t k = i + 1;
        while (k < tokens.size() && tokens[k].kind == TokenKind::kIdent) {
          if (!pkg.empty()) pkg += '.';
          pkg += tokens[k].text;
          if (k + 1 < tokens.size() && tokens[k + 1].text == ".") {
            k += 2;
          } else {
            break;
          }
        }
        resolver_.DeclarePackage(pkg);
      } else if (depth == 1 && IsClassKeyword(tok.text) && i + 1 < tokens.size() &&
                 tokens[i + 1].kind == TokenKind::kIdent) {
        resolver_.DeclareTopLevel(pkg, std::string(tokens[i + 1].text));
      }
    }
  }

  // rule 1: package definition
  void Package() {
    cursor_.Next();
    std::vector<std::string> segs = cursor_.QualifiedName("package name");
    package_ = Join(segs, 0, segs.size(), '.');
    cursor_.ExpectPunct('{');
    while (!cursor_.IsPunct('}')) {
      if (cursor_.AtEnd()) cursor_.Fail("unterminated package");
      Class();
    }
    cursor_.Next();
    package_.clear();
  }

  // rule 2: class definition
  void Class() {
    while (true) {
      cursor_.SkipAnnotations();
      if (cursor_.IsPunct('@') && cursor_.IsIdent("interface", 1)) {
        cursor_.Next();
        break;
      }
      if (!cursor_.IsAnyIdent()) cursor_.Fail("expected class declaration");
      std::string_view word = cursor_.Peek().text;
      if (IsClassKeyword(word)) break;
      if (word == "package" || word == "method" || word == "field" || word == "ctor") {
        cursor_.Fail("expected class declaration");
      }
      cursor_.Next();  // modifier
    }
    cursor_.Next();  // class keyword
    std::vector<std::string> path = cursor_.QualifiedName("class name");
    std::string name = package_.empty() ? std::string() : package_ + ".";
    name += Join(path, 0, path.size(), '$');
    if (!ClassId::IsValid(name)) cursor_.Fail("invalid class name '" + name + "'");
    current_class_ = ClassId(std::move(name));

    class_bounds_.clear();
    if (cursor_.IsPunct('<')) {
      class_bounds_ = BindTypeParams(cursor_.TypeParams(), {}, resolver_, package_, diagnostics_);
    }
    // extends / implements clauses carry no identity.
    while (!cursor_.IsPunct('{')) {
      if (cursor_.AtEnd() || cursor_.IsPunct(';') || cursor_.IsPunct('}')) {
        cursor_.Fail("expected '{' after class header");
      }
      if (cursor_.IsPunct('<')) {
        cursor_.SkipTypeArguments();
      } else {
        cursor_.Next();
      }
    }
    cursor_.Next();
    Add(ApiRef::Class(*current_class_));

    while (!cursor_.IsPunct('}')) {
      if (cursor_.AtEnd()) cursor_.Fail("unterminated class body");
      Member();
    }
    cursor_.Next();
    current_class_.reset();
    class_bounds_.clear();
    bounds_.clear();
  }

  void Member() {
    const Token& head = cursor_.Peek();
    if (head.kind != TokenKind::kIdent) Cursor::Fail("expected member declaration", head);
    bounds_ = class_bounds_;
    if (head.text == "method") {
      cursor_.Next();
      Method(/*constructor=*/false);
    } else if (head.text == "ctor") {
      cursor_.Next();
      Method(/*constructor=*/true);
    } else if (head.text == "field" || head.text == "enum_constant") {
      cursor_.Next();
      Field();
    } else if (head.text == "property") {
      cursor_.Next();
      cursor_.SkipStatement();
    } else {
      Cursor::Fail("unknown member keyword '" + std::string(head.text) + "'", head);
    }
    bounds_.clear();
  }

  void SkipModifiers() {
    while (true) {
      cursor_.SkipAnnotations();
      if (cursor_.IsAnyIdent() && IsMemberModifier(cursor_.Peek().text)) {
        cursor_.Next();
        continue;
      }
      return;
    }
  }

  // rule 3: field definition
  void Field() {
    SkipModifiers();
    cursor_.Type();
    std::string name = cursor_.ExpectIdent("field name");
    if (cursor_.IsPunct('=')) {
      cursor_.SkipStatement();
    } else {
      cursor_.ExpectPunct(';');
    }
    Add(ApiRef::Field(*current_class_, std::move(name)));
  }

  // rule 4: method declaration (and constructors, named <init>)
  void Method(bool constructor) {
    SkipModifiers();
    if (cursor_.IsPunct('<')) {
      // rules 5.1 / 5.2: method type parameters shadow the class's.
      bounds_ = BindTypeParams(cursor_.TypeParams(), class_bounds_, resolver_, package_,
                               diagnostics_);
      SkipModifiers();
    }
    std::string name;
    if (constructor) {
      cursor_.QualifiedName("constructor name");
      name = "<init>";
    } else {
      cursor_.Type();  // return type is not part of the identity
      name = cursor_.ExpectIdent("method name");
    }
    std::vector<TypeName> params = Parameters();
    if (!cursor_.IsPunct(';')) {
      // throws clause, annotation default value
      if (!cursor_.IsIdent("throws") && !cursor_.IsIdent("default")) {
        cursor_.Fail("expected ';' after parameter list");
      }
    }
    cursor_.SkipStatement();
    Add(ApiRef::Method(*current_class_, std::move(name), std::move(params)));
    bounds_.clear();
  }

  std::vector<TypeName> Parameters() {
    std::vector<TypeName> params;
    cursor_.ExpectPunct('(');
    if (cursor_.IsPunct(')')) {
      cursor_.Next();
      return params;
    }
    while (true) {
      cursor_.SkipAnnotations();
      while (cursor_.IsAnyIdent() && IsParamModifier(cursor_.Peek().text) &&
             (cursor_.IsAnyIdent(1) || cursor_.IsPunct('@', 1))) {
        cursor_.Next();
        cursor_.SkipAnnotations();
      }
      SourceType type = cursor_.Type();
      // rule 6: type parameter names resolve through the bounds.
      params.push_back(ResolveType(type, bounds_, resolver_, package_, diagnostics_));
      if (cursor_.IsAnyIdent()) cursor_.Next();  // parameter name
      if (cursor_.IsPunct('=')) SkipDefaultValue();
      if (cursor_.IsPunct(',')) {
        cursor_.Next();
        continue;
      }
      cursor_.ExpectPunct(')');
      return params;
    }
  }

  void SkipDefaultValue() {
    cursor_.Next();
    int depth = 0;
    while (true) {
      if (cursor_.AtEnd() || cursor_.IsPunct(';')) cursor_.Fail("unterminated default value");
      if (depth == 0 && (cursor_.IsPunct(',') || cursor_.IsPunct(')'))) return;
      if (cursor_.IsPunct('(') || cursor_.IsPunct('{') || cursor_.IsPunct('[')) ++depth;
      if (cursor_.IsPunct(')') || cursor_.IsPunct('}') || cursor_.IsPunct(']')) --depth;
      cursor_.Next();
    }
  }

  void Add(const ApiRef& api) {
    if (options_.Keeps(api)) snapshot_.apis.insert(api);
  }

  Cursor cursor_;
  const ParseOptions& options_;
  Diagnostics* diagnostics_;
  TypeResolver resolver_;

  std::string package_;                  // phi
  std::optional<ClassId> current_class_;  // theta
  TypeBounds class_bounds_;
  TypeBounds bounds_;                    // omega
  AalSnapshot snapshot_;                 // C, F, M
};

}  // namespace

TypeName EraseType(std::string_view source_type, const TypeBounds& bounds,
                   Diagnostics* diagnostics) {
  Cursor cursor(Lex(source_type));
  SourceType type = cursor.Type();
  if (!cursor.AtEnd()) {
    if (cursor.IsPunct('>')) cursor.Fail("unbalanced angle bracket");
    cursor.Fail("trailing tokens after type");
  }
  TypeResolver resolver;
  return ResolveType(type, bounds, resolver, "", diagnostics);
}

AalSnapshot ParseTxt(std::string_view text, int api_level, const ParseOptions& options,
                     Diagnostics* diagnostics) {
  TxtParser parser(text, api_level, options, diagnostics);
  return parser.Parse();
}

AalSnapshot ParseTxt(std::istream& in, int api_level, const ParseOptions& options,
                     Diagnostics* diagnostics) {
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return ParseTxt(std::string_view(text), api_level, options, diagnostics);
}

}  // namespace aal
