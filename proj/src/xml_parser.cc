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

#include "aal/xml_parser.h"

#include <expat.h>

#include <algorithm>
#include <charconv>
#include <cstring>
#include <istream>
#include <memory>
#include <optional>
#include <sstream>

#include "aal/descriptor.h"

namespace aal {

namespace {

struct ParserDeleter {
  void operator()(XML_Parser parser) const { XML_ParserFree(parser); }
};

class ApiVersionsReader {
 public:
  explicit ApiVersionsReader(Diagnostics* diagnostics)
      : parser_(XML_ParserCreate("UTF-8")), diagnostics_(diagnostics) {
    XML_SetUserData(parser_.get(), this);
    XML_SetElementHandler(parser_.get(), &ApiVersionsReader::OnStart, &ApiVersionsReader::OnEnd);
  }

  XmlApiModel Read(std::istream& in) {
    char buffer[1 << 16];
    while (true) {
      in.read(buffer, sizeof(buffer));
      std::streamsize got = in.gcount();
      bool last = got < static_cast<std::streamsize>(sizeof(buffer));
      if (XML_Parse(parser_.get(), buffer, static_cast<int>(got), last) == XML_STATUS_ERROR) {
        if (error_) throw *error_;
        throw ParseError(XML_ErrorString(XML_GetErrorCode(parser_.get())),
                         static_cast<int>(XML_GetCurrentLineNumber(parser_.get())),
                         static_cast<int>(XML_GetCurrentColumnNumber(parser_.get())) + 1);
      }
      if (last) break;
    }
    if (!saw_root_) throw ParseError("missing <api> root element", 1);
    return std::move(model_);
  }

 private:
  using Attrs = const XML_Char**;

  static void OnStart(void* self, const XML_Char* name, Attrs attrs) {
    auto* reader = static_cast<ApiVersionsReader*>(self);
    if (reader->error_) return;
    try {
      reader->Start(name, attrs);
    } catch (const Error& e) {
      reader->Abort(e.what());
    }
  }

  static void OnEnd(void* self, const XML_Char* name) {
    auto* reader = static_cast<ApiVersionsReader*>(self);
    --reader->depth_;
    if (std::strcmp(name, "class") == 0) reader->current_ = nullptr;
  }

  void Abort(const std::string& message) {
    error_ = ParseError(message, Line());
    XML_StopParser(parser_.get(), XML_FALSE);
  }

  int Line() const { return static_cast<int>(XML_GetCurrentLineNumber(parser_.get())); }

  static const char* Find(Attrs attrs, const char* key) {
    for (size_t i = 0; attrs[i]; i += 2) {
      if (std::strcmp(attrs[i], key) == 0) return attrs[i + 1];
    }
    return nullptr;
  }

  std::optional<int> Level(Attrs attrs, const char* key, const std::string& path) const {
    const char* text = Find(attrs, key);
    if (!text) return std::nullopt;
    int value = 0;
    const char* end = text + std::strlen(text);
    auto [ptr, ec] = std::from_chars(text, end, value);
    if (ec != std::errc() || ptr != end || value < 1) {
      throw Error(path + ": bad " + key + "=\"" + text + "\"");
    }
    return value;
  }

  Lifetime ReadLifetime(Attrs attrs, const Lifetime& parent, const std::string& path) {
    Lifetime life;
    life.since = Level(attrs, "since", path).value_or(parent.since);
    life.deprecated = Level(attrs, "deprecated", path);
    life.removed = Level(attrs, "removed", path);
    if (!life.removed) life.removed = parent.removed;
    if (diagnostics_ && ((life.deprecated && *life.deprecated < life.since) ||
                         (life.removed && *life.removed < life.since))) {
      diagnostics_->Add(path + ": lifetime ends before it starts", Line());
    }
    return life;
  }

  void Start(const XML_Char* name, Attrs attrs) {
    ++depth_;
    std::string_view element(name);
    if (depth_ == 1) {
      if (element != "api") throw Error("root element is <" + std::string(element) + ">, not <api>");
      saw_root_ = true;
      root_.since = Level(attrs, "min", "/api").value_or(1);
      return;
    }
    if (element == "class" && depth_ == 2) {
      const char* cls = Find(attrs, "name");
      if (!cls) throw Error("/api/class: missing name");
      std::string path = std::string("/api/class[") + cls + "]";
      ClassId id = [&] {
        try {
          return ClassIdFromInternalName(cls);
        } catch (const Error& e) {
          throw Error(path + ": " + e.what());
        }
      }();
      model_.classes.push_back(XmlClass{std::move(id), ReadLifetime(attrs, root_, path), {}, {}, {}});
      current_ = &model_.classes.back();
      current_path_ = std::move(path);
      return;
    }
    if (!current_ || depth_ != 3) return;  // <sdk> and other extras
    const char* attr_name = Find(attrs, "name");
    if (!attr_name) throw Error(current_path_ + "/" + std::string(element) + ": missing name");
    std::string path = current_path_ + "/" + std::string(element) + "[" + attr_name + "]";
    try {
      if (element == "extends" || element == "implements") {
        auto& list = element == "extends" ? current_->extends : current_->implements;
        list.push_back(ClassIdFromInternalName(attr_name));
      } else if (element == "field") {
        current_->members.push_back(
            XmlMember{ApiRef::Field(current_->id, attr_name), ReadLifetime(attrs, current_->lifetime, path)});
      } else if (element == "method") {
        std::string_view text(attr_name);
        size_t paren = text.find('(');
        if (paren == std::string_view::npos) throw Error("method without descriptor");
        std::string method_name(text.substr(0, paren));
        if (method_name == "<clinit>") return;
        MethodDescriptor desc = ParseMethodDescriptor(text.substr(paren));
        current_->members.push_back(
            XmlMember{ApiRef::Method(current_->id, std::move(method_name), std::move(desc.params)),
                      ReadLifetime(attrs, current_->lifetime, path)});
      }
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      std::string what = e.what();
      if (what.starts_with(path)) throw;
      throw Error(path + ": " + what);
    }
  }

  std::unique_ptr<std::remove_pointer_t<XML_Parser>, ParserDeleter> parser_;
  Diagnostics* diagnostics_;
  XmlApiModel model_;
  XmlClass* current_ = nullptr;
  std::string current_path_;
  Lifetime root_;
  int depth_ = 0;
  bool saw_root_ = false;
  std::optional<ParseError> error_;
};

}  // namespace

int XmlApiModel::MaxLevel() const {
  int level = 0;
  auto bump = [&level](const Lifetime& life) {
    level = std::max({level, life.since, life.deprecated.value_or(0), life.removed.value_or(0)});
  };
  for (const XmlClass& cls : classes) {
    bump(cls.lifetime);
    for (const XmlMember& member : cls.members) bump(member.lifetime);
  }
  return level;
}

XmlApiModel ParseApiVersions(std::istream& in, Diagnostics* diagnostics) {
  ApiVersionsReader reader(diagnostics);
  return reader.Read(in);
}

XmlApiModel ParseApiVersions(std::string_view text, Diagnostics* diagnostics) {
  std::istringstream in{std::string(text)};
  return ParseApiVersions(in, diagnostics);
}

AalSnapshot SnapshotAt(const XmlApiModel& model, int api_level, const ParseOptions& options) {
  AalSnapshot snapshot;
  snapshot.kind = SourceKind::kXml;
  snapshot.api_level = api_level;
  auto available = [api_level](const Lifetime& life) {
    return life.since <= api_level && (!life.removed || *life.removed > api_level);
  };
  auto add = [&](const ApiRef& api, const Lifetime& life) {
    if (!available(life) || !options.Keeps(api)) return;
    snapshot.apis.insert(api);
    snapshot.lifetime[api] = life;
  };
  for (const XmlClass& cls : model.classes) {
    add(ApiRef::Class(cls.id), cls.lifetime);
    for (const XmlMember& member : cls.members) add(member.api, member.lifetime);
  }
  return snapshot;
}

}  // namespace aal
