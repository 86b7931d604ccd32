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

#include "aal/class_file.h"

#include <algorithm>
#include <optional>
#include <string_view>

#include "aal/descriptor.h"
#include "aal/error.h"

namespace aal {

namespace {

constexpr uint32_t kMagic = 0xCAFEBABE;
constexpr uint16_t kMinMajorVersion = 45;  // JDK 1.1
constexpr uint16_t kMaxMajorVersion = 70;  // Java 26

// See JVMS Table 4.4-A.
enum ConstantTag : uint8_t {
  kUtf8 = 1,
  kInteger = 3,
  kFloat = 4,
  kLong = 5,
  kDouble = 6,
  kClass = 7,
  kString = 8,
  kFieldref = 9,
  kMethodref = 10,
  kInterfaceMethodref = 11,
  kNameAndType = 12,
  kMethodHandle = 15,
  kMethodType = 16,
  kDynamic = 17,
  kInvokeDynamic = 18,
  kModule = 19,
  kPackage = 20,
};

class ByteReader {
 public:
  explicit ByteReader(std::span<const uint8_t> data) : data_(data) {}

  uint8_t U1() {
    Need(1);
    return data_[pos_++];
  }
  uint16_t U2() {
    Need(2);
    uint16_t v = static_cast<uint16_t>(data_[pos_] << 8 | data_[pos_ + 1]);
    pos_ += 2;
    return v;
  }
  uint32_t U4() {
    uint32_t hi = U2();
    return hi << 16 | U2();
  }
  std::string_view Bytes(size_t n) {
    Need(n);
    std::string_view out(reinterpret_cast<const char*>(data_.data() + pos_), n);
    pos_ += n;
    return out;
  }
  void Skip(size_t n) {
    Need(n);
    pos_ += n;
  }

 private:
  void Need(size_t n) const {
    if (data_.size() - pos_ < n) throw FormatError("class file truncated");
  }

  std::span<const uint8_t> data_;
  size_t pos_ = 0;
};

// Only Utf8 and Class entries are retained; everything else is skipped by
// size.
class ConstantPool {
 public:
  explicit ConstantPool(ByteReader& in) {
    uint16_t count = in.U2();
    if (count == 0) throw FormatError("class file: empty constant pool count");
    tags_.assign(count, 0);
    utf8_.resize(count);
    class_name_index_.assign(count, 0);
    for (uint16_t i = 1; i < count; ++i) {
      uint8_t tag = in.U1();
      tags_[i] = tag;
      switch (tag) {
        case kUtf8:
          utf8_[i] = std::string(in.Bytes(in.U2()));
          break;
        case kClass:
          class_name_index_[i] = in.U2();
          break;
        case kString:
        case kMethodType:
        case kModule:
        case kPackage:
          in.Skip(2);
          break;
        case kMethodHandle:
          in.Skip(3);
          break;
        case kInteger:
        case kFloat:
        case kFieldref:
        case kMethodref:
        case kInterfaceMethodref:
        case kNameAndType:
        case kDynamic:
        case kInvokeDynamic:
          in.Skip(4);
          break;
        case kLong:
        case kDouble:
          in.Skip(8);
          ++i;  // occupies two slots
          break;
        default:
          throw FormatError("class file: unknown constant tag " + std::to_string(tag) +
                            " at index " + std::to_string(i));
      }
    }
  }

  const std::string& Utf8(uint16_t index) const {
    if (index == 0 || index >= tags_.size() || tags_[index] != kUtf8) {
      throw FormatError("class file: index " + std::to_string(index) + " is not a Utf8 entry");
    }
    return utf8_[index];
  }

  const std::string& ClassName(uint16_t index) const {
    if (index == 0 || index >= tags_.size() || tags_[index] != kClass) {
      throw FormatError("class file: index " + std::to_string(index) + " is not a Class entry");
    }
    return Utf8(class_name_index_[index]);
  }

 private:
  std::vector<uint8_t> tags_;
  std::vector<std::string> utf8_;
  std::vector<uint16_t> class_name_index_;
};

void SkipAttributes(ByteReader& in) {
  uint16_t count = in.U2();
  for (uint16_t i = 0; i < count; ++i) {
    in.U2();
    in.Skip(in.U4());
  }
}

}  // namespace

Visibility VisibilityFromAccess(uint16_t access_flags) {
  if (access_flags & kAccPublic) return Visibility::kPublic;
  if (access_flags & kAccProtected) return Visibility::kProtected;
  if (access_flags & kAccPrivate) return Visibility::kPrivate;
  return Visibility::kPackage;
}

ParsedClass ParseClassFile(std::span<const uint8_t> bytes) {
  ByteReader in(bytes);
  if (in.U4() != kMagic) throw FormatError("class file: bad magic");
  in.U2();  // minor
  uint16_t major = in.U2();
  if (major < kMinMajorVersion || major > kMaxMajorVersion) {
    throw FormatError("class file: unsupported major version " + std::to_string(major));
  }
  ConstantPool pool(in);
  uint16_t access = in.U2();
  ClassId id = ClassIdFromInternalName(pool.ClassName(in.U2()));
  in.U2();  // super_class, may be 0 for java.lang.Object
  in.Skip(2 * static_cast<size_t>(in.U2()));  // interfaces

  ParsedClass out{std::move(id), access, {}, {}};
  uint16_t field_count = in.U2();
  for (uint16_t i = 0; i < field_count; ++i) {
    uint16_t flags = in.U2();
    const std::string& name = pool.Utf8(in.U2());
    TypeName type = JniTypeToTypeName(pool.Utf8(in.U2()));
    SkipAttributes(in);
    out.fields.push_back(ParsedField{name, std::move(type), flags});
  }

  uint16_t method_count = in.U2();
  for (uint16_t i = 0; i < method_count; ++i) {
    uint16_t flags = in.U2();
    const std::string& name = pool.Utf8(in.U2());
    MethodDescriptor desc = ParseMethodDescriptor(pool.Utf8(in.U2()));
    SkipAttributes(in);
    if (name == "<clinit>") continue;

    ParsedMethod method{name, std::move(desc.params), std::move(desc.return_type), flags};
    auto same = std::find_if(out.methods.begin(), out.methods.end(), [&](const ParsedMethod& m) {
      return m.name == method.name && m.params == method.params;
    });
    if (same == out.methods.end()) {
      out.methods.push_back(std::move(method));
    } else if ((same->access_flags & kAccBridge) && !(method.access_flags & kAccBridge)) {
      *same = std::move(method);  // covariant bridge collapses into its target
    }
  }
  SkipAttributes(in);
  return out;
}

}  // namespace aal
