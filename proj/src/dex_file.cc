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

#include "aal/dex_file.h"

#include <array>
#include <cctype>
#include <cstring>

namespace aal {

namespace {

constexpr size_t kHeaderSize = 0x70;
constexpr uint32_t kEndianConstant = 0x12345678;
constexpr uint16_t kPackedSwitchSignature = 0x0100;
constexpr uint16_t kSparseSwitchSignature = 0x0200;
constexpr uint16_t kFillArrayDataSignature = 0x0300;

uint32_t ReadU4(std::span<const uint8_t> b, size_t off) {
  if (off > b.size() || b.size() - off < 4) throw FormatError("dex: truncated at offset " + std::to_string(off));
  return uint32_t{b[off]} | uint32_t{b[off + 1]} << 8 | uint32_t{b[off + 2]} << 16 |
         uint32_t{b[off + 3]} << 24;
}

uint16_t ReadU2(std::span<const uint8_t> b, size_t off) {
  if (off > b.size() || b.size() - off < 2) throw FormatError("dex: truncated at offset " + std::to_string(off));
  return static_cast<uint16_t>(b[off] | b[off + 1] << 8);
}

uint32_t ReadUleb128(std::span<const uint8_t> b, size_t* off) {
  uint32_t result = 0;
  for (int shift = 0; shift < 35; shift += 7) {
    if (*off >= b.size()) throw FormatError("dex: truncated uleb128");
    uint8_t byte = b[(*off)++];
    result |= uint32_t{byte & 0x7fu} << shift;
    if (!(byte & 0x80)) return result;
  }
  throw FormatError("dex: overlong uleb128");
}

void AppendUtf8(uint32_t cp, std::string* out) {
  if (cp < 0x80) {
    out->push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out->push_back(static_cast<char>(0xc0 | cp >> 6));
    out->push_back(static_cast<char>(0x80 | (cp & 0x3f)));
  } else if (cp < 0x10000) {
    out->push_back(static_cast<char>(0xe0 | cp >> 12));
    out->push_back(static_cast<char>(0x80 | (cp >> 6 & 0x3f)));
    out->push_back(static_cast<char>(0x80 | (cp & 0x3f)));
  } else {
    out->push_back(static_cast<char>(0xf0 | cp >> 18));
    out->push_back(static_cast<char>(0x80 | (cp >> 12 & 0x3f)));
    out->push_back(static_cast<char>(0x80 | (cp >> 6 & 0x3f)));
    out->push_back(static_cast<char>(0x80 | (cp & 0x3f)));
  }
}

// MUTF-8: NUL is encoded as C0 80 and supplementary characters as surrogate
// pairs of 3-byte sequences.
std::string DecodeMutf8(std::span<const uint8_t> b, size_t off, uint32_t utf16_len) {
  std::vector<uint16_t> units;
  units.reserve(utf16_len);
  for (uint32_t i = 0; i < utf16_len; ++i) {
    if (off >= b.size()) throw FormatError("dex: truncated string data");
    uint8_t c = b[off++];
    if (c < 0x80) {
      units.push_back(c);
    } else if ((c & 0xe0) == 0xc0) {
      if (off >= b.size()) throw FormatError("dex: truncated string data");
      units.push_back(static_cast<uint16_t>((c & 0x1f) << 6 | (b[off++] & 0x3f)));
    } else if ((c & 0xf0) == 0xe0) {
      if (b.size() - off < 2) throw FormatError("dex: truncated string data");
      units.push_back(static_cast<uint16_t>((c & 0x0f) << 12 | (b[off] & 0x3f) << 6 | (b[off + 1] & 0x3f)));
      off += 2;
    } else {
      throw FormatError("dex: invalid MUTF-8 byte");
    }
  }
  std::string out;
  out.reserve(units.size());
  for (size_t i = 0; i < units.size(); ++i) {
    uint32_t u = units[i];
    if (u >= 0xd800 && u < 0xdc00 && i + 1 < units.size() && units[i + 1] >= 0xdc00 &&
        units[i + 1] < 0xe000) {
      u = 0x10000 + ((u - 0xd800) << 10) + (units[++i] - 0xdc00);
    }
    AppendUtf8(u, &out);
  }
  return out;
}

void CheckTable(std::span<const uint8_t> b, uint32_t size, uint32_t off, size_t item, const char* what) {
  if (size == 0) return;
  if (off > b.size() || (b.size() - off) / item < size) {
    throw FormatError(std::string("dex: ") + what + " table out of bounds");
  }
}

void CheckIndex(uint32_t idx, size_t size, const char* what) {
  if (idx >= size) {
    throw FormatError(std::string("dex: ") + what + " index " + std::to_string(idx) + " out of range");
  }
}

// Code units per opcode; 0 marks unassigned opcodes.
constexpr std::array<uint8_t, 256> kWidths = [] {
  std::array<uint8_t, 256> w{};
  auto set = [&w](int lo, int hi, uint8_t units) {
    for (int op = lo; op <= hi; ++op) w[op] = units;
  };
  set(0x00, 0x01, 1);  // nop, move
  set(0x02, 0x02, 2);
  set(0x03, 0x03, 3);
  set(0x04, 0x04, 1);  // move-wide
  set(0x05, 0x05, 2);
  set(0x06, 0x06, 3);
  set(0x07, 0x07, 1);  // move-object
  set(0x08, 0x08, 2);
  set(0x09, 0x09, 3);
  set(0x0a, 0x12, 1);  // move-result .. const/4
  set(0x13, 0x13, 2);
  set(0x14, 0x14, 3);
  set(0x15, 0x16, 2);
  set(0x17, 0x17, 3);
  set(0x18, 0x18, 5);  // const-wide
  set(0x19, 0x1a, 2);
  set(0x1b, 0x1b, 3);  // const-string/jumbo
  set(0x1c, 0x1c, 2);
  set(0x1d, 0x1e, 1);
  set(0x1f, 0x20, 2);
  set(0x21, 0x21, 1);
  set(0x22, 0x23, 2);
  set(0x24, 0x26, 3);  // filled-new-array*, fill-array-data
  set(0x27, 0x28, 1);
  set(0x29, 0x29, 2);
  set(0x2a, 0x2c, 3);  // goto/32, packed-switch, sparse-switch
  set(0x2d, 0x3d, 2);  // cmp*, if-*
  set(0x44, 0x6d, 2);  // aget .. sput
  set(0x6e, 0x72, 3);  // invoke-*
  set(0x74, 0x78, 3);  // invoke-*/range
  set(0x7b, 0x8f, 1);  // unary ops
  set(0x90, 0xaf, 2);  // binary ops
  set(0xb0, 0xcf, 1);  // binop/2addr
  set(0xd0, 0xe2, 2);  // binop/lit16, binop/lit8
  set(0xfa, 0xfb, 4);  // invoke-polymorphic
  set(0xfc, 0xfd, 3);  // invoke-custom
  set(0xfe, 0xff, 2);  // const-method-handle, const-method-type
  return w;
}();

}  // namespace

size_t DexInstructionWidth(std::span<const uint16_t> insns, size_t pc) {
  uint16_t unit = insns[pc];
  uint8_t op = unit & 0xff;
  size_t width = kWidths[op];
  if (op == kOpNop) {
    auto at = [&](size_t i) -> uint32_t {
      if (pc + i >= insns.size()) throw FormatError("dex: payload truncated");
      return insns[pc + i];
    };
    switch (unit) {
      case kPackedSwitchSignature:
        width = size_t{at(1)} * 2 + 4;
        break;
      case kSparseSwitchSignature:
        width = size_t{at(1)} * 4 + 2;
        break;
      case kFillArrayDataSignature: {
        size_t element_width = at(1);
        size_t count = at(2) | at(3) << 16;
        width = (count * element_width + 1) / 2 + 4;
        break;
      }
      default:
        break;
    }
  }
  if (width == 0) throw FormatError("dex: unassigned opcode " + std::to_string(op));
  if (insns.size() - pc < width) throw FormatError("dex: instruction runs past end of code");
  return width;
}

DexFile::DexFile(std::span<const uint8_t> bytes) : bytes_(bytes) {
  if (bytes.size() < kHeaderSize) throw FormatError("dex: file shorter than header");
  if (std::memcmp(bytes.data(), "dex\n", 4) != 0 || bytes[7] != 0 ||
      !std::isdigit(bytes[4]) || !std::isdigit(bytes[5]) || !std::isdigit(bytes[6])) {
    throw FormatError("dex: bad magic");
  }
  if (ReadU4(bytes, 40) != kEndianConstant) throw FormatError("dex: unsupported endian tag");

  uint32_t string_count = ReadU4(bytes, 56), string_off = ReadU4(bytes, 60);
  uint32_t type_count = ReadU4(bytes, 64), type_off = ReadU4(bytes, 68);
  uint32_t proto_count = ReadU4(bytes, 72), proto_off = ReadU4(bytes, 76);
  uint32_t field_count = ReadU4(bytes, 80), field_off = ReadU4(bytes, 84);
  uint32_t method_count = ReadU4(bytes, 88), method_off = ReadU4(bytes, 92);
  uint32_t class_count = ReadU4(bytes, 96), class_off = ReadU4(bytes, 100);
  CheckTable(bytes, string_count, string_off, 4, "string_ids");
  CheckTable(bytes, type_count, type_off, 4, "type_ids");
  CheckTable(bytes, proto_count, proto_off, 12, "proto_ids");
  CheckTable(bytes, field_count, field_off, 8, "field_ids");
  CheckTable(bytes, method_count, method_off, 8, "method_ids");
  CheckTable(bytes, class_count, class_off, 32, "class_defs");

  strings_.reserve(string_count);
  for (uint32_t i = 0; i < string_count; ++i) {
    size_t off = ReadU4(bytes, string_off + 4 * size_t{i});
    uint32_t len = ReadUleb128(bytes, &off);
    strings_.push_back(DecodeMutf8(bytes, off, len));
  }

  type_ids_.reserve(type_count);
  for (uint32_t i = 0; i < type_count; ++i) {
    uint32_t idx = ReadU4(bytes, type_off + 4 * size_t{i});
    CheckIndex(idx, strings_.size(), "string");
    type_ids_.push_back(idx);
  }

  proto_ids_.reserve(proto_count);
  for (uint32_t i = 0; i < proto_count; ++i) {
    size_t base = proto_off + 12 * size_t{i};
    ProtoId proto{ReadU4(bytes, base + 4), {}};
    CheckIndex(proto.return_type_idx, type_ids_.size(), "type");
    if (uint32_t params_off = ReadU4(bytes, base + 8)) {
      uint32_t n = ReadU4(bytes, params_off);
      for (uint32_t k = 0; k < n; ++k) {
        uint16_t t = ReadU2(bytes, params_off + 4 + 2 * size_t{k});
        CheckIndex(t, type_ids_.size(), "type");
        proto.param_type_idx.push_back(t);
      }
    }
    proto_ids_.push_back(std::move(proto));
  }

  field_ids_.reserve(field_count);
  for (uint32_t i = 0; i < field_count; ++i) {
    size_t base = field_off + 8 * size_t{i};
    FieldId f{ReadU2(bytes, base), ReadU2(bytes, base + 2), ReadU4(bytes, base + 4)};
    CheckIndex(f.class_idx, type_ids_.size(), "type");
    CheckIndex(f.type_idx, type_ids_.size(), "type");
    CheckIndex(f.name_idx, strings_.size(), "string");
    field_ids_.push_back(f);
  }

  method_ids_.reserve(method_count);
  for (uint32_t i = 0; i < method_count; ++i) {
    size_t base = method_off + 8 * size_t{i};
    MethodId m{ReadU2(bytes, base), ReadU2(bytes, base + 2), ReadU4(bytes, base + 4)};
    CheckIndex(m.class_idx, type_ids_.size(), "type");
    CheckIndex(m.proto_idx, proto_ids_.size(), "proto");
    CheckIndex(m.name_idx, strings_.size(), "string");
    method_ids_.push_back(m);
  }

  class_defs_.reserve(class_count);
  for (uint32_t i = 0; i < class_count; ++i) {
    size_t base = class_off + 32 * size_t{i};
    ClassDef c{ReadU4(bytes, base), ReadU4(bytes, base + 4), ReadU4(bytes, base + 24)};
    CheckIndex(c.class_idx, type_ids_.size(), "type");
    class_defs_.push_back(c);
  }
}

const std::string& DexFile::String(uint32_t idx) const {
  CheckIndex(idx, strings_.size(), "string");
  return strings_[idx];
}

const std::string& DexFile::TypeDescriptor(uint32_t idx) const {
  CheckIndex(idx, type_ids_.size(), "type");
  return strings_[type_ids_[idx]];
}

std::string DexFile::FieldSignature(uint32_t field_idx) const {
  CheckIndex(field_idx, field_ids_.size(), "field");
  const FieldId& f = field_ids_[field_idx];
  return TypeDescriptor(f.class_idx) + "->" + String(f.name_idx) + ":" + TypeDescriptor(f.type_idx);
}

std::string DexFile::MethodSignature(uint32_t method_idx) const {
  CheckIndex(method_idx, method_ids_.size(), "method");
  const MethodId& m = method_ids_[method_idx];
  const ProtoId& proto = proto_ids_[m.proto_idx];
  std::string out = TypeDescriptor(m.class_idx) + "->" + String(m.name_idx) + "(";
  for (uint32_t t : proto.param_type_idx) out += TypeDescriptor(t);
  return out + ")" + TypeDescriptor(proto.return_type_idx);
}

std::vector<DexFile::CodeBody> DexFile::CodeBodies(Diagnostics* diagnostics) const {
  std::vector<CodeBody> bodies;
  for (const ClassDef& def : class_defs_) {
    if (def.class_data_off == 0) continue;
    std::vector<CodeBody> local;
    try {
      size_t off = def.class_data_off;
      uint32_t static_fields = ReadUleb128(bytes_, &off);
      uint32_t instance_fields = ReadUleb128(bytes_, &off);
      uint32_t direct_methods = ReadUleb128(bytes_, &off);
      uint32_t virtual_methods = ReadUleb128(bytes_, &off);
      for (uint64_t i = 0; i < uint64_t{static_fields} + instance_fields; ++i) {
        ReadUleb128(bytes_, &off);
        ReadUleb128(bytes_, &off);
      }
      for (uint32_t list : {direct_methods, virtual_methods}) {
        uint32_t method_idx = 0;
        for (uint32_t i = 0; i < list; ++i) {
          method_idx += ReadUleb128(bytes_, &off);
          ReadUleb128(bytes_, &off);  // access_flags
          uint32_t code_off = ReadUleb128(bytes_, &off);
          if (code_off == 0) continue;
          CheckIndex(method_idx, method_ids_.size(), "method");
          uint32_t units = ReadU4(bytes_, code_off + 12);
          size_t insns_off = code_off + 16;
          if (insns_off > bytes_.size() || (bytes_.size() - insns_off) / 2 < units) {
            throw FormatError("dex: code item runs past end of file");
          }
          CodeBody body{method_idx, std::vector<uint16_t>(units)};
          for (uint32_t k = 0; k < units; ++k) body.insns[k] = ReadU2(bytes_, insns_off + 2 * size_t{k});
          local.push_back(std::move(body));
        }
      }
    } catch (const FormatError& e) {
      if (diagnostics) diagnostics->Add(TypeDescriptor(def.class_idx) + ": " + e.what());
      continue;
    }
    for (CodeBody& body : local) bodies.push_back(std::move(body));
  }
  return bodies;
}

}  // namespace aal
