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

#include "fixture_writers.h"

#include <zlib.h>

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

namespace aal::testing {

namespace {

void PutU1(Bytes& b, uint32_t v) { b.push_back(static_cast<uint8_t>(v)); }
void PutBe2(Bytes& b, uint32_t v) {
  PutU1(b, v >> 8);
  PutU1(b, v);
}
void PutBe4(Bytes& b, uint32_t v) {
  PutBe2(b, v >> 16);
  PutBe2(b, v);
}
void PutLe2(Bytes& b, uint32_t v) {
  PutU1(b, v);
  PutU1(b, v >> 8);
}
void PutLe4(Bytes& b, uint32_t v) {
  PutLe2(b, v);
  PutLe2(b, v >> 16);
}
void SetLe4(Bytes& b, size_t off, uint32_t v) {
  for (int i = 0; i < 4; ++i) b[off + i] = static_cast<uint8_t>(v >> (8 * i));
}
void PutUleb(Bytes& b, uint32_t v) {
  do {
    uint8_t byte = v & 0x7f;
    v >>= 7;
    if (v) byte |= 0x80;
    b.push_back(byte);
  } while (v);
}
void Align4(Bytes& b) {
  while (b.size() % 4) b.push_back(0);
}
void PutBytes(Bytes& b, const std::string& s) { b.insert(b.end(), s.begin(), s.end()); }

// UTF-8 to MUTF-8; returns the UTF-16 length through |utf16_len|.
Bytes ToMutf8(const std::string& s, uint32_t* utf16_len) {
  Bytes out;
  *utf16_len = 0;
  auto put_unit = [&](uint32_t u) {
    ++*utf16_len;
    if (u != 0 && u < 0x80) {
      PutU1(out, u);
    } else if (u < 0x800) {
      PutU1(out, 0xc0 | u >> 6);
      PutU1(out, 0x80 | (u & 0x3f));
    } else {
      PutU1(out, 0xe0 | u >> 12);
      PutU1(out, 0x80 | (u >> 6 & 0x3f));
      PutU1(out, 0x80 | (u & 0x3f));
    }
  };
  for (size_t i = 0; i < s.size();) {
    uint8_t c = s[i];
    uint32_t cp;
    size_t n;
    if (c < 0x80) {
      cp = c, n = 1;
    } else if ((c & 0xe0) == 0xc0) {
      cp = c & 0x1f, n = 2;
    } else if ((c & 0xf0) == 0xe0) {
      cp = c & 0x0f, n = 3;
    } else {
      cp = c & 0x07, n = 4;
    }
    for (size_t k = 1; k < n; ++k) cp = cp << 6 | (static_cast<uint8_t>(s[i + k]) & 0x3f);
    i += n;
    if (cp >= 0x10000) {
      cp -= 0x10000;
      put_unit(0xd800 + (cp >> 10));
      put_unit(0xdc00 + (cp & 0x3ff));
    } else {
      put_unit(cp);
    }
  }
  return out;
}

char ShortyOf(const std::string& desc) { return desc[0] == '[' ? 'L' : desc[0]; }

uint32_t WordsOf(const std::string& desc) { return desc == "J" || desc == "D" ? 2 : 1; }

}  // namespace

// ---------------------------------------------------------------- class file

ClassFileWriter::ClassFileWriter(std::string internal_name, uint16_t access, std::string super_name)
    : access_(access) {
  this_class_ = Class(internal_name);
  super_class_ = super_name.empty() ? 0 : Class(super_name);
  code_name_ = Utf8("Code");
  source_file_name_ = Utf8("SourceFile");
  std::string simple = internal_name.substr(internal_name.rfind('/') + 1);
  source_file_value_ = Utf8(simple.substr(0, simple.find('$')) + ".java");
}

uint16_t ClassFileWriter::Utf8(const std::string& s) {
  for (const auto& [text, index] : utf8_index_) {
    if (text == s) return index;
  }
  PutU1(pool_, 1);
  PutBe2(pool_, static_cast<uint32_t>(s.size()));
  PutBytes(pool_, s);
  utf8_index_.emplace_back(s, pool_count_);
  return pool_count_++;
}

uint16_t ClassFileWriter::Class(const std::string& internal_name) {
  uint16_t name = Utf8(internal_name);
  PutU1(pool_, 7);
  PutBe2(pool_, name);
  return pool_count_++;
}

void ClassFileWriter::AddInterface(const std::string& internal_name) {
  interfaces_.push_back(Class(internal_name));
}

void ClassFileWriter::AddField(uint16_t access, const std::string& name, const std::string& descriptor) {
  fields_.push_back(Member{access, Utf8(name), Utf8(descriptor), false});
}

void ClassFileWriter::AddMethod(uint16_t access, const std::string& name, const std::string& descriptor,
                                bool with_code) {
  methods_.push_back(Member{access, Utf8(name), Utf8(descriptor), with_code});
}

void ClassFileWriter::AddLongConstant(int64_t value) {
  PutU1(pool_, 5);
  PutBe4(pool_, static_cast<uint32_t>(static_cast<uint64_t>(value) >> 32));
  PutBe4(pool_, static_cast<uint32_t>(value));
  pool_count_ += 2;
}

void ClassFileWriter::AddStringConstant(const std::string& value) {
  uint16_t utf8 = Utf8(value);
  PutU1(pool_, 8);
  PutBe2(pool_, utf8);
  ++pool_count_;
}

Bytes ClassFileWriter::Build(uint16_t major_version) const {
  Bytes b;
  PutBe4(b, 0xCAFEBABE);
  PutBe2(b, 0);
  PutBe2(b, major_version);
  PutBe2(b, pool_count_);
  b.insert(b.end(), pool_.begin(), pool_.end());
  PutBe2(b, access_);
  PutBe2(b, this_class_);
  PutBe2(b, super_class_);
  PutBe2(b, static_cast<uint32_t>(interfaces_.size()));
  for (uint16_t i : interfaces_) PutBe2(b, i);
  PutBe2(b, static_cast<uint32_t>(fields_.size()));
  for (const Member& f : fields_) {
    PutBe2(b, f.access);
    PutBe2(b, f.name);
    PutBe2(b, f.descriptor);
    PutBe2(b, 0);
  }
  PutBe2(b, static_cast<uint32_t>(methods_.size()));
  for (const Member& m : methods_) {
    PutBe2(b, m.access);
    PutBe2(b, m.name);
    PutBe2(b, m.descriptor);
    PutBe2(b, m.with_code ? 1 : 0);
    if (m.with_code) {
      PutBe2(b, code_name_);
      PutBe4(b, 13);
      PutBe2(b, 1);     // max_stack
      PutBe2(b, 4);     // max_locals
      PutBe4(b, 1);     // code_length
      PutU1(b, 0xb1);   // return
      PutBe2(b, 0);     // exception_table_length
      PutBe2(b, 0);     // attributes_count
    }
  }
  PutBe2(b, 1);
  PutBe2(b, source_file_name_);
  PutBe4(b, 2);
  PutBe2(b, source_file_value_);
  return b;
}

// ---------------------------------------------------------------------- dex

DexInsn DexInsn::ConstString(std::string s) {
  DexInsn i{Kind::kConstString, 0x1a};
  i.text = std::move(s);
  return i;
}
DexInsn DexInsn::ConstStringJumbo(std::string s) {
  DexInsn i{Kind::kConstStringJumbo, 0x1b};
  i.text = std::move(s);
  return i;
}
DexInsn DexInsn::ConstClass(std::string desc) {
  DexInsn i{Kind::kConstClass, 0x1c};
  i.text = std::move(desc);
  return i;
}
DexInsn DexInsn::InvokeVirtual(DexMethodKey m) {
  DexInsn i{Kind::kInvoke, 0x6e};
  i.method = std::move(m);
  return i;
}
DexInsn DexInsn::InvokeDirect(DexMethodKey m) {
  DexInsn i{Kind::kInvoke, 0x70};
  i.method = std::move(m);
  return i;
}
DexInsn DexInsn::InvokeStatic(DexMethodKey m) {
  DexInsn i{Kind::kInvoke, 0x71};
  i.method = std::move(m);
  return i;
}
DexInsn DexInsn::InvokeStaticRange(DexMethodKey m) {
  DexInsn i{Kind::kInvokeRange, 0x77};
  i.method = std::move(m);
  return i;
}
DexInsn DexInsn::Sget(DexFieldKey f) {
  DexInsn i{Kind::kSget, 0x62};
  i.field = std::move(f);
  return i;
}
DexInsn DexInsn::Raw(std::vector<uint16_t> units) {
  DexInsn i{Kind::kRaw};
  i.raw = std::move(units);
  return i;
}
DexInsn DexInsn::ReturnVoid() { return Raw({0x000e}); }

void DexWriter::DefineClass(const std::string& desc, const std::string& super_desc) {
  classes_.push_back(ClassDef{desc, super_desc, {}, {}});
}

void DexWriter::AddMethod(const std::string& class_desc, const std::string& name,
                          const std::string& return_desc, const std::vector<std::string>& param_descs,
                          uint32_t access, std::vector<DexInsn> code) {
  for (ClassDef& c : classes_) {
    if (c.desc != class_desc) continue;
    c.methods.push_back(MethodDef{DexMethodKey{class_desc, name, return_desc, param_descs}, access,
                                  std::move(code)});
    return;
  }
  throw std::logic_error("class not defined: " + class_desc);
}

void DexWriter::AddField(const std::string& class_desc, const std::string& name,
                         const std::string& type_desc, uint32_t access) {
  for (ClassDef& c : classes_) {
    if (c.desc != class_desc) continue;
    c.fields.push_back(FieldDef{DexFieldKey{class_desc, name, type_desc}, access});
    return;
  }
  throw std::logic_error("class not defined: " + class_desc);
}

void DexWriter::ReferenceMethod(const DexMethodKey& m) { method_refs_.push_back(m); }
void DexWriter::ReferenceField(const DexFieldKey& f) { field_refs_.push_back(f); }
void DexWriter::AddString(const std::string& s) { extra_strings_.push_back(s); }

Bytes DexWriter::Build() const {
  // Gather every symbol.
  std::vector<DexMethodKey> all_methods = method_refs_;
  std::vector<DexFieldKey> all_fields = field_refs_;
  std::set<std::string> types;
  std::set<std::string> strings(extra_strings_.begin(), extra_strings_.end());
  auto note_method = [&](const DexMethodKey& m) {
    all_methods.push_back(m);
  };
  for (const ClassDef& c : classes_) {
    types.insert(c.desc);
    if (!c.super_desc.empty()) types.insert(c.super_desc);
    for (const FieldDef& f : c.fields) all_fields.push_back(f.key);
    for (const MethodDef& m : c.methods) {
      note_method(m.key);
      for (const DexInsn& insn : m.code) {
        switch (insn.kind) {
          case DexInsn::Kind::kConstString:
          case DexInsn::Kind::kConstStringJumbo:
            strings.insert(insn.text);
            break;
          case DexInsn::Kind::kConstClass:
            types.insert(insn.text);
            break;
          case DexInsn::Kind::kInvoke:
          case DexInsn::Kind::kInvokeRange:
            note_method(insn.method);
            break;
          case DexInsn::Kind::kSget:
            all_fields.push_back(insn.field);
            break;
          case DexInsn::Kind::kRaw:
            break;
        }
      }
    }
  }
  using Proto = std::pair<std::string, std::vector<std::string>>;
  std::set<Proto> proto_keys;
  auto shorty_of = [](const Proto& p) {
    std::string s(1, ShortyOf(p.first));
    for (const std::string& d : p.second) s += ShortyOf(d);
    return s;
  };
  for (const DexMethodKey& m : all_methods) {
    types.insert(m.class_desc);
    types.insert(m.return_desc);
    types.insert(m.param_descs.begin(), m.param_descs.end());
    strings.insert(m.name);
    proto_keys.emplace(m.return_desc, m.param_descs);
  }
  for (const DexFieldKey& f : all_fields) {
    types.insert(f.class_desc);
    types.insert(f.type_desc);
    strings.insert(f.name);
  }
  for (const Proto& p : proto_keys) strings.insert(shorty_of(p));
  strings.insert(types.begin(), types.end());

  // Index assignment in the orders a DEX requires.
  std::vector<std::string> string_list(strings.begin(), strings.end());
  std::map<std::string, uint32_t> string_idx;
  for (uint32_t i = 0; i < string_list.size(); ++i) string_idx[string_list[i]] = i;
  std::vector<std::string> type_list(types.begin(), types.end());  // string order == idx order
  std::map<std::string, uint32_t> type_idx;
  for (uint32_t i = 0; i < type_list.size(); ++i) type_idx[type_list[i]] = i;

  using ProtoSortKey = std::pair<uint32_t, std::vector<uint32_t>>;
  std::map<ProtoSortKey, Proto> protos_sorted;
  for (const Proto& p : proto_keys) {
    std::vector<uint32_t> params;
    for (const std::string& d : p.second) params.push_back(type_idx.at(d));
    protos_sorted.emplace(ProtoSortKey{type_idx.at(p.first), params}, p);
  }
  std::vector<Proto> proto_list;
  std::map<Proto, uint32_t> proto_idx;
  for (const auto& [key, p] : protos_sorted) {
    proto_idx[p] = static_cast<uint32_t>(proto_list.size());
    proto_list.push_back(p);
  }

  using FieldSortKey = std::tuple<uint32_t, uint32_t, uint32_t>;
  std::map<FieldSortKey, DexFieldKey> fields_sorted;
  for (const DexFieldKey& f : all_fields) {
    fields_sorted.emplace(FieldSortKey{type_idx.at(f.class_desc), string_idx.at(f.name), type_idx.at(f.type_desc)}, f);
  }
  std::map<FieldSortKey, uint32_t> field_idx;
  for (const auto& [key, f] : fields_sorted) field_idx.emplace(key, static_cast<uint32_t>(field_idx.size()));
  auto field_index = [&](const DexFieldKey& f) {
    return field_idx.at({type_idx.at(f.class_desc), string_idx.at(f.name), type_idx.at(f.type_desc)});
  };

  using MethodSortKey = std::tuple<uint32_t, uint32_t, uint32_t>;
  auto method_sort_key = [&](const DexMethodKey& m) {
    return MethodSortKey{type_idx.at(m.class_desc), string_idx.at(m.name),
                         proto_idx.at(Proto{m.return_desc, m.param_descs})};
  };
  std::set<MethodSortKey> methods_sorted;
  for (const DexMethodKey& m : all_methods) methods_sorted.insert(method_sort_key(m));
  std::map<MethodSortKey, uint32_t> method_idx;
  for (const MethodSortKey& k : methods_sorted) method_idx.emplace(k, static_cast<uint32_t>(method_idx.size()));
  auto method_index = [&](const DexMethodKey& m) { return method_idx.at(method_sort_key(m)); };

  // Layout.
  const uint32_t header_size = 0x70;
  uint32_t string_ids_off = header_size;
  uint32_t type_ids_off = string_ids_off + 4 * static_cast<uint32_t>(string_list.size());
  uint32_t proto_ids_off = type_ids_off + 4 * static_cast<uint32_t>(type_list.size());
  uint32_t field_ids_off = proto_ids_off + 12 * static_cast<uint32_t>(proto_list.size());
  uint32_t method_ids_off = field_ids_off + 8 * static_cast<uint32_t>(field_idx.size());
  uint32_t class_defs_off = method_ids_off + 8 * static_cast<uint32_t>(method_idx.size());
  uint32_t data_off = class_defs_off + 32 * static_cast<uint32_t>(classes_.size());

  Bytes data;  // starts at data_off; data_off is 4-aligned by construction
  auto here = [&] { return data_off + static_cast<uint32_t>(data.size()); };

  std::map<std::vector<std::string>, uint32_t> type_list_off;
  uint32_t type_lists_start = here();
  for (const Proto& p : proto_list) {
    if (p.second.empty() || type_list_off.contains(p.second)) continue;
    Align4(data);
    type_list_off[p.second] = here();
    PutLe4(data, static_cast<uint32_t>(p.second.size()));
    for (const std::string& d : p.second) PutLe2(data, type_idx.at(d));
  }
  Align4(data);

  // Code items, in class/method order.
  uint32_t code_start = here();
  size_t code_count = 0;
  std::map<std::pair<size_t, size_t>, uint32_t> code_off;
  for (size_t ci = 0; ci < classes_.size(); ++ci) {
    for (size_t mi = 0; mi < classes_[ci].methods.size(); ++mi) {
      const MethodDef& m = classes_[ci].methods[mi];
      std::vector<uint16_t> insns;
      uint32_t outs = 0;
      for (const DexInsn& insn : m.code) {
        switch (insn.kind) {
          case DexInsn::Kind::kConstString:
          case DexInsn::Kind::kConstClass: {
            uint32_t idx = insn.kind == DexInsn::Kind::kConstString ? string_idx.at(insn.text)
                                                                    : type_idx.at(insn.text);
            insns.push_back(insn.opcode);
            insns.push_back(static_cast<uint16_t>(idx));
            break;
          }
          case DexInsn::Kind::kConstStringJumbo: {
            uint32_t idx = string_idx.at(insn.text);
            insns.push_back(insn.opcode);
            insns.push_back(static_cast<uint16_t>(idx));
            insns.push_back(static_cast<uint16_t>(idx >> 16));
            break;
          }
          case DexInsn::Kind::kInvoke: {
            uint32_t args = static_cast<uint32_t>(insn.method.param_descs.size()) + (insn.opcode == 0x71 ? 0 : 1);
            args = std::min<uint32_t>(args, 5);
            outs = std::max(outs, args);
            insns.push_back(static_cast<uint16_t>(insn.opcode | args << 12));
            insns.push_back(static_cast<uint16_t>(method_index(insn.method)));
            insns.push_back(0x3210);
            break;
          }
          case DexInsn::Kind::kInvokeRange: {
            uint32_t args = static_cast<uint32_t>(insn.method.param_descs.size());
            outs = std::max(outs, args);
            insns.push_back(static_cast<uint16_t>(insn.opcode | args << 8));
            insns.push_back(static_cast<uint16_t>(method_index(insn.method)));
            insns.push_back(0);
            break;
          }
          case DexInsn::Kind::kSget:
            insns.push_back(insn.opcode);
            insns.push_back(static_cast<uint16_t>(field_index(insn.field)));
            break;
          case DexInsn::Kind::kRaw:
            insns.insert(insns.end(), insn.raw.begin(), insn.raw.end());
            break;
        }
      }
      if (insns.empty() || (insns.back() & 0xff) != 0x0e) insns.push_back(0x000e);
      uint32_t ins = (m.access & 0x0008) ? 0 : 1;
      for (const std::string& d : m.key.param_descs) ins += WordsOf(d);
      Align4(data);
      code_off[{ci, mi}] = here();
      ++code_count;
      PutLe2(data, std::max<uint32_t>(16, ins));  // registers_size
      PutLe2(data, ins);
      PutLe2(data, outs);
      PutLe2(data, 0);  // tries_size
      PutLe4(data, 0);  // debug_info_off
      PutLe4(data, static_cast<uint32_t>(insns.size()));
      for (uint16_t u : insns) PutLe2(data, u);
    }
  }

  uint32_t string_data_start = here();
  std::vector<uint32_t> string_data_off;
  for (const std::string& s : string_list) {
    string_data_off.push_back(here());
    uint32_t utf16_len;
    Bytes encoded = ToMutf8(s, &utf16_len);
    PutUleb(data, utf16_len);
    data.insert(data.end(), encoded.begin(), encoded.end());
    PutU1(data, 0);
  }

  uint32_t class_data_start = here();
  std::vector<uint32_t> class_data_off;
  for (size_t ci = 0; ci < classes_.size(); ++ci) {
    const ClassDef& c = classes_[ci];
    if (c.fields.empty() && c.methods.empty()) {
      class_data_off.push_back(0);
      continue;
    }
    class_data_off.push_back(here());
    std::vector<std::pair<uint32_t, uint32_t>> static_fields, instance_fields;
    for (const FieldDef& f : c.fields) {
      ((f.access & 0x0008) ? static_fields : instance_fields).emplace_back(field_index(f.key), f.access);
    }
    std::vector<std::tuple<uint32_t, uint32_t, uint32_t>> direct, virt;
    for (size_t mi = 0; mi < c.methods.size(); ++mi) {
      const MethodDef& m = c.methods[mi];
      bool is_direct = (m.access & (0x0008 | 0x0002)) || m.key.name == "<init>" || m.key.name == "<clinit>";
      (is_direct ? direct : virt).emplace_back(method_index(m.key), m.access, code_off.at({ci, mi}));
    }
    std::sort(static_fields.begin(), static_fields.end());
    std::sort(instance_fields.begin(), instance_fields.end());
    std::sort(direct.begin(), direct.end());
    std::sort(virt.begin(), virt.end());
    PutUleb(data, static_cast<uint32_t>(static_fields.size()));
    PutUleb(data, static_cast<uint32_t>(instance_fields.size()));
    PutUleb(data, static_cast<uint32_t>(direct.size()));
    PutUleb(data, static_cast<uint32_t>(virt.size()));
    for (const auto* list : {&static_fields, &instance_fields}) {
      uint32_t prev = 0;
      for (const auto& [idx, access] : *list) {
        PutUleb(data, idx - prev);
        PutUleb(data, access);
        prev = idx;
      }
    }
    for (const auto* list : {&direct, &virt}) {
      uint32_t prev = 0;
      for (const auto& [idx, access, off] : *list) {
        PutUleb(data, idx - prev);
        PutUleb(data, access);
        PutUleb(data, off);
        prev = idx;
      }
    }
  }
  size_t class_data_count = std::count_if(class_data_off.begin(), class_data_off.end(),
                                          [](uint32_t o) { return o != 0; });

  Align4(data);
  uint32_t map_off = here();
  struct MapItem {
    uint16_t type;
    uint32_t size;
    uint32_t offset;
  };
  std::vector<MapItem> map = {{0x0000, 1, 0}};
  auto add_map = [&](uint16_t type, size_t size, uint32_t off) {
    if (size) map.push_back(MapItem{type, static_cast<uint32_t>(size), off});
  };
  add_map(0x0001, string_list.size(), string_ids_off);
  add_map(0x0002, type_list.size(), type_ids_off);
  add_map(0x0003, proto_list.size(), proto_ids_off);
  add_map(0x0004, field_idx.size(), field_ids_off);
  add_map(0x0005, method_idx.size(), method_ids_off);
  add_map(0x0006, classes_.size(), class_defs_off);
  add_map(0x1001, type_list_off.size(), type_lists_start);
  add_map(0x2001, code_count, code_start);
  add_map(0x2002, string_list.size(), string_data_start);
  add_map(0x2000, class_data_count, class_data_start);
  map.push_back(MapItem{0x1000, 1, map_off});
  PutLe4(data, static_cast<uint32_t>(map.size()));
  for (const MapItem& item : map) {
    PutLe2(data, item.type);
    PutLe2(data, 0);
    PutLe4(data, item.size);
    PutLe4(data, item.offset);
  }

  // Header and id tables.
  Bytes out;
  PutBytes(out, std::string("dex\n035", 7));
  PutU1(out, 0);
  PutLe4(out, 0);                    // checksum, patched below
  out.resize(out.size() + 20, 0);    // signature, left zero
  uint32_t file_size = data_off + static_cast<uint32_t>(data.size());
  PutLe4(out, file_size);
  PutLe4(out, header_size);
  PutLe4(out, 0x12345678);
  PutLe4(out, 0);
  PutLe4(out, 0);
  PutLe4(out, map_off);
  auto put_table = [&](size_t n, uint32_t off) {
    PutLe4(out, static_cast<uint32_t>(n));
    PutLe4(out, n ? off : 0);
  };
  put_table(string_list.size(), string_ids_off);
  put_table(type_list.size(), type_ids_off);
  put_table(proto_list.size(), proto_ids_off);
  put_table(field_idx.size(), field_ids_off);
  put_table(method_idx.size(), method_ids_off);
  put_table(classes_.size(), class_defs_off);
  PutLe4(out, static_cast<uint32_t>(data.size()));
  PutLe4(out, data_off);

  for (uint32_t off : string_data_off) PutLe4(out, off);
  for (const std::string& t : type_list) PutLe4(out, string_idx.at(t));
  for (const Proto& p : proto_list) {
    PutLe4(out, string_idx.at(shorty_of(p)));
    PutLe4(out, type_idx.at(p.first));
    PutLe4(out, p.second.empty() ? 0 : type_list_off.at(p.second));
  }
  for (const auto& [key, f] : fields_sorted) {
    PutLe2(out, std::get<0>(key));
    PutLe2(out, std::get<2>(key));
    PutLe4(out, std::get<1>(key));
  }
  for (const MethodSortKey& k : methods_sorted) {
    PutLe2(out, std::get<0>(k));
    PutLe2(out, std::get<2>(k));
    PutLe4(out, std::get<1>(k));
  }
  for (size_t ci = 0; ci < classes_.size(); ++ci) {
    const ClassDef& c = classes_[ci];
    PutLe4(out, type_idx.at(c.desc));
    PutLe4(out, 0x0001);  // public
    PutLe4(out, c.super_desc.empty() ? 0xffffffff : type_idx.at(c.super_desc));
    PutLe4(out, 0);
    PutLe4(out, 0xffffffff);  // source_file_idx
    PutLe4(out, 0);
    PutLe4(out, class_data_off[ci]);
    PutLe4(out, 0);
  }
  out.insert(out.end(), data.begin(), data.end());
  uLong sum = adler32(0L, Z_NULL, 0);
  sum = adler32(sum, out.data() + 12, static_cast<uInt>(out.size() - 12));
  SetLe4(out, 8, static_cast<uint32_t>(sum));
  return out;
}

// ---------------------------------------------------------------------- zip

void ZipWriter::AddStored(const std::string& name, const Bytes& data) {
  uint32_t crc = static_cast<uint32_t>(crc32(0L, data.data(), static_cast<uInt>(data.size())));
  entries_.push_back(Entry{name, 0, crc, static_cast<uint32_t>(data.size()), data});
}

void ZipWriter::AddDeflated(const std::string& name, const Bytes& data) {
  z_stream s{};
  if (deflateInit2(&s, 9, Z_DEFLATED, -15, 8, Z_DEFAULT_STRATEGY) != Z_OK) {
    throw std::runtime_error("deflateInit2 failed");
  }
  Bytes out(deflateBound(&s, static_cast<uLong>(data.size())));
  s.next_in = const_cast<Bytef*>(data.data());
  s.avail_in = static_cast<uInt>(data.size());
  s.next_out = out.data();
  s.avail_out = static_cast<uInt>(out.size());
  int rc = deflate(&s, Z_FINISH);
  out.resize(s.total_out);
  deflateEnd(&s);
  if (rc != Z_STREAM_END) throw std::runtime_error("deflate failed");
  uint32_t crc = static_cast<uint32_t>(crc32(0L, data.data(), static_cast<uInt>(data.size())));
  entries_.push_back(Entry{name, 8, crc, static_cast<uint32_t>(data.size()), std::move(out)});
}

Bytes ZipWriter::Build() const {
  Bytes out;
  std::vector<uint32_t> offsets;
  for (const Entry& e : entries_) {
    offsets.push_back(static_cast<uint32_t>(out.size()));
    PutLe4(out, 0x04034b50);
    PutLe2(out, 20);
    PutLe2(out, 0);
    PutLe2(out, e.method);
    PutLe2(out, 0);     // time
    PutLe2(out, 0x21);  // 1980-01-01
    PutLe4(out, e.crc);
    PutLe4(out, static_cast<uint32_t>(e.payload.size()));
    PutLe4(out, e.size);
    PutLe2(out, static_cast<uint32_t>(e.name.size()));
    PutLe2(out, 0);
    PutBytes(out, e.name);
    out.insert(out.end(), e.payload.begin(), e.payload.end());
  }
  uint32_t cd_start = static_cast<uint32_t>(out.size());
  for (size_t i = 0; i < entries_.size(); ++i) {
    const Entry& e = entries_[i];
    PutLe4(out, 0x02014b50);
    PutLe2(out, 20);
    PutLe2(out, 20);
    PutLe2(out, 0);
    PutLe2(out, e.method);
    PutLe2(out, 0);
    PutLe2(out, 0x21);
    PutLe4(out, e.crc);
    PutLe4(out, static_cast<uint32_t>(e.payload.size()));
    PutLe4(out, e.size);
    PutLe2(out, static_cast<uint32_t>(e.name.size()));
    PutLe2(out, 0);
    PutLe2(out, 0);
    PutLe2(out, 0);
    PutLe2(out, 0);
    PutLe4(out, 0);
    PutLe4(out, offsets[i]);
    PutBytes(out, e.name);
  }
  uint32_t cd_size = static_cast<uint32_t>(out.size()) - cd_start;
  PutLe4(out, 0x06054b50);
  PutLe2(out, 0);
  PutLe2(out, 0);
  PutLe2(out, static_cast<uint32_t>(entries_.size()));
  PutLe2(out, static_cast<uint32_t>(entries_.size()));
  PutLe4(out, cd_size);
  PutLe4(out, cd_start);
  PutLe2(out, 0);
  return out;
}

}  // namespace aal::testing
