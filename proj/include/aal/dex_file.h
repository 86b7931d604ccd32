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
// Read-only view of a Dalvik executable: the id tables, class definitions and
// method code. Strings are decoded from MUTF-8 to UTF-8.

#ifndef AAL_DEX_FILE_H_
#define AAL_DEX_FILE_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "aal/error.h"

namespace aal {

class DexFile {
 public:
  struct FieldId {
    uint32_t class_idx;
    uint32_t type_idx;
    uint32_t name_idx;
  };
  struct ProtoId {
    uint32_t return_type_idx;
    std::vector<uint32_t> param_type_idx;
  };
  struct MethodId {
    uint32_t class_idx;
    uint32_t proto_idx;
    uint32_t name_idx;
  };
  struct ClassDef {
    uint32_t class_idx;
    uint32_t access_flags;
    uint32_t class_data_off;
  };
  struct CodeBody {
    uint32_t method_idx;
    std::vector<uint16_t> insns;
  };

  // Parses and bounds-checks the header and every id table. Throws
  // FormatError on bad magic, truncation or an out-of-range index.
  explicit DexFile(std::span<const uint8_t> bytes);

  const std::vector<std::string>& strings() const { return strings_; }
  const std::vector<uint32_t>& type_ids() const { return type_ids_; }
  const std::vector<FieldId>& field_ids() const { return field_ids_; }
  const std::vector<ProtoId>& proto_ids() const { return proto_ids_; }
  const std::vector<MethodId>& method_ids() const { return method_ids_; }
  const std::vector<ClassDef>& class_defs() const { return class_defs_; }

  const std::string& String(uint32_t idx) const;
  const std::string& TypeDescriptor(uint32_t idx) const;

  // "Lpkg/Cls;->name:Desc" and "Lpkg/Cls;->name(Descs)Ret".
  std::string FieldSignature(uint32_t field_idx) const;
  std::string MethodSignature(uint32_t method_idx) const;

  // Code of every method with a body. A class whose class_data cannot be
  // decoded is reported and skipped.
  std::vector<CodeBody> CodeBodies(Diagnostics* diagnostics = nullptr) const;

 private:
  std::span<const uint8_t> bytes_;
  std::vector<std::string> strings_;
  std::vector<uint32_t> type_ids_;  // descriptor string index
  std::vector<ProtoId> proto_ids_;
  std::vector<FieldId> field_ids_;
  std::vector<MethodId> method_ids_;
  std::vector<ClassDef> class_defs_;
};

// Dalvik opcodes consumed by reflection detection.
enum DexOpcode : uint8_t {
  kOpNop = 0x00,
  kOpConstString = 0x1a,
  kOpConstStringJumbo = 0x1b,
  kOpConstClass = 0x1c,
  kOpInvokeVirtual = 0x6e,
  kOpInvokeInterface = 0x72,
  kOpInvokeVirtualRange = 0x74,
  kOpInvokeInterfaceRange = 0x78,
};

// Width in 16-bit code units of the instruction at |insns[pc]|, payload
// pseudo-instructions included. Throws FormatError on an unassigned opcode or
// a payload running past the end.
size_t DexInstructionWidth(std::span<const uint16_t> insns, size_t pc);

}  // namespace aal

#endif  // AAL_DEX_FILE_H_
