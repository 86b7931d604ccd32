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
// aal_acceptance [--hiddenapi-csv PATH]
//
// Runs the nine acceptance checks and prints one PASS/FAIL line for each.
// Exits 0 only when all pass. With --hiddenapi-csv, also reports the share
// of synthesized member lines in a real flags file (informational).

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <map>
#include <random>
#include <regex>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "aal/canonical_io.h"
#include "aal/class_file.h"
#include "aal/csv_parser.h"
#include "aal/dex_scanner.h"
#include "aal/diff.h"
#include "aal/jar_parser.h"
#include "aal/txt_parser.h"
#include "aal/xml_parser.h"
#include "fixtures.h"
#include "random_api.h"

namespace aal {
namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string ReadFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(path.string() + ": cannot open");
  return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

std::vector<uint8_t> ReadBytes(const fs::path& path) {
  std::string s = ReadFile(path);
  return std::vector<uint8_t>(s.begin(), s.end());
}

fs::path DataDir() { return AAL_TEST_DATA_DIR; }

std::set<std::string> Lines(const std::set<ApiRef>& apis) {
  std::set<std::string> out;
  for (const ApiRef& api : apis) out.insert(api.canonical());
  return out;
}

// ---------------------------------------------------------------- 1

Outcome TxtErasure() {
  constexpr const char* kContext = R"(package android.content {
  public abstract class Context {
    method @Nullable public final String getString(@StringRes int, java.lang.Object...);
    method public final <T> T getSystemService(@NonNull Class<T>);
    method @Nullable public abstract String getSystemServiceName(@NonNull Class<?>);
  }
}
)";
  std::set<std::string> got = Lines(ParseTxt(std::string_view(kContext), 33).apis);
  std::set<std::string> want = {
      "C android.content.Context",
      "M android.content.Context getString (int,java.lang.Object[])",
      "M android.content.Context getSystemService (java.lang.Class)",
      "M android.content.Context getSystemServiceName (java.lang.Class)",
  };
  return {got == want, "3 method identities"};
}

// ---------------------------------------------------------------- 2

Outcome CsvPolicy() {
  AalSnapshot s = ParseCsv(std::string_view(
                               "Landroid/content/Context;->MODE_WORLD_READABLE:I,public-api,sdk\n"
                               "Landroid/app/Activity;->canStartActivityForResult()Z,max-target-r\n"
                               "Landroid/content/Context;->destroy()V,blocked\n"),
                           33);
  struct Want {
    const char* line;
    ApiKind kind;
    PolicyCategory category;
  };
  const Want wants[] = {
      {"F android.content.Context MODE_WORLD_READABLE", ApiKind::kField, PolicyCategory::kPublic},
      {"M android.app.Activity canStartActivityForResult ()", ApiKind::kMethod,
       PolicyCategory::kConditionallyBlocked},
      {"M android.content.Context destroy ()", ApiKind::kMethod, PolicyCategory::kBlocked},
  };
  for (const Want& w : wants) {
    ApiRef api = ParseCanonicalLine(w.line);
    auto it = s.policy.find(api);
    if (!s.apis.contains(api) || api.kind() != w.kind || it == s.policy.end() ||
        it->second.category() != w.category) {
      return {false, std::string("mismatch on ") + w.line};
    }
  }
  return {s.CountByKind().fields == 1 && s.CountByKind().methods == 2, "public / conditionally-blocked / blocked"};
}

// ---------------------------------------------------------------- 3

Outcome CrossFormat() {
  testing::CrossFormatFixture fx = testing::GenerateCrossFormat(2026, 200, 33);
  if (fx.truth.size() < 200) return {false, "generator produced fewer than 200 APIs"};
  AalSnapshot txt = ParseTxt(std::string_view(fx.txt), 33);
  AalSnapshot csv = ParseCsv(std::string_view(fx.csv), 33);
  AalSnapshot xml = SnapshotAt(ParseApiVersions(std::string_view(fx.xml)), 33);
  AalSnapshot jar = ParseArchive(fx.jar, 33);
  for (const auto& [name, s] : {std::pair<const char*, const AalSnapshot*>{"TXT", &txt},
                                {"CSV", &csv}, {"XML", &xml}, {"JAR", &jar}}) {
    if (s->apis != fx.truth) return {false, std::string(name) + " differs from the ground truth"};
  }
  std::vector<LabeledSnapshot> in = {{"JAR", &jar}, {"XML", &xml}, {"TXT", &txt}, {"CSV", &csv}};
  VennPartition venn = ComputeVenn(in);
  bool single = venn.cells.size() == 1 && venn.cells.begin()->first == 0b1111;
  return {single, std::to_string(fx.truth.size()) + " APIs, " + std::to_string(venn.cells.size()) + " cell(s)"};
}

// ---------------------------------------------------------------- 4

Outcome VennProperty() {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    std::set<ApiRef> universe = testing::RandomApiUniverse(rng, 100 + rng() % 901);
    std::vector<AalSnapshot> snaps(4);
    std::vector<LabeledSnapshot> in;
    for (size_t i = 0; i < 4; ++i) {
      snaps[i].api_level = 33;
      snaps[i].apis = testing::RandomSubset(rng, universe, 0.2 + 0.15 * static_cast<double>(i + trial % 3));
    }
    for (size_t i = 0; i < 4; ++i) in.push_back({std::to_string(i), &snaps[i]});
    VennPartition venn = ComputeVenn(in);
    std::map<SourceMask, std::set<ApiRef>> brute;
    for (const ApiRef& api : universe) {
      SourceMask mask = 0;
      for (size_t i = 0; i < 4; ++i) {
        if (std::binary_search(snaps[i].apis.begin(), snaps[i].apis.end(), api)) mask |= 1u << i;
      }
      if (mask) brute[mask].insert(api);
    }
    if (venn.cells != brute) return {false, "partition differs in trial " + std::to_string(trial)};
    for (size_t i = 0; i < 4; ++i) {
      size_t sum = 0;
      for (const auto& [mask, cell] : venn.cells) {
        if (mask & (1u << i)) sum += cell.size();
      }
      if (sum != snaps[i].apis.size()) return {false, "ellipse sum differs in trial " + std::to_string(trial)};
    }
  }
  return {true, "100 trials"};
}

// ---------------------------------------------------------------- 5

Outcome EvolutionProperty() {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    std::set<ApiRef> universe = testing::RandomApiUniverse(rng, 500);
    AalSnapshot prev, next;
    prev.api_level = 32;
    next.api_level = 33;
    prev.apis = testing::RandomSubset(rng, universe, 0.7);
    next.apis = testing::RandomSubset(rng, universe, 0.7);
    EvolutionDelta d = ComputeEvolution(prev, next);
    std::set<ApiRef> rebuilt;
    for (const ApiRef& api : prev.apis) {
      if (!d.removed.contains(api)) rebuilt.insert(api);
    }
    rebuilt.insert(d.added.begin(), d.added.end());
    bool disjoint = std::none_of(d.added.begin(), d.added.end(), [&](const ApiRef& a) { return d.removed.contains(a); });
    if (rebuilt != next.apis || !disjoint) return {false, "trial " + std::to_string(trial)};
  }
  return {true, "100 pairs"};
}

// ---------------------------------------------------------------- 6

Outcome ClassFileOracle() {
  std::map<std::string, std::set<std::string>> dump;
  {
    std::istringstream in(ReadFile(DataDir() / "classfiles.javap"));
    std::string line;
    std::set<std::string>* current = nullptr;
    while (std::getline(in, line)) {
      if (line.starts_with("## ")) {
        current = &dump[line.substr(3)];
      } else if (current && !line.empty()) {
        current->insert(line);
      }
    }
  }
  size_t matched = 0;
  std::set<std::string> required = {"Empty.class", "Outer$Inner.class", "Bridge.class", "DefaultCtor.class",
                                    "Varargs.class"};
  for (const auto& entry : fs::directory_iterator(DataDir() / "classfiles")) {
    std::string name = entry.path().filename().string();
    auto it = dump.find(name);
    if (it == dump.end()) return {false, name + " missing from the reference dump"};
    AalSnapshot s;
    ParseOptions raw;
    raw.filter_synthesized = false;
    AddParsedClass(ParseClassFile(ReadBytes(entry.path())), raw, &s);
    if (Lines(s.apis) != it->second) return {false, name + " differs from the reference dump"};
    required.erase(name);
    ++matched;
  }
  bool ok = matched >= 10 && matched == dump.size() && required.empty();
  return {ok, std::to_string(matched) + " class files"};
}

// ---------------------------------------------------------------- 7

Outcome DexOracle() {
  std::set<ApiRef> aal_union = ParseSnapshot(std::string_view(ReadFile(DataDir() / "scan_union.aal"))).apis;
  UsageReport report = ScanApk(ReadBytes(DataDir() / "fixture.apk"), aal_union);
  std::string text = report.Serialize();
  std::string head = text.substr(text.find('\n') + 1);
  head = head.substr(0, head.find("[reflect]"));
  if (head != ReadFile(DataDir() / "fixture_apk.classified")) return {false, "direct/extra differ from the dump"};
  bool reflect = report.reflect.contains(ParseCanonicalLine("C android.os.SystemProperties")) &&
                 report.reflect.contains(ParseCanonicalLine("M android.app.Activity canStartActivityForResult ()")) &&
                 report.reflect.contains(ParseCanonicalLine("F android.view.View mAttachInfo"));
  return {reflect, std::to_string(report.direct.size()) + " direct, " + std::to_string(report.extra.size()) +
                       " extra, " + std::to_string(report.reflect.size()) + " reflect"};
}

// ---------------------------------------------------------------- 8

Outcome RoundTrip() {
  testing::CrossFormatFixture fx = testing::GenerateCrossFormat(8, 200, 33);
  std::vector<uint8_t> jar_bytes = ReadBytes(DataDir() / "fixture.jar");
  std::vector<std::pair<std::string, std::function<AalSnapshot()>>> parsers = {
      {"TXT", [&] { return ParseTxt(std::string_view(fx.txt), 33); }},
      {"CSV", [&] { return ParseCsv(std::string_view(fx.csv), 33); }},
      {"XML", [&] { return SnapshotAt(ParseApiVersions(std::string_view(fx.xml)), 33); }},
      {"JAR", [&] { return ParseArchive(fx.jar, 33); }},
      {"JAR fixture", [&] { return ParseArchive(jar_bytes, 33); }},
  };
  for (const auto& [name, parse] : parsers) {
    AalSnapshot first = parse();
    std::string text = FormatSnapshot(first);
    AalSnapshot again = ParseSnapshot(std::string_view(text));
    if (!(again == first)) return {false, name + ": parse-serialize-parse changed the snapshot"};
    if (FormatSnapshot(again) != text || FormatSnapshot(parse()) != text) {
      return {false, name + ": output not byte-identical"};
    }
  }
  std::set<ApiRef> aal_union = ParseSnapshot(std::string_view(ReadFile(DataDir() / "scan_union.aal"))).apis;
  std::vector<uint8_t> apk = ReadBytes(DataDir() / "fixture.apk");
  if (ScanApk(apk, aal_union).Serialize() != ScanApk(apk, aal_union).Serialize()) {
    return {false, "scan report not byte-identical"};
  }
  return {true, "TXT, CSV, XML, JAR and scan"};
}

// ---------------------------------------------------------------- 9

// Independent of SynthesizedFilter: regexes over the raw JNI signature.
bool LineIsSynthesized(const std::string& signature) {
  static const std::regex kShape(R"(^L([^;]+);->([^(:]+)([(:]).*$)");
  static const std::regex kClass(R"(\$\$Lambda\$\d|(^|\$)[^$]*Lambda\d+(\$|$))");
  static const std::regex kAccessor(R"(^access\$\d+$)");
  static const std::regex kMethod(R"(^lambda\$|\$\$Lambda\$\d|(^|\$)[^$]*Lambda\d+(\$|$))");
  std::smatch m;
  if (!std::regex_match(signature, m, kShape)) throw Error("bad fixture line " + signature);
  std::string cls = m[1];
  std::string name = m[2];
  bool method = m[3] == "(";
  std::string simple = cls.substr(cls.rfind('/') + 1);
  if (std::regex_search(simple, kClass)) return true;
  if (std::regex_match(name, kAccessor)) return true;
  return method && (name == "<clinit>" || std::regex_search(name, kMethod));
}

Outcome SynthesizedFilterProperty() {
  std::mt19937 rng(9);
  const std::vector<std::string> plain = {"android/app/Activity", "android/view/View$1", "android/os/Handler"};
  const std::vector<std::string> synth_classes = {"android/os/Handler$$Lambda$3",
                                                  "com/android/Foo$$ExternalSyntheticLambda0"};
  const std::vector<std::string> plain_members = {"onCreate(Landroid/os/Bundle;)V", "mState:I", "run()V",
                                                  "lambdaHelper()V", "access$x()V"};
  const std::vector<std::string> synth_members = {"<clinit>()V", "lambda$onClick$0(Landroid/view/View;)V",
                                                  "access$100:I", "get$$Lambda$0()V"};
  std::string csv;
  std::vector<std::string> signatures;
  size_t planted = 0;
  for (int i = 0; i < 5000; ++i) {
    bool synth = rng() % 10 == 0;  // about 10% planted
    std::string cls;
    std::string member;
    if (synth && rng() % 2) {
      cls = synth_classes[rng() % synth_classes.size()];
      member = plain_members[rng() % plain_members.size()];
    } else {
      cls = plain[rng() % plain.size()] + std::to_string(rng() % 50);
      member = (synth ? synth_members[rng() % synth_members.size()] : plain_members[rng() % plain_members.size()]);
    }
    std::string sig = "L" + cls + ";->" + member;
    planted += synth;
    signatures.push_back(sig);
    csv += sig + ",blocked\n";
  }
  std::set<std::string> expected;
  size_t flagged = 0;
  for (const std::string& sig : signatures) {
    if (LineIsSynthesized(sig)) {
      ++flagged;
      continue;
    }
    expected.insert(ParseJniMemberSignature(sig).canonical());
  }
  AalSnapshot s = ParseCsv(std::string_view(csv), 33);
  std::set<std::string> members;
  for (const ApiRef& api : s.apis) {
    if (api.is_member()) members.insert(api.canonical());
  }
  SynthesizedShare share = MeasureSynthesized(csv);
  char pct[64];
  std::snprintf(pct, sizeof(pct), "%.1f%% of lines synthesized", 100.0 * share.fraction());
  bool ok = members == expected && flagged == planted && share.synthesized == planted;
  return {ok, pct};
}

}  // namespace
}  // namespace aal

int main(int argc, char** argv) {
  CLI::App app("Runs the acceptance checks.", "aal_acceptance");
  std::string hiddenapi_csv;
  app.add_option("--hiddenapi-csv", hiddenapi_csv, "real hiddenapi-flags.csv for the informational share")
      ->check(CLI::ExistingFile);
  CLI11_PARSE(app, argc, argv);

  struct Criterion {
    int id;
    const char* name;
    double limit_ms;  // 0: no limit
    aal::Outcome (*run)();
  };
  const Criterion criteria[] = {
      {1, "TXT erasure fidelity", 1000, aal::TxtErasure},
      {2, "CSV policy fidelity", 0, aal::CsvPolicy},
      {3, "cross-format oracle", 5000, aal::CrossFormat},
      {4, "Venn correctness property", 10000, aal::VennProperty},
      {5, "evolution algebra property", 0, aal::EvolutionProperty},
      {6, "class-file oracle", 0, aal::ClassFileOracle},
      {7, "DEX oracle", 0, aal::DexOracle},
      {8, "round-trip determinism", 0, aal::RoundTrip},
      {9, "synthesized-filter property", 0, aal::SynthesizedFilterProperty},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    auto start = aal::Clock::now();
    aal::Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    double ms = std::chrono::duration<double, std::milli>(aal::Clock::now() - start).count();
    if (c.limit_ms > 0 && ms > c.limit_ms) {
      outcome.pass = false;
      outcome.detail += ", over the time limit";
    }
    failed += !outcome.pass;
    std::printf("criterion %d: %s  %s (%s; %.0f ms)\n", c.id, outcome.pass ? "PASS" : "FAIL", c.name,
                outcome.detail.c_str(), ms);
  }
  if (!hiddenapi_csv.empty()) {
    try {
      aal::SynthesizedShare share = aal::MeasureSynthesized(aal::ReadFile(hiddenapi_csv));
      std::printf("info: %s: %zu of %zu member lines synthesized (%.2f%%; reference 8.7%% +/- 3)\n",
                  hiddenapi_csv.c_str(), share.synthesized, share.lines, 100.0 * share.fraction());
    } catch (const std::exception& e) {
      std::printf("info: %s: %s\n", hiddenapi_csv.c_str(), e.what());
    }
  }
  return failed == 0 ? 0 : 1;
}
