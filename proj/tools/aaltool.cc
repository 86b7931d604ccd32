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

#include "aaltool.h"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "aal/canonical_io.h"
#include "aal/csv_parser.h"
#include "aal/dex_scanner.h"
#include "aal/diff.h"
#include "aal/error.h"
#include "aal/jar_parser.h"
#include "aal/report.h"
#include "aal/txt_parser.h"
#include "aal/xml_parser.h"

namespace aal {

namespace {

// Bad flag combinations that CLI11 cannot express; exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(path + ": cannot open");
  return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

// Prefixes a data error with the input it came from.
template <typename F>
auto ForInput(const std::string& path, F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    std::string what = e.what();
    if (what.starts_with(path + ":")) throw;
    throw Error(path + ": " + what);
  }
}

AalSnapshot LoadSnapshot(const std::string& path) {
  return ForInput(path, [&] { return ParseSnapshot(std::string_view(ReadFile(path))); });
}

std::vector<AalSnapshot> LoadSnapshots(const std::vector<std::string>& paths) {
  std::vector<AalSnapshot> out;
  for (const std::string& path : paths) out.push_back(LoadSnapshot(path));
  return out;
}

// Kind names, or file names when two inputs share a kind.
std::vector<LabeledSnapshot> Label(const std::vector<std::string>& paths,
                                   const std::vector<AalSnapshot>& snapshots) {
  std::vector<std::string> labels;
  for (const AalSnapshot& s : snapshots) labels.emplace_back(SourceKindName(s.kind));
  if (std::set<std::string>(labels.begin(), labels.end()).size() != labels.size()) {
    for (size_t i = 0; i < paths.size(); ++i) labels[i] = std::filesystem::path(paths[i]).filename().string();
  }
  std::vector<LabeledSnapshot> out;
  for (size_t i = 0; i < snapshots.size(); ++i) out.push_back({labels[i], &snapshots[i]});
  return out;
}

void PrintDiagnostics(const std::string& path, const Diagnostics& diags, std::ostream& err) {
  for (const Diagnostic& d : diags.entries()) {
    err << path << ":";
    if (d.line > 0) err << d.line << ":";
    err << " " << d.message << "\n";
  }
}

struct Output {
  std::string path;

  void Write(const std::string& text, std::ostream& out) const {
    if (path.empty()) {
      out << text;
      return;
    }
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    file << text;
    if (!file.flush()) throw Error(path + ": cannot write");
  }
};

// ---------------------------------------------------------------- parse

struct ParseArgs {
  std::string input;
  std::string format;
  int level = 0;
  bool no_filter = false;
  std::vector<std::string> lists;
  Output output;
};

std::string InferFormat(const std::string& path) {
  std::string ext = std::filesystem::path(path).extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
  if (ext == ".txt" || ext == ".csv" || ext == ".xml" || ext == ".jar") return ext.substr(1);
  throw UsageError("cannot infer the format of '" + path + "'; pass --format");
}

int RunParse(const ParseArgs& args, bool level_given, std::ostream& out, std::ostream& err) {
  std::string format = args.format;
  if (!args.lists.empty()) {
    if (format.empty()) format = "csv";
    if (format != "csv" || !args.input.empty()) {
      throw UsageError("--list merges legacy CSV lists and takes no other input");
    }
  } else if (args.input.empty()) {
    throw UsageError("an input file or --list is required");
  }
  if (format.empty()) format = InferFormat(args.input);
  if (format != "xml" && !level_given) throw UsageError("--level is required for " + format + " input");

  ParseOptions options;
  options.filter_synthesized = !args.no_filter;
  Diagnostics diags;
  std::string source = args.input.empty() ? "--list" : args.input;
  AalSnapshot snapshot = ForInput(source, [&] {
    if (format == "txt") return ParseTxt(std::string_view(ReadFile(args.input)), args.level, options, &diags);
    if (format == "jar") {
      std::string bytes = ReadFile(args.input);
      return ParseArchive(std::span(reinterpret_cast<const uint8_t*>(bytes.data()), bytes.size()), args.level,
                          options, &diags);
    }
    if (format == "xml") {
      XmlApiModel model = ParseApiVersions(std::string_view(ReadFile(args.input)), &diags);
      int level = level_given ? args.level : model.MaxLevel();
      if (level < 1) throw Error("document names no API level; pass --level");
      return SnapshotAt(model, level, options);
    }
    std::string text;
    if (args.lists.empty()) {
      text = ReadFile(args.input);
    } else {
      std::vector<std::string> contents;
      std::vector<std::string> flags;
      for (const std::string& entry : args.lists) {
        size_t eq = entry.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 == entry.size()) {
          throw UsageError("--list expects FLAG=PATH, got '" + entry + "'");
        }
        flags.push_back(entry.substr(0, eq));
        contents.push_back(ForInput(entry.substr(eq + 1), [&] { return ReadFile(entry.substr(eq + 1)); }));
      }
      std::vector<LegacyList> lists;
      for (size_t i = 0; i < flags.size(); ++i) lists.push_back({flags[i], contents[i]});
      text = MergeLegacyLists(lists);
    }
    AalSnapshot s = ParseCsv(std::string_view(text), args.level, options, &diags);
    SynthesizedShare share = MeasureSynthesized(text);
    char pct[32];
    std::snprintf(pct, sizeof(pct), "%.2f", 100.0 * share.fraction());
    err << source << ": synthesized member lines: " << share.synthesized << " of " << share.lines << " ("
        << pct << "%)" << (options.filter_synthesized ? "" : ", retained except <clinit>") << "\n";
    return s;
  });
  PrintDiagnostics(source, diags, err);
  args.output.Write(FormatSnapshot(snapshot), out);
  return kExitOk;
}

// ---------------------------------------------------------------- others

enum class ReportFormat { kTsv, kCanonical };

void AddReportOptions(CLI::App* cmd, ReportFormat* format, bool* members, Output* output) {
  cmd->add_option_function<std::string>(
         "--report",
         [format](const std::string& name) {
           *format = name == "canonical" ? ReportFormat::kCanonical : ReportFormat::kTsv;
         },
         format == nullptr || *format == ReportFormat::kTsv ? "tsv (default): count table; canonical: listing"
                                                             : "canonical (default): listing; tsv: count table")
      ->check(CLI::IsMember({"tsv", "canonical"}));
  if (members) cmd->add_flag("--members", *members, "append membership listings to the table");
  cmd->add_option("-o,--output", output->path, "write the report here instead of stdout");
}

std::string Compose(ReportFormat format, bool members, const std::string& table, const std::string& listing) {
  if (format == ReportFormat::kCanonical) return listing;
  return members ? table + "\n" + listing : table;
}

}  // namespace

int RunAalTool(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app("Android API list toolkit: parse the four API list formats into canonical "
               "snapshots, compare them, and scan APKs against them.",
               "aaltool");
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);

  ParseArgs parse;
  CLI::App* parse_cmd = app.add_subcommand("parse", "convert one API list into a canonical snapshot");
  parse_cmd->add_option("input", parse.input, "current.txt, hiddenapi-flags.csv, api-versions.xml or android.jar");
  parse_cmd->add_option("--format", parse.format, "input format; inferred from the extension when omitted")
      ->check(CLI::IsMember({"txt", "csv", "xml", "jar"}));
  CLI::Option* level_opt = parse_cmd->add_option("--level", parse.level, "API level (optional for xml)")
                               ->check(CLI::PositiveNumber);
  parse_cmd->add_flag("--no-filter-synth", parse.no_filter, "keep lambda and accessor APIs");
  parse_cmd->add_option("--list", parse.lists,
                        "FLAG=PATH legacy list file whose entries all carry FLAG; repeatable");
  parse_cmd->add_option("-o,--output", parse.output.path, "write the snapshot here instead of stdout");

  std::vector<std::string> venn_files;
  ReportFormat venn_format = ReportFormat::kTsv;
  bool venn_members = false;
  Output venn_out;
  CLI::App* venn_cmd = app.add_subcommand("venn", "partition 2-6 snapshots of one API level by membership");
  venn_cmd->add_option("snapshots", venn_files, "2 to 6 canonical snapshot files")->required()->expected(2, 6);
  AddReportOptions(venn_cmd, &venn_format, &venn_members, &venn_out);

  std::string evolve_prev, evolve_next;
  ReportFormat evolve_format = ReportFormat::kTsv;
  bool evolve_members = false;
  Output evolve_out;
  CLI::App* evolve_cmd = app.add_subcommand("evolve", "added and removed APIs between two snapshots of one kind");
  evolve_cmd->add_option("prev", evolve_prev, "earlier snapshot")->required();
  evolve_cmd->add_option("next", evolve_next, "later snapshot")->required();
  AddReportOptions(evolve_cmd, &evolve_format, &evolve_members, &evolve_out);

  std::string scan_apk;
  std::vector<std::string> scan_lists;
  std::vector<std::string> scan_excludes;
  std::string scan_id;
  ReportFormat scan_format = ReportFormat::kCanonical;
  Output scan_out;
  CLI::App* scan_cmd = app.add_subcommand("scan", "classify an APK's API references against snapshots");
  scan_cmd->add_option("apk", scan_apk, "APK or other zip holding classes*.dex")->required();
  scan_cmd->add_option("snapshots", scan_lists, "canonical snapshots whose union is the reference")->required();
  scan_cmd->add_option("--exclude-prefix", scan_excludes, "ignore classes under this binary-name prefix; repeatable");
  scan_cmd->add_option("--apk-id", scan_id, "identifier written in the report header (default: file name)");
  AddReportOptions(scan_cmd, &scan_format, nullptr, &scan_out);

  std::vector<std::string> device_lists;
  std::string device_inventory;
  ReportFormat device_format = ReportFormat::kTsv;
  bool device_members = false;
  Output device_out;
  CLI::App* device_cmd = app.add_subcommand("compare-device", "compare snapshots with an on-device inventory");
  device_cmd->add_option("snapshots", device_lists, "canonical snapshots")->required();
  device_cmd->add_option("--inventory", device_inventory, "device inventory file")->required();
  AddReportOptions(device_cmd, &device_format, &device_members, &device_out);

  std::vector<std::string> count_files;
  Output count_out;
  CLI::App* count_cmd = app.add_subcommand("count", "classes, fields and methods per snapshot");
  count_cmd->add_option("snapshots", count_files, "canonical snapshot files")->required();
  count_cmd->add_option("-o,--output", count_out.path, "write the report here instead of stdout");

  std::string breakdown_file;
  std::string breakdown_kind = "all";
  Output breakdown_out;
  CLI::App* breakdown_cmd = app.add_subcommand("breakdown", "API counts per namespace category");
  breakdown_cmd->add_option("snapshot", breakdown_file, "canonical snapshot file")->required();
  breakdown_cmd->add_option("--kind", breakdown_kind, "class, field, method or all")
      ->check(CLI::IsMember({"class", "field", "method", "all"}));
  breakdown_cmd->add_option("-o,--output", breakdown_out.path, "write the report here instead of stdout");

  std::vector<const char*> argv{"aaltool"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (parse_cmd->parsed()) return RunParse(parse, level_opt->count() > 0, out, err);

    if (venn_cmd->parsed()) {
      std::vector<AalSnapshot> snaps = LoadSnapshots(venn_files);
      std::vector<LabeledSnapshot> labeled = Label(venn_files, snaps);
      VennPartition venn = ComputeVenn(labeled);
      venn_out.Write(Compose(venn_format, venn_members, VennTsv(venn), VennListing(venn)), out);
      return kExitOk;
    }

    if (evolve_cmd->parsed()) {
      AalSnapshot prev = LoadSnapshot(evolve_prev);
      AalSnapshot next = LoadSnapshot(evolve_next);
      EvolutionDelta delta = ComputeEvolution(prev, next);
      evolve_out.Write(Compose(evolve_format, evolve_members, EvolutionTsv(prev, next, delta),
                               EvolutionListing(delta)),
                       out);
      return kExitOk;
    }

    if (scan_cmd->parsed()) {
      std::set<ApiRef> all;
      for (const AalSnapshot& s : LoadSnapshots(scan_lists)) all.insert(s.apis.begin(), s.apis.end());
      ScanOptions options;
      options.exclude_prefixes = scan_excludes;
      Diagnostics diags;
      std::string bytes = ReadFile(scan_apk);
      UsageReport report = ForInput(scan_apk, [&] {
        return ScanApk(std::span(reinterpret_cast<const uint8_t*>(bytes.data()), bytes.size()), all, options,
                       &diags);
      });
      report.apk_id = scan_id.empty() ? std::filesystem::path(scan_apk).filename().string() : scan_id;
      PrintDiagnostics(scan_apk, diags, err);
      scan_out.Write(scan_format == ReportFormat::kCanonical ? report.Serialize() : UsageTsv(report), out);
      return kExitOk;
    }

    if (device_cmd->parsed()) {
      std::vector<AalSnapshot> snaps = LoadSnapshots(device_lists);
      std::vector<LabeledSnapshot> labeled = Label(device_lists, snaps);
      DeviceInventory inventory = ForInput(
          device_inventory, [&] { return ParseDeviceInventory(std::string_view(ReadFile(device_inventory))); });
      DeviceComparison cmp = CompareDevice(labeled, inventory);
      device_out.Write(Compose(device_format, device_members, DeviceComparisonTsv(cmp),
                               DeviceComparisonListing(cmp)),
                       out);
      return kExitOk;
    }

    if (count_cmd->parsed()) {
      std::vector<AalSnapshot> snaps = LoadSnapshots(count_files);
      count_out.Write(CountsTsv(Label(count_files, snaps)), out);
      return kExitOk;
    }

    if (breakdown_cmd->parsed()) {
      AalSnapshot s = LoadSnapshot(breakdown_file);
      std::set<ApiRef> apis;
      for (const ApiRef& api : s.apis) {
        if (breakdown_kind == "all" || ApiKindName(api.kind()) == breakdown_kind) apis.insert(api);
      }
      breakdown_out.Write(BreakdownTsv(Breakdown(apis)), out);
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "aaltool: " << e.what() << "\n";
    for (const CLI::App* cmd : app.get_subcommands()) err << cmd->help();
    return kExitUsage;
  } catch (const Error& e) {
    err << "aaltool: " << e.what() << "\n";
    return kExitDataError;
  }
  return kExitUsage;
}

}  // namespace aal
