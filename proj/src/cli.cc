// Copyright 2026 The adg-metrics Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <filesystem>
#include <fstream>
#include <iterator>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "adgm/parser.h"
#include "adgm/report.h"

namespace adgm {

namespace {

bool ReadFile(const std::string& path, std::string& contents) {
  std::error_code ec;
  if (std::filesystem::is_directory(path, ec)) return false;
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  contents.assign(std::istreambuf_iterator<char>(in),
                  std::istreambuf_iterator<char>());
  return !in.bad();
}

bool WriteFile(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) return false;
  out << contents;
  out.flush();
  return static_cast<bool>(out);
}

}  // namespace

int Run(const std::vector<std::string>& argv, std::ostream& out,
        std::ostream& err) {
  CliConfig config;
  bool json = false;
  bool text = false;
  bool no_default_internal = false;
  std::string dot_path;

  CLI::App app{"Architectural dependence graph metrics", "adg-metrics"};
  app.require_subcommand(1);
  CLI::App* analyze =
      app.add_subcommand("analyze", "Parse a MiniADL file and report metrics");
  analyze->add_option("path", config.input_path, "MiniADL source file")
      ->required();
  CLI::Option* json_flag =
      analyze->add_flag("--json", json, "Emit the JSON report");
  CLI::Option* text_flag =
      analyze->add_flag("--text", text, "Emit the text report (default)");
  json_flag->excludes(text_flag);
  analyze->add_option("--dot", dot_path, "Also write the graph as DOT here");
  analyze->add_flag("--no-default-internal", no_default_internal,
                    "Do not assume every out port depends on every in port "
                    "of components without internal declarations");
  analyze->add_flag("--closure", config.show_closure,
                    "Include the transitive closure pairs in the report");

  std::vector<const char*> args;
  args.reserve(argv.size());
  for (const auto& a : argv) args.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(args.size()), args.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "adg-metrics: " << e.what() << "\n";
    return kExitUsage;
  }
  if (json) config.output_format = OutputFormat::kJson;
  config.default_internal = !no_default_internal;
  if (!dot_path.empty()) config.dot_path = dot_path;

  std::string source;
  if (!ReadFile(config.input_path, source)) {
    err << config.input_path << ": error: cannot read file\n";
    return kExitIo;
  }

  Architecture arch;
  try {
    arch = Parse(source);
  } catch (const ParseError& e) {
    err << config.input_path << ":" << e.line() << ":" << e.column()
        << ": error: " << e.what() << "\n";
    return kExitParseError;
  }

  const Adg adg = BuildAdg(arch, config.default_internal);
  const std::vector<Count> complexities = DeclaredComplexities(arch);
  const MetricsReport report = ComputeReport(adg, complexities);

  if (config.dot_path && !WriteFile(*config.dot_path, ToDot(adg))) {
    err << *config.dot_path << ": error: cannot write file\n";
    return kExitIo;
  }
  out << (config.output_format == OutputFormat::kJson
              ? RenderJson(report, adg, config)
              : RenderText(report, adg, config));
  return kExitOk;
}

}  // namespace adgm
