// Copyright 2026 The seisnet Authors
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

// seisnet command-line entry point.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include <seisnet/app/commands.hpp>
#include <seisnet/app/config.hpp>
#include <seisnet/app/report.hpp>
#include <seisnet/error.hpp>

namespace {

using seisnet::app::ExitCode;

struct Options {
  std::string config_path;
  std::string preset_name;
  std::optional<std::uint64_t> seed;
  std::string format;
  std::string out_path;
  std::string trace_path;
};

void add_common(CLI::App* sub, Options& o) {
  auto* cfg = sub->add_option("--config", o.config_path, "JSON project configuration file");
  auto* pre = sub->add_option("--preset", o.preset_name, "built-in preset")
                  ->check(CLI::IsMember(seisnet::app::preset_names()));
  cfg->excludes(pre);
  sub->add_option("--seed", o.seed, "override the configured RNG seed");
  sub->add_option("--format", o.format, "report format")->check(CLI::IsMember({"json", "text"}));
  sub->add_option("--out", o.out_path, "write the report here instead of stdout");
}

seisnet::app::ProjectConfig resolve_config(const Options& o) {
  seisnet::app::ProjectConfig config;
  if (!o.config_path.empty()) {
    config = seisnet::app::load_config_file(o.config_path);
  } else if (!o.preset_name.empty()) {
    config = seisnet::app::preset(o.preset_name);
  } else {
    throw seisnet::ValidationError("<cli>", "one of --config or --preset is required");
  }
  if (o.seed) config.seed = *o.seed;
  if (o.format == "json") config.format = seisnet::app::OutputFormat::kJson;
  if (o.format == "text") config.format = seisnet::app::OutputFormat::kText;
  return config;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw seisnet::ValidationError("--out", "cannot open '" + out_path + "'");
  out << text;
}

int execute(const std::string& command, const Options& o) {
  const auto config = resolve_config(o);

  if (command == "config") {
    emit(seisnet::app::config_to_json(config).dump(2) + "\n", o.out_path);
    return 0;
  }

  std::unique_ptr<std::ofstream> trace;
  if (!o.trace_path.empty()) {
    trace = std::make_unique<std::ofstream>(o.trace_path, std::ios::binary);
    if (!*trace) throw seisnet::ValidationError("--trace", "cannot open '" + o.trace_path + "'");
  }
  auto result = seisnet::app::run_command(command, config, trace.get());
  const std::string text = config.format == seisnet::app::OutputFormat::kText
                               ? result.report.to_text()
                               : result.report.to_json_string();
  emit(text, o.out_path);
  return static_cast<int>(result.exit_code);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Capacity planning and simulation for duty-cycled seismic telemetry networks",
               "seisnet"};
  app.set_version_flag("--version", seisnet::app::tool_version());
  app.require_subcommand(1);

  Options opts;
  std::string command;
  const std::pair<const char*, const char*> subs[] = {
      {"rates", "per-stream bitrates and yearly data volumes"},
      {"design", "search design parameters against the feasibility criteria"},
      {"plan", "gateway placement, node assignment and opex"},
      {"simulate", "duty-cycled delivery simulation with delay comparison"},
      {"config", "print the resolved configuration as JSON"},
  };
  for (const auto& [name, help] : subs) {
    auto* sub = app.add_subcommand(name, help);
    add_common(sub, opts);
    if (std::string(name) == "simulate") {
      sub->add_option("--trace", opts.trace_path, "write the per-frame trace as CSV");
    }
    sub->callback([&command, n = std::string(name)] { command = n; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : static_cast<int>(ExitCode::kValidation);
  }

  try {
    return execute(command, opts);
  } catch (const seisnet::ValidationError& e) {
    std::cerr << "seisnet: invalid configuration: " << e.what() << "\n";
    return static_cast<int>(ExitCode::kValidation);
  } catch (const seisnet::Error& e) {
    std::cerr << "seisnet: " << e.what() << "\n";
    return static_cast<int>(ExitCode::kValidation);
  } catch (const std::exception& e) {
    std::cerr << "seisnet: internal error: " << e.what() << "\n";
    return static_cast<int>(ExitCode::kInternal);
  }
}
