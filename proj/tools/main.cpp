// Copyright 2026 The lzgate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "lzgate/cli/commands.hpp"

namespace {

using namespace lzgate::cli;

std::string read_all(std::istream &in) {
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

nlohmann::json load_config(const std::string &path) {
    std::string text;
    if (path.empty()) {
        text = read_all(std::cin);
    } else {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw IoError("cannot open config '" + path + "'");
        text = read_all(in);
    }
    // an empty document means "all defaults"
    if (text.find_first_not_of(" \t\r\n") == std::string::npos) {
        return nlohmann::json::object();
    }
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
}

void write_file(const std::string &path, const std::string &content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << content;
    out.close();
    if (!out) throw IoError("write to '" + path + "' failed");
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Landau-Zener gate simulator"};
    app.require_subcommand(1);
    std::string config_path;
    std::string out_path;
    std::string format_name = "csv";

    for (const char *name : {"crossing", "angles", "sweep", "verify"}) {
        CLI::App *sub = app.add_subcommand(name);
        sub->add_option("--config", config_path,
                        "JSON config file (standard input if absent)");
        sub->add_option("--out", out_path, "output path (standard output if absent)");
        sub->add_option("--format", format_name, "csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
    }
    app.get_subcommand("crossing")->description("occupation traces through one crossing");
    app.get_subcommand("angles")->description("rotation angles alpha(g), Phi(g)");
    app.get_subcommand("sweep")->description("single vs composite gate error against offset");
    app.get_subcommand("verify")->description("cross-pipeline self checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }
    const std::string command = app.get_subcommands().front()->get_name();

    try {
        const nlohmann::json config = load_config(config_path);
        const CommandResult result =
            run_command(command, config, parse_format(format_name));
        if (out_path.empty()) {
            std::cout << result.output << std::flush;
            if (!std::cout) throw IoError("write to standard output failed");
        } else {
            write_file(out_path, result.output);
            if (!result.sidecar.empty()) {
                write_file(out_path + ".design.json", result.sidecar);
            }
        }
        if (result.exit_code != kExitOk) {
            std::cerr << command << ": one or more checks failed\n";
        }
        return result.exit_code;
    } catch (const ConfigError &e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const IoError &e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
}
