// Copyright 2026 The Authors.
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


// qtrans: JSON front end for the q-transversal library.
//
//   qtrans <command> [instance.json | -] [--oracle] [--smallest]
//          [--shards N] [--timing] [--pretty] [-o out.json]

#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "qtrans/cli.hpp"

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw qtrans::Error(qtrans::ErrorCode::kMalformedInput, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"q-matroids and q-transversals over finite fields"};
  app.require_subcommand(1, 1);
  std::string input = "-";
  std::string output;
  bool pretty = false;
  int shards = 0;
  qtrans::cli::Options opt;
  const std::map<std::string_view, std::string> about = {
      {"hall", "Hall condition for a set family"},
      {"rado", "Rado condition against a classical matroid"},
      {"q-hall", "q-Hall condition and a full q-transversal"},
      {"check-transversal", "avoiding transversal of a subset, or the avoid-Rado form"},
      {"check-q-transversal", "is a subspace a partial q-transversal"},
      {"build-matroid", "rank table of the presentation matroid"},
      {"reduce-presentation", "drop members down to rank-many"},
      {"check-minimal", "is the presentation minimal"},
      {"represent-aligned", "matrix representation of an aligned family"},
      {"verify-representation", "compare a representation with a rank table"},
      {"scan", "run a conjecture scan"}};
  for (auto name : qtrans::cli::kCommands) {
    auto* sub = app.add_subcommand(std::string(name), about.at(name));
    sub->add_option("input", input, "instance JSON file, or - for stdin");
    sub->add_option("-o,--output", output, "write the result here instead of stdout");
    sub->add_flag("--pretty", pretty, "indent the JSON output");
    if (name == "check-q-transversal") {
      sub->add_flag("--oracle", opt.oracle, "use the basis-enumeration definition");
    }
    if (name == "represent-aligned") {
      sub->add_flag("--smallest", opt.smallest, "least extension degree that verifies");
    }
    if (name == "scan") {
      sub->add_option("--shards", shards, "override parallel_shards")->check(CLI::PositiveNumber);
      sub->add_flag("--timing", opt.timing, "include elapsed_ms (output no longer reproducible)");
    }
  }
  CLI11_PARSE(app, argc, argv);
  if (shards > 0) opt.shards = shards;
  const std::string command = app.get_subcommands().front()->get_name();

  qtrans::json result;
  int code = qtrans::cli::kExitOk;
  try {
    const auto text = read_input(input);
    const auto doc = qtrans::json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (doc.is_discarded()) {
      throw qtrans::Error(qtrans::ErrorCode::kMalformedInput, "input is not valid JSON");
    }
    code = qtrans::cli::run_command(command, doc, opt, result);
  } catch (const qtrans::Error& e) {
    result = qtrans::cli::error_to_json(e);
    code = qtrans::cli::exit_code_for(e.code());
  }
  const std::string text = result.dump(pretty ? 2 : -1) + "\n";
  if (output.empty()) {
    std::cout << text;
  } else {
    std::ofstream(output, std::ios::binary) << text;
  }
  return code;
}
