#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "hue/commands.hpp"

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw hue::ValidationError("cannot open input file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hue: exact invariants of hypergraph coloring complexes"};
  app.footer("Input is a hypergraph in JSON ({\"vertices\": n, \"edges\": [[...]]}) or in the\n"
             "text format (lines: 'n <int>', 'edge <v1> <v2> ...', '#' comments); '-' reads\n"
             "standard input. Results are JSON on stdout, diagnostics on stderr.\n"
             "Environment: HUE_THREADS caps worker threads.");
  app.set_version_flag("--version", std::string("hue ") + hue::kToolVersion);

  hue::CommandOptions opt;
  std::string input_path;
  app.add_option("command", opt.command,
                 "one of validate|complex|chromatic|bounds|homology|cup|cm|connectedness|"
                 "wedge|report")
      ->required();
  app.add_option("input", input_path, "input file path, or - for stdin")->required();
  app.add_option("--method", opt.method,
                 "chromatic route: brute|faces|inclusion_exclusion|all (default faces)");
  app.add_option("--truncation", opt.truncation,
                 "bounds: report only this truncation level m (default: the whole table)");
  app.add_option("--coefficients", opt.coefficients, "homology/cup coefficients: Q or Z");
  app.add_option("--budget", opt.budget, "cap on enumerated faces (0 keeps the defaults)");
  app.add_flag("--reduce-to-minimal", opt.reduce_to_minimal,
               "drop duplicate and non-minimal edges instead of rejecting them");
  app.add_flag("--pretty", opt.pretty,
               "indent the JSON and add a readable rendering on stderr");
  app.add_option("--normalization", opt.normalization,
                 "h-vector normalization n' (default: the polynomial degree)");
  CLI11_PARSE(app, argc, argv);

  try {
    opt.input_text = read_input(input_path);
  } catch (const std::exception& e) {
    std::cerr << "[error] " << e.what() << "\n";
    return 2;
  }

  hue::CommandResult res = hue::run_command(opt);
  std::cout << (opt.pretty ? res.document.dump(2) : res.document.dump()) << "\n";
  for (const std::string& line : res.diagnostics) std::cerr << line << "\n";
  if (opt.pretty) std::cerr << hue::render_pretty(res.document);
  return res.exit_code;
}
