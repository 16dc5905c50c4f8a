#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hue/json_io.hpp"

namespace hue {

inline constexpr const char* kToolVersion = "0.1.0";

// One process, one command. Flags default to the documented behavior; a zero
// budget keeps each module's own default.
struct CommandOptions {
  std::string command;
  std::string input_text;          // raw bytes of the input document
  std::string method = "faces";    // chromatic route, or "all" for the cross-checked trio
  int truncation = -1;             // bounds: a single level m, or the whole table when negative
  std::string coefficients = "Q";  // homology / cup ring: Q or Z
  std::size_t budget = 0;
  bool reduce_to_minimal = false;
  bool pretty = false;
  int normalization = -1;          // h-vector normalization n'; negative picks the default
};

struct CommandResult {
  int exit_code = 0;  // 0 ok, 2 validation, 3 budget, 4 cross-check disagreement
  Json document;      // the full report envelope (or an error envelope)
  std::vector<std::string> diagnostics;
};

// Dispatches one command. Never throws: errors are folded into the exit code
// and an "error" member of the document.
CommandResult run_command(const CommandOptions& opt);

// Indented human rendering of a report document. Purely a function of the
// JSON, so it can never drift from the machine output.
std::string render_pretty(const Json& document);

}  // namespace hue
