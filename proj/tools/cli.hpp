#pragma once

#include "json.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace hfgrade::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int {
  kOk = 0,
  kInputError = 1,     // unreadable file, parse or structural error, bad generator
  kUsageError = 2,     // unknown command or bad flags
  kInconsistent = 3,   // an identity that must hold failed
};

// Runs one command line (without the program name). Structured output goes to
// `out` as a single JSON document when --json is given, otherwise as text.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Text rendering of a report payload: one "key: value" line per scalar.
std::string render_text(const Json& value);

}  // namespace hfgrade::cli
