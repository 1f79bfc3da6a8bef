#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "ace/session.hpp"

namespace ace {

// 1 parse or lexicon, 2 resolution, 3 translation, 4 anything else.
int exit_code(ErrorCode code);

struct BatchOptions {
  std::string emit;  // "", "drs", "clauses" or "paraphrase"
  std::optional<std::filesystem::path> report;
  std::optional<std::filesystem::path> defs;
};

// Accepts every declarative sentence of the text, answers questions in
// place, then emits. Stops at the first parse or resolution error.
int run_batch(Session& session, std::string_view text, const BatchOptions& options, std::istream& in,
              std::ostream& out, std::ostream& err);

// Runs to completion, asking on the console whenever the definitions run
// out. Trace lines are printed as they happen.
void run_interactive(Execution& execution, std::istream& in, std::ostream& out);

int run_repl(Session& session, const Lexicon& base, std::istream& in, std::ostream& out);

}  // namespace ace
