#pragma once

#include <string>
#include <vector>

#include "ace/drs.hpp"
#include "ace/error.hpp"
#include "ace/logic.hpp"

namespace ace {

// A top-level condition left out of the clause set. It stays in the DRS, and
// queries touching its predicates answer "unknown".
struct Untranslated {
  int sentence = 0;
  Diagnostic diagnostic;
  std::vector<std::string> predicates;
};

struct Translation {
  std::vector<Clause> clauses;  // provenance order, denials included
  std::vector<Untranslated> untranslated;
};

// Top-level referents become Skolem constants named by their id; referents of
// an antecedent become variables; referents of a consequent become Skolem
// functions of the antecedent variables.
Translation drs_to_clauses(const Drs& top);

std::string render_clauses(const std::vector<Clause>& clauses);

}  // namespace ace
