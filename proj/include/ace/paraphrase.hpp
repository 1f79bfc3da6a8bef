#pragma once

#include <string>
#include <vector>

#include "ace/discourse.hpp"
#include "ace/syntax.hpp"

namespace ace {

struct Marker {
  enum class Kind { Substitution, Reconstruction, AttachmentGroup };
  Kind kind;
  std::size_t begin;  // byte offsets into Paraphrase::text, brackets included
  std::size_t end;
};

struct Paraphrase {
  std::string text;
  std::vector<Marker> markers;
};

std::string_view to_string(Marker::Kind kind);

// Lowercased ACE rendering with [substitutions], [reconstructions] and
// {attachment groups}.
Paraphrase render(const SyntaxTree& tree, const ResolutionReport& report);

// Removes every bracket and brace; the result is plain ACE again.
std::string strip_markers(std::string_view text);

// Restates a wh-question declaratively with the wh-word replaced by
// "[answer]", e.g. "[a customer] enters a card."
std::string render_wh_answer(const SyntaxTree& question, const std::string& answer);

}  // namespace ace
