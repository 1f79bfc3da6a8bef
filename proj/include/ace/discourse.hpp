#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ace/drs.hpp"
#include "ace/syntax.hpp"

namespace ace {

struct Referent {
  RefId id = -1;
  Gender gender = Gender::Neut;
  Number number = Number::Sg;
  std::string sort;     // noun lemma, "named" for proper nouns, "group", or empty for wh-words
  std::string surface;  // noun surface in the referent's number, used for "the <surface>"
  std::optional<std::string> name;
  int sentence = 0;
};

struct ReportEntry {
  enum class Kind { Pronoun, Definite, Abbreviation, Synonym, Ellipsis, Attachment, PluralReading };
  Kind kind;
  int node;          // syntax node id the entry belongs to
  std::string text;  // replacement or reconstructed material, lowercase
  std::optional<RefId> referent;
};

struct ResolutionReport {
  int sentence = 0;
  std::vector<ReportEntry> entries;

  const ReportEntry* find(ReportEntry::Kind kind, int node) const;
};

struct Discourse {
  Drs top;
  std::vector<Referent> referents;  // index == id
  int sentences = 0;

  const Referent& referent(RefId id) const { return referents.at(static_cast<std::size_t>(id)); }
  // "the customer", or the name for named referents.
  std::string description(RefId id) const;
};

// Translates one declarative tree in the context of the discourse so far and
// appends the result. On error the discourse is left unchanged.
ResolutionReport extend_drs(const SyntaxTree& tree, Discourse& discourse);

// Resolves a pronoun or definite noun phrase against the top-level context.
// nullopt means a definite NP introduces a new referent (unique reference).
// Throws UnresolvedPronoun when a pronoun has no antecedent.
std::optional<RefId> resolve_anaphor(const NounPhrase& np, const Discourse& discourse);

struct QueryDrs {
  Drs drs;              // the question's own box
  Discourse context;    // copy of the session discourse, possibly with accommodated referents
  std::vector<Atom> accommodated;  // conditions the question added to the top box
  std::optional<RefId> wh;
  ResolutionReport report;
};

QueryDrs build_query_drs(const SyntaxTree& tree, const Discourse& discourse);

// Top-level referents and conditions contributed by one sentence.
Drs sentence_extension(const Discourse& discourse, int sentence);

}  // namespace ace
