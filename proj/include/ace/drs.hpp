#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ace/syntax.hpp"

namespace ace {

using RefId = int;

struct Name {
  std::string value;
  friend bool operator==(const Name&, const Name&) = default;
};

struct Num {
  std::string text;
  friend bool operator==(const Num&, const Num&) = default;
};

using Arg = std::variant<RefId, Name, Num>;

enum class AtomRole { Sort, Property, Event, Named, Modifier, Count, Member };

struct Drs;

struct Atom {
  std::string pred;
  std::vector<Arg> args;
  AtomRole role = AtomRole::Event;
};

struct Not {
  Box<Drs> body;
};

struct Implies {
  Box<Drs> antecedent;
  Box<Drs> consequent;
};

struct Or {
  std::vector<Drs> disjuncts;
  bool exclusive = false;
};

// Collective plural: a group referent standing for its members.
struct Group {
  RefId group = -1;
  std::vector<RefId> members;
};

struct Condition {
  std::variant<Atom, Not, Implies, Or, Group> node;
  int sentence = 0;
};

struct Drs {
  std::vector<RefId> referents;
  std::vector<Condition> conditions;
};

// A, B, ... Z, A1, B1, ...
std::string referent_name(RefId id);

std::string format_arg(const Arg& arg);

// Referent line, then one condition per line; complex conditions as labeled
// sub-boxes (IF:/THEN:, NOT:, EITHER:/OR:) indented by two spaces.
std::string format_drs(const Drs& drs);

// Structural equality up to a consistent bijective renaming of referents.
bool alpha_equivalent(const Drs& a, const Drs& b);

// Returns a description of the first condition that mentions a referent not
// accessible at its position, or nullopt when the structure is well formed.
std::optional<std::string> accessibility_violation(const Drs& top);

}  // namespace ace
