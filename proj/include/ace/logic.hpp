#pragma once

#include <string>
#include <vector>

namespace ace {

struct Term {
  enum class Kind { Skolem, Name, Number, Variable, Function };
  Kind kind = Kind::Skolem;
  std::string text;  // name, number text, variable name
  long id = 0;       // Skolem ordinal, Function ordinal
  std::vector<Term> args;

  static Term skolem(long id) { return {Kind::Skolem, {}, id, {}}; }
  static Term name(std::string n) { return {Kind::Name, std::move(n), 0, {}}; }
  static Term number(std::string n) { return {Kind::Number, std::move(n), 0, {}}; }
  static Term variable(std::string v) { return {Kind::Variable, std::move(v), 0, {}}; }
  static Term function(long id, std::vector<Term> args) { return {Kind::Function, {}, id, std::move(args)}; }

  bool is_ground() const;
  friend bool operator==(const Term&, const Term&) = default;
  friend bool operator<(const Term& a, const Term& b);
};

struct LogicAtom {
  std::string pred;
  std::vector<Term> args;

  bool is_ground() const;
  friend bool operator==(const LogicAtom&, const LogicAtom&) = default;
  friend bool operator<(const LogicAtom& a, const LogicAtom& b);
};

struct Literal {
  bool positive = true;
  LogicAtom atom;
  friend bool operator==(const Literal&, const Literal&) = default;
};

// A fact has an empty body. A denial has no head and states that its body
// must not hold.
struct Clause {
  LogicAtom head;
  std::vector<Literal> body;
  int sentence = 0;
  bool denial = false;

  bool is_fact() const { return !denial && body.empty(); }
};

std::string to_string(const Term& t);
std::string to_string(const LogicAtom& a);
std::string to_string(const Literal& l);
// fact(p(0)).  fact((h:- b1, b2)).  fact((false:- b1, b2)).
std::string to_string(const Clause& c);

}  // namespace ace
