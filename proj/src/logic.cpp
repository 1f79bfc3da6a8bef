#include "ace/logic.hpp"

#include <algorithm>
#include <tuple>

namespace ace {

bool Term::is_ground() const {
  if (kind == Kind::Variable) return false;
  return std::all_of(args.begin(), args.end(), [](const Term& t) { return t.is_ground(); });
}

bool operator<(const Term& a, const Term& b) {
  return std::tie(a.kind, a.id, a.text, a.args) < std::tie(b.kind, b.id, b.text, b.args);
}

bool LogicAtom::is_ground() const {
  return std::all_of(args.begin(), args.end(), [](const Term& t) { return t.is_ground(); });
}

bool operator<(const LogicAtom& a, const LogicAtom& b) { return std::tie(a.pred, a.args) < std::tie(b.pred, b.args); }

std::string to_string(const Term& t) {
  switch (t.kind) {
    case Term::Kind::Skolem: return std::to_string(t.id);
    case Term::Kind::Name:
    case Term::Kind::Number:
    case Term::Kind::Variable: return t.text;
    case Term::Kind::Function: {
      if (t.args.empty()) return "sk" + std::to_string(t.id);
      std::string out = "sk" + std::to_string(t.id) + "(";
      for (std::size_t i = 0; i < t.args.size(); ++i) out += (i ? ", " : "") + to_string(t.args[i]);
      return out + ")";
    }
  }
  return "?";
}

std::string to_string(const LogicAtom& a) {
  std::string out = a.pred + "(";
  for (std::size_t i = 0; i < a.args.size(); ++i) out += (i ? ", " : "") + to_string(a.args[i]);
  return out + ")";
}

std::string to_string(const Literal& l) { return l.positive ? to_string(l.atom) : "neg(" + to_string(l.atom) + ")"; }

std::string to_string(const Clause& c) {
  if (c.is_fact()) return "fact(" + to_string(c.head) + ").";
  std::string out = "fact((" + (c.denial ? std::string("false") : to_string(c.head)) + ":- ";
  for (std::size_t i = 0; i < c.body.size(); ++i) out += (i ? ", " : "") + to_string(c.body[i]);
  return out + ")).";
}

}  // namespace ace
