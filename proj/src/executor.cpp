#include "ace/executor.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace ace {

namespace {

bool is_identifier(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isalnum(c) || c == '_'; });
}

bool is_numeric(std::string_view s) {
  bool digit = false;
  for (char c : s) {
    if (std::isdigit(static_cast<unsigned char>(c)))
      digit = true;
    else if (c != '.')
      return false;
  }
  return digit;
}

std::vector<std::string> words(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

std::string join(const std::vector<std::string>& items, std::size_t from, std::string_view sep) {
  std::string out;
  for (std::size_t i = from; i < items.size(); ++i) out += (i > from ? std::string(sep) : "") + items[i];
  return out;
}

std::string lexeme(std::string_view pred) {
  std::string out(pred);
  std::replace(out.begin(), out.end(), '_', ' ');
  return out;
}

}  // namespace

Assertion parse_assertion(std::string_view text, const Lexicon& lexicon) {
  auto malformed = [&](const std::string& why) {
    return Error(ErrorCode::MalformedAssertion, "'" + std::string(text) + "': " + why);
  };
  std::string t(text);
  while (!t.empty() && (std::isspace(static_cast<unsigned char>(t.back())) || t.back() == '.')) t.pop_back();
  auto w = words(t);
  for (auto& x : w) x = to_lower(x);
  if (w.size() < 3 || w[1] != "is") throw malformed("expected '<name> is ...'");
  if (!is_identifier(w[0])) throw malformed("instance names are letters, digits and '_'");
  Assertion a;
  a.name = w[0];
  std::size_t i = 2;
  if (w[i] == "not") {
    a.positive = false;
    ++i;
  }
  if (i >= w.size()) throw malformed("nothing follows 'not'");
  if (w[i] == "a" || w[i] == "an") {
    if (i + 1 >= w.size()) throw malformed("expected a sort after the article");
    a.kind = Assertion::Kind::Sort;
    a.pred = join(w, i + 1, "_");
  } else {
    auto pred = join(w, i, "_");
    if (!lexicon.lookup(lexeme(pred), WordClass::Adjective))
      throw malformed("'" + pred + "' is not an adjective; sorts need an article ('is a " + pred + "')");
    a.kind = Assertion::Kind::Property;
    a.pred = lexicon.lookup(lexeme(pred), WordClass::Adjective)->entry->predicate();
  }
  if (!is_identifier(a.pred)) throw malformed("unexpected characters in '" + a.pred + "'");
  a.text = a.name + " is " + (a.positive ? "" : "not ") +
           (a.kind == Assertion::Kind::Sort ? std::string(std::string_view("aeiou").find(a.pred[0]) !=
                                                                      std::string_view::npos
                                                                  ? "an "
                                                                  : "a ")
                                            : "") +
           a.pred;
  return a;
}

std::vector<Assertion> load_definitions(std::istream& in, const Lexicon& lexicon) {
  std::vector<Assertion> out;
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos || line[b] == '#') continue;
    try {
      out.push_back(parse_assertion(line, lexicon));
    } catch (const Error& e) {
      throw Error(ErrorCode::MalformedAssertion, "line " + std::to_string(n) + ": " + e.what());
    }
  }
  return out;
}

std::vector<Assertion> load_definitions(const std::filesystem::path& path, const Lexicon& lexicon) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::MalformedAssertion, "cannot open definition file " + path.string());
  return load_definitions(in, lexicon);
}

namespace {

struct NeedInput {
  OracleRequest request;
};

// One deterministic pass over the specification.
class Pass {
 public:
  Pass(const Discourse& d, const KnowledgeBase& kb, const Lexicon& lex, const std::vector<Assertion>& defs,
       std::vector<bool>& used, const std::vector<std::string>& replies, std::vector<TranscriptLine>& transcript)
      : d_(d), kb_(kb), lex_(lex), defs_(defs), used_(used), replies_(replies), transcript_(transcript) {
    for (const auto& c : d_.top.conditions)
      if (const auto* g = std::get_if<Group>(&c.node)) groups_[g->group] = g->members;
  }

  void run() {
    const auto& conds = d_.top.conditions;
    for (std::size_t i = 0; i < conds.size(); ++i) {
      const auto& c = conds[i];
      if (const auto* a = std::get_if<Atom>(&c.node); a && a->role == AtomRole::Event) {
        std::vector<const Atom*> mods;
        while (i + 1 < conds.size()) {
          const auto* m = std::get_if<Atom>(&conds[i + 1].node);
          if (!m || m->role != AtomRole::Modifier) break;
          mods.push_back(m);
          ++i;
        }
        event(*a, mods, {});
      } else if (const auto* imp = std::get_if<Implies>(&c.node)) {
        rule(*imp);
      }
    }
  }

 private:
  using Env = std::map<RefId, RefId>;

  RefId bound(RefId r, const Env& env) const {
    auto it = env.find(r);
    return it == env.end() ? r : it->second;
  }

  std::string sort_of(RefId r) const {
    const auto& ref = d_.referent(r);
    if (ref.name) return *ref.name;
    std::string s = ref.sort;
    std::replace(s.begin(), s.end(), ' ', '_');
    return s;
  }

  // --- oracle access -------------------------------------------------------

  Assertion ask(const OracleRequest& req, const std::function<bool(const Assertion&)>& fits) {
    for (std::size_t i = 0; i < defs_.size(); ++i) {
      if (used_[i] || !fits(defs_[i])) continue;
      used_[i] = true;
      transcript_.push_back({TranscriptLine::Kind::User, defs_[i].text});
      return defs_[i];
    }
    if (next_reply_ >= replies_.size()) throw NeedInput{req};
    const auto& text = replies_[next_reply_++];
    auto a = parse_assertion(text, lex_);
    transcript_.push_back({TranscriptLine::Kind::User, a.text});
    return a;
  }

  void instantiate(RefId r) {
    if (instances_.count(r)) return;
    if (auto g = groups_.find(r); g != groups_.end()) {
      for (auto m : g->second) instantiate(m);
      return;
    }
    const std::string sort = sort_of(r);
    OracleRequest req{OracleRequest::Kind::Instantiation, sort, {}, "which " + lexeme(sort) + "?"};
    auto a = ask(req, [&](const Assertion& x) {
      return x.kind == Assertion::Kind::Sort && x.positive && x.pred == sort;
    });
    if (a.kind != Assertion::Kind::Sort || !a.positive || a.pred != sort)
      throw Error(ErrorCode::MalformedAssertion, "expected '<name> is a " + sort + "', got '" + a.text + "'");
    for (const auto& [other, name] : instances_)
      if (name == a.name && sort_of(other) != sort)
        throw Error(ErrorCode::InconsistentAssertion, a.name + " is already a " + sort_of(other));
    instances_[r] = a.name;
    store(sort, a.name, true);
  }

  void store(const std::string& pred, const std::string& name, bool value) {
    auto key = pred + "(" + name + ")";
    auto it = truth_.find(key);
    if (it != truth_.end() && it->second != value)
      throw Error(ErrorCode::InconsistentAssertion, "'" + name + " is " + (value ? "" : "not ") + lexeme(pred) +
                                                        "' contradicts an earlier assertion");
    truth_[key] = value;
  }

  std::string render(const Arg& a, const Env& env) {
    if (const auto* r = std::get_if<RefId>(&a)) {
      RefId id = bound(*r, env);
      if (auto g = groups_.find(id); g != groups_.end()) {
        std::vector<std::string> names;
        for (auto m : g->second) names.push_back(instances_.at(m));
        return join(names, 0, " and ");
      }
      return instances_.at(id);
    }
    if (const auto* n = std::get_if<Name>(&a)) return n->value;
    return std::get<Num>(a).text;
  }

  std::string object(const Arg& a, const Env& env) {
    auto s = render(a, env);
    return is_numeric(s) ? s : "the " + s;
  }

  void event(const Atom& ev, const std::vector<const Atom*>& mods, const Env& env) {
    for (const auto* a : [&] {
           std::vector<const Atom*> all{&ev};
           all.insert(all.end(), mods.begin(), mods.end());
           return all;
         }())
      for (const auto& arg : a->args)
        if (const auto* r = std::get_if<RefId>(&arg)) instantiate(bound(*r, env));

    bool plural = false;
    if (const auto* r = std::get_if<RefId>(&ev.args.front())) {
      RefId id = bound(*r, env);
      plural = groups_.count(id) || d_.referent(id).number == Number::Pl;
    }
    std::string verb;
    if (auto e = lex_.find(lexeme(ev.pred), WordClass::Verb))
      verb = e->surface(plural ? FormSlot::ThirdPl : FormSlot::ThirdSg);
    else
      verb = plural ? lexeme(ev.pred) : regular_third_singular(lexeme(ev.pred));
    std::string line = render(ev.args.front(), env) + " " + verb;
    for (std::size_t i = 1; i < ev.args.size(); ++i) line += " " + object(ev.args[i], env);
    for (const auto* m : mods) {
      auto word = lexeme(m->pred.substr(std::min(m->pred.size(), ev.pred.size() + 1)));
      line += " " + word;
      if (m->args.size() > ev.args.size()) line += " " + object(m->args.back(), env);
    }
    transcript_.push_back({TranscriptLine::Kind::Event, line});
  }

  // --- rules ---------------------------------------------------------------

  std::optional<bool> kb_fact(const Atom& a, const Env& env) const {
    Query q;
    LogicAtom la{a.pred, {}};
    for (const auto& arg : a.args) {
      if (const auto* r = std::get_if<RefId>(&arg))
        la.args.push_back(Term::skolem(bound(*r, env)));
      else if (const auto* n = std::get_if<Name>(&arg))
        la.args.push_back(Term::name(n->value));
      else
        la.args.push_back(Term::number(std::get<Num>(arg).text));
    }
    q.goals.push_back({true, la});
    if (prove(q, kb_).verdict == Verdict::Yes) return true;
    return std::nullopt;
  }

  bool holds(const Atom& a, const Env& env) {
    for (const auto& arg : a.args)
      if (const auto* r = std::get_if<RefId>(&arg)) instantiate(bound(*r, env));
    if (kb_fact(a, env)) return true;
    if (a.args.size() != 1 || (a.role != AtomRole::Property && a.role != AtomRole::Sort)) {
      auto key = a.pred + "(";
      for (std::size_t i = 0; i < a.args.size(); ++i) key += (i ? ", " : "") + render(a.args[i], env);
      auto it = truth_.find(key + ")");
      return it != truth_.end() && it->second;
    }
    const auto name = render(a.args.front(), env);
    const auto key = a.pred + "(" + name + ")";
    if (auto it = truth_.find(key); it != truth_.end()) return it->second;
    const bool sort = a.role == AtomRole::Sort;
    OracleRequest req{OracleRequest::Kind::Truth, {}, key,
                      "is " + name + (sort ? " a " : " ") + lexeme(a.pred) + "?"};
    auto reply = ask(req, [&](const Assertion& x) { return x.name == name && x.pred == a.pred; });
    if (reply.name != name || reply.pred != a.pred ||
        (reply.kind == Assertion::Kind::Sort) != sort)
      throw Error(ErrorCode::MalformedAssertion,
                  "expected '" + name + " is [not] " + (sort ? "a " : "") + lexeme(a.pred) + "', got '" + reply.text + "'");
    store(a.pred, name, reply.positive);
    return reply.positive;
  }

  bool antecedent_holds(const Drs& ante, const Env& env) {
    for (const auto& c : ante.conditions) {
      if (const auto* a = std::get_if<Atom>(&c.node)) {
        if (!holds(*a, env)) return false;
      } else if (const auto* n = std::get_if<Not>(&c.node)) {
        const Drs& box = *n->body;
        if (box.referents.empty() && box.conditions.size() == 1 && std::holds_alternative<Atom>(box.conditions[0].node)) {
          if (holds(std::get<Atom>(box.conditions[0].node), env)) return false;
        } else {
          return false;
        }
      } else {
        return false;
      }
    }
    return true;
  }

  void consequent(const Drs& cons, const Env& env) {
    const auto& conds = cons.conditions;
    for (std::size_t i = 0; i < conds.size(); ++i) {
      const auto* a = std::get_if<Atom>(&conds[i].node);
      if (!a) continue;
      if (a->role == AtomRole::Event) {
        std::vector<const Atom*> mods;
        while (i + 1 < conds.size()) {
          const auto* m = std::get_if<Atom>(&conds[i + 1].node);
          if (!m || m->role != AtomRole::Modifier) break;
          mods.push_back(m);
          ++i;
        }
        event(*a, mods, env);
      } else if (a->args.size() == 1 && std::holds_alternative<RefId>(a->args[0]) &&
                 (a->role == AtomRole::Property || a->role == AtomRole::Sort)) {
        RefId r = bound(std::get<RefId>(a->args[0]), env);
        if (cons.referents.end() != std::find(cons.referents.begin(), cons.referents.end(), r)) continue;
        instantiate(r);
        store(a->pred, instances_.at(r), true);
      }
    }
  }

  void rule(const Implies& imp) {
    const Drs& ante = *imp.antecedent;
    if (ante.referents.empty()) {
      if (antecedent_holds(ante, {})) consequent(*imp.consequent, {});
      return;
    }
    // Antecedent with its own referents: find the bindings with the engine,
    // over the knowledge base plus what the user asserted so far.
    KnowledgeBase kb = kb_;
    std::vector<Clause> facts;
    for (const auto& [r, name] : instances_)
      for (const auto& [key, value] : truth_)
        if (value && key.size() > name.size() + 2 && key.compare(key.size() - name.size() - 2, name.size() + 2, "(" + name + ")") == 0)
          facts.push_back(Clause{{key.substr(0, key.size() - name.size() - 2), {Term::skolem(r)}}, {}, -1, false});
    kb.assimilate(-1, std::move(facts));
    Query q;
    std::map<RefId, std::string> vars;
    for (auto r : ante.referents) {
      vars[r] = referent_name(r);
      q.distinguished.push_back(vars[r]);
    }
    auto term = [&](const Arg& a) {
      if (const auto* r = std::get_if<RefId>(&a))
        return vars.count(*r) ? Term::variable(vars[*r]) : Term::skolem(*r);
      if (const auto* n = std::get_if<Name>(&a)) return Term::name(n->value);
      return Term::number(std::get<Num>(a).text);
    };
    for (const auto& c : ante.conditions) {
      const Atom* a = std::get_if<Atom>(&c.node);
      bool positive = true;
      if (const auto* n = std::get_if<Not>(&c.node);
          n && n->body->conditions.size() == 1 && n->body->referents.empty()) {
        a = std::get_if<Atom>(&n->body->conditions[0].node);
        positive = false;
      }
      if (!a) return;
      LogicAtom la{a->pred, {}};
      for (const auto& arg : a->args) la.args.push_back(term(arg));
      q.goals.push_back({positive, la});
    }
    for (const auto& binding : solve(q, kb).bindings) {
      Env env;
      for (std::size_t i = 0; i < ante.referents.size(); ++i)
        if (binding[i].kind == Term::Kind::Skolem) env[ante.referents[i]] = static_cast<RefId>(binding[i].id);
      if (env.size() == ante.referents.size()) consequent(*imp.consequent, env);
    }
  }

  const Discourse& d_;
  const KnowledgeBase& kb_;
  const Lexicon& lex_;
  const std::vector<Assertion>& defs_;
  std::vector<bool>& used_;
  const std::vector<std::string>& replies_;
  std::vector<TranscriptLine>& transcript_;
  std::size_t next_reply_ = 0;
  std::map<RefId, std::string> instances_;
  std::map<std::string, bool> truth_;
  std::map<RefId, std::vector<RefId>> groups_;
};

}  // namespace

Execution::Execution(Discourse discourse, KnowledgeBase kb, Lexicon lexicon, std::vector<Assertion> definitions)
    : discourse_(std::move(discourse)),
      kb_(std::move(kb)),
      lexicon_(std::move(lexicon)),
      definitions_(std::move(definitions)),
      used_(definitions_.size(), false) {}

void Execution::rerun() {
  std::vector<bool> used(definitions_.size(), false);
  std::vector<TranscriptLine> transcript;
  std::optional<OracleRequest> pending;
  try {
    Pass(discourse_, kb_, lexicon_, definitions_, used, replies_, transcript).run();
  } catch (const NeedInput& need) {
    pending = need.request;
  }
  used_ = std::move(used);
  transcript_ = std::move(transcript);
  pending_ = std::move(pending);
  started_ = true;
}

void Execution::run() {
  if (!started_) rerun();
}

void Execution::reply(const std::string& text) {
  if (!pending_) throw Error(ErrorCode::MalformedAssertion, "no request is pending");
  replies_.push_back(text);
  try {
    rerun();
  } catch (const Error&) {
    replies_.pop_back();
    rerun();
    throw;
  }
}

std::vector<std::string> Execution::unused_definitions() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < definitions_.size(); ++i)
    if (!used_[i]) out.push_back(definitions_[i].text);
  return out;
}

std::optional<std::string> ScriptedOracle::answer(const OracleRequest&) {
  if (pos_ >= lines_.size()) return std::nullopt;
  return lines_[pos_++];
}

std::optional<std::string> ConsoleOracle::answer(const OracleRequest& request) {
  out_ << request.prompt << "\nuser: " << std::flush;
  std::string line;
  if (!std::getline(in_, line)) return std::nullopt;
  return line;
}

std::vector<TranscriptLine> execute(Execution& execution, Oracle& oracle) {
  execution.run();
  while (const auto& req = execution.pending()) {
    auto text = oracle.answer(*req);
    if (!text) throw Error(ErrorCode::OracleExhausted, "no answer for: " + req->prompt);
    execution.reply(*text);
  }
  return execution.transcript();
}

}  // namespace ace
