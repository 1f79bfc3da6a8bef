#include "ace/engine.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "ace/paraphrase.hpp"

namespace ace {

void KnowledgeBase::assimilate(int sentence, std::vector<Clause> clauses, std::vector<Untranslated> untranslated) {
  if (clauses.empty() && untranslated.empty() && !parts_.count(sentence)) return;
  parts_[sentence] = Part{std::move(clauses), std::move(untranslated)};
  ++version_;
}

void KnowledgeBase::retract(int sentence) {
  if (parts_.erase(sentence)) ++version_;
}

void KnowledgeBase::clear() {
  parts_.clear();
  ++version_;
}

std::vector<Clause> KnowledgeBase::program() const {
  std::vector<Clause> out;
  for (const auto& [s, p] : parts_)
    for (const auto& c : p.clauses)
      if (!c.denial) out.push_back(c);
  return out;
}

std::vector<Clause> KnowledgeBase::denials() const {
  std::vector<Clause> out;
  for (const auto& [s, p] : parts_)
    for (const auto& c : p.clauses)
      if (c.denial) out.push_back(c);
  return out;
}

std::vector<Untranslated> KnowledgeBase::untranslated() const {
  std::vector<Untranslated> out;
  for (const auto& [s, p] : parts_) out.insert(out.end(), p.untranslated.begin(), p.untranslated.end());
  return out;
}

std::vector<Clause> KnowledgeBase::all() const {
  std::vector<Clause> out;
  for (const auto& [s, p] : parts_) out.insert(out.end(), p.clauses.begin(), p.clauses.end());
  return out;
}

std::size_t KnowledgeBase::size() const {
  std::size_t n = 0;
  for (const auto& [s, p] : parts_) n += p.clauses.size();
  return n;
}

namespace {

using Subst = std::map<std::string, Term>;

const Term& walk(const Term& t, const Subst& s) {
  const Term* cur = &t;
  while (cur->kind == Term::Kind::Variable) {
    auto it = s.find(cur->text);
    if (it == s.end()) break;
    cur = &it->second;
  }
  return *cur;
}

Term resolve(const Term& t, const Subst& s) {
  const Term& w = walk(t, s);
  if (w.kind != Term::Kind::Function) return w;
  Term out = w;
  for (auto& a : out.args) a = resolve(a, s);
  return out;
}

LogicAtom resolve(const LogicAtom& a, const Subst& s) {
  LogicAtom out{a.pred, {}};
  for (const auto& t : a.args) out.args.push_back(resolve(t, s));
  return out;
}

bool occurs(const std::string& var, const Term& t, const Subst& s) {
  const Term& w = walk(t, s);
  if (w.kind == Term::Kind::Variable) return w.text == var;
  for (const auto& a : w.args)
    if (occurs(var, a, s)) return true;
  return false;
}

bool unify(const Term& a, const Term& b, Subst& s) {
  const Term& x = walk(a, s);
  const Term& y = walk(b, s);
  if (x.kind == Term::Kind::Variable && y.kind == Term::Kind::Variable && x.text == y.text) return true;
  if (x.kind == Term::Kind::Variable) {
    if (occurs(x.text, y, s)) return false;
    s[x.text] = y;
    return true;
  }
  if (y.kind == Term::Kind::Variable) return unify(y, x, s);
  if (x.kind != y.kind || x.id != y.id || x.text != y.text || x.args.size() != y.args.size()) return false;
  for (std::size_t i = 0; i < x.args.size(); ++i)
    if (!unify(x.args[i], y.args[i], s)) return false;
  return true;
}

bool unify(const LogicAtom& a, const LogicAtom& b, Subst& s) {
  if (a.pred != b.pred || a.args.size() != b.args.size()) return false;
  for (std::size_t i = 0; i < a.args.size(); ++i)
    if (!unify(a.args[i], b.args[i], s)) return false;
  return true;
}

Term rename(const Term& t, const std::string& suffix) {
  Term out = t;
  if (out.kind == Term::Kind::Variable) out.text += suffix;
  for (auto& a : out.args) a = rename(a, suffix);
  return out;
}

LogicAtom rename(const LogicAtom& a, const std::string& suffix) {
  LogicAtom out{a.pred, {}};
  for (const auto& t : a.args) out.args.push_back(rename(t, suffix));
  return out;
}

// Depth-first SLD resolution with negation as failure. The callback returns
// false to stop the search.
class Prover {
 public:
  using Yield = std::function<bool(const Subst&)>;

  Prover(std::vector<Clause> program, int limit) : program_(std::move(program)), limit_(limit) {
    for (const auto& c : program_) by_pred_[c.head.pred].push_back(&c);
  }

  bool run(const std::vector<Literal>& goals, const Subst& s, const Yield& yield) { return solve(goals, s, 0, yield); }

  bool provable(const std::vector<Literal>& goals, const Subst& s) {
    bool found = false;
    solve(goals, s, 0, [&](const Subst&) {
      found = true;
      return false;
    });
    return found;
  }

 private:
  bool solve(const std::vector<Literal>& goals, const Subst& s, int depth, const Yield& yield) {
    if (goals.empty()) return yield(s);
    if (depth > limit_)
      throw Error(ErrorCode::DepthLimitExceeded, "proof depth limit of " + std::to_string(limit_) + " exceeded");
    std::size_t pick = goals.size();
    for (std::size_t i = 0; i < goals.size(); ++i) {
      if (goals[i].positive || resolve(goals[i].atom, s).is_ground()) {
        pick = i;
        break;
      }
    }
    if (pick == goals.size()) {
      auto lit = Literal{false, resolve(goals.front().atom, s)};
      throw Error(ErrorCode::Floundering, "negated goal " + to_string(lit) + " is never ground", std::nullopt,
                  {to_string(lit)});
    }
    const Literal& goal = goals[pick];
    std::vector<Literal> rest;
    rest.reserve(goals.size() - 1);
    for (std::size_t i = 0; i < goals.size(); ++i)
      if (i != pick) rest.push_back(goals[i]);

    if (!goal.positive) {
      bool found = false;
      solve({Literal{true, goal.atom}}, s, depth + 1, [&](const Subst&) {
        found = true;
        return false;
      });
      if (found) return true;
      return solve(rest, s, depth + 1, yield);
    }

    auto it = by_pred_.find(goal.atom.pred);
    if (it == by_pred_.end()) return true;
    for (const Clause* c : it->second) {
      const std::string suffix = "_" + std::to_string(++counter_);
      Subst next = s;
      if (!unify(goal.atom, rename(c->head, suffix), next)) continue;
      std::vector<Literal> goals2;
      goals2.reserve(c->body.size() + rest.size());
      for (const auto& l : c->body) goals2.push_back({l.positive, rename(l.atom, suffix)});
      goals2.insert(goals2.end(), rest.begin(), rest.end());
      if (!solve(goals2, next, depth + 1, yield)) return false;
    }
    return true;
  }

  std::vector<Clause> program_;
  std::map<std::string, std::vector<const Clause*>> by_pred_;
  int limit_;
  long counter_ = 0;
};

// A solution is blocked when, together with the atoms it asserts, some denial
// of the knowledge base becomes provable.
bool blocked(const Query& q, const Subst& s, const KnowledgeBase& kb, int limit) {
  auto denials = kb.denials();
  if (denials.empty()) return false;
  auto program = kb.program();
  for (const auto& g : q.goals)
    if (g.positive) program.push_back(Clause{resolve(g.atom, s), {}, -1, false});
  Prover p(std::move(program), limit);
  for (const auto& d : denials)
    if (p.provable(d.body, {})) return true;
  return false;
}

bool mentions_untranslated(const Query& q, const KnowledgeBase& kb, std::string* which) {
  for (const auto& u : kb.untranslated())
    for (const auto& g : q.goals)
      if (std::find(u.predicates.begin(), u.predicates.end(), g.atom.pred) != u.predicates.end()) {
        if (which) *which = g.atom.pred;
        return true;
      }
  return false;
}

}  // namespace

ProofResult prove(const Query& query, const KnowledgeBase& kb, int depth_limit) {
  ProofResult result;
  try {
    Prover p(kb.program(), depth_limit);
    bool yes = false;
    p.run(query.goals, {}, [&](const Subst& s) {
      if (blocked(query, s, kb, depth_limit)) return true;
      yes = true;
      return false;
    });
    result.verdict = yes ? Verdict::Yes : Verdict::No;
  } catch (const Error& e) {
    result.verdict = Verdict::Unknown;
    result.diagnostic = e.diagnostic();
    return result;
  }
  std::string pred;
  if (result.verdict == Verdict::No && mentions_untranslated(query, kb, &pred)) {
    result.verdict = Verdict::Unknown;
    result.diagnostic = Diagnostic{ErrorCode::UntranslatableDisjunction,
                                   "'" + pred + "' occurs in a disjunction the knowledge base cannot decide",
                                   std::nullopt,
                                   {pred}};
  }
  return result;
}

Solutions solve(const Query& query, const KnowledgeBase& kb, int depth_limit) {
  Solutions out;
  std::set<std::vector<Term>> seen;
  try {
    Prover p(kb.program(), depth_limit);
    p.run(query.goals, {}, [&](const Subst& s) {
      if (blocked(query, s, kb, depth_limit)) return true;
      std::vector<Term> binding;
      for (const auto& v : query.distinguished) binding.push_back(resolve(Term::variable(v), s));
      if (seen.insert(binding).second) out.bindings.push_back(std::move(binding));
      return true;
    });
  } catch (const Error& e) {
    out.diagnostic = e.diagnostic();
  }
  std::string pred;
  if (!out.diagnostic && mentions_untranslated(query, kb, &pred))
    out.diagnostic = Diagnostic{ErrorCode::UntranslatableDisjunction,
                                "answers may be incomplete: '" + pred + "' occurs in an untranslated disjunction",
                                std::nullopt,
                                {pred}};
  return out;
}

PreparedQuery build_query(const SyntaxTree& tree, const Discourse& discourse) {
  if (!tree.is_question()) throw Error(ErrorCode::SyntaxError, "a query must be a question");
  PreparedQuery pq{tree, build_query_drs(tree, discourse), {}};
  const Drs& box = pq.drs.drs;
  std::map<RefId, Term> vars;
  for (auto r : box.referents) vars[r] = Term::variable(referent_name(r));
  auto term = [&](const Arg& a) {
    if (const auto* r = std::get_if<RefId>(&a)) {
      auto it = vars.find(*r);
      return it != vars.end() ? it->second : Term::skolem(*r);
    }
    if (const auto* n = std::get_if<Name>(&a)) return Term::name(n->value);
    return Term::number(std::get<Num>(a).text);
  };
  auto atom = [&](const Atom& a) {
    LogicAtom out{a.pred, {}};
    for (const auto& arg : a.args) out.args.push_back(term(arg));
    return out;
  };
  for (const auto& a : pq.drs.accommodated) pq.query.goals.push_back({true, atom(a)});
  for (const auto& c : box.conditions) {
    if (const auto* a = std::get_if<Atom>(&c.node)) {
      pq.query.goals.push_back({true, atom(*a)});
    } else if (const auto* n = std::get_if<Not>(&c.node)) {
      const Drs& b = *n->body;
      if (!b.referents.empty() || b.conditions.size() != 1 || !std::holds_alternative<Atom>(b.conditions[0].node))
        throw Error(ErrorCode::NonAtomicNegation, "a question can only negate a single condition");
      pq.query.goals.push_back({false, atom(std::get<Atom>(b.conditions[0].node))});
    } else {
      throw Error(ErrorCode::SyntaxError, "questions cannot contain coordination");
    }
  }
  if (pq.drs.wh) pq.query.distinguished.push_back(referent_name(*pq.drs.wh));
  return pq;
}

std::vector<Answer> AnswerStream::next(std::size_t n) {
  std::vector<Answer> out;
  while (n-- > 0 && pos_ < answers_.size()) out.push_back(answers_[pos_++]);
  return out;
}

std::string render_verdict(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "Answer: yes";
    case Verdict::No: return "Answer: no";
    case Verdict::Unknown: return "Answer: unknown";
  }
  return "Answer: unknown";
}

std::string generate_answer(const Term& term, const Discourse& discourse) {
  auto describe = [&](long id) -> std::string {
    if (id < 0 || static_cast<std::size_t>(id) >= discourse.referents.size()) return std::to_string(id);
    const auto& r = discourse.referent(static_cast<RefId>(id));
    if (r.name) return *r.name;
    if (r.sort == "group" || r.surface.empty()) return r.surface.empty() ? referent_name(r.id) : r.surface;
    bool vowel = std::string_view("aeiou").find(r.surface.front()) != std::string_view::npos;
    return (vowel ? "an " : "a ") + r.surface;
  };
  switch (term.kind) {
    case Term::Kind::Skolem:
    case Term::Kind::Function: return "[" + describe(term.id) + "]";
    default: return "[" + to_string(term) + "]";
  }
}

QueryOutcome answer_question(const SyntaxTree& tree, const Discourse& discourse, const KnowledgeBase& kb) {
  QueryOutcome out;
  out.kind = tree.kind;
  auto pq = build_query(tree, discourse);
  std::vector<Answer> answers;
  if (tree.kind == SentenceKind::YesNoQuestion) {
    auto r = prove(pq.query, kb);
    answers.push_back({{}, render_verdict(r.verdict)});
    out.diagnostic = r.diagnostic;
  } else {
    auto sols = solve(pq.query, kb);
    out.diagnostic = sols.diagnostic;
    for (auto& b : sols.bindings) {
      auto text = generate_answer(b.front(), pq.drs.context);
      answers.push_back({b, "Answer: " + render_wh_answer(tree, text.substr(1, text.size() - 2))});
    }
    if (answers.empty()) answers.push_back({{}, sols.diagnostic ? "Answer: unknown" : "Answer: none"});
  }
  out.answers = AnswerStream(std::move(answers));
  return out;
}

}  // namespace ace
