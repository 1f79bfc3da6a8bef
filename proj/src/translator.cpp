#include "ace/translator.hpp"

#include <map>
#include <set>

namespace ace {

namespace {

using Env = std::map<RefId, Term>;
using Body = std::vector<Literal>;

void collect_predicates(const Drs& drs, std::set<std::string>& out);

void collect_predicates(const Condition& c, std::set<std::string>& out) {
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Atom>) {
          out.insert(x.pred);
        } else if constexpr (std::is_same_v<T, Not>) {
          collect_predicates(*x.body, out);
        } else if constexpr (std::is_same_v<T, Implies>) {
          collect_predicates(*x.antecedent, out);
          collect_predicates(*x.consequent, out);
        } else if constexpr (std::is_same_v<T, Or>) {
          for (const auto& d : x.disjuncts) collect_predicates(d, out);
        } else {
          out.insert("member");
        }
      },
      c.node);
}

void collect_predicates(const Drs& drs, std::set<std::string>& out) {
  for (const auto& c : drs.conditions) collect_predicates(c, out);
}

class Translator {
 public:
  Translation run(const Drs& top) {
    Translation t;
    for (const auto& c : top.conditions) {
      sentence_ = c.sentence;
      std::vector<Clause> out;
      try {
        top_condition(c, out);
        t.clauses.insert(t.clauses.end(), out.begin(), out.end());
      } catch (const Error& e) {
        std::set<std::string> preds;
        collect_predicates(c, preds);
        t.untranslated.push_back({c.sentence, e.diagnostic(), {preds.begin(), preds.end()}});
      }
    }
    return t;
  }

 private:
  static Term term(const Arg& a, const Env& env) {
    if (const auto* r = std::get_if<RefId>(&a)) {
      auto it = env.find(*r);
      return it != env.end() ? it->second : Term::skolem(*r);
    }
    if (const auto* n = std::get_if<Name>(&a)) return Term::name(n->value);
    return Term::number(std::get<Num>(a).text);
  }

  static LogicAtom atom(const Atom& a, const Env& env) {
    LogicAtom out{a.pred, {}};
    for (const auto& arg : a.args) out.args.push_back(term(arg, env));
    return out;
  }

  static std::vector<LogicAtom> members(const Group& g, const Env& env) {
    std::vector<LogicAtom> out;
    for (auto m : g.members) out.push_back({"member", {term(m, env), term(g.group, env)}});
    return out;
  }

  static void bind_variables(const Drs& drs, Env& env) {
    for (auto r : drs.referents) env[r] = Term::variable(referent_name(r));
  }

  Clause clause(LogicAtom head, Body body, bool denial = false) const {
    return Clause{std::move(head), std::move(body), sentence_, denial};
  }

  // A negated box inside a rule body: only a single atom over outer referents.
  static Literal negative_literal(const Drs& box, const Env& env) {
    if (!box.referents.empty() || box.conditions.size() != 1 || !std::holds_alternative<Atom>(box.conditions[0].node))
      throw Error(ErrorCode::NonAtomicNegation,
                  "only the negation of a single atomic condition can be translated in a rule body");
    return {false, atom(std::get<Atom>(box.conditions[0].node), env)};
  }

  // Literals of a box that must hold; inclusive disjunctions split the result
  // into alternative bodies.
  static std::vector<Body> bodies(const Drs& drs, Env& env) {
    bind_variables(drs, env);
    std::vector<Body> out{Body{}};
    auto append = [&](const Literal& l) {
      for (auto& b : out) b.push_back(l);
    };
    for (const auto& c : drs.conditions) {
      if (const auto* a = std::get_if<Atom>(&c.node)) {
        append({true, atom(*a, env)});
      } else if (const auto* g = std::get_if<Group>(&c.node)) {
        for (auto& m : members(*g, env)) append({true, m});
      } else if (const auto* n = std::get_if<Not>(&c.node)) {
        append(negative_literal(*n->body, env));
      } else if (const auto* o = std::get_if<Or>(&c.node)) {
        if (o->exclusive)
          throw Error(ErrorCode::UntranslatableDisjunction, "an exclusive disjunction cannot be translated to clauses");
        std::vector<Body> next;
        for (const auto& d : o->disjuncts)
          for (auto& alt : bodies(d, env))
            for (const auto& b : out) {
              auto merged = b;
              merged.insert(merged.end(), alt.begin(), alt.end());
              next.push_back(std::move(merged));
            }
        out = std::move(next);
      } else {
        throw Error(ErrorCode::NonAtomicNegation, "nested conditionals cannot be translated to clauses");
      }
    }
    return out;
  }

  void top_condition(const Condition& c, std::vector<Clause>& out) {
    const Env none;
    if (const auto* a = std::get_if<Atom>(&c.node)) {
      out.push_back(clause(atom(*a, none), {}));
    } else if (const auto* g = std::get_if<Group>(&c.node)) {
      for (auto& m : members(*g, none)) out.push_back(clause(m, {}));
    } else if (const auto* n = std::get_if<Not>(&c.node)) {
      Env env;
      for (auto& b : bodies(*n->body, env)) out.push_back(clause({}, b, true));
    } else if (const auto* imp = std::get_if<Implies>(&c.node)) {
      rules(*imp, out);
    } else {
      throw Error(ErrorCode::UntranslatableDisjunction,
                  "a disjunction is kept in the DRS but cannot be translated to clauses");
    }
  }

  void rules(const Implies& imp, std::vector<Clause>& out) {
    Env env;
    auto alternatives = bodies(*imp.antecedent, env);
    std::vector<Term> vars;
    for (auto r : imp.antecedent->referents) vars.push_back(Term::variable(referent_name(r)));
    for (auto r : imp.consequent->referents) env[r] = Term::function(r, vars);

    for (const auto& body : alternatives) {
      for (const auto& c : imp.consequent->conditions) {
        if (const auto* a = std::get_if<Atom>(&c.node)) {
          out.push_back(clause(atom(*a, env), body));
        } else if (const auto* g = std::get_if<Group>(&c.node)) {
          for (auto& m : members(*g, env)) out.push_back(clause(m, body));
        } else if (const auto* n = std::get_if<Not>(&c.node)) {
          Env inner = env;
          for (auto& extra : bodies(*n->body, inner)) {
            auto denial = body;
            denial.insert(denial.end(), extra.begin(), extra.end());
            out.push_back(clause({}, denial, true));
          }
        } else {
          throw Error(ErrorCode::UntranslatableDisjunction,
                      "a disjunction in a consequent cannot be translated to clauses");
        }
      }
    }
  }

  int sentence_ = 0;
};

}  // namespace

Translation drs_to_clauses(const Drs& top) { return Translator().run(top); }

std::string render_clauses(const std::vector<Clause>& clauses) {
  std::string out;
  for (const auto& c : clauses) out += to_string(c) + "\n";
  return out;
}

}  // namespace ace
