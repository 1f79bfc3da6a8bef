#include <functional>
#include <map>
#include <set>

#include "catch_amalgamated.hpp"

#include "ace/translator.hpp"
#include "support.hpp"

using namespace ace;

namespace {

Drs drs_of(std::initializer_list<const char*> sentences) { return test::session_of(sentences).discourse().top; }

// --- small-model checker ----------------------------------------------------
// Interprets a DRS and a clause set over a domain {0..n-1} and says whether
// each is true. Names denote element 0. Skolem constants and functions are
// existentially chosen, so agreement means: the DRS holds in a model iff some
// choice of skolem interpretations makes every clause hold.

using Tuple = std::vector<int>;

struct Model {
  int n = 2;
  std::map<std::string, std::set<Tuple>> rel;
  bool has(const std::string& p, const Tuple& t) const {
    auto it = rel.find(p);
    return it != rel.end() && it->second.count(t);
  }
};

bool each_assignment(const std::vector<RefId>& refs, std::size_t i, int n, std::map<RefId, int>& g,
                     const std::function<bool(std::map<RefId, int>&)>& f) {
  if (i == refs.size()) return f(g);
  for (int v = 0; v < n; ++v) {
    g[refs[i]] = v;
    if (each_assignment(refs, i + 1, n, g, f)) return true;
  }
  g.erase(refs[i]);
  return false;
}

bool sat(const Drs& d, const Model& m, std::map<RefId, int> g);

int value(const Arg& a, const std::map<RefId, int>& g) {
  if (const auto* r = std::get_if<RefId>(&a)) return g.at(*r);
  return 0;
}

bool holds(const Condition& c, const Model& m, const std::map<RefId, int>& g) {
  if (const auto* a = std::get_if<Atom>(&c.node)) {
    Tuple t;
    for (const auto& x : a->args) t.push_back(value(x, g));
    return m.has(a->pred, t);
  }
  if (const auto* n = std::get_if<Not>(&c.node)) return !sat(*n->body, m, g);
  if (const auto* imp = std::get_if<Implies>(&c.node)) {
    auto h = g;
    bool counterexample = each_assignment(imp->antecedent->referents, 0, m.n, h, [&](std::map<RefId, int>& e) {
      for (const auto& x : imp->antecedent->conditions)
        if (!holds(x, m, e)) return false;
      return !sat(*imp->consequent, m, e);
    });
    return !counterexample;
  }
  if (const auto* grp = std::get_if<Group>(&c.node)) {
    for (auto mem : grp->members)
      if (!m.has("member", {g.at(mem), g.at(grp->group)})) return false;
    return true;
  }
  const auto& o = std::get<Or>(c.node);
  int count = 0;
  for (const auto& d : o.disjuncts) count += sat(d, m, g);
  return o.exclusive ? count == 1 : count > 0;
}

bool sat(const Drs& d, const Model& m, std::map<RefId, int> g) {
  return each_assignment(d.referents, 0, m.n, g, [&](std::map<RefId, int>& e) {
    for (const auto& c : d.conditions)
      if (!holds(c, m, e)) return false;
    return true;
  });
}

struct SkolemChoice {
  std::map<long, int> constants;
  std::map<long, std::map<Tuple, int>> functions;
};

int term_value(const Term& t, const SkolemChoice& s, const std::map<std::string, int>& vars) {
  switch (t.kind) {
    case Term::Kind::Skolem: return s.constants.at(t.id);
    case Term::Kind::Variable: return vars.at(t.text);
    case Term::Kind::Function: {
      Tuple args;
      for (const auto& a : t.args) args.push_back(term_value(a, s, vars));
      return s.functions.at(t.id).at(args);
    }
    default: return 0;
  }
}

bool clause_true(const Clause& c, const Model& m, const SkolemChoice& s) {
  std::set<std::string> names;
  std::function<void(const Term&)> scan = [&](const Term& t) {
    if (t.kind == Term::Kind::Variable) names.insert(t.text);
    for (const auto& a : t.args) scan(a);
  };
  for (const auto& t : c.head.args) scan(t);
  for (const auto& l : c.body)
    for (const auto& t : l.atom.args) scan(t);
  std::vector<std::string> vars(names.begin(), names.end());
  std::map<std::string, int> env;
  std::function<bool(std::size_t)> all = [&](std::size_t i) -> bool {
    if (i == vars.size()) {
      auto eval = [&](const LogicAtom& a) {
        Tuple t;
        for (const auto& x : a.args) t.push_back(term_value(x, s, env));
        return m.has(a.pred, t);
      };
      for (const auto& l : c.body)
        if (eval(l.atom) != l.positive) return true;
      return !c.denial && eval(c.head);
    }
    for (int v = 0; v < m.n; ++v) {
      env[vars[i]] = v;
      if (!all(i + 1)) return false;
    }
    return true;
  };
  return all(0);
}

bool clauses_satisfiable_in(const std::vector<Clause>& clauses, const Model& m, const std::vector<long>& constants,
                            const std::map<long, int>& function_arity) {
  SkolemChoice s;
  std::vector<std::pair<long, Tuple>> slots;
  for (const auto& [id, arity] : function_arity) {
    std::function<void(Tuple&)> gen = [&](Tuple& t) {
      if (static_cast<int>(t.size()) == arity) {
        slots.emplace_back(id, t);
        return;
      }
      for (int v = 0; v < m.n; ++v) {
        t.push_back(v);
        gen(t);
        t.pop_back();
      }
    };
    Tuple t;
    gen(t);
  }
  std::function<bool(std::size_t)> choose = [&](std::size_t i) -> bool {
    if (i < constants.size()) {
      for (int v = 0; v < m.n; ++v) {
        s.constants[constants[i]] = v;
        if (choose(i + 1)) return true;
      }
      return false;
    }
    std::size_t j = i - constants.size();
    if (j < slots.size()) {
      for (int v = 0; v < m.n; ++v) {
        s.functions[slots[j].first][slots[j].second] = v;
        if (choose(i + 1)) return true;
      }
      return false;
    }
    for (const auto& c : clauses)
      if (!clause_true(c, m, s)) return false;
    return true;
  };
  return choose(0);
}

// Every model over n individuals of the given signature.
void each_model(const std::vector<std::pair<std::string, int>>& signature, int n,
                const std::function<void(const Model&)>& f) {
  std::vector<std::pair<std::string, Tuple>> cells;
  for (const auto& [pred, arity] : signature) {
    std::function<void(Tuple&)> gen = [&](Tuple& t) {
      if (static_cast<int>(t.size()) == arity) {
        cells.emplace_back(pred, t);
        return;
      }
      for (int v = 0; v < n; ++v) {
        t.push_back(v);
        gen(t);
        t.pop_back();
      }
    };
    Tuple t;
    gen(t);
  }
  REQUIRE(cells.size() < 24);
  for (unsigned long bits = 0; bits < (1ul << cells.size()); ++bits) {
    Model m;
    m.n = n;
    for (std::size_t i = 0; i < cells.size(); ++i)
      if (bits >> i & 1) m.rel[cells[i].first].insert(cells[i].second);
    f(m);
  }
}

long disagreements(const Drs& top, const std::vector<Clause>& clauses,
                   const std::vector<std::pair<std::string, int>>& signature, int n) {
  std::vector<long> constants(top.referents.begin(), top.referents.end());
  std::map<long, int> functions;
  std::function<void(const Term&)> scan = [&](const Term& x) {
    if (x.kind == Term::Kind::Function) functions[x.id] = static_cast<int>(x.args.size());
    for (const auto& a : x.args) scan(a);
  };
  for (const auto& c : clauses) {
    for (const auto& a : c.head.args) scan(a);
    for (const auto& l : c.body)
      for (const auto& a : l.atom.args) scan(a);
  }
  long count = 0;
  each_model(signature, n, [&](const Model& m) {
    if (sat(top, m, {}) != clauses_satisfiable_in(clauses, m, constants, functions)) ++count;
  });
  return count;
}

void check_agreement(const Drs& top, const std::vector<std::pair<std::string, int>>& signature, int n) {
  auto t = drs_to_clauses(top);
  REQUIRE(t.untranslated.empty());
  CHECK(disagreements(top, t.clauses, signature, n) == 0);
}

}  // namespace

TEST_CASE("clauses of the two-sentence specification", "[translator]") {
  auto t = drs_to_clauses(drs_of({"The customer enters a card and a numeric personal code.",
                                  "If it is not valid then SM rejects the card."}));
  CHECK(t.untranslated.empty());
  CHECK(render_clauses(t.clauses) ==
        "fact(customer(0)).\n"
        "fact(card(1)).\n"
        "fact(enter(0, 1)).\n"
        "fact(numeric(2)).\n"
        "fact(personal_code(2)).\n"
        "fact(enter(0, 2)).\n"
        "fact(named(3, simplemat)).\n"
        "fact((reject(3, 1):- neg(valid(2)))).\n");
}

TEST_CASE("empty input gives no clauses", "[translator]") {
  auto t = drs_to_clauses(Drs{});
  CHECK(t.clauses.empty());
  CHECK(render_clauses(t.clauses).empty());
}

TEST_CASE("clause text", "[translator]") {
  CHECK(to_string(Clause{{"customer", {Term::skolem(0)}}, {}, 0, false}) == "fact(customer(0)).");
  CHECK(to_string(Clause{{"reject", {Term::skolem(3), Term::skolem(1)}},
                         {{false, {"valid", {Term::skolem(2)}}}},
                         1,
                         false}) == "fact((reject(3, 1):- neg(valid(2)))).");
  CHECK(to_string(Clause{{}, {{true, {"card", {Term::variable("B")}}}}, 0, true}) == "fact((false:- card(B))).");
  CHECK(to_string(Term::function(4, {Term::variable("A"), Term::variable("B")})) == "sk4(A, B)");
}

TEST_CASE("conditional with a name in the consequent", "[translator]") {
  auto top = drs_of({"If a customer enters a card then SimpleMat accepts the card."});
  auto t = drs_to_clauses(top);
  CHECK(render_clauses(t.clauses) ==
        "fact(named(2, simplemat)).\n"
        "fact((accept(2, B):- customer(A), card(B), enter(A, B))).\n");
  check_agreement(top, {{"customer", 1}, {"card", 1}, {"enter", 2}, {"accept", 2}, {"named", 2}}, 2);
}

TEST_CASE("model agreement on small domains", "[translator][property]") {
  SECTION("denial") {
    check_agreement(drs_of({"No customer enters a card."}), {{"customer", 1}, {"card", 1}, {"enter", 2}}, 3);
  }
  SECTION("negated antecedent") {
    check_agreement(drs_of({"The customer enters a card.", "If the card is not valid then the customer waits."}),
                    {{"customer", 1}, {"card", 1}, {"enter", 2}, {"valid", 1}, {"wait", 1}}, 2);
  }
  SECTION("consequent referent") {
    check_agreement(drs_of({"If a card is valid then the card carries a code."}),
                    {{"card", 1}, {"valid", 1}, {"code", 1}, {"carry", 2}}, 2);
  }
  SECTION("disjunctive antecedent") {
    check_agreement(drs_of({"If a card is valid or is red then the card waits."}),
                    {{"card", 1}, {"valid", 1}, {"red", 1}, {"wait", 1}}, 3);
  }
  SECTION("group") {
    check_agreement(drs_of({"John and Mary carry a card together."}),
                    {{"named", 2}, {"card", 1}, {"carry", 2}, {"member", 2}}, 2);
  }
}

TEST_CASE("checker notices a wrong translation", "[translator]") {
  auto top = drs_of({"If a customer enters a card then SimpleMat accepts the card."});
  auto clauses = drs_to_clauses(top).clauses;
  const std::vector<std::pair<std::string, int>> sig{
      {"customer", 1}, {"card", 1}, {"enter", 2}, {"accept", 2}, {"named", 2}};
  auto dropped = clauses;
  dropped.pop_back();
  CHECK(disagreements(top, dropped, sig, 2) > 0);
  auto weakened = clauses;
  weakened.back().body.pop_back();
  CHECK(disagreements(top, weakened, sig, 2) > 0);
}

TEST_CASE("untranslatable conditions stay out", "[translator]") {
  auto t = drs_to_clauses(drs_of({"John waits.", "John enters a card or a code."}));
  CHECK(t.clauses.size() == 2);
  REQUIRE(t.untranslated.size() == 1);
  CHECK(t.untranslated[0].sentence == 1);
  CHECK(t.untranslated[0].diagnostic.code == ErrorCode::UntranslatableDisjunction);
  CHECK(std::find(t.untranslated[0].predicates.begin(), t.untranslated[0].predicates.end(), "enter") !=
        t.untranslated[0].predicates.end());

  auto x = drs_to_clauses(drs_of({"If a customer does not enter a valid card then SM waits."}));
  REQUIRE(x.untranslated.size() == 1);
  CHECK(x.untranslated[0].diagnostic.code == ErrorCode::NonAtomicNegation);
}

TEST_CASE("extending never renumbers", "[translator][property]") {
  std::vector<const char*> text = {"The customer enters a card and a numeric personal code.",
                                   "If it is not valid then SM rejects the card.", "John enters a receipt.",
                                   "No clerk waits."};
  ace::Session s(test::lexicon());
  std::vector<Clause> before;
  for (const auto* sentence : text) {
    s.submit(sentence);
    s.accept();
    const auto& now = s.translation().clauses;
    REQUIRE(now.size() >= before.size());
    for (std::size_t i = 0; i < before.size(); ++i) CHECK(to_string(now[i]) == to_string(before[i]));
    before = now;
  }
}

TEST_CASE("skolem function rendering", "[translator]") {
  CHECK(to_string(Term::function(4, {Term::variable("A"), Term::variable("B")})) == "sk4(A, B)");
  CHECK(to_string(Term::function(6, {})) == "sk6");
  auto s = test::session_of({"If a customer enters a card then SM prints a receipt."});
  CHECK(s.clauses_text() ==
        "fact(named(2, simplemat)).\n"
        "fact((receipt(sk3(A, B)):- customer(A), card(B), enter(A, B))).\n"
        "fact((print(2, sk3(A, B)):- customer(A), card(B), enter(A, B))).\n");
}
