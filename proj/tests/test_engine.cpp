#include "catch_amalgamated.hpp"

#include <random>
#include <set>

#include "ace/engine.hpp"
#include "ace/parser.hpp"
#include "minimal_model.hpp"
#include "random_kb.hpp"
#include "support.hpp"

using namespace ace;

namespace {

LogicAtom atom(std::string pred, std::vector<Term> args) { return {std::move(pred), std::move(args)}; }
Clause fact(LogicAtom a, int sentence = 0) { return {std::move(a), {}, sentence, false}; }
Term sk(long id) { return Term::skolem(id); }
Term var(const char* v) { return Term::variable(v); }

Verdict verdict(const KnowledgeBase& kb, std::vector<Literal> goals) { return prove({std::move(goals), {}}, kb).verdict; }

std::vector<std::string> texts(std::vector<Answer> answers) {
  std::vector<std::string> out;
  for (auto& a : answers) out.push_back(a.text);
  return out;
}

// Every ground atom over the signature and the constants 0..n-1.
std::vector<LogicAtom> ground_atoms(const std::map<std::string, int>& arity, int n) {
  std::vector<LogicAtom> out;
  for (const auto& [p, a] : arity) {
    if (a == 1) {
      for (int i = 0; i < n; ++i) out.push_back(atom(p, {sk(i)}));
    } else {
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out.push_back(atom(p, {sk(i), sk(j)}));
    }
  }
  return out;
}

test::Ground ground(const LogicAtom& a) {
  test::Ground g{a.pred, {}};
  for (const auto& t : a.args) g.second.push_back(test::constant(t));
  return g;
}

}  // namespace

TEST_CASE("knowledge base bookkeeping", "[engine]") {
  auto s = test::session_of({"The customer enters a card and a numeric personal code.",
                             "If it is not valid then SM rejects the card."});
  CHECK(s.kb().size() == 8);
  KnowledgeBase kb;
  kb.assimilate(0, {fact(atom("card", {sk(0)})), fact(atom("card", {sk(1)}))});
  kb.assimilate(1, {fact(atom("code", {sk(2)}))});
  CHECK(kb.size() == 3);
  kb.assimilate(0, {fact(atom("card", {sk(5)}))});
  CHECK(kb.size() == 2);
  CHECK(verdict(kb, {{true, atom("card", {sk(0)})}}) == Verdict::No);
  CHECK(verdict(kb, {{true, atom("card", {sk(5)})}}) == Verdict::Yes);
  kb.retract(1);
  CHECK(kb.size() == 1);
  KnowledgeBase empty;
  CHECK(verdict(empty, {{true, atom("card", {var("X")})}}) == Verdict::No);
}

TEST_CASE("the sample specification answers yes", "[engine]") {
  auto s = test::session_of({"The customer enters a card and a numeric personal code.",
                             "If it is not valid then SM rejects the card."});
  auto out = s.ask("Does SM reject the card?");
  CHECK(texts(out.answers.next()) == std::vector<std::string>{"Answer: yes"});

  auto program = s.kb().program();
  test::MinimalModel model(program, test::strata_of(program));
  CHECK(model.holds({"reject", {"#3", "#1"}}));

  // and every ground atom over the four referents agrees with the model
  std::map<std::string, int> arity;
  for (const auto& c : program) {
    arity[c.head.pred] = static_cast<int>(c.head.args.size());
    for (const auto& l : c.body) arity[l.atom.pred] = static_cast<int>(l.atom.args.size());
  }
  arity.erase("named");
  for (const auto& a : ground_atoms(arity, 4)) {
    INFO(to_string(a));
    CHECK((verdict(s.kb(), {{true, a}}) == Verdict::Yes) == model.holds(ground(a)));
  }
}

TEST_CASE("wh questions and paging", "[engine]") {
  auto s = test::session_of({"The customer enters a card and a numeric personal code.",
                             "If it is not valid then SM rejects the card."});
  auto who = s.ask("Who rejects the card?");
  CHECK(who.kind == SentenceKind::WhQuestion);
  CHECK(texts(who.answers.next()) == std::vector<std::string>{"Answer: [simplemat] rejects the card."});
  CHECK(who.answers.exhausted());
  CHECK(texts(s.ask("Who enters a card?").answers.next()) ==
        std::vector<std::string>{"Answer: [a customer] enters a card."});

  auto two = test::session_of({"John enters a card.", "Mary enters a card."});
  auto ans = two.ask("Who enters a card?").answers;
  REQUIRE(ans.size() == 2);
  auto first = ans.next();
  CHECK_FALSE(ans.exhausted());
  auto second = ans.next();
  CHECK(ans.exhausted());
  CHECK(ans.next().empty());
  CHECK(texts(first) != texts(second));
  std::set<std::string> all{first[0].text, second[0].text};
  CHECK(all == std::set<std::string>{"Answer: [john] enters a card.", "Answer: [mary] enters a card."});
  ans.seek(0);
  CHECK(texts(ans.next(5)).size() == 2);

  auto none = two.ask("Who waits?");
  CHECK(texts(none.answers.next()) == std::vector<std::string>{"Answer: none"});
}

TEST_CASE("negation as failure", "[engine]") {
  KnowledgeBase kb;
  kb.assimilate(0, {fact(atom("card", {sk(0)})), fact(atom("card", {sk(1)})), fact(atom("valid", {sk(0)})),
                    Clause{atom("reject", {var("X")}), {{true, atom("card", {var("X")})}, {false, atom("valid", {var("X")})}}, 0, false}});
  CHECK(verdict(kb, {{true, atom("reject", {sk(1)})}}) == Verdict::Yes);
  CHECK(verdict(kb, {{true, atom("reject", {sk(0)})}}) == Verdict::No);
  auto sols = solve({{{true, atom("reject", {var("Y")})}}, {"Y"}}, kb);
  CHECK(sols.bindings == std::vector<std::vector<Term>>{{sk(1)}});
}

TEST_CASE("denials block answers", "[engine]") {
  KnowledgeBase kb;
  kb.assimilate(0, {fact(atom("card", {sk(1)})), fact(atom("enter", {sk(0), sk(1)}))});
  CHECK(verdict(kb, {{true, atom("enter", {sk(0), sk(1)})}}) == Verdict::Yes);
  kb.assimilate(1, {Clause{{}, {{true, atom("card", {var("B")})}, {true, atom("enter", {sk(0), var("B")})}}, 1, true}});
  CHECK(verdict(kb, {{true, atom("enter", {sk(0), sk(1)})}}) == Verdict::No);

  auto s = test::session_of({"John is a customer.", "John does not enter a card."});
  CHECK(texts(s.ask("Does John enter a card?").answers.next()) == std::vector<std::string>{"Answer: no"});
}

TEST_CASE("search failures give unknown", "[engine]") {
  KnowledgeBase loop;
  loop.assimilate(0, {Clause{atom("p", {var("X")}), {{true, atom("p", {var("X")})}}, 0, false}});
  auto deep = prove({{{true, atom("p", {sk(0)})}}, {}}, loop, 64);
  CHECK(deep.verdict == Verdict::Unknown);
  REQUIRE(deep.diagnostic);
  CHECK(deep.diagnostic->code == ErrorCode::DepthLimitExceeded);

  KnowledgeBase unsafe;
  unsafe.assimilate(0, {fact(atom("q", {sk(0)}))});
  auto fl = prove({{{false, atom("q", {var("X")})}}, {}}, unsafe);
  CHECK(fl.verdict == Verdict::Unknown);
  REQUIRE(fl.diagnostic);
  CHECK(fl.diagnostic->code == ErrorCode::Floundering);
  CHECK(solve({{{false, atom("q", {var("X")})}}, {"X"}}, unsafe).diagnostic->code == ErrorCode::Floundering);
}

TEST_CASE("untranslated disjunctions make answers unknown", "[engine]") {
  auto s = test::session_of({"John is a customer.", "John enters a card or a code."});
  auto out = s.ask("Does John enter a card?");
  CHECK(texts(out.answers.next()) == std::vector<std::string>{"Answer: unknown"});
  REQUIRE(out.diagnostic);
  CHECK(out.diagnostic->code == ErrorCode::UntranslatableDisjunction);
  CHECK(texts(s.ask("Is John a customer?").answers.next()) == std::vector<std::string>{"Answer: yes"});
}

TEST_CASE("prover agrees with the minimal model on random programs", "[engine][property]") {
  std::mt19937 rng(20261016);
  for (int round = 0; round < 200; ++round) {
    auto rk = test::random_kb(rng);
    KnowledgeBase kb;
    kb.assimilate(0, rk.clauses);
    test::MinimalModel model(rk.clauses, rk.level);
    for (const auto& a : ground_atoms(rk.arity, rk.constants)) {
      auto r = prove({{{true, a}}, {}}, kb);
      INFO("round " << round << " " << to_string(a));
      REQUIRE_FALSE(r.diagnostic);
      CHECK((r.verdict == Verdict::Yes) == model.holds(ground(a)));
    }
    for (const auto& [p, n] : rk.arity) {
      Query q;
      q.goals.push_back({true, atom(p, n == 1 ? std::vector<Term>{var("X")} : std::vector<Term>{var("X"), var("Y")})});
      q.distinguished = n == 1 ? std::vector<std::string>{"X"} : std::vector<std::string>{"X", "Y"};
      auto sols = solve(q, kb);
      std::set<test::Ground> got;
      for (const auto& b : sols.bindings) {
        test::Ground g{p, {}};
        for (const auto& t : b) g.second.push_back(test::constant(t));
        got.insert(g);
      }
      std::set<test::Ground> want;
      for (const auto& g : model.atoms())
        if (g.first == p) want.insert(g);
      INFO("round " << round << " " << p);
      CHECK(got == want);
      CHECK(sols.bindings.size() == got.size());
    }
  }
}

TEST_CASE("adding facts to positive programs never loses answers", "[engine][property]") {
  std::mt19937 rng(7);
  for (int round = 0; round < 100; ++round) {
    auto rk = test::random_kb(rng);
    for (auto& c : rk.clauses)
      c.body.erase(std::remove_if(c.body.begin(), c.body.end(), [](const Literal& l) { return !l.positive; }),
                   c.body.end());
    // positive literals alone may leave head variables unbound; drop those rules
    rk.clauses.erase(std::remove_if(rk.clauses.begin(), rk.clauses.end(),
                                    [](const Clause& c) {
                                      if (c.body.empty()) return false;
                                      for (const auto& t : c.head.args)
                                        if (t.kind == Term::Kind::Variable) {
                                          bool bound = false;
                                          for (const auto& l : c.body)
                                            for (const auto& u : l.atom.args) bound = bound || u == t;
                                          if (!bound) return true;
                                        }
                                      return false;
                                    }),
                     rk.clauses.end());
    KnowledgeBase small;
    small.assimilate(0, rk.clauses);
    KnowledgeBase big = small;
    auto extra = ground_atoms(rk.arity, rk.constants);
    big.assimilate(1, {fact(extra[std::uniform_int_distribution<std::size_t>(0, extra.size() - 1)(rng)], 1)});
    for (const auto& a : extra)
      if (verdict(small, {{true, a}}) == Verdict::Yes) CHECK(verdict(big, {{true, a}}) == Verdict::Yes);
  }
}
