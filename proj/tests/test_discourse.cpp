#include "catch_amalgamated.hpp"

#include "ace/discourse.hpp"
#include "ace/parser.hpp"
#include "support.hpp"

using namespace ace;

namespace {

ResolutionReport extend(Discourse& d, const char* s) {
  return extend_drs(parse_sentence(std::string_view(s), test::lexicon()).tree, d);
}

Discourse discourse_of(std::initializer_list<const char*> sentences) {
  Discourse d;
  for (const auto* s : sentences) extend(d, s);
  return d;
}

std::vector<const Atom*> atoms(const Drs& drs, const std::string& pred) {
  std::vector<const Atom*> out;
  for (const auto& c : drs.conditions)
    if (const auto* a = std::get_if<Atom>(&c.node); a && a->pred == pred) out.push_back(a);
  return out;
}

ErrorCode failure(Discourse& d, const char* s) {
  try {
    extend(d, s);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("accepted: " << s);
  return ErrorCode::SessionFormat;
}

}  // namespace

TEST_CASE("two-sentence specification", "[discourse]") {
  auto d = discourse_of({"The customer enters a card and a numeric personal code.",
                         "If it is not valid then SM rejects the card."});
  CHECK(d.top.referents == std::vector<RefId>{0, 1, 2, 3});
  CHECK(format_drs(d.top) ==
        "[A, B, C, D]\n"
        "customer(A)\n"
        "card(B)\n"
        "enter(A, B)\n"
        "numeric(C)\n"
        "personal_code(C)\n"
        "enter(A, C)\n"
        "named(D, simplemat)\n"
        "IF:\n"
        "  []\n"
        "  NOT:\n"
        "    []\n"
        "    valid(C)\n"
        "THEN:\n"
        "  []\n"
        "  reject(D, B)\n");
}

TEST_CASE("each gives one card per person", "[discourse]") {
  auto d = discourse_of({"John and Mary each enter a card."});
  auto enters = atoms(d.top, "enter");
  REQUIRE(enters.size() == 2);
  CHECK(enters[0]->args[0] != enters[1]->args[0]);
  CHECK(enters[0]->args[1] != enters[1]->args[1]);
  CHECK(atoms(d.top, "card").size() == 2);
}

TEST_CASE("together gives one group and one event", "[discourse]") {
  auto d = discourse_of({"John and Mary enter a card together."});
  auto enters = atoms(d.top, "enter");
  REQUIRE(enters.size() == 1);
  const Group* g = nullptr;
  for (const auto& c : d.top.conditions)
    if (const auto* x = std::get_if<Group>(&c.node)) g = x;
  REQUIRE(g);
  CHECK(g->members == std::vector<RefId>{0, 1});
  CHECK(enters[0]->args[0] == Arg(g->group));
  CHECK(format_drs(d.top).find("group(C, [A, B])") != std::string::npos);
}

TEST_CASE("definite without antecedent introduces a referent", "[discourse]") {
  Discourse d;
  auto report = extend(d, "The card is valid.");
  CHECK(d.top.referents == std::vector<RefId>{0});
  CHECK(atoms(d.top, "card").size() == 1);
  CHECK(report.find(ReportEntry::Kind::Definite, 1) == nullptr);
}

TEST_CASE("anaphora in the second sentence", "[discourse]") {
  auto d = discourse_of({"The customer enters a card and a numeric personal code."});
  auto r = parse_sentence(std::string_view("If it is not valid then SM rejects the card."), test::lexicon());
  const auto& cond = std::get<Conditional>(r.tree.body);
  const auto& it = cond.antecedent.sentences[0].subjects[0];
  const auto& card = cond.consequent.sentences[0].predicates[0].objects[0];
  CHECK(resolve_anaphor(it, d) == 2);
  CHECK(resolve_anaphor(card, d) == 1);
}

TEST_CASE("most recent matching referent wins", "[discourse]") {
  auto d = discourse_of({"A card waits.", "A code waits.", "It is valid."});
  auto valid = atoms(d.top, "valid");
  REQUIRE(valid.size() == 1);
  CHECK(valid[0]->args[0] == Arg(RefId{1}));
  auto e = discourse_of({"John waits.", "Mary waits.", "He enters a card."});
  CHECK(atoms(e.top, "enter")[0]->args[0] == Arg(RefId{0}));
}

TEST_CASE("copula sort makes a named referent available to definites", "[discourse]") {
  auto d = discourse_of({"Mary is a clerk.", "The clerk waits."});
  CHECK(d.top.referents.size() == 1);
  CHECK(atoms(d.top, "wait")[0]->args[0] == Arg(RefId{0}));
}

TEST_CASE("resolution failures", "[discourse]") {
  Discourse d;
  CHECK(failure(d, "He waits.") == ErrorCode::UnresolvedPronoun);
  CHECK(d.top.conditions.empty());
  CHECK(failure(d, "John does not enter a card or a code.") == ErrorCode::NegatedDisjunctionAmbiguous);
  extend(d, "A customer does not enter a card.");
  CHECK(failure(d, "He enters it.") == ErrorCode::UnresolvedPronoun);
}

TEST_CASE("ellipsis equals two sentences", "[discourse][property]") {
  const std::pair<const char*, std::vector<const char*>> cases[] = {
      {"The customer enters a card and a code.", {"The customer enters a card.", "The customer enters a code."}},
      {"John enters a card and a code.", {"John enters a card.", "John enters a code."}},
      {"SM checks a card and a code and a receipt.",
       {"SM checks a card.", "SM checks a code.", "SM checks a receipt."}},
      {"A customer enters 1234 and a card.", {"A customer enters 1234.", "The customer enters a card."}},
  };
  for (const auto& [one, many] : cases) {
    INFO(one);
    Discourse a;
    extend(a, one);
    Discourse b;
    for (const auto* s : many) extend(b, s);
    CHECK(alpha_equivalent(a.top, b.top));
  }
}

TEST_CASE("structures stay accessible", "[discourse][property]") {
  Discourse d;
  for (const char* s : {"The customer enters a card and a numeric personal code.",
                        "If it is not valid then SM rejects the card.", "No clerk enters a valid code.",
                        "John enters either a card or a code.", "John enters neither a card nor a code.",
                        "A customer who enters a card waits.", "If a customer enters a card then SM checks it.",
                        "John and Mary carry a card together.", "Mary enters a card or waits."}) {
    INFO(s);
    extend(d, s);
    CHECK_FALSE(accessibility_violation(d.top));
  }
}

TEST_CASE("accessibility checker catches a leak", "[discourse]") {
  Drs top;
  Drs inner;
  inner.referents = {0};
  inner.conditions.push_back({Atom{"card", {RefId{0}}, AtomRole::Sort}, 0});
  top.conditions.push_back({Not{inner}, 0});
  CHECK_FALSE(accessibility_violation(top));
  top.conditions.push_back({Atom{"valid", {RefId{0}}, AtomRole::Property}, 1});
  CHECK(accessibility_violation(top));
}

TEST_CASE("negative object and subject", "[discourse]") {
  auto d = discourse_of({"John enters no card."});
  REQUIRE(d.top.conditions.size() == 2);
  CHECK(std::holds_alternative<Not>(d.top.conditions[1].node));
  auto e = discourse_of({"No customer enters a card."});
  REQUIRE(e.top.conditions.size() == 1);
  const auto& n = std::get<Not>(e.top.conditions[0].node);
  CHECK(n.body->referents.size() == 2);
}

TEST_CASE("disjunctions", "[discourse]") {
  auto inclusive = discourse_of({"John enters a card or a code."});
  auto exclusive = discourse_of({"John enters either a card or a code."});
  CHECK_FALSE(std::get<Or>(inclusive.top.conditions.back().node).exclusive);
  CHECK(std::get<Or>(exclusive.top.conditions.back().node).exclusive);
  CHECK(format_drs(exclusive.top).find("EITHER:") != std::string::npos);
}

TEST_CASE("query box resolves definites like a declarative", "[discourse]") {
  auto d = discourse_of({"The customer enters a card."});
  auto q = build_query_drs(parse_sentence(std::string_view("Does the customer enter a card?"), test::lexicon()).tree, d);
  CHECK(q.drs.referents.size() == 1);
  CHECK_FALSE(q.wh);
  auto w = build_query_drs(parse_sentence(std::string_view("Who enters a card?"), test::lexicon()).tree, d);
  REQUIRE(w.wh);
  CHECK(std::find(w.drs.referents.begin(), w.drs.referents.end(), *w.wh) != w.drs.referents.end());
}

TEST_CASE("sentence extension keeps to its sentence", "[discourse]") {
  auto d = discourse_of({"John waits.", "Mary enters a card."});
  auto ext = sentence_extension(d, 1);
  CHECK(ext.referents == std::vector<RefId>{1, 2});
  CHECK(ext.conditions.size() == 3);
}
