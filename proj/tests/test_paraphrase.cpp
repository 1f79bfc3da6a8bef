#include "catch_amalgamated.hpp"

#include "ace/discourse.hpp"
#include "ace/paraphrase.hpp"
#include "ace/parser.hpp"
#include "support.hpp"

using namespace ace;

namespace {

Paraphrase say(Discourse& d, const char* s) {
  auto tree = parse_sentence(std::string_view(s), test::lexicon()).tree;
  auto report = extend_drs(tree, d);
  return render(tree, report);
}

std::string bracketed(const Paraphrase& p, const Marker& m) { return p.text.substr(m.begin, m.end - m.begin); }

}  // namespace

TEST_CASE("paraphrases of the two-sentence specification", "[paraphrase]") {
  Discourse d;
  auto one = say(d, "The customer enters a card and a numeric personal code.");
  CHECK(one.text == "the customer enters a card and [the customer enters] a numeric personal code.");
  REQUIRE(one.markers.size() == 1);
  CHECK(one.markers[0].kind == Marker::Kind::Reconstruction);
  CHECK(bracketed(one, one.markers[0]) == "[the customer enters]");

  auto two = say(d, "If it is not valid then SM rejects the card.");
  CHECK(two.text == "if [the personal code] is not valid then [simplemat] rejects the [card].");
  REQUIRE(two.markers.size() == 3);
  for (const auto& m : two.markers) CHECK(m.kind == Marker::Kind::Substitution);
}

TEST_CASE("attachment group", "[paraphrase]") {
  Discourse d;
  auto p = say(d, "The customer enters a card with a code.");
  CHECK(p.text == "the customer {enters a card with a code}.");
  REQUIRE(p.markers.size() == 1);
  CHECK(p.markers[0].kind == Marker::Kind::AttachmentGroup);
}

TEST_CASE("plain sentences echo lowercased", "[paraphrase]") {
  Discourse d;
  auto p = say(d, "A customer enters a card.");
  CHECK(p.text == "a customer enters a card.");
  CHECK(p.markers.empty());
}

TEST_CASE("synonyms, abbreviations and readings are shown", "[paraphrase]") {
  Discourse d;
  CHECK(say(d, "The client enters a pin.").text == "the [customer] enters a [personal code].");
  CHECK(say(d, "SM waits.").text == "[simplemat] waits.");
  CHECK(say(d, "John and Mary wait.").text == "john and mary [each] wait.");
  CHECK(say(d, "Mary waits and carries money.").text == "mary waits and [mary] carries money.");
  CHECK(say(d, "A customer who enters a card and a code waits.").text ==
        "a customer who enters a card and a code waits.");
}

TEST_CASE("every report entry has a marker", "[paraphrase][property]") {
  Discourse d;
  for (const char* s : {"The customer enters a card and a numeric personal code.",
                        "If it is not valid then SM rejects the card.", "The client enters a pin.",
                        "John and Mary wait.", "She enters the card with a code.", "Mary waits and carries money."}) {
    INFO(s);
    auto tree = parse_sentence(std::string_view(s), test::lexicon()).tree;
    auto report = extend_drs(tree, d);
    auto p = render(tree, report);
    CHECK(p.markers.size() == report.entries.size());
    for (const auto& m : p.markers) {
      char open = p.text[m.begin];
      char close = p.text[m.end - 1];
      CHECK(((open == '[' && close == ']') || (open == '{' && close == '}')));
    }
  }
}

TEST_CASE("marker stripping", "[paraphrase]") {
  CHECK(strip_markers("if [the personal code] is not valid then [simplemat] rejects the [card].") ==
        "if the personal code is not valid then simplemat rejects the card.");
  CHECK(strip_markers("the customer {enters a card with a code}.") == "the customer enters a card with a code.");
  CHECK(strip_markers("john and mary [each] wait.") == "john and mary each wait.");
}

TEST_CASE("wh answer rendering", "[paraphrase]") {
  auto q = parse_sentence(std::string_view("Who enters a card?"), test::lexicon()).tree;
  CHECK(render_wh_answer(q, "a customer") == "[a customer] enters a card.");
  auto o = parse_sentence(std::string_view("What does the customer enter?"), test::lexicon()).tree;
  CHECK(render_wh_answer(o, "a card") == "the customer enters [a card].");
}
