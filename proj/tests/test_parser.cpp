#include "catch_amalgamated.hpp"

#include "ace/parser.hpp"
#include "support.hpp"

using namespace ace;

namespace {

ParseResult parse(const char* s) { return parse_sentence(std::string_view(s), test::lexicon()); }

ErrorCode failure(const char* s) {
  try {
    parse(s);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("parsed: " << s);
  return ErrorCode::SessionFormat;
}

const SimpleSentence& first(const SyntaxTree& t) { return std::get<Coordination>(t.body).sentences.front(); }

}  // namespace

TEST_CASE("prepositional phrase attaches to the verb", "[parser]") {
  auto r = parse("The customer enters a card with a code.");
  const auto& vp = first(r.tree).predicates.front();
  REQUIRE(vp.modifiers.size() == 1);
  CHECK(vp.modifiers[0].preposition.lower() == "with");
  CHECK(vp.objects.size() == 1);
  CHECK(vp.attachment_ambiguous);
  REQUIRE(r.tree.attachments.size() == 1);
  CHECK(r.tree.attachments[0].rule == "minimal-attachment");
  CHECK(r.tree.attachments[0].host == vp.id);
}

TEST_CASE("relative clause attaches to the nearest noun phrase", "[parser]") {
  auto r = parse("The customer enters a card that carries a code.");
  const auto& obj = first(r.tree).predicates.front().objects.front();
  REQUIRE(obj.relative);
  CHECK(obj.head->lemma() == "card");
  CHECK(obj.relative->body.verb.lemma() == "carry");
  REQUIRE(r.tree.attachments.size() == 1);
  CHECK(r.tree.attachments[0].rule == "right-association");
  CHECK(r.tree.attachments[0].host == obj.id);
  CHECK_FALSE(first(r.tree).subjects.front().relative);
}

TEST_CASE("rejected constructions", "[parser]") {
  CHECK(failure("The customer must enter a card.") == ErrorCode::ModalVerbRejected);
  CHECK(failure("The code is possible.") == ErrorCode::ModalRejected);
  CHECK(failure("The customer entered a card.") == ErrorCode::NonPresentTenseRejected);
  CHECK(failure("The card is entered.") == ErrorCode::PassiveRejected);
  CHECK(failure("The customer is entering a card.") == ErrorCode::ParticipleRejected);
  CHECK(failure("Does the customer not enter a card?") == ErrorCode::NegatedQuestion);
  CHECK(failure("The customer enter a card.") == ErrorCode::SyntaxError);
  CHECK(failure("The customer enters a card") == ErrorCode::UnterminatedSentence);
}

TEST_CASE("unknown words are listed", "[parser]") {
  try {
    parse("The customer frobnicates a widget.");
    FAIL("parsed");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownWords);
    CHECK(e.diagnostic().words == std::vector<std::string>{"frobnicates", "widget"});
  }
}

TEST_CASE("sentence kinds and roots", "[parser]") {
  CHECK(parse("Does the customer enter a card?").kind == SentenceKind::YesNoQuestion);
  CHECK(parse("Who enters a card?").kind == SentenceKind::WhQuestion);
  CHECK(parse("The customer enters a card.").kind == SentenceKind::Declarative);
  CHECK(parse("Does the customer enter a card?").tree.root() == RootCategory::YesNoQ);
  CHECK(parse("If it is valid then SM accepts it.").tree.root() == RootCategory::IfThen);
  CHECK(parse("John waits and Mary waits.").tree.root() == RootCategory::Coord);
  CHECK(parse("John does not wait.").tree.root() == RootCategory::Neg);
  CHECK(parse("John waits.").tree.root() == RootCategory::Decl);
}

TEST_CASE("noun phrase kinds", "[parser]") {
  auto kind = [](const char* s) { return first(parse(s).tree).subjects.front().kind; };
  CHECK(kind("A customer waits.") == NpKind::Indefinite);
  CHECK(kind("The customer waits.") == NpKind::Definite);
  CHECK(kind("No customer waits.") == NpKind::Negative);
  CHECK(kind("SM waits.") == NpKind::Proper);
  CHECK(kind("He waits.") == NpKind::Pronoun);
  CHECK(kind("1234 is valid.") == NpKind::Numeral);
  CHECK(kind("Two customers wait.") == NpKind::Cardinal);
  CHECK(kind("Money is red.") == NpKind::Indefinite);
  auto two = first(parse("Two customers wait.").tree).subjects.front();
  CHECK(two.count == 2);
  CHECK(two.features.number == Number::Pl);
}

TEST_CASE("coordination forms", "[parser]") {
  auto vp = [](const char* s) { return first(parse(s).tree).predicates.front(); };
  CHECK(vp("John enters a card and a code.").object_connective == Connective::And);
  CHECK(vp("John enters a card or a code.").object_connective == Connective::Or);
  CHECK(vp("John enters either a card or a code.").object_connective == Connective::EitherOr);
  CHECK(vp("John enters neither a card nor a code.").object_connective == Connective::NeitherNor);
  CHECK(vp("John enters neither a card nor a code.").objects.size() == 2);
  auto each = first(parse("John and Mary each enter a card.").tree);
  CHECK(each.distribution == Distribution::Each);
  CHECK(each.subjects.size() == 2);
  CHECK(first(parse("John and Mary carry a card together.").tree).distribution == Distribution::Together);
  CHECK(first(parse("Mary waits and carries money.").tree).predicates.size() == 2);
  CHECK(failure("John enters a card and a code or a receipt.") == ErrorCode::SyntaxError);
}

TEST_CASE("verb agreement", "[parser][property]") {
  for (const char* s : {"John enters a card.", "John and Mary enter a card.", "Two customers enter a card.",
                        "The customer does not enter a card.", "They wait."}) {
    auto r = parse(s);
    const auto& ss = first(r.tree);
    const auto& vp = ss.predicates.front();
    bool plural = ss.subjects.size() > 1 || ss.subjects.front().features.number == Number::Pl;
    const auto& w = vp.auxiliary ? *vp.auxiliary : vp.verb;
    INFO(s);
    CHECK(w.slot == (plural ? FormSlot::ThirdPl : FormSlot::ThirdSg));
  }
}

TEST_CASE("equal input gives equal trees", "[parser][property]") {
  const char* s = "If a customer who enters a card waits then SM checks the card with a code quickly.";
  CHECK(to_string(parse(s).tree) == to_string(parse(s).tree));
}

TEST_CASE("no noun-attached prepositional phrase and no nested relative clause", "[parser][property]") {
  const char* corpus[] = {
      "The customer enters a card with a code.",
      "A customer who enters a card with a code waits.",
      "John checks a card which carries a code with a receipt.",
      "SM prints a receipt for a customer quickly.",
  };
  for (const char* s : corpus) {
    INFO(s);
    auto r = parse(s);
    for (const auto& a : r.tree.attachments) {
      if (a.kind == Attachment::Kind::PrepositionalPhrase) CHECK(a.rule == "minimal-attachment");
      if (a.kind == Attachment::Kind::RelativeClause) CHECK(a.rule == "right-association");
    }
    for (const auto& np : first(r.tree).subjects)
      if (np.relative) CHECK_FALSE((!np.relative->body.objects.empty() && np.relative->body.objects[0].relative));
  }
  CHECK(failure("A customer who enters a card which carries a code waits.") == ErrorCode::SyntaxError);
}
