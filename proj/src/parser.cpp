#include "ace/parser.hpp"

#include <algorithm>

namespace ace {

namespace {

enum class Context { Main, Relative, Question };

bool is_personal_pronoun(const LexEntry& e) {
  return e.word_class == WordClass::Pronoun && (e.forms.count(FormSlot::Sg) || e.forms.count(FormSlot::Pl));
}

class Parser {
 public:
  Parser(const std::vector<Token>& tokens, const Lexicon& lexicon) : toks_(tokens), lex_(lexicon) {}

  SyntaxTree run() {
    check_vocabulary();
    SyntaxTree tree;
    tree.tokens = toks_;
    if (at("does") || at("do") || at("is") || at("are")) {
      tree.kind = SentenceKind::YesNoQuestion;
      tree.body = yes_no_question();
    } else if (at("who") || at("what")) {
      tree.kind = SentenceKind::WhQuestion;
      tree.body = wh_question();
    } else if (at("if")) {
      advance();
      Conditional cond;
      cond.antecedent = coordination();
      if (at(",")) advance();
      expect("then");
      cond.consequent = coordination();
      tree.body = std::move(cond);
    } else {
      tree.body = coordination();
    }
    finish(tree.is_question() ? "?" : ".");
    tree.attachments = std::move(attachments_);
    return tree;
  }

 private:
  // --- token helpers -------------------------------------------------------

  const Token& tok(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }

  bool at(std::string_view word, std::size_t k = 0) const {
    const auto& t = tok(k);
    return to_lower(t.surface) == word && (t.kind == TokenKind::Word || t.kind == TokenKind::Punctuation);
  }

  std::optional<LexMatch> match(WordClass cls, std::size_t k = 0) const {
    const auto& t = tok(k);
    if (t.kind != TokenKind::Word) return std::nullopt;
    return lex_.lookup(t.surface, cls);
  }

  void advance() { ++pos_; }

  Word take(const LexMatch& m) {
    const auto& t = tok();
    Word w{t.surface, t.span, m.entry, m.slot};
    advance();
    return w;
  }

  Word take_function(WordClass cls) {
    auto m = match(cls);
    if (!m) fail("expected a " + std::string(to_string(cls)));
    return take(*m);
  }

  [[noreturn]] void fail(const std::string& message) const {
    const auto& t = tok();
    throw Error(ErrorCode::SyntaxError, message + " at '" + t.surface + "'", t.span);
  }

  void expect(std::string_view word) {
    if (!at(word)) fail("expected '" + std::string(word) + "'");
    advance();
  }

  void finish(std::string_view terminator) {
    if (pos_ != toks_.size() - 1) fail("unexpected word");
    if (toks_.back().surface != terminator)
      throw Error(ErrorCode::SyntaxError,
                  terminator == "?" ? "a question must end with '?'" : "a declarative sentence must end with '.'",
                  toks_.back().span);
  }

  // --- vocabulary checks ---------------------------------------------------

  void check_vocabulary() const {
    std::vector<std::string> unknown;
    std::optional<Span> first_unknown;
    for (std::size_t i = 0; i < toks_.size(); ++i) {
      const auto& t = toks_[i];
      if (t.kind != TokenKind::Word || !lex_.lookup(t.surface).empty()) continue;
      if (is_modal_verb(t.surface))
        throw Error(ErrorCode::ModalVerbRejected, "modal verb '" + t.surface + "' is not admitted; state facts",
                    t.span, {t.surface});
      if (is_modal_adjective(t.surface))
        throw Error(ErrorCode::ModalRejected, "modal adjective '" + t.surface + "' is not admitted", t.span,
                    {t.surface});
      if (auto infl = lex_.verb_inflection(t.surface)) {
        auto prev = [&](std::size_t back) { return i >= back ? to_lower(toks_[i - back].surface) : std::string(); };
        bool after_copula = prev(1) == "is" || prev(1) == "are" ||
                            (prev(1) == "not" && (prev(2) == "is" || prev(2) == "are"));
        if (infl->kind == VerbInflection::Kind::IngForm)
          throw Error(ErrorCode::ParticipleRejected,
                      "participle '" + t.surface + "' is not admitted; use the present tense of '" +
                          infl->verb->lemma + "'",
                      t.span, {t.surface});
        if (after_copula)
          throw Error(ErrorCode::PassiveRejected,
                      "passive '" + t.surface + "' is not admitted; name the agent as subject of '" +
                          infl->verb->lemma + "'",
                      t.span, {t.surface});
        auto det = i > 0 ? lex_.lookup(toks_[i - 1].surface, WordClass::Determiner) : std::nullopt;
        if (det)
          throw Error(ErrorCode::ParticipleRejected, "participle '" + t.surface + "' is not admitted", t.span,
                      {t.surface});
        throw Error(ErrorCode::NonPresentTenseRejected,
                    "'" + t.surface + "' is not in the simple present tense; use '" +
                        infl->verb->surface(FormSlot::ThirdSg) + "'",
                    t.span, {t.surface});
      }
      if (std::find(unknown.begin(), unknown.end(), t.surface) == unknown.end()) unknown.push_back(t.surface);
      if (!first_unknown) first_unknown = t.span;
    }
    if (!unknown.empty()) {
      std::string msg = "unknown word";
      msg += unknown.size() > 1 ? "s: " : ": ";
      for (std::size_t i = 0; i < unknown.size(); ++i) msg += (i ? ", " : "") + unknown[i];
      throw Error(ErrorCode::UnknownWords, msg, first_unknown, unknown);
    }
  }

  // --- category tests ------------------------------------------------------

  bool is_verb_start(std::size_t k) const {
    if (auto m = match(WordClass::Verb, k)) return m->slot == FormSlot::ThirdSg || m->slot == FormSlot::ThirdPl;
    return false;
  }

  bool is_np_start(std::size_t k) const {
    const auto& t = tok(k);
    if (t.kind == TokenKind::Numeral) return true;
    if (t.kind != TokenKind::Word) return false;
    if (match(WordClass::Determiner, k) || match(WordClass::ProperNoun, k) || match(WordClass::NumberWord, k) ||
        match(WordClass::Adjective, k) || match(WordClass::CommonNoun, k))
      return true;
    if (auto p = match(WordClass::Pronoun, k)) return is_personal_pronoun(*p->entry);
    return false;
  }

  // Lookahead used to tell "enters a card and a code" from "enters a card and
  // SM rejects it": parse an NP speculatively and check for a verb after it.
  bool np_then_verb(std::size_t k) {
    auto saved_pos = pos_;
    auto saved_id = next_id_;
    auto saved_att = attachments_.size();
    bool result = false;
    pos_ += k;
    try {
      parse_np(Context::Main, false);
      result = is_verb_start(0);
    } catch (const Error&) {
      result = false;
    }
    pos_ = saved_pos;
    next_id_ = saved_id;
    attachments_.resize(saved_att);
    return result;
  }

  // --- noun phrases --------------------------------------------------------

  std::vector<Word> adjectives() {
    std::vector<Word> out;
    while (auto m = match(WordClass::Adjective)) out.push_back(take(*m));
    return out;
  }

  Word noun(const char* what) {
    auto m = match(WordClass::CommonNoun);
    if (!m) fail(std::string("expected a noun after ") + what);
    return take(*m);
  }

  NounPhrase parse_np(Context ctx, bool ambiguous_host) {
    NounPhrase np;
    np.id = next_id_++;
    const auto start = tok().span.begin;
    const auto& t = tok();

    if (ctx == Context::Question && (at("who") || at("what"))) {
      np.kind = NpKind::Wh;
      np.head = take_function(WordClass::Pronoun);
    } else if (auto det = match(WordClass::Determiner)) {
      np.determiner = take(*det);
      const auto& d = det->entry->lemma;
      np.adjectives = adjectives();
      np.head = noun(("'" + d + "'").c_str());
      const auto& head = *np.head->entry;
      np.features.gender = head.gender;
      if (d == "a" || d == "an") {
        np.kind = NpKind::Indefinite;
        if (head.kind == NounKind::Mass) fail("mass noun '" + head.lemma + "' takes no indefinite article");
        if (np.head->slot == FormSlot::Pl) fail("plural noun after '" + d + "'");
      } else if (d == "the") {
        np.kind = NpKind::Definite;
        if (np.head->slot == FormSlot::Pl) np.features.number = Number::Pl;
      } else {
        np.kind = NpKind::Negative;
        if (np.head->slot == FormSlot::Pl) np.features.number = Number::Pl;
      }
    } else if (auto num = match(WordClass::NumberWord)) {
      np.kind = NpKind::Cardinal;
      np.determiner = take(*num);
      np.count = *num->entry->value;
      np.adjectives = adjectives();
      np.head = noun("a number");
      if (np.head->entry->kind != NounKind::Count) fail("only countable nouns take numbers");
      np.features.gender = np.head->entry->gender;
      np.features.number = np.count == 1 ? Number::Sg : Number::Pl;
      if ((np.count == 1) != (np.head->slot != FormSlot::Pl)) fail("number and noun disagree");
    } else if (t.kind == TokenKind::Numeral) {
      np.numeral = t.surface;
      advance();
      if (match(WordClass::Adjective) || match(WordClass::CommonNoun)) {
        np.kind = NpKind::Cardinal;
        np.adjectives = adjectives();
        np.head = noun("a number");
        np.features.gender = np.head->entry->gender;
        np.features.number = np.numeral == "1" ? Number::Sg : Number::Pl;
        try {
          np.count = std::stol(np.numeral);
        } catch (...) {
          np.count = 0;
        }
      } else {
        np.kind = NpKind::Numeral;
        np.features.gender = Gender::Neut;
      }
    } else if (auto proper = match(WordClass::ProperNoun)) {
      np.kind = NpKind::Proper;
      np.head = take(*proper);
      np.features.gender = proper->entry->gender;
    } else if (auto pron = match(WordClass::Pronoun); pron && is_personal_pronoun(*pron->entry)) {
      np.kind = NpKind::Pronoun;
      np.head = take(*pron);
      np.features.gender = pron->entry->gender;
      np.features.number = pron->slot == FormSlot::Pl ? Number::Pl : Number::Sg;
    } else if (match(WordClass::Adjective) || match(WordClass::CommonNoun)) {
      np.kind = NpKind::Indefinite;
      np.adjectives = adjectives();
      np.head = noun("an adjective");
      if (np.head->entry->kind != NounKind::Mass)
        fail("countable noun '" + np.head->entry->lemma + "' needs a determiner");
      np.features.gender = np.head->entry->gender;
    } else {
      fail("expected a noun phrase");
    }
    np.span = {start, toks_[pos_ - 1].span.end};

    if (at("who") || at("which") || at("that")) {
      if (np.kind == NpKind::Pronoun || np.kind == NpKind::Numeral || np.kind == NpKind::Wh)
        fail("a relative clause cannot modify this noun phrase");
      if (ctx == Context::Relative) fail("nested relative clauses are not supported");
      RelativeClause rel;
      rel.pronoun = take_function(WordClass::Pronoun);
      rel.body = parse_vp(np.features.number, Context::Relative);
      rel.attachment_ambiguous = ambiguous_host;
      attachments_.push_back({Attachment::Kind::RelativeClause, np.id, {np.span.begin, rel.body.span.end},
                              ambiguous_host, "right-association"});
      np.span.end = rel.body.span.end;
      np.relative = std::move(rel);
    }
    return np;
  }

  // --- verb phrases --------------------------------------------------------

  void check_agreement(const LexMatch& verb, Number number) const {
    auto wanted = number == Number::Sg ? FormSlot::ThirdSg : FormSlot::ThirdPl;
    if (verb.slot == wanted) return;
    if (verb.entry->surface(FormSlot::ThirdSg) == verb.entry->surface(FormSlot::ThirdPl)) return;
    fail(std::string("verb does not agree with its ") + (number == Number::Sg ? "singular" : "plural") +
         " subject");
  }

  LexMatch base_form_verb() {
    auto m = match(WordClass::Verb);
    if (!m || m->entry->builtin || m->slot != FormSlot::ThirdPl) fail("expected the base form of a verb");
    return *m;
  }

  VerbPhrase parse_vp(Number number, Context ctx) {
    VerbPhrase vp;
    vp.id = next_id_++;
    vp.span.begin = tok().span.begin;
    auto verb = match(WordClass::Verb);
    if (!verb || (verb->slot != FormSlot::ThirdSg && verb->slot != FormSlot::ThirdPl)) fail("expected a verb");

    if (verb->entry->lemma == "be") {
      check_agreement(*verb, number);
      vp.verb = take(*verb);
      if (at("not")) {
        advance();
        vp.negated = true;
      }
      copula_complement(vp, ctx);
    } else if (verb->entry->lemma == "do") {
      check_agreement(*verb, number);
      vp.auxiliary = take(*verb);
      if (!at("not")) fail("'" + vp.auxiliary->surface + "' is only used in 'does not' and questions");
      advance();
      vp.negated = true;
      vp.verb = take(base_form_verb());
      objects_and_modifiers(vp, ctx);
    } else {
      check_agreement(*verb, number);
      vp.verb = take(*verb);
      objects_and_modifiers(vp, ctx);
    }
    if (vp.negated && ctx == Context::Question)
      throw Error(ErrorCode::NegatedQuestion, "questions cannot contain negation", vp.verb.span);
    vp.span.end = toks_[pos_ - 1].span.end;
    return vp;
  }

  void copula_complement(VerbPhrase& vp, Context ctx) {
    if (auto adj = match(WordClass::Adjective); adj && !match(WordClass::CommonNoun, 1)) {
      vp.kind = VpKind::CopulaAdjective;
      vp.adjective = take(*adj);
      return;
    }
    if (!is_np_start(0)) fail("expected an adjective or a noun phrase after the copula");
    auto np = parse_np(ctx == Context::Relative ? Context::Relative : Context::Main, false);
    if (np.kind != NpKind::Indefinite && np.kind != NpKind::Cardinal)
      throw Error(ErrorCode::SyntaxError,
                  "only 'is a <noun>' and 'is <adjective>' are admitted after the copula", np.span);
    vp.kind = VpKind::CopulaNoun;
    vp.objects.push_back(std::move(np));
  }

  void set_connective(Connective& c, Connective next) {
    if (c != Connective::None && c != next) fail("mixing 'and' and 'or' in one coordination is ambiguous");
    c = next;
  }

  void objects_and_modifiers(VerbPhrase& vp, Context ctx) {
    if (at("neither")) {
      if (vp.negated) fail("'neither' cannot follow a negated verb");
      advance();
      vp.object_connective = Connective::NeitherNor;
      vp.objects.push_back(parse_np(ctx, false));
      expect("nor");
      vp.objects.push_back(parse_np(ctx, false));
      while (at("nor")) {
        advance();
        vp.objects.push_back(parse_np(ctx, false));
      }
    } else if (at("either")) {
      advance();
      vp.object_connective = Connective::EitherOr;
      vp.objects.push_back(parse_np(ctx, false));
      expect("or");
      vp.objects.push_back(parse_np(ctx, false));
      while (at("or") && is_np_start(1) && (ctx == Context::Relative || !np_then_verb(1))) {
        advance();
        vp.objects.push_back(parse_np(ctx, false));
      }
    } else if (is_np_start(0)) {
      vp.objects.push_back(parse_np(ctx, false));
      while ((at("and") || at("or")) && is_np_start(1) && (ctx == Context::Relative || !np_then_verb(1))) {
        set_connective(vp.object_connective, at("and") ? Connective::And : Connective::Or);
        advance();
        vp.objects.push_back(parse_np(ctx, false));
      }
    }
    while (auto prep = match(WordClass::Preposition)) {
      PrepPhrase pp;
      pp.preposition = take(*prep);
      bool ambiguous = !vp.objects.empty() || !vp.modifiers.empty();
      pp.object = parse_np(ctx, ambiguous);
      if (pp.object.kind == NpKind::Negative) fail("'no' is not admitted inside a prepositional phrase");
      attachments_.push_back({Attachment::Kind::PrepositionalPhrase, vp.id,
                              {pp.preposition.span.begin, pp.object.span.end}, !vp.objects.empty(),
                              "minimal-attachment"});
      vp.attachment_ambiguous = vp.attachment_ambiguous || !vp.objects.empty();
      vp.modifiers.push_back(std::move(pp));
    }
    while (auto adv = match(WordClass::Adverb)) {
      if (adv->entry->builtin) break;
      vp.adverbs.push_back(take(*adv));
    }
  }

  // --- sentences -----------------------------------------------------------

  SimpleSentence simple_sentence() {
    SimpleSentence s;
    s.id = next_id_++;
    s.subjects.push_back(parse_np(Context::Main, false));
    while (at("and") && is_np_start(1) && !is_verb_start(0)) {
      advance();
      s.subjects.push_back(parse_np(Context::Main, false));
    }
    Number number = s.subjects.size() > 1 ? Number::Pl : s.subjects.front().features.number;
    if (at("each")) {
      if (s.subjects.size() < 2) fail("'each' needs a coordinated subject");
      s.distribution = Distribution::Each;
      s.distribution_word = take_function(WordClass::Adverb);
    }
    s.predicates.push_back(parse_vp(number, Context::Main));
    while ((at("and") || at("or")) && is_verb_start(1)) {
      set_connective(s.predicate_connective, at("and") ? Connective::And : Connective::Or);
      advance();
      s.predicates.push_back(parse_vp(number, Context::Main));
    }
    if (at("together")) {
      if (s.subjects.size() < 2) fail("'together' needs a coordinated subject");
      if (s.distribution == Distribution::Each) fail("'each' and 'together' exclude each other");
      s.distribution = Distribution::Together;
      s.distribution_word = take_function(WordClass::Adverb);
    }
    return s;
  }

  Coordination coordination() {
    Coordination c;
    if (at("either")) {
      advance();
      c.connective = Connective::EitherOr;
      c.sentences.push_back(simple_sentence());
      expect("or");
      c.sentences.push_back(simple_sentence());
      while (at("or")) {
        advance();
        c.sentences.push_back(simple_sentence());
      }
      return c;
    }
    c.sentences.push_back(simple_sentence());
    while (at("and") || at("or")) {
      set_connective(c.connective, at("and") ? Connective::And : Connective::Or);
      advance();
      c.sentences.push_back(simple_sentence());
    }
    return c;
  }

  // --- questions -----------------------------------------------------------

  void no_question_coordination(const SimpleSentence& s) const {
    const auto& vp = s.predicates.front();
    if (s.subjects.size() > 1 || s.predicates.size() > 1 || vp.object_connective != Connective::None ||
        at("and") || at("or"))
      throw Error(ErrorCode::SyntaxError, "questions cannot contain coordination", vp.span);
  }

  void no_negation() const {
    if (at("not")) throw Error(ErrorCode::NegatedQuestion, "questions cannot contain negation", tok().span);
  }

  Coordination yes_no_question() {
    SimpleSentence s;
    s.id = next_id_++;
    auto aux = *match(WordClass::Verb);
    Word aux_word = take(aux);
    s.subjects.push_back(parse_np(Context::Main, false));
    if (at("and")) fail("questions cannot contain coordination");
    no_negation();
    check_agreement(aux, s.subjects.front().features.number);
    VerbPhrase vp;
    vp.id = next_id_++;
    vp.span.begin = aux_word.span.begin;
    if (aux.entry->lemma == "be") {
      vp.verb = aux_word;
      copula_complement(vp, Context::Question);
    } else {
      vp.auxiliary = aux_word;
      vp.verb = take(base_form_verb());
      objects_and_modifiers(vp, Context::Question);
    }
    vp.span.end = toks_[pos_ - 1].span.end;
    s.predicates.push_back(std::move(vp));
    no_question_coordination(s);
    Coordination c;
    c.sentences.push_back(std::move(s));
    return c;
  }

  Coordination wh_question() {
    SimpleSentence s;
    s.id = next_id_++;
    NounPhrase wh = parse_np(Context::Question, false);
    if (at("does") || at("do")) {
      auto aux = *match(WordClass::Verb);
      VerbPhrase vp;
      vp.id = next_id_++;
      vp.span.begin = tok().span.begin;
      vp.auxiliary = take(aux);
      s.subjects.push_back(parse_np(Context::Main, false));
      no_negation();
      check_agreement(aux, s.subjects.front().features.number);
      vp.verb = take(base_form_verb());
      vp.objects.push_back(std::move(wh));
      if (is_np_start(0)) fail("a wh-question asks for one noun phrase");
      objects_and_modifiers(vp, Context::Question);
      vp.span.end = toks_[pos_ - 1].span.end;
      s.predicates.push_back(std::move(vp));
    } else {
      s.subjects.push_back(std::move(wh));
      s.predicates.push_back(parse_vp(Number::Sg, Context::Question));
    }
    no_question_coordination(s);
    Coordination c;
    c.sentences.push_back(std::move(s));
    return c;
  }

  const std::vector<Token>& toks_;
  const Lexicon& lex_;
  std::size_t pos_ = 0;
  int next_id_ = 0;
  std::vector<Attachment> attachments_;
};

}  // namespace

ParseResult parse_sentence(const std::vector<Token>& tokens, const Lexicon& lexicon) {
  if (tokens.empty()) throw Error(ErrorCode::UnterminatedSentence, "empty sentence");
  Parser parser(tokens, lexicon);
  ParseResult result{parser.run(), SentenceKind::Declarative, {}};
  result.kind = result.tree.kind;
  return result;
}

ParseResult parse_sentence(std::string_view sentence, const Lexicon& lexicon) {
  return parse_sentence(tokenize(sentence, lexicon), lexicon);
}

}  // namespace ace
