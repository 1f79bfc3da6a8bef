#include "ace/paraphrase.hpp"

namespace ace {

std::string_view to_string(Marker::Kind kind) {
  switch (kind) {
    case Marker::Kind::Substitution: return "substitution";
    case Marker::Kind::Reconstruction: return "reconstruction";
    case Marker::Kind::AttachmentGroup: return "attachment-group";
  }
  return "";
}

namespace {

using K = ReportEntry::Kind;

class Renderer {
 public:
  Renderer(const ResolutionReport* report, const std::string* answer) : report_(report), answer_(answer) {}

  Paraphrase run(const SyntaxTree& tree) {
    if (const auto* cond = std::get_if<Conditional>(&tree.body)) {
      word("if");
      coordination(cond->antecedent);
      word("then");
      coordination(cond->consequent);
    } else {
      coordination(std::get<Coordination>(tree.body));
    }
    out_ += tree.is_question() && !answer_ ? '?' : '.';
    return {std::move(out_), std::move(markers_)};
  }

 private:
  const ReportEntry* entry(K kind, int node) const { return report_ ? report_->find(kind, node) : nullptr; }

  void space() {
    if (!out_.empty() && out_.back() != '[' && out_.back() != '{') out_ += ' ';
  }

  void word(std::string_view w) {
    space();
    out_ += to_lower(w);
  }

  void open(char c, Marker::Kind kind) {
    space();
    open_.push_back({kind, out_.size()});
    out_ += c;
  }

  void close(char c) {
    out_ += c;
    auto [kind, begin] = open_.back();
    open_.pop_back();
    markers_.push_back({kind, begin, out_.size()});
  }

  void bracketed(std::string_view text, Marker::Kind kind) {
    open('[', kind);
    out_ += to_lower(text);
    close(']');
  }

  void noun_phrase(const NounPhrase& np) {
    if (const auto* e = entry(K::Pronoun, np.id)) {
      bracketed(e->text, Marker::Kind::Substitution);
      return;
    }
    if (np.kind == NpKind::Wh) {
      if (answer_)
        bracketed(*answer_, Marker::Kind::Substitution);
      else
        word(np.head->surface);
      return;
    }
    if (np.determiner) word(np.determiner->surface);
    if (!np.numeral.empty()) word(np.numeral);
    for (const auto& a : np.adjectives) word(a.surface);
    if (np.head) {
      const ReportEntry* e = entry(K::Definite, np.id);
      if (!e) e = entry(K::Abbreviation, np.id);
      if (!e) e = entry(K::Synonym, np.id);
      if (e)
        bracketed(e->text, Marker::Kind::Substitution);
      else
        word(np.head->surface);
    }
    if (np.relative) {
      word(np.relative->pronoun.surface);
      verb_phrase(np.relative->body, np.features.number);
    }
  }

  void objects(const VerbPhrase& vp) {
    const auto& objs = vp.objects;
    if (objs.empty()) return;
    if (vp.object_connective == Connective::EitherOr) word("either");
    if (vp.object_connective == Connective::NeitherNor) word("neither");
    for (std::size_t i = 0; i < objs.size(); ++i) {
      if (i > 0) {
        switch (vp.object_connective) {
          case Connective::And: word("and"); break;
          case Connective::NeitherNor: word("nor"); break;
          default: word("or"); break;
        }
        if (const auto* e = entry(K::Ellipsis, objs[i].id)) bracketed(e->text, Marker::Kind::Reconstruction);
      }
      noun_phrase(objs[i]);
    }
  }

  void verb_phrase(const VerbPhrase& vp, Number subject_number) {
    const bool group = vp.attachment_ambiguous && !answer_;
    if (group) open('{', Marker::Kind::AttachmentGroup);
    if (vp.kind != VpKind::Verb) {
      word(vp.verb.surface);
      if (vp.negated) word("not");
      if (vp.adjective)
        word(vp.adjective->surface);
      else
        noun_phrase(vp.objects.front());
    } else {
      if (vp.auxiliary && vp.negated) {
        word(vp.auxiliary->surface);
        word("not");
        word(vp.verb.surface);
      } else if (vp.auxiliary && answer_) {
        word(vp.verb.entry->surface(subject_number == Number::Sg ? FormSlot::ThirdSg : FormSlot::ThirdPl));
      } else {
        word(vp.verb.surface);
      }
      objects(vp);
      for (const auto& pp : vp.modifiers) {
        word(pp.preposition.surface);
        noun_phrase(pp.object);
      }
    }
    if (group) close('}');
    for (const auto& adv : vp.adverbs) word(adv.surface);
  }

  void simple(const SimpleSentence& s) {
    for (std::size_t i = 0; i < s.subjects.size(); ++i) {
      if (i > 0) word("and");
      noun_phrase(s.subjects[i]);
    }
    if (s.distribution == Distribution::Each)
      word(s.distribution_word->surface);
    else if (const auto* e = entry(K::PluralReading, s.id); e && e->text == "each")
      bracketed(e->text, Marker::Kind::Reconstruction);
    Number number = s.subjects.size() > 1 ? Number::Pl : s.subjects.front().features.number;
    for (std::size_t i = 0; i < s.predicates.size(); ++i) {
      if (i > 0) {
        word(s.predicate_connective == Connective::Or ? "or" : "and");
        if (const auto* e = entry(K::Ellipsis, s.predicates[i].id)) bracketed(e->text, Marker::Kind::Reconstruction);
      }
      verb_phrase(s.predicates[i], number);
    }
    if (s.distribution == Distribution::Together)
      word(s.distribution_word->surface);
    else if (const auto* e = entry(K::PluralReading, s.id); e && e->text == "together")
      bracketed(e->text, Marker::Kind::Reconstruction);
  }

  void coordination(const Coordination& c) {
    if (c.connective == Connective::EitherOr) word("either");
    for (std::size_t i = 0; i < c.sentences.size(); ++i) {
      if (i > 0) word(c.connective == Connective::And ? "and" : "or");
      simple(c.sentences[i]);
    }
  }

  const ResolutionReport* report_;
  const std::string* answer_;
  std::string out_;
  std::vector<Marker> markers_;
  std::vector<std::pair<Marker::Kind, std::size_t>> open_;
};

}  // namespace

Paraphrase render(const SyntaxTree& tree, const ResolutionReport& report) { return Renderer(&report, nullptr).run(tree); }

std::string strip_markers(std::string_view text) {
  std::string out;
  for (char c : text)
    if (c != '[' && c != ']' && c != '{' && c != '}') out += c;
  return out;
}

std::string render_wh_answer(const SyntaxTree& question, const std::string& answer) {
  return Renderer(nullptr, &answer).run(question).text;
}

}  // namespace ace
