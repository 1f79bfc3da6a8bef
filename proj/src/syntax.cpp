#include "ace/syntax.hpp"

#include <sstream>

namespace ace {

namespace {

std::string_view connective_name(Connective c) {
  switch (c) {
    case Connective::None: return "";
    case Connective::And: return "and";
    case Connective::Or: return "or";
    case Connective::EitherOr: return "either-or";
    case Connective::NeitherNor: return "neither-nor";
  }
  return "";
}

std::string_view np_kind_name(NpKind k) {
  switch (k) {
    case NpKind::Indefinite: return "indef";
    case NpKind::Definite: return "def";
    case NpKind::Negative: return "neg";
    case NpKind::Proper: return "proper";
    case NpKind::Pronoun: return "pron";
    case NpKind::Numeral: return "num";
    case NpKind::Cardinal: return "card";
    case NpKind::Wh: return "wh";
  }
  return "";
}

void dump_vp(std::ostream& out, const VerbPhrase& vp);

void dump_np(std::ostream& out, const NounPhrase& np) {
  out << "(NP#" << np.id << ' ' << np_kind_name(np.kind);
  if (np.determiner) out << ' ' << np.determiner->lower();
  for (const auto& a : np.adjectives) out << ' ' << a.lemma();
  if (!np.numeral.empty()) out << ' ' << np.numeral;
  if (np.head) out << ' ' << np.head->lemma();
  if (np.relative) {
    out << " (REL " << np.relative->pronoun.lower() << (np.relative->attachment_ambiguous ? "?" : "") << ' ';
    dump_vp(out, np.relative->body);
    out << ')';
  }
  out << ')';
}

void dump_vp(std::ostream& out, const VerbPhrase& vp) {
  out << "(VP#" << vp.id << (vp.negated ? " not" : "") << ' ' << vp.verb.lemma();
  if (vp.adjective) out << ' ' << vp.adjective->lemma();
  if (vp.object_connective != Connective::None) out << " [" << connective_name(vp.object_connective) << ']';
  for (const auto& o : vp.objects) {
    out << ' ';
    dump_np(out, o);
  }
  for (const auto& pp : vp.modifiers) {
    out << " (PP" << (vp.attachment_ambiguous ? "?" : "") << ' ' << pp.preposition.lemma() << ' ';
    dump_np(out, pp.object);
    out << ')';
  }
  for (const auto& a : vp.adverbs) out << " (ADV " << a.lemma() << ')';
  out << ')';
}

void dump_simple(std::ostream& out, const SimpleSentence& s) {
  out << "(S#" << s.id;
  for (const auto& np : s.subjects) {
    out << ' ';
    dump_np(out, np);
  }
  if (s.distribution == Distribution::Each) out << " each";
  if (s.distribution == Distribution::Together) out << " together";
  if (s.predicate_connective != Connective::None) out << " [" << connective_name(s.predicate_connective) << ']';
  for (const auto& vp : s.predicates) {
    out << ' ';
    dump_vp(out, vp);
  }
  out << ')';
}

void dump_coord(std::ostream& out, const Coordination& c) {
  if (c.sentences.size() == 1) {
    dump_simple(out, c.sentences.front());
    return;
  }
  out << "(COORD " << connective_name(c.connective);
  for (const auto& s : c.sentences) {
    out << ' ';
    dump_simple(out, s);
  }
  out << ')';
}

bool has_negation(const Coordination& c) {
  for (const auto& s : c.sentences) {
    for (const auto& np : s.subjects)
      if (np.kind == NpKind::Negative) return true;
    for (const auto& vp : s.predicates)
      if (vp.negated || vp.object_connective == Connective::NeitherNor) return true;
  }
  return false;
}

}  // namespace

RootCategory SyntaxTree::root() const {
  if (kind == SentenceKind::YesNoQuestion) return RootCategory::YesNoQ;
  if (kind == SentenceKind::WhQuestion) return RootCategory::WhQ;
  if (std::holds_alternative<Conditional>(body)) return RootCategory::IfThen;
  const auto& c = std::get<Coordination>(body);
  if (c.sentences.size() > 1) return RootCategory::Coord;
  return has_negation(c) ? RootCategory::Neg : RootCategory::Decl;
}

std::string to_string(const SyntaxTree& tree) {
  std::ostringstream out;
  if (const auto* cond = std::get_if<Conditional>(&tree.body)) {
    out << "(IF ";
    dump_coord(out, cond->antecedent);
    out << " THEN ";
    dump_coord(out, cond->consequent);
    out << ')';
  } else {
    dump_coord(out, std::get<Coordination>(tree.body));
  }
  if (tree.is_question()) out << " ?";
  return out.str();
}

}  // namespace ace
