#include "ace/discourse.hpp"

#include <algorithm>
#include <functional>

namespace ace {

const ReportEntry* ResolutionReport::find(ReportEntry::Kind kind, int node) const {
  for (const auto& e : entries)
    if (e.kind == kind && e.node == node) return &e;
  return nullptr;
}

std::string Discourse::description(RefId id) const {
  const auto& r = referent(id);
  if (r.name) return *r.name;
  if (r.sort == "group") return r.surface;
  return "the " + r.surface;
}

namespace {

std::string noun_surface(const LexEntry& e, Number n) {
  return to_lower(e.surface(n == Number::Pl && e.forms.count(FormSlot::Pl) ? FormSlot::Pl : FormSlot::Sg));
}

class Builder {
 public:
  Builder(Discourse& d, const SyntaxTree& tree, int sentence) : d_(d), tree_(tree), sentence_(sentence) {
    report_.sentence = sentence;
    scopes_.push_back(&d_.top);
    for (const auto& a : tree.attachments)
      if (a.ambiguous) note({ReportEntry::Kind::Attachment, a.host, a.rule, std::nullopt});
  }

  ResolutionReport declarative() {
    body(tree_.body);
    return std::move(report_);
  }

  std::optional<RefId> resolve(const NounPhrase& np) {
    if (np.kind == NpKind::Pronoun) return pronoun(np);
    if (np.kind == NpKind::Definite) return find_definite(np);
    throw Error(ErrorCode::SyntaxError, "only pronouns and definite noun phrases are anaphoric", np.span);
  }

  QueryDrs query() {
    QueryDrs q;
    const auto top_before = d_.top.conditions.size();
    scopes_.push_back(&q.drs);
    body(tree_.body);
    scopes_.pop_back();
    for (auto i = top_before; i < d_.top.conditions.size(); ++i)
      if (const auto* a = std::get_if<Atom>(&d_.top.conditions[i].node)) q.accommodated.push_back(*a);
    q.wh = wh_;
    q.report = std::move(report_);
    return q;
  }

 private:
  Drs& cur() { return *scopes_.back(); }

  void note(ReportEntry e) {
    for (const auto& x : report_.entries)
      if (x.kind == e.kind && x.node == e.node) return;
    report_.entries.push_back(std::move(e));
  }

  void add(Drs& drs, std::variant<Atom, Not, Implies, Or, Group> node) {
    drs.conditions.push_back({std::move(node), sentence_});
  }

  void atom(Drs& drs, std::string pred, std::vector<Arg> args, AtomRole role) {
    add(drs, Atom{std::move(pred), std::move(args), role});
  }

  Drs box(const std::function<void()>& fill) {
    Drs b;
    scopes_.push_back(&b);
    fill();
    scopes_.pop_back();
    return b;
  }

  RefId new_referent(Drs& home, Referent r) {
    r.id = static_cast<RefId>(d_.referents.size());
    r.sentence = sentence_;
    d_.referents.push_back(r);
    home.referents.push_back(r.id);
    return r.id;
  }

  // --- accessibility -------------------------------------------------------

  std::vector<RefId> accessible() const {
    std::vector<RefId> out;
    for (const auto* s : scopes_) out.insert(out.end(), s->referents.begin(), s->referents.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  bool holds(const std::string& pred, RefId id) const {
    for (const auto* s : scopes_)
      for (const auto& c : s->conditions)
        if (const auto* a = std::get_if<Atom>(&c.node))
          if (a->pred == pred && a->args.size() == 1 && a->args[0] == Arg(id)) return true;
    return false;
  }

  std::optional<RefId> find_group(const std::vector<RefId>& members) const {
    for (const auto* s : scopes_)
      for (const auto& c : s->conditions)
        if (const auto* g = std::get_if<Group>(&c.node); g && g->members == members) return g->group;
    return std::nullopt;
  }

  // --- noun phrases --------------------------------------------------------

  void note_lexical(const NounPhrase& np) {
    if (!np.head) return;
    const auto& e = *np.head->entry;
    std::string canonical = e.word_class == WordClass::ProperNoun ? e.lemma : noun_surface(e, np.features.number);
    if (np.head->slot == FormSlot::Abbreviation)
      note({ReportEntry::Kind::Abbreviation, np.id, canonical, std::nullopt});
    else if (np.head->slot == FormSlot::Synonym)
      note({ReportEntry::Kind::Synonym, np.id, canonical, std::nullopt});
  }

  RefId introduce(const NounPhrase& np, Drs& home) {
    const auto& e = *np.head->entry;
    Referent r;
    r.gender = e.gender;
    r.number = np.features.number;
    r.sort = e.lemma;
    r.surface = noun_surface(e, np.features.number);
    RefId id = new_referent(home, r);
    for (const auto& adj : np.adjectives) atom(home, adj.entry->predicate(), {id}, AtomRole::Property);
    atom(home, e.predicate(), {id}, AtomRole::Sort);
    if (np.kind == NpKind::Cardinal) atom(home, "count", {id, Num{std::to_string(np.count)}}, AtomRole::Count);
    note_lexical(np);
    if (np.relative) {
      bool moved = &home != &cur();
      if (moved) scopes_.push_back(&home);
      verb_phrase(np.relative->body, id, false);
      if (moved) scopes_.pop_back();
    }
    return id;
  }

  RefId proper(const NounPhrase& np) {
    const auto& e = *np.head->entry;
    note_lexical(np);
    for (const auto& r : d_.referents)
      if (r.name && *r.name == e.lemma) return r.id;
    Referent r;
    r.gender = e.gender;
    r.sort = "named";
    r.surface = e.lemma;
    r.name = e.lemma;
    RefId id = new_referent(d_.top, r);
    atom(d_.top, "named", {id, Name{e.lemma}}, AtomRole::Named);
    return id;
  }

  std::optional<RefId> find_pronoun(const NounPhrase& np) const {
    auto refs = accessible();
    for (auto it = refs.rbegin(); it != refs.rend(); ++it) {
      const auto& r = d_.referent(*it);
      if (r.sort.empty() || r.number != np.features.number) continue;
      if (np.features.number == Number::Sg && r.gender != np.features.gender) continue;
      return r.id;
    }
    return std::nullopt;
  }

  std::optional<RefId> find_definite(const NounPhrase& np) const {
    auto refs = accessible();
    const auto& lemma = np.head->entry->lemma;
    for (auto it = refs.rbegin(); it != refs.rend(); ++it) {
      const auto& r = d_.referent(*it);
      if ((r.sort != lemma && !holds(np.head->entry->predicate(), r.id)) || r.number != np.features.number) continue;
      bool ok = std::all_of(np.adjectives.begin(), np.adjectives.end(),
                            [&](const Word& a) { return holds(a.entry->predicate(), r.id); });
      if (ok) return r.id;
    }
    return std::nullopt;
  }

  RefId pronoun(const NounPhrase& np) {
    auto id = find_pronoun(np);
    if (!id)
      throw Error(ErrorCode::UnresolvedPronoun,
                  "no accessible antecedent for '" + np.head->lower() + "' (" +
                      std::string(to_string(np.features.gender)) + ", " +
                      (np.features.number == Number::Sg ? "singular" : "plural") + ")",
                  np.span, {np.head->surface});
    note({ReportEntry::Kind::Pronoun, np.id, d_.description(*id), *id});
    return *id;
  }

  RefId definite(const NounPhrase& np) {
    auto id = find_definite(np);
    if (!id) return introduce(np, d_.top);
    note({ReportEntry::Kind::Definite, np.id, noun_surface(*np.head->entry, np.features.number), *id});
    if (np.relative) verb_phrase(np.relative->body, *id, false);
    return *id;
  }

  Arg np_arg(const NounPhrase& np) {
    switch (np.kind) {
      case NpKind::Numeral: return Num{np.numeral};
      case NpKind::Proper: return proper(np);
      case NpKind::Pronoun: return pronoun(np);
      case NpKind::Definite: return definite(np);
      case NpKind::Wh: {
        Referent r;
        r.gender = Gender::None;
        wh_ = new_referent(cur(), r);
        return *wh_;
      }
      case NpKind::Indefinite:
      case NpKind::Negative:
      case NpKind::Cardinal: return introduce(np, cur());
    }
    return Num{""};
  }

  std::string describe(const Arg& a) const {
    if (const auto* r = std::get_if<RefId>(&a)) return d_.description(*r);
    if (const auto* n = std::get_if<Name>(&a)) return n->value;
    return std::get<Num>(a).text;
  }

  // --- verb phrases --------------------------------------------------------

  void event(const VerbPhrase& vp, const Arg& subj, const NounPhrase* obj, bool with_modifiers) {
    auto make = [&] {
      std::vector<Arg> args{subj};
      if (obj) args.push_back(np_arg(*obj));
      std::vector<Arg> pp_args;
      if (with_modifiers)
        for (const auto& pp : vp.modifiers) pp_args.push_back(np_arg(pp.object));
      const auto verb = vp.verb.entry->predicate();
      atom(cur(), verb, args, AtomRole::Event);
      if (!with_modifiers) return;
      for (std::size_t i = 0; i < vp.modifiers.size(); ++i) {
        auto margs = args;
        margs.push_back(pp_args[i]);
        atom(cur(), verb + "_" + vp.modifiers[i].preposition.entry->predicate(), margs, AtomRole::Modifier);
      }
      for (const auto& adv : vp.adverbs) atom(cur(), verb + "_" + adv.entry->predicate(), args, AtomRole::Modifier);
    };
    if (obj && obj->kind == NpKind::Negative)
      add(cur(), Not{box(make)});
    else
      make();
  }

  void negate_if(bool negated, const std::function<void()>& fill) {
    if (negated)
      add(cur(), Not{box(fill)});
    else
      fill();
  }

  void verb_phrase(const VerbPhrase& vp, const Arg& subj, bool main_clause) {
    if (vp.kind == VpKind::CopulaAdjective) {
      negate_if(vp.negated, [&] { atom(cur(), vp.adjective->entry->predicate(), {subj}, AtomRole::Property); });
      return;
    }
    if (vp.kind == VpKind::CopulaNoun) {
      const auto& np = vp.objects.front();
      negate_if(vp.negated, [&] {
        for (const auto& adj : np.adjectives) atom(cur(), adj.entry->predicate(), {subj}, AtomRole::Property);
        atom(cur(), np.head->entry->predicate(), {subj}, AtomRole::Sort);
        if (np.kind == NpKind::Cardinal) atom(cur(), "count", {subj, Num{std::to_string(np.count)}}, AtomRole::Count);
        note_lexical(np);
        if (np.relative) verb_phrase(np.relative->body, subj, false);
      });
      return;
    }

    const auto& objs = vp.objects;
    if (objs.empty()) {
      negate_if(vp.negated, [&] { event(vp, subj, nullptr, true); });
      return;
    }
    const auto last = objs.size() - 1;
    auto conn = vp.object_connective;
    if (conn == Connective::Or && vp.negated)
      throw Error(ErrorCode::NegatedDisjunctionAmbiguous,
                  "a disjunction under 'does not' is ambiguous; write 'neither ... nor', "
                  "'does not ... either ... or' or repeat 'does not'",
                  vp.span);
    if (conn == Connective::EitherOr && vp.negated) conn = Connective::And;

    if (conn == Connective::Or || conn == Connective::EitherOr) {
      Or disj;
      disj.exclusive = conn == Connective::EitherOr;
      for (std::size_t i = 0; i < objs.size(); ++i)
        disj.disjuncts.push_back(box([&] { event(vp, subj, &objs[i], i == last); }));
      add(cur(), std::move(disj));
      return;
    }
    const bool negated = vp.negated || conn == Connective::NeitherNor;
    for (std::size_t i = 0; i < objs.size(); ++i) {
      if (i > 0 && main_clause && conn == Connective::And && recon_subject_) {
        std::string verb = vp.auxiliary ? vp.auxiliary->lower() + " not " + vp.verb.lower() : vp.verb.lower();
        note({ReportEntry::Kind::Ellipsis, objs[i].id, *recon_subject_ + " " + verb, std::nullopt});
      }
      negate_if(negated, [&] { event(vp, subj, &objs[i], i == last); });
    }
  }

  // --- sentences -----------------------------------------------------------

  void predicates(const SimpleSentence& s, const Arg& subj) {
    if (s.predicate_connective == Connective::Or) {
      Or disj;
      for (const auto& vp : s.predicates) disj.disjuncts.push_back(box([&] { verb_phrase(vp, subj, true); }));
      add(cur(), std::move(disj));
      return;
    }
    for (std::size_t i = 0; i < s.predicates.size(); ++i) {
      if (i > 0 && recon_subject_)
        note({ReportEntry::Kind::Ellipsis, s.predicates[i].id, *recon_subject_, std::nullopt});
      verb_phrase(s.predicates[i], subj, true);
    }
  }

  void simple(const SimpleSentence& s) {
    recon_subject_.reset();
    if (s.subjects.size() == 1 && s.subjects.front().kind == NpKind::Negative) {
      add(cur(), Not{box([&] { predicates(s, introduce(s.subjects.front(), cur())); })});
      return;
    }
    std::vector<Arg> subjects;
    for (const auto& np : s.subjects) {
      if (np.kind == NpKind::Negative)
        throw Error(ErrorCode::SyntaxError, "'no' cannot be used in a coordinated subject", np.span);
      subjects.push_back(np_arg(np));
    }
    if (subjects.size() == 1) {
      auto k = s.subjects.front().kind;
      const auto* r = std::get_if<RefId>(&subjects.front());
      if (r && d_.referent(*r).sort == "group")
        note({ReportEntry::Kind::PluralReading, s.id, "together", std::nullopt});
      else if (k == NpKind::Indefinite || k == NpKind::Definite || k == NpKind::Proper || k == NpKind::Pronoun)
        recon_subject_ = describe(subjects.front());
      predicates(s, subjects.front());
      return;
    }
    if (s.distribution == Distribution::Together) {
      std::vector<RefId> members;
      for (const auto& a : subjects)
        if (const auto* r = std::get_if<RefId>(&a)) members.push_back(*r);
      if (auto gid = find_group(members)) {
        predicates(s, *gid);
        return;
      }
      Referent g;
      g.gender = Gender::None;
      g.number = Number::Pl;
      g.sort = "group";
      for (std::size_t i = 0; i < subjects.size(); ++i) g.surface += (i ? " and " : "") + describe(subjects[i]);
      RefId gid = new_referent(cur(), g);
      add(cur(), Group{gid, members});
      predicates(s, gid);
      return;
    }
    if (s.distribution == Distribution::Default) note({ReportEntry::Kind::PluralReading, s.id, "each", std::nullopt});
    for (const auto& subj : subjects) predicates(s, subj);
  }

  void coordination(const Coordination& c) {
    if (c.connective == Connective::Or || c.connective == Connective::EitherOr) {
      Or disj;
      disj.exclusive = c.connective == Connective::EitherOr;
      for (const auto& s : c.sentences) disj.disjuncts.push_back(box([&] { simple(s); }));
      add(cur(), std::move(disj));
      return;
    }
    for (const auto& s : c.sentences) simple(s);
  }

  void body(const std::variant<Coordination, Conditional>& b) {
    if (const auto* c = std::get_if<Coordination>(&b)) {
      coordination(*c);
      return;
    }
    const auto& cond = std::get<Conditional>(b);
    Drs ante;
    Drs cons;
    scopes_.push_back(&ante);
    coordination(cond.antecedent);
    scopes_.push_back(&cons);
    coordination(cond.consequent);
    scopes_.pop_back();
    scopes_.pop_back();
    add(cur(), Implies{std::move(ante), std::move(cons)});
  }

  Discourse& d_;
  const SyntaxTree& tree_;
  int sentence_;
  std::vector<Drs*> scopes_;
  ResolutionReport report_;
  std::optional<RefId> wh_;
  std::optional<std::string> recon_subject_;
};

}  // namespace

ResolutionReport extend_drs(const SyntaxTree& tree, Discourse& discourse) {
  if (tree.is_question()) throw Error(ErrorCode::SyntaxError, "questions are answered, not added to the specification");
  Discourse work = discourse;
  auto report = Builder(work, tree, work.sentences).declarative();
  ++work.sentences;
  discourse = std::move(work);
  return report;
}

std::optional<RefId> resolve_anaphor(const NounPhrase& np, const Discourse& discourse) {
  Discourse work = discourse;
  SyntaxTree tree;
  return Builder(work, tree, work.sentences).resolve(np);
}

QueryDrs build_query_drs(const SyntaxTree& tree, const Discourse& discourse) {
  QueryDrs q;
  Discourse work = discourse;
  q = Builder(work, tree, work.sentences).query();
  q.context = std::move(work);
  return q;
}

Drs sentence_extension(const Discourse& discourse, int sentence) {
  Drs out;
  for (auto r : discourse.top.referents)
    if (discourse.referent(r).sentence == sentence) out.referents.push_back(r);
  for (const auto& c : discourse.top.conditions)
    if (c.sentence == sentence) out.conditions.push_back(c);
  return out;
}

}  // namespace ace
