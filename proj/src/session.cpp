#include "ace/session.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"

#include "ace/parser.hpp"

namespace ace {

using nlohmann::json;

Session::Session(Lexicon lexicon) : lexicon_(std::move(lexicon)) {}

void Session::add_word(const LexEntry& entry) {
  lexicon_.add_entry(entry);
  lexicon_edits_.emplace_back(true, Lexicon::format_record(entry));
}

bool Session::remove_word(std::string_view lemma) {
  if (!lexicon_.remove_entry(lemma)) return false;
  lexicon_edits_.emplace_back(false, std::string(lemma));
  return true;
}

const Analysis& Session::submit(std::string_view text) {
  auto parsed = parse_sentence(text, lexicon_);
  if (parsed.kind != SentenceKind::Declarative)
    throw Error(ErrorCode::SyntaxError, "questions are asked, not asserted");
  Analysis a;
  a.text = std::string(text);
  a.tree = std::move(parsed.tree);
  a.diagnostics = std::move(parsed.diagnostics);
  a.extended = discourse_;
  a.report = extend_drs(a.tree, a.extended);
  a.paraphrase = render(a.tree, a.report);
  a.drs_text = format_drs(a.extended.top);
  pending_ = std::move(a);
  return *pending_;
}

std::string Session::accept() {
  if (!pending_) throw StateError("no sentence is pending");
  discourse_ = std::move(pending_->extended);
  sentences_.push_back(pending_->text);
  paraphrases_.push_back(pending_->paraphrase.text);
  pending_.reset();
  rebuild_kb();
  return clauses_text();
}

void Session::reject() {
  if (!pending_) throw StateError("no sentence is pending");
  pending_.reset();
}

void Session::rebuild_kb() {
  translation_ = drs_to_clauses(discourse_.top);
  std::map<int, std::pair<std::vector<Clause>, std::vector<Untranslated>>> parts;
  for (const auto& c : translation_.clauses) parts[c.sentence].first.push_back(c);
  for (const auto& u : translation_.untranslated) parts[u.sentence].second.push_back(u);
  kb_.clear();
  for (auto& [s, p] : parts) kb_.assimilate(s, std::move(p.first), std::move(p.second));
}

QueryOutcome Session::ask(std::string_view question) const {
  auto parsed = parse_sentence(question, lexicon_);
  if (parsed.kind == SentenceKind::Declarative)
    throw Error(ErrorCode::SyntaxError, "expected a question ending in '?'");
  return answer_question(parsed.tree, discourse_, kb_);
}

Execution Session::start_execution(std::vector<Assertion> definitions) const {
  return Execution(discourse_, kb_, lexicon_, std::move(definitions));
}

std::string Session::drs_text() const { return format_drs(discourse_.top); }

std::string Session::clauses_text() const { return render_clauses(translation_.clauses); }

std::string Session::to_json() const {
  json lex = json::array();
  for (const auto& [add, text] : lexicon_edits_) lex.push_back({{add ? "add" : "remove", text}});
  json j{{"lexicon", lex}, {"sentences", sentences_}};
  return j.dump(2) + "\n";
}

Session Session::from_json(std::string_view text, Lexicon base) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::SessionFormat, std::string("session file: ") + e.what());
  }
  Session s(std::move(base));
  try {
    for (const auto& edit : j.value("lexicon", json::array())) {
      if (edit.contains("add"))
        s.add_word(Lexicon::parse_record(edit.at("add").get<std::string>()));
      else
        s.remove_word(edit.at("remove").get<std::string>());
    }
    for (const auto& sentence : j.value("sentences", json::array())) {
      s.submit(sentence.get<std::string>());
      s.accept();
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::SessionFormat, std::string("session file: ") + e.what());
  }
  return s;
}

void Session::save(const std::filesystem::path& path) const {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::SessionFormat, "cannot write " + path.string());
  out << to_json();
}

Session Session::load(const std::filesystem::path& path, Lexicon base) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::SessionFormat, "cannot read " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json(ss.str(), std::move(base));
}

}  // namespace ace
