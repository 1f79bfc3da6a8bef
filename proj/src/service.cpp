#include "ace/service.hpp"

#include <optional>
#include <regex>

#include "json.hpp"

#include "ace/executor.hpp"
#include "ace/session.hpp"

namespace ace {

using nlohmann::json;

struct Api::Entry {
  std::mutex mutex;
  Session session;
  std::optional<Execution> execution;
  std::string execution_id;
  std::size_t delivered = 0;  // transcript lines already sent

  explicit Entry(Lexicon lex) : session(std::move(lex)) {}
};

namespace {

struct HttpError {
  int status;
  json body;
};

json diagnostic_json(const Diagnostic& d) {
  json j{{"code", code_name(d.code)}, {"message", d.message}, {"words", d.words}};
  if (d.span) j["span"] = {{"begin", d.span->begin}, {"end", d.span->end}};
  return j;
}

HttpError not_found(const std::string& what) { return {404, {{"error", what + " not found"}}}; }

HttpError linguistic(const Error& e) {
  json unknown = json::array();
  if (e.code() == ErrorCode::UnknownWords) unknown = e.diagnostic().words;
  return {422, {{"diagnostics", json::array({diagnostic_json(e.diagnostic())})}, {"unknownWords", unknown}}};
}

json parse_body(const std::string& body) {
  if (body.empty()) return json::object();
  try {
    auto j = json::parse(body);
    if (!j.is_object()) throw HttpError{400, {{"error", "expected a JSON object"}}};
    return j;
  } catch (const json::exception& e) {
    throw HttpError{400, {{"error", std::string("bad JSON: ") + e.what()}}};
  }
}

template <typename T>
T field(const json& j, const char* name) {
  if (!j.contains(name)) throw HttpError{400, {{"error", std::string("missing field '") + name + "'"}}};
  try {
    return j.at(name).get<T>();
  } catch (const json::exception&) {
    throw HttpError{400, {{"error", std::string("field '") + name + "' has the wrong type"}}};
  }
}

std::string_view kind_name(SentenceKind k) {
  switch (k) {
    case SentenceKind::Declarative: return "declarative";
    case SentenceKind::YesNoQuestion: return "yes-no";
    case SentenceKind::WhQuestion: return "wh";
  }
  return "";
}

}  // namespace

Api::Api(Lexicon base) : base_(std::move(base)) {}
Api::~Api() = default;

std::shared_ptr<Api::Entry> Api::session(const std::string& id) {
  std::lock_guard lock(mutex_);
  auto it = sessions_.find(id);
  if (it == sessions_.end()) throw not_found("session " + id);
  return it->second;
}

std::shared_ptr<Api::Entry> Api::execution_owner(const std::string& exec_id) {
  std::lock_guard lock(mutex_);
  auto it = executions_.find(exec_id);
  if (it == executions_.end()) throw not_found("execution " + exec_id);
  return sessions_.at(it->second);
}

Response Api::handle(const std::string& method, const std::string& path, const std::string& body) {
  static const std::regex session_route("/api/sessions/([A-Za-z0-9]+)(/[a-z]+)?");
  static const std::regex execution_route("/api/executions/([A-Za-z0-9]+)/(next|reply)");

  auto progress = [](Entry& e) {
    json events = json::array();
    const auto& t = e.execution->transcript();
    for (; e.delivered < t.size(); ++e.delivered) events.push_back(t[e.delivered].str());
    json request = nullptr;
    if (const auto& p = e.execution->pending())
      request = {{"kind", p->kind == OracleRequest::Kind::Instantiation ? "instantiation" : "truth"},
                 {"sort", p->sort},
                 {"atom", p->atom},
                 {"prompt", p->prompt}};
    json j{{"events", events}, {"request", request}, {"finished", e.execution->finished()}};
    if (e.execution->finished()) j["unusedDefinitions"] = e.execution->unused_definitions();
    return j;
  };

  try {
    std::smatch m;
    if (path == "/api/sessions") {
      if (method != "POST") throw HttpError{405, {{"error", "use POST"}}};
      std::lock_guard lock(mutex_);
      auto id = "s" + std::to_string(next_session_++);
      sessions_[id] = std::make_shared<Entry>(base_);
      return {201, json{{"id", id}}.dump()};
    }

    if (std::regex_match(path, m, execution_route)) {
      auto entry = execution_owner(m[1]);
      std::lock_guard lock(entry->mutex);
      if (!entry->execution || entry->execution_id != m[1]) throw not_found("execution " + m[1].str());
      if (m[2] == "next") {
        if (method != "GET") throw HttpError{405, {{"error", "use GET"}}};
        return {200, progress(*entry).dump()};
      }
      if (method != "POST") throw HttpError{405, {{"error", "use POST"}}};
      auto text = field<std::string>(parse_body(body), "text");
      if (!entry->execution->pending()) throw HttpError{409, {{"error", "no request is pending"}}};
      try {
        entry->execution->reply(text);
      } catch (const Error& e) {
        throw linguistic(e);
      }
      return {200, progress(*entry).dump()};
    }

    if (!std::regex_match(path, m, session_route)) throw not_found("route " + path);
    auto entry = session(m[1]);
    const std::string action = m[2].matched ? m[2].str().substr(1) : "";
    std::lock_guard lock(entry->mutex);
    Session& s = entry->session;

    if (action.empty()) {
      if (method != "GET") throw HttpError{405, {{"error", "use GET"}}};
      return {200, json{{"id", m[1].str()},
                        {"sentences", s.sentences()},
                        {"paraphrases", s.paraphrases()},
                        {"drsText", s.drs_text()},
                        {"clausesText", s.clauses_text()},
                        {"pending", s.pending().has_value()}}
                       .dump()};
    }
    if (action == "lexicon" && method == "GET") {
      json words = json::array();
      for (const auto& e : s.lexicon().content_words()) words.push_back(Lexicon::format_record(*e));
      return {200, json{{"entries", words}}.dump()};
    }
    if (method != "POST") throw HttpError{405, {{"error", "use POST"}}};
    const json req = parse_body(body);

    if (action == "sentences") {
      try {
        const auto& a = s.submit(field<std::string>(req, "text"));
        json markers = json::array();
        for (const auto& mk : a.paraphrase.markers)
          markers.push_back({{"kind", to_string(mk.kind)}, {"begin", mk.begin}, {"end", mk.end}});
        json diags = json::array();
        for (const auto& d : a.diagnostics) diags.push_back(diagnostic_json(d));
        return {200, json{{"paraphrase", a.paraphrase.text},
                          {"markers", markers},
                          {"drsText", a.drs_text},
                          {"diagnostics", diags},
                          {"unknownWords", json::array()}}
                         .dump()};
      } catch (const Error& e) {
        throw linguistic(e);
      }
    }
    if (action == "decision") {
      const bool accept = field<bool>(req, "accept");
      if (!s.pending()) throw HttpError{409, {{"error", "no sentence is pending"}}};
      if (!accept) {
        s.reject();
        return {200, json{{"accepted", false}}.dump()};
      }
      auto clauses = s.accept();
      json untranslated = json::array();
      for (const auto& u : s.translation().untranslated) untranslated.push_back(diagnostic_json(u.diagnostic));
      return {200, json{{"accepted", true}, {"clausesText", clauses}, {"untranslated", untranslated}}.dump()};
    }
    if (action == "lexicon") {
      try {
        auto entry_line = field<std::string>(req, "entry");
        s.add_word(Lexicon::parse_record(entry_line));
      } catch (const Error& e) {
        throw linguistic(e);
      }
      return {200, json{{"version", s.lexicon().version()}}.dump()};
    }
    if (action == "query") {
      const auto offset = req.value("offset", std::size_t{0});
      const auto limit = req.value("limit", std::size_t{1});
      QueryOutcome out;
      try {
        out = s.ask(field<std::string>(req, "text"));
      } catch (const Error& e) {
        throw linguistic(e);
      }
      out.answers.seek(offset);
      json answers = json::array();
      for (const auto& a : out.answers.next(limit)) answers.push_back(a.text);
      json j{{"kind", kind_name(out.kind)},
             {"answers", answers},
             {"exhausted", out.answers.exhausted()},
             {"next", out.answers.position()},
             {"total", out.answers.size()}};
      if (out.diagnostic) j["diagnostic"] = diagnostic_json(*out.diagnostic);
      return {200, j.dump()};
    }
    if (action == "executions") {
      std::vector<Assertion> defs;
      try {
        for (const auto& line : req.value("defs", std::vector<std::string>{}))
          defs.push_back(parse_assertion(line, s.lexicon()));
      } catch (const Error& e) {
        throw linguistic(e);
      } catch (const json::exception&) {
        throw HttpError{400, {{"error", "defs must be a list of strings"}}};
      }
      std::string id;
      {
        std::lock_guard store(mutex_);
        id = "e" + std::to_string(next_execution_++);
        if (!entry->execution_id.empty()) executions_.erase(entry->execution_id);
        executions_[id] = m[1];
      }
      entry->execution.emplace(s.start_execution(std::move(defs)));
      entry->execution_id = id;
      entry->delivered = 0;
      try {
        entry->execution->run();
      } catch (const Error& e) {
        throw linguistic(e);
      }
      return {201, json{{"execId", id}}.dump()};
    }
    throw not_found("route " + path);
  } catch (const HttpError& e) {
    return {e.status, e.body.dump()};
  }
}

}  // namespace ace
