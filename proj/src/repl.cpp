#include "ace/repl.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "ace/tokenizer.hpp"

namespace ace {

int exit_code(ErrorCode code) {
  switch (error_class(code)) {
    case ErrorClass::Lexicon:
    case ErrorClass::Parse: return 1;
    case ErrorClass::Resolution: return 2;
    case ErrorClass::Translation: return 3;
    default: return 4;
  }
}

namespace {

bool is_question(std::string_view s) {
  auto e = s.find_last_not_of(" \t\r\n");
  return e != std::string_view::npos && s[e] == '?';
}

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

void report_error(std::ostream& err, const Error& e) {
  err << "error[" << code_name(e.code()) << "]: " << e.what() << "\n";
}

std::string emit(const Session& s, const std::string& what) {
  if (what == "drs") return s.drs_text();
  if (what == "clauses") return s.clauses_text();
  std::string out;
  for (const auto& p : s.paraphrases()) out += p + "\n";
  return out;
}

}  // namespace

int run_batch(Session& session, std::string_view text, const BatchOptions& options, std::istream& in,
              std::ostream& out, std::ostream& err) {
  for (const auto& sentence : split_sentences(text)) {
    try {
      if (is_question(sentence)) {
        auto outcome = session.ask(sentence);
        for (const auto& a : outcome.answers.next(outcome.answers.size())) out << a.text << "\n";
        if (outcome.diagnostic) err << "note[" << code_name(outcome.diagnostic->code) << "]: " << outcome.diagnostic->message << "\n";
        continue;
      }
      session.submit(sentence);
      session.accept();
    } catch (const Error& e) {
      err << sentence << "\n";
      report_error(err, e);
      return exit_code(e.code());
    }
  }
  if (options.report) {
    std::ofstream r(*options.report);
    r << emit(session, "paraphrase");
  }
  if (!options.emit.empty()) out << emit(session, options.emit);
  int status = 0;
  for (const auto& u : session.translation().untranslated) {
    err << "untranslated (sentence " << u.sentence + 1 << ")[" << code_name(u.diagnostic.code)
        << "]: " << u.diagnostic.message << "\n";
    status = 3;
  }
  if (options.defs) {
    try {
      auto ex = session.start_execution(load_definitions(*options.defs, session.lexicon()));
      run_interactive(ex, in, out);
      for (const auto& d : ex.unused_definitions()) err << "unused definition: " << d << "\n";
    } catch (const Error& e) {
      report_error(err, e);
      return status ? status : exit_code(e.code());
    }
  }
  return status;
}

void run_interactive(Execution& execution, std::istream& in, std::ostream& out) {
  ConsoleOracle oracle(in, out);
  std::size_t shown = 0;
  std::optional<std::size_t> echoed;  // the user line of the last typed reply is already on screen
  execution.run();
  for (;;) {
    const auto& t = execution.transcript();
    for (; shown < t.size(); ++shown)
      if (shown != echoed) out << t[shown].str() << "\n";
    const auto& req = execution.pending();
    if (!req) return;
    auto before = t.size();
    for (;;) {
      auto text = oracle.answer(*req);
      if (!text) throw Error(ErrorCode::OracleExhausted, "no answer for: " + req->prompt);
      try {
        execution.reply(*text);
        break;
      } catch (const Error& e) {
        report_error(out, e);
      }
    }
    echoed = before;
  }
}

int run_repl(Session& session, const Lexicon& base, std::istream& in, std::ostream& out) {
  std::optional<std::string> retry;  // sentence that failed on unknown words
  auto submit = [&](const std::string& text) {
    try {
      const auto& a = session.submit(text);
      retry.reset();
      out << a.paraphrase.text << "\naccept? [y/n]\n";
    } catch (const Error& e) {
      report_error(out, e);
      if (e.code() == ErrorCode::UnknownWords) {
        retry = text;
        out << "add with: lex add <class>|<lemma>|<features>|<forms>|<synonyms>|<abbreviations>\n";
      }
    }
  };
  auto ask = [&](const std::string& q) {
    try {
      auto outcome = session.ask(q);
      auto& answers = outcome.answers;
      for (;;) {
        for (const auto& a : answers.next()) out << a.text << "\n";
        if (answers.exhausted()) break;
        out << "more? [y/n]\n";
        std::string reply;
        if (!std::getline(in, reply) || trim(reply) != "y") break;
      }
      if (outcome.diagnostic) out << "note[" << code_name(outcome.diagnostic->code) << "]: " << outcome.diagnostic->message << "\n";
    } catch (const Error& e) {
      report_error(out, e);
    }
  };

  std::string line;
  while (out << "> " << std::flush, std::getline(in, line)) {
    const std::string cmd = trim(line);
    if (cmd.empty()) continue;
    std::istringstream words(cmd);
    std::string head, rest;
    words >> head;
    std::getline(words, rest);
    rest = trim(rest);
    try {
      if (head == "quit" || head == "exit") {
        break;
      } else if (head == "y" || head == "accept") {
        session.accept();
        out << "accepted\n";
      } else if (head == "n" || head == "reject") {
        session.reject();
        out << "rejected\n";
      } else if (head == "ask") {
        ask(rest);
      } else if (head == "show") {
        if (rest != "drs" && rest != "clauses" && rest != "paraphrase")
          out << "show drs|clauses|paraphrase\n";
        else
          out << emit(session, rest);
      } else if (head == "lex") {
        std::istringstream args(rest);
        std::string sub, arg;
        args >> sub;
        std::getline(args, arg);
        arg = trim(arg);
        if (sub == "add") {
          session.add_word(Lexicon::parse_record(arg));
          out << "added\n";
          if (retry) submit(*retry);
        } else if (sub == "rm") {
          out << (session.remove_word(arg) ? "removed\n" : "no such word\n");
        } else if (sub == "list") {
          for (const auto& e : session.lexicon().content_words()) out << Lexicon::format_record(*e) << "\n";
        } else {
          out << "lex add|list|rm\n";
        }
      } else if (head == "execute") {
        std::vector<Assertion> defs;
        if (rest.rfind("--defs", 0) == 0) defs = load_definitions(std::filesystem::path(trim(rest.substr(6))), session.lexicon());
        auto ex = session.start_execution(std::move(defs));
        run_interactive(ex, in, out);
        for (const auto& d : ex.unused_definitions()) out << "unused definition: " << d << "\n";
      } else if (head == "save") {
        session.save(rest);
        out << "saved\n";
      } else if (head == "load") {
        session = Session::load(rest, base);
        out << "loaded " << session.sentences().size() << " sentences\n";
      } else if (head == "help") {
        out << "sentences end in '.', questions in '?'\n"
               "accept|y, reject|n, ask <question>, show drs|clauses|paraphrase,\n"
               "lex add <record>|list|rm <lemma>, execute [--defs <file>], load|save <file>, quit\n";
      } else if (is_question(cmd)) {
        ask(cmd);
      } else {
        submit(cmd);
      }
    } catch (const StateError& e) {
      out << "error: " << e.what() << "\n";
    } catch (const Error& e) {
      report_error(out, e);
    }
  }
  return 0;
}

}  // namespace ace
