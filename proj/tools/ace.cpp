#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "httplib.h"

#include "ace/repl.hpp"
#include "ace/service.hpp"

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ace::Error(ace::ErrorCode::SessionFormat, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Attempto Controlled English workbench"};
  app.require_subcommand(0, 1);

  std::string lexicon_path, session_path, batch_path, defs_path, report_path, emit;
  app.add_option("--lexicon", lexicon_path, "lexicon file")->check(CLI::ExistingFile);
  app.add_option("--session", session_path, "session file, loaded if present and saved on exit");
  app.add_option("--batch", batch_path, "specification to accept non-interactively")->check(CLI::ExistingFile);
  app.add_option("--defs", defs_path, "definition file for execution")->check(CLI::ExistingFile);
  app.add_option("--emit", emit, "artifact to print after a batch run")
      ->check(CLI::IsMember({"drs", "clauses", "paraphrase"}));
  app.add_option("--report", report_path, "file receiving the batch paraphrases");

  auto* lex = app.add_subcommand("lex", "edit the lexicon of --session, else of --lexicon");
  lex->require_subcommand(1);
  std::string record, lemma;
  lex->add_subcommand("add", "add a content word")->add_option("record", record, "class|lemma|features|forms|synonyms|abbreviations")->required();
  lex->add_subcommand("rm", "remove a content word")->add_option("lemma", lemma)->required();
  lex->add_subcommand("list", "list content words");

  auto* ask = app.add_subcommand("ask", "answer a question against the batch file or session");
  std::string question;
  bool all = false;
  ask->add_option("question", question)->required();
  ask->add_flag("--all", all, "print every answer instead of one at a time");

  auto* execute = app.add_subcommand("execute", "simulate the batch file or session");

  auto* serve = app.add_subcommand("serve", "HTTP service");
  std::string host = "127.0.0.1";
  int port = 8080;
  serve->add_option("--host", host);
  serve->add_option("--port", port);

  CLI11_PARSE(app, argc, argv);

  try {
    ace::Lexicon base = lexicon_path.empty() ? ace::Lexicon{} : ace::Lexicon::load(lexicon_path);
    ace::Session session(base);
    if (!session_path.empty() && std::filesystem::exists(session_path)) session = ace::Session::load(session_path, base);

    auto save_session = [&] {
      if (!session_path.empty()) session.save(session_path);
    };

    if (*lex) {
      if (lex->got_subcommand("list")) {
        for (const auto& e : session.lexicon().content_words()) std::cout << ace::Lexicon::format_record(*e) << "\n";
        return 0;
      }
      if (lex->got_subcommand("add"))
        session.add_word(ace::Lexicon::parse_record(record));
      else if (!session.remove_word(lemma)) {
        std::cerr << "no such word: " << lemma << "\n";
        return 4;
      }
      if (!session_path.empty())
        save_session();
      else if (!lexicon_path.empty())
        session.lexicon().save(lexicon_path);
      else
        std::cerr << "nothing to save: give --session or --lexicon\n";
      return 0;
    }

    if (*serve) {
      ace::Api api(base);
      httplib::Server server;
      ace::mount(server, api);
      std::cout << "listening on http://" << host << ":" << port << "\n" << std::flush;
      return server.listen(host, port) ? 0 : 4;
    }

    int status = 0;
    if (!batch_path.empty()) {
      ace::BatchOptions opts;
      opts.emit = emit;
      if (!report_path.empty()) opts.report = report_path;
      if (!defs_path.empty() && !*execute) opts.defs = defs_path;
      status = ace::run_batch(session, slurp(batch_path), opts, std::cin, std::cout, std::cerr);
      if (status == 1 || status == 2) return status;
    }

    if (*ask) {
      auto outcome = session.ask(question);
      auto& answers = outcome.answers;
      for (;;) {
        for (const auto& a : answers.next(all ? answers.size() : 1)) std::cout << a.text << "\n";
        if (answers.exhausted()) break;
        std::cout << "more? [y/n]\n";
        std::string reply;
        if (!std::getline(std::cin, reply) || reply != "y") break;
      }
      if (outcome.diagnostic) std::cerr << "note[" << ace::code_name(outcome.diagnostic->code) << "]: " << outcome.diagnostic->message << "\n";
    } else if (*execute) {
      std::vector<ace::Assertion> defs;
      if (!defs_path.empty()) defs = ace::load_definitions(std::filesystem::path(defs_path), session.lexicon());
      auto ex = session.start_execution(std::move(defs));
      ace::run_interactive(ex, std::cin, std::cout);
      for (const auto& d : ex.unused_definitions()) std::cerr << "unused definition: " << d << "\n";
    } else if (batch_path.empty()) {
      ace::run_repl(session, base, std::cin, std::cout);
    }
    save_session();
    return status;
  } catch (const ace::Error& e) {
    std::cerr << "error[" << ace::code_name(e.code()) << "]: " << e.what() << "\n";
    return ace::exit_code(e.code());
  }
}
