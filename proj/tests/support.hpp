#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "ace/lexicon.hpp"
#include "ace/session.hpp"

namespace test {

inline std::string samples(const std::string& file) { return std::string(ACE_SAMPLES_DIR) + "/" + file; }

inline std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline const ace::Lexicon& lexicon() {
  static const ace::Lexicon lex = ace::Lexicon::load(samples("simplemat.lex"));
  return lex;
}

// Fresh session over the sample vocabulary with every sentence accepted.
inline ace::Session session_of(std::initializer_list<const char*> sentences) {
  ace::Session s(lexicon());
  for (const auto* x : sentences) {
    s.submit(x);
    s.accept();
  }
  return s;
}

}  // namespace test
