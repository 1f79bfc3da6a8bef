#include "ace/tokenizer.hpp"

#include <cctype>

namespace ace {

namespace {

bool is_word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '\'';
}

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

bool is_terminator(char c) { return c == '.' || c == '?'; }

}  // namespace

std::vector<Token> tokenize(std::string_view text, const Lexicon& lexicon) {
  std::vector<Token> raw;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (is_digit(c)) {
      while (i < text.size() && is_digit(text[i])) ++i;
      if (i + 1 < text.size() && text[i] == '.' && is_digit(text[i + 1])) {
        ++i;
        while (i < text.size() && is_digit(text[i])) ++i;
      }
      if (i < text.size() && is_word_char(text[i])) {
        // Alphanumeric names such as "s1" start with a letter; "1a" is not a numeral.
        while (i < text.size() && is_word_char(text[i])) ++i;
        raw.push_back({std::string(text.substr(start, i - start)), {start, i}, TokenKind::Word});
      } else {
        raw.push_back({std::string(text.substr(start, i - start)), {start, i}, TokenKind::Numeral});
      }
    } else if (is_word_char(c)) {
      while (i < text.size() && is_word_char(text[i])) ++i;
      raw.push_back({std::string(text.substr(start, i - start)), {start, i}, TokenKind::Word});
    } else if (is_terminator(c) || c == ',') {
      ++i;
      raw.push_back({std::string(1, c), {start, i}, TokenKind::Punctuation});
    } else {
      throw Error(ErrorCode::SyntaxError, std::string("unexpected character '") + c + "'", Span{start, start + 1});
    }
  }

  if (raw.empty() || raw.back().kind != TokenKind::Punctuation || !is_terminator(raw.back().surface[0])) {
    Span s = raw.empty() ? Span{0, text.size()} : raw.back().span;
    throw Error(ErrorCode::UnterminatedSentence, "a sentence must end with '.' or '?'", s);
  }
  for (std::size_t k = 0; k + 1 < raw.size(); ++k)
    if (raw[k].kind == TokenKind::Punctuation && is_terminator(raw[k].surface[0]))
      throw Error(ErrorCode::SyntaxError, "one sentence expected; split the text at '" + raw[k].surface + "'",
                  raw[k].span);

  std::vector<Token> out;
  const std::size_t max_words = lexicon.max_surface_words();
  for (std::size_t k = 0; k < raw.size();) {
    std::size_t merged = 1;
    if (raw[k].kind == TokenKind::Word) {
      for (std::size_t n = std::min(max_words, raw.size() - k); n >= 2; --n) {
        bool all_words = true;
        std::string joined;
        for (std::size_t j = k; j < k + n; ++j) {
          if (raw[j].kind != TokenKind::Word) {
            all_words = false;
            break;
          }
          if (j > k) joined += ' ';
          joined += raw[j].surface;
        }
        if (all_words && !lexicon.lookup(joined).empty()) {
          merged = n;
          break;
        }
      }
    }
    if (merged == 1) {
      out.push_back(raw[k]);
    } else {
      Span span{raw[k].span.begin, raw[k + merged - 1].span.end};
      std::string surface;
      for (std::size_t j = k; j < k + merged; ++j) {
        if (j > k) surface += ' ';
        surface += raw[j].surface;
      }
      out.push_back({surface, span, TokenKind::Word});
    }
    k += merged;
  }
  return out;
}

std::vector<std::string> split_sentences(std::string_view text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (!is_terminator(c)) continue;
    if (c == '.' && i > 0 && i + 1 < text.size() && is_digit(text[i - 1]) && is_digit(text[i + 1])) continue;
    auto piece = text.substr(start, i + 1 - start);
    auto b = piece.find_first_not_of(" \t\r\n");
    out.emplace_back(piece.substr(b));
    start = i + 1;
  }
  auto rest = text.substr(start);
  if (rest.find_first_not_of(" \t\r\n") != std::string_view::npos)
    throw Error(ErrorCode::UnterminatedSentence, "a sentence must end with '.' or '?'", Span{start, text.size()});
  return out;
}

}  // namespace ace
