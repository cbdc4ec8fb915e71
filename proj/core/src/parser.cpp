#include "doxa/parser.hpp"

#include <cctype>
#include <vector>

namespace doxa {

namespace {

enum class Tok { Word, Not, And, Or, Imp, Iff, LParen, RParen, LBrace, RBrace, Comma, End };

struct Token {
  Tok kind;
  std::string text;  // Tok::Word only
  int pos;
};

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    int pos = static_cast<int>(i);
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
        ++j;
      out.push_back({Tok::Word, std::string(text.substr(i, j - i)), pos});
      i = j;
      continue;
    }
    switch (c) {
      case '~': out.push_back({Tok::Not, "", pos}); ++i; break;
      case '&': out.push_back({Tok::And, "", pos}); ++i; break;
      case '|': out.push_back({Tok::Or, "", pos}); ++i; break;
      case '(': out.push_back({Tok::LParen, "", pos}); ++i; break;
      case ')': out.push_back({Tok::RParen, "", pos}); ++i; break;
      case '{': out.push_back({Tok::LBrace, "", pos}); ++i; break;
      case '}': out.push_back({Tok::RBrace, "", pos}); ++i; break;
      case ',': out.push_back({Tok::Comma, "", pos}); ++i; break;
      case '-':
        if (i + 1 < text.size() && text[i + 1] == '>') {
          out.push_back({Tok::Imp, "", pos});
          i += 2;
        } else {
          throw ParseError("stray '-' (expected '->')", pos);
        }
        break;
      case '<':
        if (i + 2 < text.size() && text[i + 1] == '-' && text[i + 2] == '>') {
          out.push_back({Tok::Iff, "", pos});
          i += 3;
        } else {
          throw ParseError("stray '<' (expected '<->')", pos);
        }
        break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", pos);
    }
  }
  out.push_back({Tok::End, "", static_cast<int>(text.size())});
  return out;
}

bool is_ident(const std::string& word) {
  if (word.empty() || !std::islower(static_cast<unsigned char>(word[0]))) return false;
  for (char c : word)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

bool is_modal_word(const std::string& w) {
  return w == "B" || w == "dB" || w == "D" || w == "dD" || w == "DC" || w == "dDC" ||
         w == "DB" || w == "dDB";
}

bool is_reserved(const std::string& w) {
  return w == "top" || w == "bot" || w == "Inc" || is_modal_word(w);
}

class Parser {
public:
  explicit Parser(std::string_view text) : toks_(lex(text)) {}

  FormulaPtr run() {
    FormulaPtr f = parse_iff();
    if (peek().kind != Tok::End) throw ParseError("trailing input after formula", peek().pos);
    return f;
  }

private:
  const Token& peek() const { return toks_[idx_]; }
  Token take() { return toks_[idx_++]; }

  void expect(Tok kind, const char* what) {
    if (peek().kind != kind) throw ParseError(std::string("expected ") + what, peek().pos);
    ++idx_;
  }

  FormulaPtr parse_iff() {
    FormulaPtr f = parse_imp();
    while (peek().kind == Tok::Iff) {
      take();
      f = Formula::Iff(f, parse_imp());
    }
    return f;
  }

  FormulaPtr parse_imp() {
    FormulaPtr f = parse_or();
    if (peek().kind == Tok::Imp) {
      take();
      return Formula::Imp(f, parse_imp());
    }
    return f;
  }

  FormulaPtr parse_or() {
    FormulaPtr f = parse_and();
    while (peek().kind == Tok::Or) {
      take();
      f = Formula::Or(f, parse_and());
    }
    return f;
  }

  FormulaPtr parse_and() {
    FormulaPtr f = parse_unary();
    while (peek().kind == Tok::And) {
      take();
      f = Formula::And(f, parse_unary());
    }
    return f;
  }

  std::vector<std::string> parse_group() {
    expect(Tok::LBrace, "'{'");
    std::vector<std::string> agents;
    while (true) {
      if (peek().kind != Tok::Word || !is_ident(peek().text))
        throw ParseError("expected an agent name", peek().pos);
      agents.push_back(take().text);
      if (peek().kind == Tok::Comma) {
        take();
        continue;
      }
      break;
    }
    expect(Tok::RBrace, "'}'");
    return agents;
  }

  FormulaPtr parse_unary() {
    if (peek().kind == Tok::Not) {
      take();
      return Formula::Not(parse_unary());
    }
    if (peek().kind == Tok::Word && is_modal_word(peek().text)) {
      Token op = take();
      std::vector<std::string> group = parse_group();
      if ((op.text == "B" || op.text == "dB") && group.size() != 1)
        throw ParseError("individual belief takes exactly one agent", op.pos);
      FormulaPtr body = parse_unary();
      bool dual = op.text[0] == 'd';
      if (dual) body = Formula::Not(body);
      FormulaPtr node;
      if (op.text == "B" || op.text == "dB") node = Formula::B(group[0], body);
      else if (op.text == "D" || op.text == "dD") node = Formula::D(group, body);
      else if (op.text == "DC" || op.text == "dDC") node = Formula::DC(group, body);
      else node = Formula::DB(group, body);
      return dual ? Formula::Not(node) : node;
    }
    return parse_atomexpr();
  }

  FormulaPtr parse_atomexpr() {
    const Token& t = peek();
    if (t.kind == Tok::LParen) {
      take();
      FormulaPtr f = parse_iff();
      expect(Tok::RParen, "')'");
      return f;
    }
    if (t.kind == Tok::Word) {
      if (t.text == "top") {
        take();
        return Formula::Top();
      }
      if (t.text == "bot") {
        take();
        return Formula::Bot();
      }
      if (t.text == "Inc") {
        take();
        return Formula::Inc(parse_group());
      }
      if (!is_reserved(t.text) && is_ident(t.text)) return Formula::Atom(take().text);
    }
    throw ParseError("expected a formula", t.pos);
  }

  std::vector<Token> toks_;
  std::size_t idx_ = 0;
};

}  // namespace

FormulaPtr parse_formula(std::string_view text) { return Parser(text).run(); }

}  // namespace doxa
