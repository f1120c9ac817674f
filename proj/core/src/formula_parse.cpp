// Copyright 2026 The eflab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

#include "eflab/formula.hpp"

namespace eflab {

namespace {

struct Token {
  enum class Kind {
    Ident,    // identifiers and the keywords exists/forall
    LParen, RParen, Dot, Comma,
    Tilde, EqualSign, Ampersand, Pipe, Bang, Arrow, DoubleArrow,
    End,
  };
  Kind kind;
  std::string text;
  std::size_t pos;
};

[[noreturn]] void fail(std::size_t pos, const std::string& message) {
  throw std::invalid_argument("formula parse error at offset " + std::to_string(pos) + ": " +
                              message);
}

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t pos = i;
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) {
        ++j;
      }
      out.push_back({Token::Kind::Ident, text.substr(i, j - i), pos});
      i = j;
      continue;
    }
    switch (c) {
      case '(': out.push_back({Token::Kind::LParen, "(", pos}); ++i; break;
      case ')': out.push_back({Token::Kind::RParen, ")", pos}); ++i; break;
      case '.': out.push_back({Token::Kind::Dot, ".", pos}); ++i; break;
      case ',': out.push_back({Token::Kind::Comma, ",", pos}); ++i; break;
      case '~': out.push_back({Token::Kind::Tilde, "~", pos}); ++i; break;
      case '=': out.push_back({Token::Kind::EqualSign, "=", pos}); ++i; break;
      case '&': out.push_back({Token::Kind::Ampersand, "&", pos}); ++i; break;
      case '|': out.push_back({Token::Kind::Pipe, "|", pos}); ++i; break;
      case '!': out.push_back({Token::Kind::Bang, "!", pos}); ++i; break;
      case '-':
        if (i + 1 < text.size() && text[i + 1] == '>') {
          out.push_back({Token::Kind::Arrow, "->", pos});
          i += 2;
        } else {
          fail(pos, "expected '->'");
        }
        break;
      case '<':
        if (i + 2 < text.size() && text[i + 1] == '-' && text[i + 2] == '>') {
          out.push_back({Token::Kind::DoubleArrow, "<->", pos});
          i += 3;
        } else {
          fail(pos, "expected '<->'");
        }
        break;
      default:
        fail(pos, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Token::Kind::End, "", text.size()});
  return out;
}

bool is_set_name(const std::string& ident) {
  return std::isupper(static_cast<unsigned char>(ident[0])) != 0;
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, Vocabulary vocab)
      : tokens_(std::move(tokens)), vocab_(vocab) {}

  FormulaPtr parse() {
    FormulaPtr f = parse_iff();
    if (peek().kind != Token::Kind::End) {
      fail(peek().pos, "trailing content '" + peek().text + "'");
    }
    return f;
  }

 private:
  const Token& peek() const { return tokens_[index_]; }
  const Token& advance() { return tokens_[index_++]; }

  bool accept(Token::Kind kind) {
    if (peek().kind == kind) {
      ++index_;
      return true;
    }
    return false;
  }

  void expect(Token::Kind kind, const char* what) {
    if (!accept(kind)) fail(peek().pos, std::string("expected ") + what);
  }

  // iff is the loosest binder; chains associate left.
  FormulaPtr parse_iff() {
    FormulaPtr f = parse_implies();
    while (peek().kind == Token::Kind::DoubleArrow) {
      advance();
      f = Formula::biconditional(std::move(f), parse_implies());
    }
    return f;
  }

  // -> associates right.
  FormulaPtr parse_implies() {
    FormulaPtr f = parse_or();
    if (peek().kind == Token::Kind::Arrow) {
      advance();
      return Formula::implication(std::move(f), parse_implies());
    }
    return f;
  }

  FormulaPtr parse_or() {
    FormulaPtr f = parse_and();
    while (peek().kind == Token::Kind::Pipe) {
      advance();
      f = Formula::disjunction(std::move(f), parse_and());
    }
    return f;
  }

  FormulaPtr parse_and() {
    FormulaPtr f = parse_unary();
    while (peek().kind == Token::Kind::Ampersand) {
      advance();
      f = Formula::conjunction(std::move(f), parse_unary());
    }
    return f;
  }

  FormulaPtr parse_unary() {
    if (accept(Token::Kind::Bang)) return Formula::negation(parse_unary());
    const Token& tok = peek();
    if (tok.kind == Token::Kind::Ident && (tok.text == "exists" || tok.text == "forall")) {
      return parse_quantifier(tok.text == "exists");
    }
    return parse_atom();
  }

  FormulaPtr parse_quantifier(bool is_exists) {
    advance();  // keyword
    const Token& var = peek();
    if (var.kind != Token::Kind::Ident) fail(var.pos, "expected a variable after quantifier");
    const std::string name = var.text;
    if (name == "exists" || name == "forall" || name == "R" || name == "P") {
      fail(var.pos, "'" + name + "' is reserved and cannot be quantified");
    }
    advance();
    expect(Token::Kind::Dot, "'.' after the quantified variable");
    const bool set_var = is_set_name(name);
    if (set_var) {
      set_scope_.push_back(name);
    } else {
      element_scope_.push_back(name);
    }
    // The body extends as far right as possible.
    FormulaPtr body = parse_iff();
    if (set_var) {
      set_scope_.pop_back();
      return is_exists ? Formula::exists_set(name, std::move(body))
                       : Formula::forall_set(name, std::move(body));
    }
    element_scope_.pop_back();
    return is_exists ? Formula::exists(name, std::move(body))
                     : Formula::forall(name, std::move(body));
  }

  FormulaPtr parse_atom() {
    if (accept(Token::Kind::LParen)) {
      FormulaPtr f = parse_iff();
      expect(Token::Kind::RParen, "')'");
      return f;
    }
    const Token& tok = peek();
    if (tok.kind != Token::Kind::Ident) fail(tok.pos, "expected an atom");

    if (tok.text == "P") {
      if (vocab_ != Vocabulary::RootedTree) {
        fail(tok.pos, "vocabulary error: P(x,y) needs the rooted_tree vocabulary");
      }
      advance();
      expect(Token::Kind::LParen, "'(' after P");
      Term parent = parse_term();
      expect(Token::Kind::Comma, "','");
      Term child = parse_term();
      expect(Token::Kind::RParen, "')'");
      return Formula::parent_child(std::move(parent), std::move(child));
    }

    if (tok.text != "R" && is_set_name(tok.text)) {
      const std::string set = tok.text;
      const std::size_t pos = tok.pos;
      advance();
      if (std::find(set_scope_.begin(), set_scope_.end(), set) == set_scope_.end()) {
        fail(pos, "scope error: unbound set variable '" + set + "'");
      }
      expect(Token::Kind::LParen, "'(' after a set variable");
      Term t = parse_term();
      expect(Token::Kind::RParen, "')'");
      return Formula::membership(set, std::move(t));
    }

    Term left = parse_term();
    if (accept(Token::Kind::Tilde)) {
      if (vocab_ != Vocabulary::Graph) {
        fail(tok.pos, "vocabulary error: ~ needs the graph vocabulary");
      }
      return Formula::adjacent(std::move(left), parse_term());
    }
    if (accept(Token::Kind::EqualSign)) {
      return Formula::equal(std::move(left), parse_term());
    }
    fail(peek().pos, "expected '~' or '=' after a term");
  }

  Term parse_term() {
    const Token& tok = peek();
    if (tok.kind != Token::Kind::Ident) fail(tok.pos, "expected a term");
    if (tok.text == "R") {
      if (vocab_ != Vocabulary::RootedTree) {
        fail(tok.pos, "vocabulary error: R needs the rooted_tree vocabulary");
      }
      advance();
      return Term::root();
    }
    if (is_set_name(tok.text)) {
      fail(tok.pos, "set variable '" + tok.text + "' used as an element term");
    }
    if (tok.text == "exists" || tok.text == "forall") {
      fail(tok.pos, "keyword '" + tok.text + "' used as a term");
    }
    if (std::find(element_scope_.begin(), element_scope_.end(), tok.text) ==
        element_scope_.end()) {
      fail(tok.pos, "scope error: unbound element variable '" + tok.text + "'");
    }
    advance();
    return Term::variable(tok.text);
  }

  std::vector<Token> tokens_;
  Vocabulary vocab_;
  std::size_t index_ = 0;
  std::vector<std::string> element_scope_;
  std::vector<std::string> set_scope_;
};

}  // namespace

FormulaPtr parse_formula(const std::string& text, Vocabulary vocab) {
  Parser parser(lex(text), vocab);
  FormulaPtr f = parser.parse();
  validate_sentence(*f, vocab);
  return f;
}

}  // namespace eflab
