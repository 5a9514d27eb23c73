/*
 * Copyright 2026 The ptacl Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "ptacl/parser.hpp"

#include <array>
#include <cctype>
#include <optional>
#include <vector>

namespace ptacl {

SourceError::SourceError(Kind kind, int line, int column, std::string message)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) +
                         ": " + message),
      kind_(kind),
      line_(line),
      column_(column),
      message_(std::move(message)) {}

namespace {

enum class Tok : std::uint8_t {
  Ident,
  String,
  LParen,
  RParen,
  LBrace,
  RBrace,
  Comma,
  Colon,
  ColonColon,
  End,
};

struct Token {
  Tok kind;
  std::string text;  // Ident: name; String: decoded value
  int line;
  int column;
};

constexpr std::array<std::string_view, 12> kKeywords = {
    "Tatom", "Tnot", "Topt", "Tand", "Patom", "Pnot",
    "Pdbd",  "Pand", "Ptar", "One",  "Zero",  "Bot"};

bool is_keyword(std::string_view s) {
  for (auto k : kKeywords)
    if (k == s) return true;
  return false;
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_trivia();
    int line = line_, col = col_;
    if (pos_ >= text_.size()) return {Tok::End, "", line, col};
    char c = text_[pos_];
    if (c == '(') return advance(), Token{Tok::LParen, "(", line, col};
    if (c == ')') return advance(), Token{Tok::RParen, ")", line, col};
    if (c == '{') return advance(), Token{Tok::LBrace, "{", line, col};
    if (c == '}') return advance(), Token{Tok::RBrace, "}", line, col};
    if (c == ',') return advance(), Token{Tok::Comma, ",", line, col};
    if (c == ':') {
      advance();
      if (pos_ < text_.size() && text_[pos_] == ':') {
        advance();
        return {Tok::ColonColon, "::", line, col};
      }
      return {Tok::Colon, ":", line, col};
    }
    if (c == '"') return lex_string(line, col);
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_')
      return lex_ident(line, col);
    throw SourceError(SourceError::Kind::Lexical, line, col,
                      std::string("unexpected character '") + c + "'");
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_trivia() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  Token lex_string(int line, int col) {
    advance();  // opening quote
    std::string out;
    while (true) {
      if (pos_ >= text_.size() || text_[pos_] == '\n')
        throw SourceError(SourceError::Kind::Lexical, line, col,
                          "unterminated string literal");
      char c = text_[pos_];
      if (c == '"') {
        advance();
        return {Tok::String, std::move(out), line, col};
      }
      if (c == '\\') {
        advance();
        if (pos_ >= text_.size())
          throw SourceError(SourceError::Kind::Lexical, line, col,
                            "unterminated string literal");
        char esc = text_[pos_];
        if (esc != '"' && esc != '\\')
          throw SourceError(SourceError::Kind::Lexical, line_, col_,
                            std::string("unknown escape '\\") + esc + "'");
        out.push_back(esc);
        advance();
      } else {
        out.push_back(c);
        advance();
      }
    }
  }

  Token lex_ident(int line, int col) {
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == '_'))
      advance();
    return {Tok::Ident, std::string(text_.substr(start, pos_ - start)), line,
            col};
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lexer_(text) { shift(); }

  PolicyEnv parse_document() {
    PolicyEnv env;
    while (cur_.kind != Tok::End) {
      Token name = expect(Tok::Ident, "definition name");
      if (is_keyword(name.text))
        fail(name, "'" + name.text + "' is a reserved word");
      if (cur_.kind == Tok::ColonColon) {
        shift();
        if (env.find_target(name.text))
          throw SourceError(SourceError::Kind::DuplicateDefinition, name.line,
                            name.column,
                            "duplicate target definition '" + name.text + "'");
        defining_ = name.text;
        defining_target_ = true;
        self_ref_.reset();
        TargetPtr body = t_operand(env);
        if (self_ref_)
          throw SourceError(SourceError::Kind::CyclicDefinition,
                            self_ref_->line, self_ref_->column,
                            "target '" + name.text + "' refers to itself");
        env.define_target(name.text, std::move(body));
      } else if (cur_.kind == Tok::Colon) {
        shift();
        if (env.find_policy(name.text))
          throw SourceError(SourceError::Kind::DuplicateDefinition, name.line,
                            name.column,
                            "duplicate policy definition '" + name.text + "'");
        defining_ = name.text;
        defining_target_ = false;
        self_ref_.reset();
        PolicyPtr body = p_expr(env);
        if (self_ref_)
          throw SourceError(SourceError::Kind::CyclicDefinition,
                            self_ref_->line, self_ref_->column,
                            "policy '" + name.text + "' refers to itself");
        env.define_policy(name.text, std::move(body));
      } else {
        fail(cur_, "expected ':' or '::' after '" + name.text + "'");
      }
    }
    return env;
  }

  Request parse_request() {
    expect(Tok::LBrace, "'{'");
    std::vector<AttrPair> pairs;
    if (cur_.kind != Tok::RBrace) {
      pairs.push_back(pair_literal());
      while (cur_.kind == Tok::Comma) {
        shift();
        pairs.push_back(pair_literal());
      }
    }
    expect(Tok::RBrace, "'}'");
    expect(Tok::End, "end of input");
    return Request(std::move(pairs));
  }

 private:
  void shift() { cur_ = lexer_.next(); }

  [[noreturn]] void fail(const Token& at, std::string message) {
    throw SourceError(SourceError::Kind::Syntax, at.line, at.column,
                      std::move(message));
  }

  Token expect(Tok kind, std::string_view what) {
    if (cur_.kind != kind)
      fail(cur_, "expected " + std::string(what) + ", got '" + cur_.text + "'");
    Token t = cur_;
    shift();
    return t;
  }

  AttrPair pair_literal() {
    expect(Tok::LParen, "'('");
    Token name = expect(Tok::String, "attribute name string");
    expect(Tok::Comma, "','");
    Token value = expect(Tok::String, "attribute value string");
    expect(Tok::RParen, "')'");
    return {std::move(name.text), std::move(value.text)};
  }

  // A reference to the name being defined is noted here and reported as
  // CyclicDefinition only after the body parses; syntax errors win otherwise.
  TargetPtr target_ref(const PolicyEnv& env, const Token& id) {
    if (defining_target_ && id.text == defining_) {
      if (!self_ref_) self_ref_ = id;
      return Target::ref(id.text);
    }
    if (!env.find_target(id.text))
      throw SourceError(SourceError::Kind::UnknownIdentifier, id.line,
                        id.column, "unknown target '" + id.text + "'");
    return Target::ref(id.text);
  }

  PolicyPtr policy_ref(const PolicyEnv& env, const Token& id) {
    if (!defining_target_ && id.text == defining_) {
      if (!self_ref_) self_ref_ = id;
      return Policy::ref(id.text);
    }
    if (!env.find_policy(id.text))
      throw SourceError(SourceError::Kind::UnknownIdentifier, id.line,
                        id.column, "unknown policy '" + id.text + "'");
    return Policy::ref(id.text);
  }

  TargetPtr t_operand(const PolicyEnv& env) {
    if (cur_.kind == Tok::Ident && !is_keyword(cur_.text)) {
      Token id = cur_;
      shift();
      return target_ref(env, id);
    }
    expect(Tok::LParen, "target operand");
    TargetPtr t = t_expr(env);
    expect(Tok::RParen, "')'");
    return t;
  }

  TargetPtr t_expr(const PolicyEnv& env) {
    Token kw = expect(Tok::Ident, "target constructor");
    if (kw.text == "Tatom") {
      Token name = expect(Tok::String, "attribute name string");
      Token value = expect(Tok::String, "attribute value string");
      return Target::atom(std::move(name.text), std::move(value.text));
    }
    if (kw.text == "Tnot") return Target::make_not(t_operand(env));
    if (kw.text == "Topt") return Target::make_opt(t_operand(env));
    if (kw.text == "Tand") {
      TargetPtr l = t_operand(env);
      return Target::make_and(std::move(l), t_operand(env));
    }
    fail(kw, "expected target constructor, got '" + kw.text + "'");
  }

  PolicyPtr p_operand(const PolicyEnv& env) {
    if (cur_.kind == Tok::Ident && !is_keyword(cur_.text)) {
      Token id = cur_;
      shift();
      return policy_ref(env, id);
    }
    expect(Tok::LParen, "policy operand");
    PolicyPtr p = p_expr(env);
    expect(Tok::RParen, "')'");
    return p;
  }

  PolicyPtr p_expr(const PolicyEnv& env) {
    Token kw = expect(Tok::Ident, "policy constructor");
    if (kw.text == "Patom") {
      Token dec = expect(Tok::Ident, "decision");
      if (dec.text == "One") return Policy::atom(Decision::Allow);
      if (dec.text == "Zero") return Policy::atom(Decision::Deny);
      if (dec.text == "Bot") return Policy::atom(Decision::NotApp);
      fail(dec, "expected One, Zero or Bot, got '" + dec.text + "'");
    }
    if (kw.text == "Pnot") return Policy::make_not(p_operand(env));
    if (kw.text == "Pdbd") return Policy::make_dbd(p_operand(env));
    if (kw.text == "Pand") {
      PolicyPtr l = p_operand(env);
      return Policy::make_and(std::move(l), p_operand(env));
    }
    if (kw.text == "Ptar") {
      TargetPtr t = t_operand(env);
      return Policy::make_tar(std::move(t), p_operand(env));
    }
    fail(kw, "expected policy constructor, got '" + kw.text + "'");
  }

  Lexer lexer_;
  Token cur_{Tok::End, "", 0, 0};
  std::string defining_;
  bool defining_target_ = false;
  std::optional<Token> self_ref_;
};

std::string escape_string(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string t_operand_str(const TargetPtr& t);
std::string p_operand_str(const PolicyPtr& p);

std::string t_expr_str(const TargetPtr& t) {
  switch (t->kind()) {
    case Target::Kind::Atom:
      return "Tatom " + escape_string(t->attr_name()) + " " +
             escape_string(t->attr_value());
    case Target::Kind::Not:
      return "Tnot " + t_operand_str(t->child());
    case Target::Kind::Opt:
      return "Topt " + t_operand_str(t->child());
    case Target::Kind::And:
      return "Tand " + t_operand_str(t->left()) + " " +
             t_operand_str(t->right());
    case Target::Kind::Ref:
      break;
  }
  throw std::logic_error("t_expr_str: ref is not an expression");
}

std::string t_operand_str(const TargetPtr& t) {
  if (t->kind() == Target::Kind::Ref) return t->ref_id();
  return "(" + t_expr_str(t) + ")";
}

std::string p_expr_str(const PolicyPtr& p) {
  switch (p->kind()) {
    case Policy::Kind::Atom:
      switch (p->decision()) {
        case Decision::Allow:
          return "Patom One";
        case Decision::Deny:
          return "Patom Zero";
        case Decision::NotApp:
          return "Patom Bot";
      }
      throw std::logic_error("p_expr_str: bad decision");
    case Policy::Kind::Not:
      return "Pnot " + p_operand_str(p->child());
    case Policy::Kind::Dbd:
      return "Pdbd " + p_operand_str(p->child());
    case Policy::Kind::And:
      return "Pand " + p_operand_str(p->left()) + " " +
             p_operand_str(p->right());
    case Policy::Kind::Tar:
      return "Ptar " + t_operand_str(p->target()) + " " +
             p_operand_str(p->child());
    case Policy::Kind::Ref:
      break;
  }
  throw std::logic_error("p_expr_str: ref is not an expression");
}

std::string p_operand_str(const PolicyPtr& p) {
  if (p->kind() == Policy::Kind::Ref) return p->ref_id();
  return "(" + p_expr_str(p) + ")";
}

}  // namespace

PolicyEnv parse_document(std::string_view text) {
  return Parser(text).parse_document();
}

Request parse_request(std::string_view text) {
  return Parser(text).parse_request();
}

std::string render_policy(const PolicyPtr& p) {
  if (p->kind() == Policy::Kind::Ref) return p->ref_id();
  return p_expr_str(p);
}

std::string render_target(const TargetPtr& t) {
  if (t->kind() == Target::Kind::Ref) return t->ref_id();
  return t_expr_str(t);
}

std::string render_request(const Request& q) {
  std::string out = "{";
  bool first = true;
  for (const auto& pair : q.pairs()) {
    if (!first) out += ", ";
    first = false;
    out += "(" + escape_string(pair.name) + "," + escape_string(pair.value) +
           ")";
  }
  out += "}";
  return out;
}

std::string render_decisions(DecisionSet s) {
  std::string out = "{";
  bool first = true;
  for (Decision d : {Decision::Allow, Decision::Deny, Decision::NotApp}) {
    if (!s.contains(d)) continue;
    if (!first) out += ", ";
    first = false;
    out += to_string(d);
  }
  out += "}";
  return out;
}

std::string render_document(const PolicyEnv& env) {
  std::string out;
  for (const auto& def : env.definitions()) {
    if (def.is_target) {
      out += def.id + " :: " + t_operand_str(*env.find_target(def.id)) + "\n";
    } else {
      out += def.id + " : " + p_expr_str(*env.find_policy(def.id)) + "\n";
    }
  }
  return out;
}

}  // namespace ptacl
