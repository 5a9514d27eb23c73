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

#include "ptacl/certificate.hpp"

#include <cctype>
#include <charconv>

#include "ptacl/parser.hpp"
#include "ptacl/resistance.hpp"

namespace ptacl {

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::uint64_t document_digest(const PolicyEnv& env) {
  return fnv1a64(render_document(env));
}

Certificate make_certificate(const PolicyEnv& env,
                             const std::string& policy_id, ProofTree proof) {
  return Certificate{policy_id, document_digest(env),
                     std::string(kToolVersion), std::move(proof)};
}

namespace {

std::string hex16(std::uint64_t v) {
  static const char digits[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[v & 0xf];
    v >>= 4;
  }
  return out;
}

void encode_node(const ProofTree& t, int depth, std::string& out) {
  out.append(static_cast<std::size_t>(depth) * 2, ' ');
  out += "(";
  out += to_token(t.conclusion);
  out += " ";
  out += t.subject;
  out += " ";
  out += to_token(t.rule);
  if (t.rule == RuleId::ResExhaustive)
    out += " (lattice " + std::to_string(t.lattice_size) + ")";
  for (const ProofTree& premise : t.premises) {
    out += "\n";
    encode_node(premise, depth + 1, out);
  }
  out += ")";
}

}  // namespace

std::string encode(const Certificate& c) {
  std::string out = "(certificate\n";
  out += "  (version \"" + c.tool_version + "\")\n";
  out += "  (policy " + c.policy_id + ")\n";
  out += "  (digest " + hex16(c.document_digest) + ")\n";
  out += "  (proof\n";
  encode_node(c.proof, 2, out);
  out += "))\n";
  return out;
}

MalformedCertificate::MalformedCertificate(int line, int column,
                                           std::string message)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) +
                         ": " + message),
      line_(line),
      column_(column),
      message_(std::move(message)) {}

namespace {

struct SexprToken {
  enum class Kind : std::uint8_t { LParen, RParen, Atom, String, End };
  Kind kind;
  std::string text;
  int line;
  int column;
};

class SexprLexer {
 public:
  explicit SexprLexer(std::string_view text) : text_(text) {}

  SexprToken next() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      advance();
    int line = line_, col = col_;
    if (pos_ >= text_.size())
      return {SexprToken::Kind::End, "", line, col};
    char c = text_[pos_];
    if (c == '(') {
      advance();
      return {SexprToken::Kind::LParen, "(", line, col};
    }
    if (c == ')') {
      advance();
      return {SexprToken::Kind::RParen, ")", line, col};
    }
    if (c == '"') {
      advance();
      std::string out;
      while (pos_ < text_.size() && text_[pos_] != '"' &&
             text_[pos_] != '\n') {
        out.push_back(text_[pos_]);
        advance();
      }
      if (pos_ >= text_.size() || text_[pos_] != '"')
        throw MalformedCertificate(line, col, "unterminated string");
      advance();
      return {SexprToken::Kind::String, std::move(out), line, col};
    }
    if (is_atom_char(c)) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && is_atom_char(text_[pos_])) advance();
      return {SexprToken::Kind::Atom,
              std::string(text_.substr(start, pos_ - start)), line, col};
    }
    throw MalformedCertificate(line, col,
                               std::string("unexpected character '") + c +
                                   "'");
  }

 private:
  static bool is_atom_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' ||
           c == '.' || c == '-';
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class CertParser {
 public:
  explicit CertParser(std::string_view text) : lexer_(text) { shift(); }

  Certificate parse() {
    Certificate c;
    expect_lparen();
    expect_atom("certificate");

    expect_lparen();
    expect_atom("version");
    c.tool_version = expect(SexprToken::Kind::String, "version string").text;
    expect_rparen();

    expect_lparen();
    expect_atom("policy");
    c.policy_id = expect(SexprToken::Kind::Atom, "policy identifier").text;
    expect_rparen();

    expect_lparen();
    expect_atom("digest");
    SexprToken digest = expect(SexprToken::Kind::Atom, "digest");
    c.document_digest = parse_digest(digest);
    expect_rparen();

    expect_lparen();
    expect_atom("proof");
    c.proof = parse_node();
    expect_rparen();

    expect_rparen();
    if (cur_.kind != SexprToken::Kind::End)
      fail(cur_, "trailing content after certificate");
    return c;
  }

 private:
  void shift() { cur_ = lexer_.next(); }

  [[noreturn]] void fail(const SexprToken& at, std::string message) {
    throw MalformedCertificate(at.line, at.column, std::move(message));
  }

  SexprToken expect(SexprToken::Kind kind, std::string_view what) {
    if (cur_.kind != kind)
      fail(cur_, "expected " + std::string(what) + ", got '" + cur_.text + "'");
    SexprToken t = cur_;
    shift();
    return t;
  }

  void expect_lparen() { expect(SexprToken::Kind::LParen, "'('"); }
  void expect_rparen() { expect(SexprToken::Kind::RParen, "')'"); }

  void expect_atom(std::string_view word) {
    SexprToken t = expect(SexprToken::Kind::Atom, "'" + std::string(word) + "'");
    if (t.text != word)
      fail(t, "expected '" + std::string(word) + "', got '" + t.text + "'");
  }

  std::uint64_t parse_digest(const SexprToken& t) {
    if (t.text.size() != 16) fail(t, "digest must be 16 hex digits");
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(t.text.data(),
                                     t.text.data() + t.text.size(), v, 16);
    if (ec != std::errc{} || ptr != t.text.data() + t.text.size())
      fail(t, "digest must be 16 hex digits");
    return v;
  }

  ProofTree parse_node() {
    SexprToken open = expect(SexprToken::Kind::LParen, "proof node");
    SexprToken obl = expect(SexprToken::Kind::Atom, "obligation");
    auto obligation = obligation_from_token(obl.text);
    if (!obligation) fail(obl, "unknown obligation '" + obl.text + "'");
    SexprToken subj = expect(SexprToken::Kind::Atom, "node identifier");
    SexprToken rule_tok = expect(SexprToken::Kind::Atom, "rule");
    auto rule = rule_from_token(rule_tok.text);
    if (!rule) fail(rule_tok, "unknown rule '" + rule_tok.text + "'");

    ProofTree node{*obligation, subj.text, *rule, {}, 0};
    if (*rule == RuleId::ResExhaustive) {
      expect_lparen();
      expect_atom("lattice");
      SexprToken n = expect(SexprToken::Kind::Atom, "lattice size");
      auto [ptr, ec] = std::from_chars(n.text.data(),
                                       n.text.data() + n.text.size(),
                                       node.lattice_size, 10);
      if (ec != std::errc{} || ptr != n.text.data() + n.text.size())
        fail(n, "lattice size must be a decimal number");
      expect_rparen();
    }
    while (cur_.kind == SexprToken::Kind::LParen)
      node.premises.push_back(parse_node());
    if (cur_.kind != SexprToken::Kind::RParen)
      fail(cur_, "expected premise or ')' in proof node");
    shift();
    (void)open;
    return node;
  }

  SexprLexer lexer_;
  SexprToken cur_{SexprToken::Kind::End, "", 0, 0};
};

// ---- Independent rule verification ----

struct NodeCheck {
  const NodeTable& table;
  CheckResult failure{true, "", ""};

  bool fail(const ProofTree&, const std::string& reason,
            const std::string& path) {
    failure = {false, reason, path};
    return false;
  }

  static std::string step(const std::string& path, const ProofTree& t) {
    std::string here =
        std::string(to_token(t.conclusion)) + " " + t.subject;
    return path.empty() ? here : path + " / " + here;
  }

  bool expect_premises(const ProofTree& t, const std::string& path,
                       std::initializer_list<std::pair<Obligation,
                                                       std::string>> want) {
    if (t.premises.size() != want.size())
      return fail(t,
                  std::string(to_token(t.rule)) + " expects " +
                      std::to_string(want.size()) + " premise" +
                      (want.size() == 1 ? "" : "s"),
                  path);
    std::size_t i = 0;
    for (const auto& [obligation, subject] : want) {
      const ProofTree& premise = t.premises[i++];
      if (premise.conclusion != obligation || premise.subject != subject)
        return fail(t,
                    std::string(to_token(t.rule)) + " premise " +
                        std::to_string(i) + " must conclude " +
                        std::string(to_token(obligation)) + " " + subject,
                    path);
    }
    return true;
  }

  bool verify(const ProofTree& t, const std::string& parent_path) {
    const std::string path = step(parent_path, t);

    const PolicyNode* node = is_target_obligation(t.conclusion)
                                 ? table.find_target_node(t.subject)
                                 : table.find_policy_node(t.subject);
    if (!node) return fail(t, "unknown node '" + t.subject + "'", path);
    if (t.rule != RuleId::ResExhaustive && t.lattice_size != 0)
      return fail(t, "only ResExhaustive carries a lattice size", path);

    if (!verify_rule(t, *node, path)) return false;
    for (const ProofTree& premise : t.premises)
      if (!verify(premise, path)) return false;
    return true;
  }

  bool require_conclusion(const ProofTree& t, Obligation want,
                          const std::string& path) {
    if (t.conclusion == want) return true;
    return fail(t,
                std::string(to_token(t.rule)) + " proves " +
                    std::string(to_token(want)) + ", not " +
                    std::string(to_token(t.conclusion)),
                path);
  }

  bool require_pkind(const ProofTree& t, const PolicyNode& node,
                     Policy::Kind kind, const std::string& what,
                     const std::string& path) {
    if (!node.is_target && node.pkind == kind) return true;
    return fail(t,
                std::string(to_token(t.rule)) + " requires " + what + " node",
                path);
  }

  bool require_tkind(const ProofTree& t, const PolicyNode& node,
                     Target::Kind kind, const std::string& what,
                     const std::string& path) {
    if (node.is_target && node.tkind == kind) return true;
    return fail(t,
                std::string(to_token(t.rule)) + " requires " + what + " node",
                path);
  }

  bool verify_rule(const ProofTree& t, const PolicyNode& node,
                   const std::string& path) {
    const std::string& id = node.id;
    switch (t.rule) {
      case RuleId::ResWFWMWN:
        return require_conclusion(t, Obligation::IsResistant, path) &&
               expect_premises(
                   t, path,
                   {{Obligation::IsWellFormed, id},
                    {Obligation::IsWithoutNot, id},
                    {Obligation::IsWeaklyMonotonicPolicy, id}});
      case RuleId::ResWFWMWD:
        return require_conclusion(t, Obligation::IsResistant, path) &&
               expect_premises(
                   t, path,
                   {{Obligation::IsWellFormed, id},
                    {Obligation::IsWithoutDbd, id},
                    {Obligation::IsWeaklyMonotonicPolicy, id}});
      case RuleId::ResCRA:
        return require_conclusion(t, Obligation::IsResistant, path) &&
               expect_premises(t, path,
                               {{Obligation::CannotReturnAllow, id}});
      case RuleId::ResNoTarget:
        return require_conclusion(t, Obligation::IsResistant, path) &&
               expect_premises(t, path, {{Obligation::HasNoTarget, id}});
      case RuleId::ResPdbd:
        return require_conclusion(t, Obligation::IsResistant, path) &&
               require_pkind(t, node, Policy::Kind::Dbd, "a deny-by-default",
                             path) &&
               expect_premises(t, path,
                               {{Obligation::IsResistant, node.operands[0]}});
      case RuleId::ResPand:
        return require_conclusion(t, Obligation::IsResistant, path) &&
               require_pkind(t, node, Policy::Kind::And, "a conjunction",
                             path) &&
               expect_premises(t, path,
                               {{Obligation::IsResistant, node.operands[0]},
                                {Obligation::IsResistant, node.operands[1]}});
      case RuleId::ResExhaustive: {
        if (!require_conclusion(t, Obligation::IsResistant, path) ||
            !expect_premises(t, path, {}))
          return false;
        NfLattice lat(node.policy);
        if (lat.size() != t.lattice_size)
          return fail(t,
                      "lattice size mismatch: expected " +
                          std::to_string(lat.size()) + ", certificate says " +
                          std::to_string(t.lattice_size),
                      path);
        SearchOptions opts;
        opts.limit = 1;
        if (!find_counterexamples(node.policy, opts).empty())
          return fail(t, "exhaustive search found a counter-example", path);
        return true;
      }
      case RuleId::WFBruteForce:
        if (!require_conclusion(t, Obligation::IsWellFormed, path) ||
            !expect_premises(t, path, {}))
          return false;
        if (!structural_flags(node.policy).well_formed)
          return fail(t, "policy '" + id + "' is not well-formed", path);
        return true;
      case RuleId::WNBruteForce:
        if (!require_conclusion(t, Obligation::IsWithoutNot, path) ||
            !expect_premises(t, path, {}))
          return false;
        if (!structural_flags(node.policy).without_pnot)
          return fail(t, "policy '" + id + "' contains Pnot", path);
        return true;
      case RuleId::WDBruteForce:
        if (!require_conclusion(t, Obligation::IsWithoutDbd, path) ||
            !expect_premises(t, path, {}))
          return false;
        if (!structural_flags(node.policy).without_pdbd)
          return fail(t, "policy '" + id + "' contains Pdbd", path);
        return true;
      case RuleId::NoTargetBruteForce:
        if (!require_conclusion(t, Obligation::HasNoTarget, path) ||
            !expect_premises(t, path, {}))
          return false;
        if (!structural_flags(node.policy).without_ptar)
          return fail(t, "policy '" + id + "' contains Ptar", path);
        return true;
      case RuleId::WMPAtom:
        return require_conclusion(t, Obligation::IsWeaklyMonotonicPolicy,
                                  path) &&
               require_pkind(t, node, Policy::Kind::Atom, "an atomic policy",
                             path) &&
               expect_premises(t, path, {});
      case RuleId::WMPnot:
        return require_conclusion(t, Obligation::IsWeaklyMonotonicPolicy,
                                  path) &&
               require_pkind(t, node, Policy::Kind::Not, "a Pnot", path) &&
               expect_premises(t, path,
                               {{Obligation::IsWeaklyMonotonicPolicy,
                                 node.operands[0]}});
      case RuleId::WMPdbd:
        return require_conclusion(t, Obligation::IsWeaklyMonotonicPolicy,
                                  path) &&
               require_pkind(t, node, Policy::Kind::Dbd, "a Pdbd", path) &&
               expect_premises(t, path,
                               {{Obligation::IsWeaklyMonotonicPolicy,
                                 node.operands[0]}});
      case RuleId::WMPand:
        return require_conclusion(t, Obligation::IsWeaklyMonotonicPolicy,
                                  path) &&
               require_pkind(t, node, Policy::Kind::And, "a Pand", path) &&
               expect_premises(t, path,
                               {{Obligation::IsWeaklyMonotonicPolicy,
                                 node.operands[0]},
                                {Obligation::IsWeaklyMonotonicPolicy,
                                 node.operands[1]}});
      case RuleId::WMPtar:
        return require_conclusion(t, Obligation::IsWeaklyMonotonicPolicy,
                                  path) &&
               require_pkind(t, node, Policy::Kind::Tar, "a Ptar", path) &&
               expect_premises(t, path,
                               {{Obligation::IsWeaklyMonotonicTarget,
                                 node.operands[0]},
                                {Obligation::IsWeaklyMonotonicPolicy,
                                 node.operands[1]}});
      case RuleId::WMTAtom:
        return require_conclusion(t, Obligation::IsWeaklyMonotonicTarget,
                                  path) &&
               require_tkind(t, node, Target::Kind::Atom, "an atomic target",
                             path) &&
               expect_premises(t, path, {});
      case RuleId::WMTOpt:
        return require_conclusion(t, Obligation::IsWeaklyMonotonicTarget,
                                  path) &&
               require_tkind(t, node, Target::Kind::Opt, "a Topt", path) &&
               expect_premises(t, path,
                               {{Obligation::IsWeaklyMonotonicTarget,
                                 node.operands[0]}});
      case RuleId::WMTAnd:
        return require_conclusion(t, Obligation::IsWeaklyMonotonicTarget,
                                  path) &&
               require_tkind(t, node, Target::Kind::And, "a Tand", path) &&
               expect_premises(t, path,
                               {{Obligation::IsWeaklyMonotonicTarget,
                                 node.operands[0]},
                                {Obligation::IsWeaklyMonotonicTarget,
                                 node.operands[1]}});
      case RuleId::CraPatomZero:
        if (!require_conclusion(t, Obligation::CannotReturnAllow, path) ||
            !require_pkind(t, node, Policy::Kind::Atom, "an atomic policy",
                           path) ||
            !expect_premises(t, path, {}))
          return false;
        if (node.atom_decision != Decision::Deny)
          return fail(t, "CRA-PatomZero requires the atomic deny policy",
                      path);
        return true;
      case RuleId::CraPatomBot:
        if (!require_conclusion(t, Obligation::CannotReturnAllow, path) ||
            !require_pkind(t, node, Policy::Kind::Atom, "an atomic policy",
                           path) ||
            !expect_premises(t, path, {}))
          return false;
        if (node.atom_decision != Decision::NotApp)
          return fail(
              t, "CRA-PatomBot requires the atomic not-applicable policy",
              path);
        return true;
      case RuleId::CraPtar:
        return require_conclusion(t, Obligation::CannotReturnAllow, path) &&
               require_pkind(t, node, Policy::Kind::Tar, "a Ptar", path) &&
               expect_premises(t, path,
                               {{Obligation::CannotReturnAllow,
                                 node.operands[1]}});
      case RuleId::CraPdbd:
        return require_conclusion(t, Obligation::CannotReturnAllow, path) &&
               require_pkind(t, node, Policy::Kind::Dbd, "a Pdbd", path) &&
               expect_premises(t, path,
                               {{Obligation::CannotReturnAllow,
                                 node.operands[0]}});
      case RuleId::CraPandL:
        return require_conclusion(t, Obligation::CannotReturnAllow, path) &&
               require_pkind(t, node, Policy::Kind::And, "a Pand", path) &&
               expect_premises(t, path,
                               {{Obligation::CannotReturnAllow,
                                 node.operands[0]}});
      case RuleId::CraPandR:
        return require_conclusion(t, Obligation::CannotReturnAllow, path) &&
               require_pkind(t, node, Policy::Kind::And, "a Pand", path) &&
               expect_premises(t, path,
                               {{Obligation::CannotReturnAllow,
                                 node.operands[1]}});
      case RuleId::CraPnotOfCrd:
        return require_conclusion(t, Obligation::CannotReturnAllow, path) &&
               require_pkind(t, node, Policy::Kind::Not, "a Pnot", path) &&
               expect_premises(t, path,
                               {{Obligation::CannotReturnDeny,
                                 node.operands[0]}});
      case RuleId::CrdPatomOne:
        if (!require_conclusion(t, Obligation::CannotReturnDeny, path) ||
            !require_pkind(t, node, Policy::Kind::Atom, "an atomic policy",
                           path) ||
            !expect_premises(t, path, {}))
          return false;
        if (node.atom_decision != Decision::Allow)
          return fail(t, "CRD-PatomOne requires the atomic allow policy",
                      path);
        return true;
      case RuleId::CrdPatomBot:
        if (!require_conclusion(t, Obligation::CannotReturnDeny, path) ||
            !require_pkind(t, node, Policy::Kind::Atom, "an atomic policy",
                           path) ||
            !expect_premises(t, path, {}))
          return false;
        if (node.atom_decision != Decision::NotApp)
          return fail(
              t, "CRD-PatomBot requires the atomic not-applicable policy",
              path);
        return true;
      case RuleId::CrdPtar:
        return require_conclusion(t, Obligation::CannotReturnDeny, path) &&
               require_pkind(t, node, Policy::Kind::Tar, "a Ptar", path) &&
               expect_premises(t, path,
                               {{Obligation::CannotReturnDeny,
                                 node.operands[1]}});
      case RuleId::CrdPnotOfCra:
        return require_conclusion(t, Obligation::CannotReturnDeny, path) &&
               require_pkind(t, node, Policy::Kind::Not, "a Pnot", path) &&
               expect_premises(t, path,
                               {{Obligation::CannotReturnAllow,
                                 node.operands[0]}});
    }
    return fail(t, "unknown rule", path);
  }
};

}  // namespace

Certificate decode(std::string_view text) { return CertParser(text).parse(); }

CheckResult check(const Certificate& c, const PolicyEnv& env) {
  if (c.document_digest != document_digest(env))
    return {false, "digest mismatch", ""};
  if (!env.find_policy(c.policy_id))
    return {false, "unknown policy '" + c.policy_id + "'", ""};
  if (c.proof.conclusion != Obligation::IsResistant ||
      c.proof.subject != c.policy_id)
    return {false,
            "proof root must conclude isResistant " + c.policy_id, ""};

  NodeTable table = NodeTable::build(env, c.policy_id);
  NodeCheck checker{table};
  if (!checker.verify(c.proof, "")) return checker.failure;
  return {true, "", ""};
}

namespace {

std::string node_line(const ProofTree& t) {
  const std::string& id = t.subject;
  auto premise_subject = [&](std::size_t i) -> const std::string& {
    return t.premises[i].subject;
  };
  switch (t.rule) {
    case RuleId::ResWFWMWN:
      return id +
             " is resistant, since it is well-formed, weakly-monotonic and "
             "without-not";
    case RuleId::ResWFWMWD:
      return id +
             " is resistant, since it is well-formed, weakly-monotonic and "
             "without-dbd";
    case RuleId::ResCRA:
      return id + " is resistant, since it cannot return allow";
    case RuleId::ResNoTarget:
      return id + " is resistant, since it contains no target";
    case RuleId::ResPdbd:
      return id + " is resistant, since it is the deny-by-default of the "
                  "resistant policy " +
             premise_subject(0);
    case RuleId::ResPand:
      return id + " is resistant, since it is the conjunction of the "
                  "resistant policies " +
             premise_subject(0) + " and " + premise_subject(1);
    case RuleId::ResExhaustive:
      return id + " is resistant, by exhaustive search over its " +
             std::to_string(t.lattice_size) + "-element request lattice";
    case RuleId::WFBruteForce:
      return id + " is well-formed, which can be checked by brute-force";
    case RuleId::WNBruteForce:
      return id + " is without-not, which can be checked by brute-force";
    case RuleId::WDBruteForce:
      return id + " is without-dbd, which can be checked by brute-force";
    case RuleId::NoTargetBruteForce:
      return id + " contains no target, which can be checked by brute-force";
    case RuleId::WMPAtom:
    case RuleId::WMTAtom:
      return id + " is weakly-monotonic, since it is atomic";
    case RuleId::WMPnot:
      return id + " is weakly-monotonic, since it is the negation of the "
                  "weakly-monotonic policy " +
             premise_subject(0);
    case RuleId::WMPdbd:
      return id + " is weakly-monotonic, since it is the deny-by-default of "
                  "the weakly-monotonic policy " +
             premise_subject(0);
    case RuleId::WMPand:
      return id + " is weakly-monotonic, since it is the conjunction of the "
                  "weakly-monotonic policies " +
             premise_subject(0) + " and " + premise_subject(1);
    case RuleId::WMPtar:
      return id + " is weakly-monotonic, since it is the composition of the "
                  "weakly-monotonic target " +
             premise_subject(0) + " and of the weakly-monotonic policy " +
             premise_subject(1);
    case RuleId::WMTOpt:
      return id + " is weakly-monotonic, since it is the optionality of the "
                  "weakly-monotonic target " +
             premise_subject(0);
    case RuleId::WMTAnd:
      return id + " is weakly-monotonic, since it is the conjunction of the "
                  "weakly-monotonic targets " +
             premise_subject(0) + " and " + premise_subject(1);
    case RuleId::CraPatomZero:
      return id + " cannot return allow, since it is the atomic deny policy";
    case RuleId::CraPatomBot:
      return id + " cannot return allow, since it is the atomic "
                  "not-applicable policy";
    case RuleId::CraPtar:
      return id + " cannot return allow, since its body " +
             premise_subject(0) + " cannot return allow";
    case RuleId::CraPdbd:
      return id + " cannot return allow, since it is the deny-by-default of " +
             premise_subject(0) + ", which cannot return allow";
    case RuleId::CraPandL:
      return id + " cannot return allow, since its left operand " +
             premise_subject(0) + " cannot return allow";
    case RuleId::CraPandR:
      return id + " cannot return allow, since its right operand " +
             premise_subject(0) + " cannot return allow";
    case RuleId::CraPnotOfCrd:
      return id + " cannot return allow, since it is the negation of " +
             premise_subject(0) + ", which cannot return deny";
    case RuleId::CrdPatomOne:
      return id + " cannot return deny, since it is the atomic allow policy";
    case RuleId::CrdPatomBot:
      return id + " cannot return deny, since it is the atomic "
                  "not-applicable policy";
    case RuleId::CrdPtar:
      return id + " cannot return deny, since its body " +
             premise_subject(0) + " cannot return deny";
    case RuleId::CrdPnotOfCra:
      return id + " cannot return deny, since it is the negation of " +
             premise_subject(0) + ", which cannot return allow";
  }
  throw std::logic_error("node_line: bad rule");
}

void render_node(const ProofTree& t, int depth, std::string& out) {
  out.append(static_cast<std::size_t>(depth) * 2, ' ');
  out += node_line(t);
  out += "\n";
  for (const ProofTree& premise : t.premises)
    render_node(premise, depth + 1, out);
}

}  // namespace

std::string render_human(const Certificate& c, const PolicyEnv& env) {
  CheckResult result = check(c, env);
  if (!result.valid)
    throw std::invalid_argument("render_human: invalid certificate: " +
                                result.reason);
  std::string out;
  render_node(c.proof, 0, out);
  return out;
}

}  // namespace ptacl
