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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "ptacl/ast.hpp"

namespace ptacl {

class SourceError : public std::runtime_error {
 public:
  enum class Kind {
    Lexical,
    Syntax,
    UnknownIdentifier,
    DuplicateDefinition,
    CyclicDefinition,
  };

  SourceError(Kind kind, int line, int column, std::string message);

  Kind kind() const { return kind_; }
  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  Kind kind_;
  int line_;
  int column_;
  std::string message_;
};

/// Parse a policy document.
///
///   document   := (target_def | policy_def | comment | blank)*
///   target_def := IDENT "::" t_operand
///   policy_def := IDENT ":" p_expr
///   t_expr     := "Tatom" STRING STRING | "Tnot" t_operand
///               | "Topt" t_operand | "Tand" t_operand t_operand
///   t_operand  := IDENT | "(" t_expr ")"
///   p_expr     := "Patom" DEC | "Pnot" p_operand | "Pdbd" p_operand
///               | "Pand" p_operand p_operand | "Ptar" t_operand p_operand
///   p_operand  := IDENT | "(" p_expr ")"
///   DEC        := "One" | "Zero" | "Bot"
///
/// STRING is double-quoted with \" and \\ escapes; "#" starts a comment
/// running to end of line. Identifiers must be defined before use;
/// duplicates, forward references and self-references are rejected.
PolicyEnv parse_document(std::string_view text);

/// Parse a request literal such as {("nat","FR"), ("nat","AT")}.
/// Duplicate pairs collapse.
Request parse_request(std::string_view text);

/// Renderers. render_policy/render_target emit expression syntax that
/// round-trips through parse_document when placed in a definition body.
std::string render_policy(const PolicyPtr& p);
std::string render_target(const TargetPtr& t);
std::string render_request(const Request& q);
std::string render_decisions(DecisionSet s);

/// Canonical document form: one definition per line, in definition order,
/// each line newline-terminated. This is the digest input for certificates.
std::string render_document(const PolicyEnv& env);

}  // namespace ptacl
