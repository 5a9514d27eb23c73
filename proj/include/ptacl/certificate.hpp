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

#include <cstdint>
#include <string>
#include <string_view>

#include "ptacl/ast.hpp"
#include "ptacl/proof.hpp"

namespace ptacl {

inline constexpr std::string_view kToolVersion = "0.1.0";

/// A serialized resistance proof, bound to the policy document it certifies
/// by a 64-bit FNV-1a digest of the canonical document rendering.
struct Certificate {
  std::string policy_id;
  std::uint64_t document_digest = 0;
  std::string tool_version;
  ProofTree proof;

  bool operator==(const Certificate&) const = default;
};

std::uint64_t fnv1a64(std::string_view bytes);
std::uint64_t document_digest(const PolicyEnv& env);

Certificate make_certificate(const PolicyEnv& env, const std::string& policy_id,
                             ProofTree proof);

/// Textual form:
///   (certificate (version STRING) (policy IDENT) (digest HEX16)
///                (proof NODE))
///   NODE := "(" OBLIGATION IDENT RULE NODE* ")"
/// ResExhaustive nodes carry "(lattice N)" after the rule token.
/// encode is deterministic; decode(encode(c)) == c.
std::string encode(const Certificate& c);

class MalformedCertificate : public std::runtime_error {
 public:
  MalformedCertificate(int line, int column, std::string message);

  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  int line_;
  int column_;
  std::string message_;
};

Certificate decode(std::string_view text);

struct CheckResult {
  bool valid;
  std::string reason;  // empty when valid
  std::string path;    // obligation path to the failing node, when known
};

/// Independent verification: digest match, rule arity and premise shapes,
/// per-rule syntactic side conditions against the resolved definitions, and
/// a re-run of the counter-example search for every ResExhaustive node.
/// Trusts nothing from the proof search.
CheckResult check(const Certificate& c, const PolicyEnv& env);

/// Indented prose, one line per proof node. Deterministic. Requires a
/// certificate that passes check().
std::string render_human(const Certificate& c, const PolicyEnv& env);

}  // namespace ptacl
