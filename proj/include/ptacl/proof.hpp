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
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ptacl/ast.hpp"
#include "ptacl/node_table.hpp"
#include "ptacl/normal_form.hpp"

namespace ptacl {

enum class Obligation : std::uint8_t {
  IsResistant,
  IsWellFormed,
  IsWithoutNot,
  IsWithoutDbd,
  HasNoTarget,
  IsWeaklyMonotonicPolicy,
  IsWeaklyMonotonicTarget,
  CannotReturnAllow,
  CannotReturnDeny,
};

enum class RuleId : std::uint8_t {
  ResWFWMWN,
  ResWFWMWD,
  ResCRA,
  ResNoTarget,
  ResPdbd,
  ResPand,
  ResExhaustive,
  WFBruteForce,
  WNBruteForce,
  WDBruteForce,
  NoTargetBruteForce,
  WMPAtom,
  WMPnot,
  WMPdbd,
  WMPand,
  WMPtar,
  WMTAtom,
  WMTOpt,
  WMTAnd,
  CraPatomZero,
  CraPatomBot,
  CraPtar,
  CraPdbd,
  CraPandL,
  CraPandR,
  CraPnotOfCrd,
  CrdPatomOne,
  CrdPatomBot,
  CrdPtar,
  CrdPnotOfCra,
};

/// Certificate tokens ("isResistant", "CRA-PatomZero", ...).
std::string_view to_token(Obligation o);
std::string_view to_token(RuleId r);
std::optional<Obligation> obligation_from_token(std::string_view token);
std::optional<RuleId> rule_from_token(std::string_view token);

/// True for the one obligation that speaks about target nodes.
bool is_target_obligation(Obligation o);

struct ProofTree {
  Obligation conclusion;
  std::string subject;  // node id in the NodeTable
  RuleId rule;
  std::vector<ProofTree> premises;
  std::uint64_t lattice_size = 0;  // ResExhaustive only

  bool operator==(const ProofTree&) const = default;
};

struct ProofOptions {
  bool allow_exhaustive = false;
  std::size_t max_lattice_bits = kDefaultLatticeCapBits;
};

/// Deterministic rule-directed proof search over a sub-term table.
///
/// Resistance rules are attempted in the fixed order ResNoTarget, ResCRA,
/// ResWFWMWN, ResWFWMWD, ResPdbd, ResPand, then (only when enabled)
/// ResExhaustive, so two searches over the same policy produce identical
/// trees.
class ProofSearch {
 public:
  explicit ProofSearch(const NodeTable& table, ProofOptions opts = {});

  std::optional<ProofTree> prove(Obligation goal, const std::string& subject);

 private:
  std::optional<ProofTree> attempt(Obligation goal, const PolicyNode& node);
  std::optional<ProofTree> attempt_resistant(const PolicyNode& node);
  std::optional<ProofTree> attempt_wm_policy(const PolicyNode& node);
  std::optional<ProofTree> attempt_wm_target(const PolicyNode& node);
  std::optional<ProofTree> attempt_cra(const PolicyNode& node);
  std::optional<ProofTree> attempt_crd(const PolicyNode& node);
  std::optional<ProofTree> scan_rule(const PolicyNode& node, Obligation goal,
                                     RuleId rule, bool ok);

  const NodeTable& table_;
  ProofOptions opts_;
  std::map<std::pair<int, std::string>, std::optional<ProofTree>> memo_;
};

/// Proof of resistance for a named policy; absent when no rule applies.
std::optional<ProofTree> prove_resistant(const PolicyEnv& env,
                                         const std::string& id,
                                         ProofOptions opts = {});

/// Conveniences for bare Ref-free policies, rooted at id "p".
std::optional<ProofTree> prove_resistant(const PolicyPtr& p,
                                         ProofOptions opts = {});
std::optional<ProofTree> prove_weak_monotonic(const PolicyPtr& p);
std::pair<std::optional<ProofTree>, std::optional<ProofTree>>
derive_cannot_return(const PolicyPtr& p);

}  // namespace ptacl
