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

#include <map>
#include <string>
#include <vector>

#include "ptacl/ast.hpp"

namespace ptacl {

/// One sub-term of the policy under analysis. Named definitions keep their
/// ids; anonymous sub-terms are named "<parent>.<operand-index>" (1-based;
/// Ptar counts its target as operand 1 and its body as operand 2). User
/// identifiers cannot contain dots, so synthesized ids never collide.
struct PolicyNode {
  std::string id;
  bool is_target;

  Policy::Kind pkind = Policy::Kind::Atom;  // when !is_target
  Target::Kind tkind = Target::Kind::Atom;  // when is_target
  Decision atom_decision = Decision::Allow;

  /// Ids of operand nodes, in grammar order.
  std::vector<std::string> operands;

  /// Fully resolved (Ref-free) term rooted here.
  PolicyPtr policy;
  TargetPtr target;
};

/// Sub-term table for one root policy: every policy and target node
/// reachable from the root, each under a stable id. Targets and policies
/// are separate namespaces, as in PolicyEnv.
class NodeTable {
 public:
  /// Builds the table for a named policy in an environment. A definition
  /// whose body is a bare reference shares the referenced definition's
  /// structure under its own id.
  static NodeTable build(const PolicyEnv& env, const std::string& root_policy);

  /// Builds the table for a bare Ref-free policy under a synthetic root id.
  static NodeTable build(const PolicyPtr& p, const std::string& root_id = "p");

  const std::string& root() const { return root_; }
  const std::vector<std::string>& policy_ids() const { return policy_ids_; }

  const PolicyNode* find_policy_node(const std::string& id) const;
  const PolicyNode* find_target_node(const std::string& id) const;

 private:
  std::string key(bool is_target, const std::string& id) const;
  const std::string& build_policy_node(const PolicyEnv& env,
                                       const std::string& id,
                                       const PolicyPtr& term);
  const std::string& build_target_node(const PolicyEnv& env,
                                       const std::string& id,
                                       const TargetPtr& term);
  std::string ensure_policy_def(const PolicyEnv& env, const std::string& id);
  std::string ensure_target_def(const PolicyEnv& env, const std::string& id);

  std::string root_;
  std::map<std::string, PolicyNode> nodes_;  // keyed "P:" / "T:" + id
  std::vector<std::string> policy_ids_;
};

}  // namespace ptacl
