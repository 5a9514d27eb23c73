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

#include "ptacl/node_table.hpp"

namespace ptacl {

std::string NodeTable::key(bool is_target, const std::string& id) const {
  return (is_target ? "T:" : "P:") + id;
}

const PolicyNode* NodeTable::find_policy_node(const std::string& id) const {
  auto it = nodes_.find("P:" + id);
  return it == nodes_.end() ? nullptr : &it->second;
}

const PolicyNode* NodeTable::find_target_node(const std::string& id) const {
  auto it = nodes_.find("T:" + id);
  return it == nodes_.end() ? nullptr : &it->second;
}

std::string NodeTable::ensure_target_def(const PolicyEnv& env,
                                         const std::string& id) {
  if (nodes_.contains(key(true, id))) return id;
  const TargetPtr* def = env.find_target(id);
  if (!def)
    throw ResolveError(ResolveError::Kind::UnknownIdentifier, true, id);
  if ((*def)->kind() == Target::Kind::Ref) {
    // Alias definition: share the referenced structure under this id.
    std::string aliased = ensure_target_def(env, (*def)->ref_id());
    PolicyNode node = *find_target_node(aliased);
    node.id = id;
    nodes_.emplace(key(true, id), std::move(node));
    return id;
  }
  build_target_node(env, id, *def);
  return id;
}

std::string NodeTable::ensure_policy_def(const PolicyEnv& env,
                                         const std::string& id) {
  if (nodes_.contains(key(false, id))) return id;
  const PolicyPtr* def = env.find_policy(id);
  if (!def)
    throw ResolveError(ResolveError::Kind::UnknownIdentifier, false, id);
  if ((*def)->kind() == Policy::Kind::Ref) {
    std::string aliased = ensure_policy_def(env, (*def)->ref_id());
    PolicyNode node = *find_policy_node(aliased);
    node.id = id;
    nodes_.emplace(key(false, id), std::move(node));
    policy_ids_.push_back(id);
    return id;
  }
  build_policy_node(env, id, *def);
  return id;
}

const std::string& NodeTable::build_target_node(const PolicyEnv& env,
                                                const std::string& id,
                                                const TargetPtr& term) {
  PolicyNode node;
  node.id = id;
  node.is_target = true;
  node.tkind = term->kind();
  node.target = resolve(env, term);

  auto operand = [&](const TargetPtr& child, int index) -> std::string {
    if (child->kind() == Target::Kind::Ref)
      return ensure_target_def(env, child->ref_id());
    std::string child_id = id + "." + std::to_string(index);
    build_target_node(env, child_id, child);
    return child_id;
  };

  switch (term->kind()) {
    case Target::Kind::Atom:
      break;
    case Target::Kind::Not:
    case Target::Kind::Opt:
      node.operands.push_back(operand(term->child(), 1));
      break;
    case Target::Kind::And:
      node.operands.push_back(operand(term->left(), 1));
      node.operands.push_back(operand(term->right(), 2));
      break;
    case Target::Kind::Ref:
      throw std::logic_error("build_target_node: bare ref");
  }
  auto [it, inserted] = nodes_.emplace(key(true, id), std::move(node));
  if (!inserted) throw std::logic_error("node id collision: " + id);
  return it->second.id;
}

const std::string& NodeTable::build_policy_node(const PolicyEnv& env,
                                                const std::string& id,
                                                const PolicyPtr& term) {
  PolicyNode node;
  node.id = id;
  node.is_target = false;
  node.pkind = term->kind();
  node.policy = resolve(env, term);
  if (term->kind() == Policy::Kind::Atom)
    node.atom_decision = term->decision();

  auto policy_operand = [&](const PolicyPtr& child, int index) -> std::string {
    if (child->kind() == Policy::Kind::Ref)
      return ensure_policy_def(env, child->ref_id());
    std::string child_id = id + "." + std::to_string(index);
    build_policy_node(env, child_id, child);
    return child_id;
  };
  auto target_operand = [&](const TargetPtr& child, int index) -> std::string {
    if (child->kind() == Target::Kind::Ref)
      return ensure_target_def(env, child->ref_id());
    std::string child_id = id + "." + std::to_string(index);
    build_target_node(env, child_id, child);
    return child_id;
  };

  switch (term->kind()) {
    case Policy::Kind::Atom:
      break;
    case Policy::Kind::Not:
    case Policy::Kind::Dbd:
      node.operands.push_back(policy_operand(term->child(), 1));
      break;
    case Policy::Kind::And:
      node.operands.push_back(policy_operand(term->left(), 1));
      node.operands.push_back(policy_operand(term->right(), 2));
      break;
    case Policy::Kind::Tar:
      node.operands.push_back(target_operand(term->target(), 1));
      node.operands.push_back(policy_operand(term->child(), 2));
      break;
    case Policy::Kind::Ref:
      throw std::logic_error("build_policy_node: bare ref");
  }
  auto [it, inserted] = nodes_.emplace(key(false, id), std::move(node));
  if (!inserted) throw std::logic_error("node id collision: " + id);
  policy_ids_.push_back(id);
  return it->second.id;
}

NodeTable NodeTable::build(const PolicyEnv& env,
                           const std::string& root_policy) {
  NodeTable table;
  table.root_ = table.ensure_policy_def(env, root_policy);
  return table;
}

NodeTable NodeTable::build(const PolicyPtr& p, const std::string& root_id) {
  if (contains_ref(p))
    throw std::invalid_argument("NodeTable: bare policy must be Ref-free");
  NodeTable table;
  PolicyEnv empty;
  table.build_policy_node(empty, root_id, p);
  table.root_ = root_id;
  return table;
}

}  // namespace ptacl
