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

#include "ptacl/ast.hpp"

#include <algorithm>
#include <bit>
#include <utility>

namespace ptacl {

std::string_view to_string(Decision d) {
  switch (d) {
    case Decision::Allow:
      return "ALLOW";
    case Decision::Deny:
      return "DENY";
    case Decision::NotApp:
      return "BOT";
  }
  return "?";
}

DecisionSet::DecisionSet(std::uint8_t bits) : bits_(bits) {
  if (bits == 0) throw std::invalid_argument("DecisionSet: empty set");
  if ((bits & ~0x7u) != 0)
    throw std::invalid_argument("DecisionSet: invalid bits");
}

std::size_t DecisionSet::size() const {
  return static_cast<std::size_t>(std::popcount(bits_));
}

TargetPtr Target::atom(std::string name, std::string value) {
  return TargetPtr(new Target(Kind::Atom, std::move(name), std::move(value),
                              nullptr, nullptr));
}

TargetPtr Target::make_not(TargetPtr t) {
  if (!t) throw std::invalid_argument("Target::make_not: null operand");
  return TargetPtr(new Target(Kind::Not, "", "", std::move(t), nullptr));
}

TargetPtr Target::make_opt(TargetPtr t) {
  if (!t) throw std::invalid_argument("Target::make_opt: null operand");
  return TargetPtr(new Target(Kind::Opt, "", "", std::move(t), nullptr));
}

TargetPtr Target::make_and(TargetPtr left, TargetPtr right) {
  if (!left || !right)
    throw std::invalid_argument("Target::make_and: null operand");
  return TargetPtr(
      new Target(Kind::And, "", "", std::move(left), std::move(right)));
}

TargetPtr Target::ref(std::string id) {
  return TargetPtr(new Target(Kind::Ref, std::move(id), "", nullptr, nullptr));
}

PolicyPtr Policy::atom(Decision d) {
  return PolicyPtr(new Policy(Kind::Atom, d, "", nullptr, nullptr, nullptr));
}

PolicyPtr Policy::make_not(PolicyPtr p) {
  if (!p) throw std::invalid_argument("Policy::make_not: null operand");
  return PolicyPtr(new Policy(Kind::Not, Decision::Allow, "", nullptr,
                              std::move(p), nullptr));
}

PolicyPtr Policy::make_dbd(PolicyPtr p) {
  if (!p) throw std::invalid_argument("Policy::make_dbd: null operand");
  return PolicyPtr(new Policy(Kind::Dbd, Decision::Allow, "", nullptr,
                              std::move(p), nullptr));
}

PolicyPtr Policy::make_and(PolicyPtr left, PolicyPtr right) {
  if (!left || !right)
    throw std::invalid_argument("Policy::make_and: null operand");
  return PolicyPtr(new Policy(Kind::And, Decision::Allow, "", nullptr,
                              std::move(left), std::move(right)));
}

PolicyPtr Policy::make_tar(TargetPtr target, PolicyPtr body) {
  if (!target || !body)
    throw std::invalid_argument("Policy::make_tar: null operand");
  return PolicyPtr(new Policy(Kind::Tar, Decision::Allow, "",
                              std::move(target), std::move(body), nullptr));
}

PolicyPtr Policy::ref(std::string id) {
  return PolicyPtr(new Policy(Kind::Ref, Decision::Allow, std::move(id),
                              nullptr, nullptr, nullptr));
}

Request::Request(std::vector<AttrPair> pairs) : pairs_(std::move(pairs)) {
  std::sort(pairs_.begin(), pairs_.end());
  pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
}

bool Request::contains(const AttrPair& p) const {
  return std::binary_search(pairs_.begin(), pairs_.end(), p);
}

bool Request::has_attribute(std::string_view name) const {
  auto it = std::lower_bound(
      pairs_.begin(), pairs_.end(), name,
      [](const AttrPair& a, std::string_view n) { return a.name < n; });
  return it != pairs_.end() && it->name == name;
}

bool Request::subset_of(const Request& other) const {
  return std::includes(other.pairs_.begin(), other.pairs_.end(),
                       pairs_.begin(), pairs_.end());
}

Request Request::with(AttrPair p) const {
  auto copy = pairs_;
  copy.push_back(std::move(p));
  return Request(std::move(copy));
}

Request Request::without(const AttrPair& p) const {
  auto copy = pairs_;
  copy.erase(std::remove(copy.begin(), copy.end(), p), copy.end());
  return Request(std::move(copy));
}

void PolicyEnv::define_target(std::string id, TargetPtr t) {
  if (!t) throw std::invalid_argument("define_target: null definition");
  if (!targets_.emplace(id, std::move(t)).second)
    throw std::invalid_argument("duplicate target definition: " + id);
  defs_.push_back({true, std::move(id)});
}

void PolicyEnv::define_policy(std::string id, PolicyPtr p) {
  if (!p) throw std::invalid_argument("define_policy: null definition");
  if (!policies_.emplace(id, std::move(p)).second)
    throw std::invalid_argument("duplicate policy definition: " + id);
  defs_.push_back({false, std::move(id)});
}

const TargetPtr* PolicyEnv::find_target(const std::string& id) const {
  auto it = targets_.find(id);
  return it == targets_.end() ? nullptr : &it->second;
}

const PolicyPtr* PolicyEnv::find_policy(const std::string& id) const {
  auto it = policies_.find(id);
  return it == policies_.end() ? nullptr : &it->second;
}

ResolveError::ResolveError(Kind kind, bool is_target, std::string id)
    : std::runtime_error(
          std::string(kind == Kind::UnknownIdentifier ? "unknown "
                                                      : "cyclic ") +
          (is_target ? "target: " : "policy: ") + id),
      kind_(kind),
      is_target_(is_target),
      id_(std::move(id)) {}

namespace {

TargetPtr resolve_target_impl(const PolicyEnv& env, const TargetPtr& t,
                              std::set<std::string>& in_progress) {
  switch (t->kind()) {
    case Target::Kind::Atom:
      return t;
    case Target::Kind::Not:
      return Target::make_not(resolve_target_impl(env, t->child(), in_progress));
    case Target::Kind::Opt:
      return Target::make_opt(resolve_target_impl(env, t->child(), in_progress));
    case Target::Kind::And:
      return Target::make_and(resolve_target_impl(env, t->left(), in_progress),
                              resolve_target_impl(env, t->right(), in_progress));
    case Target::Kind::Ref: {
      const std::string& id = t->ref_id();
      if (in_progress.contains(id))
        throw ResolveError(ResolveError::Kind::CyclicDefinition, true, id);
      const TargetPtr* def = env.find_target(id);
      if (!def)
        throw ResolveError(ResolveError::Kind::UnknownIdentifier, true, id);
      in_progress.insert(id);
      TargetPtr out = resolve_target_impl(env, *def, in_progress);
      in_progress.erase(id);
      return out;
    }
  }
  throw std::logic_error("resolve_target_impl: bad kind");
}

PolicyPtr resolve_policy_impl(const PolicyEnv& env, const PolicyPtr& p,
                              std::set<std::string>& targets_in_progress,
                              std::set<std::string>& policies_in_progress) {
  switch (p->kind()) {
    case Policy::Kind::Atom:
      return p;
    case Policy::Kind::Not:
      return Policy::make_not(resolve_policy_impl(
          env, p->child(), targets_in_progress, policies_in_progress));
    case Policy::Kind::Dbd:
      return Policy::make_dbd(resolve_policy_impl(
          env, p->child(), targets_in_progress, policies_in_progress));
    case Policy::Kind::And:
      return Policy::make_and(
          resolve_policy_impl(env, p->left(), targets_in_progress,
                              policies_in_progress),
          resolve_policy_impl(env, p->right(), targets_in_progress,
                              policies_in_progress));
    case Policy::Kind::Tar:
      return Policy::make_tar(
          resolve_target_impl(env, p->target(), targets_in_progress),
          resolve_policy_impl(env, p->child(), targets_in_progress,
                              policies_in_progress));
    case Policy::Kind::Ref: {
      const std::string& id = p->ref_id();
      if (policies_in_progress.contains(id))
        throw ResolveError(ResolveError::Kind::CyclicDefinition, false, id);
      const PolicyPtr* def = env.find_policy(id);
      if (!def)
        throw ResolveError(ResolveError::Kind::UnknownIdentifier, false, id);
      policies_in_progress.insert(id);
      PolicyPtr out = resolve_policy_impl(env, *def, targets_in_progress,
                                          policies_in_progress);
      policies_in_progress.erase(id);
      return out;
    }
  }
  throw std::logic_error("resolve_policy_impl: bad kind");
}

}  // namespace

TargetPtr resolve(const PolicyEnv& env, const TargetPtr& t) {
  std::set<std::string> in_progress;
  return resolve_target_impl(env, t, in_progress);
}

PolicyPtr resolve(const PolicyEnv& env, const PolicyPtr& p) {
  std::set<std::string> targets_in_progress, policies_in_progress;
  return resolve_policy_impl(env, p, targets_in_progress,
                             policies_in_progress);
}

TargetPtr resolve_target(const PolicyEnv& env, const std::string& id) {
  return resolve(env, Target::ref(id));
}

PolicyPtr resolve_policy(const PolicyEnv& env, const std::string& id) {
  return resolve(env, Policy::ref(id));
}

bool structurally_equal(const TargetPtr& a, const TargetPtr& b) {
  if (a == b) return true;
  if (!a || !b || a->kind() != b->kind()) return false;
  switch (a->kind()) {
    case Target::Kind::Atom:
      return a->attr_name() == b->attr_name() &&
             a->attr_value() == b->attr_value();
    case Target::Kind::Not:
    case Target::Kind::Opt:
      return structurally_equal(a->child(), b->child());
    case Target::Kind::And:
      return structurally_equal(a->left(), b->left()) &&
             structurally_equal(a->right(), b->right());
    case Target::Kind::Ref:
      return a->ref_id() == b->ref_id();
  }
  return false;
}

bool structurally_equal(const PolicyPtr& a, const PolicyPtr& b) {
  if (a == b) return true;
  if (!a || !b || a->kind() != b->kind()) return false;
  switch (a->kind()) {
    case Policy::Kind::Atom:
      return a->decision() == b->decision();
    case Policy::Kind::Not:
    case Policy::Kind::Dbd:
      return structurally_equal(a->child(), b->child());
    case Policy::Kind::And:
      return structurally_equal(a->left(), b->left()) &&
             structurally_equal(a->right(), b->right());
    case Policy::Kind::Tar:
      return structurally_equal(a->target(), b->target()) &&
             structurally_equal(a->child(), b->child());
    case Policy::Kind::Ref:
      return a->ref_id() == b->ref_id();
  }
  return false;
}

namespace {

void require_ref_free_target(const TargetPtr& t) {
  if (contains_ref(t))
    throw std::invalid_argument("analysis requires a resolved target");
}

void require_ref_free(const PolicyPtr& p) {
  if (contains_ref(p))
    throw std::invalid_argument("analysis requires a resolved policy");
}

void collect_atoms(const TargetPtr& t, std::set<AttrPair>& out) {
  switch (t->kind()) {
    case Target::Kind::Atom:
      out.insert({t->attr_name(), t->attr_value()});
      return;
    case Target::Kind::Not:
    case Target::Kind::Opt:
      collect_atoms(t->child(), out);
      return;
    case Target::Kind::And:
      collect_atoms(t->left(), out);
      collect_atoms(t->right(), out);
      return;
    case Target::Kind::Ref:
      throw std::logic_error("collect_atoms: unresolved ref");
  }
}

void collect_atoms(const PolicyPtr& p, std::set<AttrPair>& out) {
  switch (p->kind()) {
    case Policy::Kind::Atom:
      return;
    case Policy::Kind::Not:
    case Policy::Kind::Dbd:
      collect_atoms(p->child(), out);
      return;
    case Policy::Kind::And:
      collect_atoms(p->left(), out);
      collect_atoms(p->right(), out);
      return;
    case Policy::Kind::Tar:
      collect_atoms(p->target(), out);
      collect_atoms(p->child(), out);
      return;
    case Policy::Kind::Ref:
      throw std::logic_error("collect_atoms: unresolved ref");
  }
}

bool target_has_not(const TargetPtr& t) {
  switch (t->kind()) {
    case Target::Kind::Atom:
      return false;
    case Target::Kind::Not:
      return true;
    case Target::Kind::Opt:
      return target_has_not(t->child());
    case Target::Kind::And:
      return target_has_not(t->left()) || target_has_not(t->right());
    case Target::Kind::Ref:
      throw std::logic_error("target_has_not: unresolved ref");
  }
  return false;
}

void scan_flags(const PolicyPtr& p, StructuralFlags& f) {
  switch (p->kind()) {
    case Policy::Kind::Atom:
      if (p->decision() == Decision::NotApp) f.well_formed = false;
      return;
    case Policy::Kind::Not:
      f.without_pnot = false;
      scan_flags(p->child(), f);
      return;
    case Policy::Kind::Dbd:
      f.without_pdbd = false;
      scan_flags(p->child(), f);
      return;
    case Policy::Kind::And:
      scan_flags(p->left(), f);
      scan_flags(p->right(), f);
      return;
    case Policy::Kind::Tar:
      f.without_ptar = false;
      if (target_has_not(p->target())) f.targets_without_tnot = false;
      scan_flags(p->child(), f);
      return;
    case Policy::Kind::Ref:
      throw std::logic_error("scan_flags: unresolved ref");
  }
}

}  // namespace

std::set<AttrPair> atomic_targets(const TargetPtr& t) {
  require_ref_free_target(t);
  std::set<AttrPair> out;
  collect_atoms(t, out);
  return out;
}

std::set<AttrPair> atomic_targets(const PolicyPtr& p) {
  require_ref_free(p);
  std::set<AttrPair> out;
  collect_atoms(p, out);
  return out;
}

std::set<std::string> attributes(const PolicyPtr& p) {
  std::set<std::string> out;
  for (const auto& pair : atomic_targets(p)) out.insert(pair.name);
  return out;
}

std::size_t policy_size(const PolicyPtr& p) {
  require_ref_free(p);
  switch (p->kind()) {
    case Policy::Kind::Atom:
      return 1;
    case Policy::Kind::Not:
    case Policy::Kind::Dbd:
      return 1 + policy_size(p->child());
    case Policy::Kind::And:
      return 1 + policy_size(p->left()) + policy_size(p->right());
    case Policy::Kind::Tar:
      return 1 + policy_size(p->child());
    case Policy::Kind::Ref:
      break;
  }
  throw std::logic_error("policy_size: unresolved ref");
}

StructuralFlags structural_flags(const PolicyPtr& p) {
  require_ref_free(p);
  StructuralFlags f{true, true, true, true, true};
  scan_flags(p, f);
  return f;
}

bool contains_ref(const TargetPtr& t) {
  switch (t->kind()) {
    case Target::Kind::Atom:
      return false;
    case Target::Kind::Not:
    case Target::Kind::Opt:
      return contains_ref(t->child());
    case Target::Kind::And:
      return contains_ref(t->left()) || contains_ref(t->right());
    case Target::Kind::Ref:
      return true;
  }
  return false;
}

bool contains_ref(const PolicyPtr& p) {
  switch (p->kind()) {
    case Policy::Kind::Atom:
      return false;
    case Policy::Kind::Not:
    case Policy::Kind::Dbd:
      return contains_ref(p->child());
    case Policy::Kind::And:
      return contains_ref(p->left()) || contains_ref(p->right());
    case Policy::Kind::Tar:
      return contains_ref(p->target()) || contains_ref(p->child());
    case Policy::Kind::Ref:
      return true;
  }
  return false;
}

}  // namespace ptacl
