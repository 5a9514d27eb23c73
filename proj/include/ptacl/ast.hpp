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

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ptacl {

/// A policy decision. The numeric encoding fixes the canonical print order
/// ALLOW, DENY, BOT and the bit positions used by DecisionSet.
enum class Decision : std::uint8_t {
  Allow = 0,
  Deny = 1,
  NotApp = 2,
};

std::string_view to_string(Decision d);

/// Nonempty subset of {Allow, Deny, NotApp}, stored as a 3-bit mask.
class DecisionSet {
 public:
  /// Throws std::invalid_argument if `bits` is empty or has stray bits.
  explicit DecisionSet(std::uint8_t bits);

  static DecisionSet of(Decision d) {
    return DecisionSet(static_cast<std::uint8_t>(1u << static_cast<int>(d)));
  }

  std::uint8_t bits() const { return bits_; }
  bool contains(Decision d) const {
    return (bits_ & (1u << static_cast<int>(d))) != 0;
  }
  bool is_singleton(Decision d) const {
    return bits_ == (1u << static_cast<int>(d));
  }
  std::size_t size() const;

  DecisionSet operator|(DecisionSet other) const {
    return DecisionSet(static_cast<std::uint8_t>(bits_ | other.bits_));
  }

  bool operator==(const DecisionSet&) const = default;

 private:
  std::uint8_t bits_;
};

class Target;
class Policy;
using TargetPtr = std::shared_ptr<const Target>;
using PolicyPtr = std::shared_ptr<const Policy>;

/// Target expression tree. Immutable; subtrees are shared freely.
class Target {
 public:
  enum class Kind : std::uint8_t { Atom, Not, Opt, And, Ref };

  static TargetPtr atom(std::string name, std::string value);
  static TargetPtr make_not(TargetPtr t);
  static TargetPtr make_opt(TargetPtr t);
  static TargetPtr make_and(TargetPtr left, TargetPtr right);
  static TargetPtr ref(std::string id);

  Kind kind() const { return kind_; }
  const std::string& attr_name() const { return name_; }
  const std::string& attr_value() const { return value_; }
  const std::string& ref_id() const { return name_; }
  const TargetPtr& child() const { return left_; }  // Not / Opt
  const TargetPtr& left() const { return left_; }
  const TargetPtr& right() const { return right_; }

 private:
  Target(Kind kind, std::string name, std::string value, TargetPtr left,
         TargetPtr right)
      : kind_(kind),
        name_(std::move(name)),
        value_(std::move(value)),
        left_(std::move(left)),
        right_(std::move(right)) {}

  Kind kind_;
  std::string name_;   // Atom: attribute name; Ref: identifier
  std::string value_;  // Atom only
  TargetPtr left_, right_;
};

/// Policy expression tree.
///
/// Atom may carry NotApp: well-formedness is a predicate
/// (see structural_flags), not a construction constraint.
class Policy {
 public:
  enum class Kind : std::uint8_t { Atom, Not, Dbd, And, Tar, Ref };

  static PolicyPtr atom(Decision d);
  static PolicyPtr make_not(PolicyPtr p);
  static PolicyPtr make_dbd(PolicyPtr p);
  static PolicyPtr make_and(PolicyPtr left, PolicyPtr right);
  static PolicyPtr make_tar(TargetPtr target, PolicyPtr body);
  static PolicyPtr ref(std::string id);

  Kind kind() const { return kind_; }
  Decision decision() const { return decision_; }
  const std::string& ref_id() const { return id_; }
  const TargetPtr& target() const { return target_; }
  const PolicyPtr& child() const { return left_; }  // Not / Dbd / Tar body
  const PolicyPtr& left() const { return left_; }
  const PolicyPtr& right() const { return right_; }

 private:
  Policy(Kind kind, Decision d, std::string id, TargetPtr target,
         PolicyPtr left, PolicyPtr right)
      : kind_(kind),
        decision_(d),
        id_(std::move(id)),
        target_(std::move(target)),
        left_(std::move(left)),
        right_(std::move(right)) {}

  Kind kind_;
  Decision decision_;  // Atom only
  std::string id_;     // Ref only
  TargetPtr target_;   // Tar only
  PolicyPtr left_, right_;
};

/// One attribute name-value pair.
struct AttrPair {
  std::string name;
  std::string value;

  auto operator<=>(const AttrPair&) const = default;
};

/// A request: a finite set of attribute name-value pairs, kept sorted
/// (lexicographic by name then value) with duplicates collapsed.
class Request {
 public:
  Request() = default;
  explicit Request(std::vector<AttrPair> pairs);

  const std::vector<AttrPair>& pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }

  bool contains(const AttrPair& p) const;
  bool has_attribute(std::string_view name) const;
  bool subset_of(const Request& other) const;

  Request with(AttrPair p) const;
  Request without(const AttrPair& p) const;

  bool operator==(const Request&) const = default;

 private:
  std::vector<AttrPair> pairs_;
};

/// Named target and policy definitions, in definition order. Targets and
/// policies live in separate namespaces. References are not validated here;
/// resolve() reports unknown identifiers and cycles.
class PolicyEnv {
 public:
  struct Def {
    bool is_target;
    std::string id;
  };

  /// Throws std::invalid_argument if `id` is already defined in the same
  /// namespace.
  void define_target(std::string id, TargetPtr t);
  void define_policy(std::string id, PolicyPtr p);

  const TargetPtr* find_target(const std::string& id) const;
  const PolicyPtr* find_policy(const std::string& id) const;

  const std::vector<Def>& definitions() const { return defs_; }

 private:
  std::vector<Def> defs_;
  std::map<std::string, TargetPtr> targets_;
  std::map<std::string, PolicyPtr> policies_;
};

class ResolveError : public std::runtime_error {
 public:
  enum class Kind { UnknownIdentifier, CyclicDefinition };

  ResolveError(Kind kind, bool is_target, std::string id);

  Kind kind() const { return kind_; }
  bool is_target() const { return is_target_; }
  const std::string& id() const { return id_; }

 private:
  Kind kind_;
  bool is_target_;
  std::string id_;
};

/// Inline every Ref in the named definition; the result is Ref-free.
PolicyPtr resolve_policy(const PolicyEnv& env, const std::string& id);
TargetPtr resolve_target(const PolicyEnv& env, const std::string& id);

/// Inline every Ref in an expression against `env`.
PolicyPtr resolve(const PolicyEnv& env, const PolicyPtr& p);
TargetPtr resolve(const PolicyEnv& env, const TargetPtr& t);

bool structurally_equal(const TargetPtr& a, const TargetPtr& b);
bool structurally_equal(const PolicyPtr& a, const PolicyPtr& b);

/// Syntactic predicates over a fully resolved policy tree.
struct StructuralFlags {
  bool well_formed;           // no Patom Bot
  bool without_pnot;          // no Pnot
  bool without_pdbd;          // no Pdbd
  bool without_ptar;          // no Ptar
  bool targets_without_tnot;  // no Tnot inside any target

  bool operator==(const StructuralFlags&) const = default;
};

// The following analyses require a Ref-free tree and throw
// std::invalid_argument otherwise.

/// The set A(p) of atomic targets occurring in p.
std::set<AttrPair> atomic_targets(const PolicyPtr& p);
std::set<AttrPair> atomic_targets(const TargetPtr& t);

/// Attribute names occurring in A(p).
std::set<std::string> attributes(const PolicyPtr& p);

/// Number of policy constructors (target constructors excluded).
std::size_t policy_size(const PolicyPtr& p);

StructuralFlags structural_flags(const PolicyPtr& p);

bool contains_ref(const PolicyPtr& p);
bool contains_ref(const TargetPtr& t);

}  // namespace ptacl
