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

#include "ptacl/evaluator.hpp"

namespace ptacl {

Decision decision_not(Decision d) {
  switch (d) {
    case Decision::Allow:
      return Decision::Deny;
    case Decision::Deny:
      return Decision::Allow;
    case Decision::NotApp:
      return Decision::NotApp;
  }
  throw std::logic_error("decision_not: bad decision");
}

Decision decision_dbd(Decision d) {
  return d == Decision::NotApp ? Decision::Deny : d;
}

Decision decision_and(Decision a, Decision b) {
  if (a == Decision::Deny || b == Decision::Deny) return Decision::Deny;
  if (a == Decision::NotApp || b == Decision::NotApp) return Decision::NotApp;
  return Decision::Allow;
}

namespace {

template <typename F>
DecisionSet map_set(DecisionSet s, F&& f) {
  std::uint8_t bits = 0;
  for (Decision d : {Decision::Allow, Decision::Deny, Decision::NotApp}) {
    if (s.contains(d))
      bits |= static_cast<std::uint8_t>(1u << static_cast<int>(f(d)));
  }
  return DecisionSet(bits);
}

}  // namespace

DecisionSet set_not(DecisionSet s) { return map_set(s, decision_not); }

DecisionSet set_dbd(DecisionSet s) { return map_set(s, decision_dbd); }

DecisionSet set_and(DecisionSet a, DecisionSet b) {
  std::uint8_t bits = 0;
  for (Decision x : {Decision::Allow, Decision::Deny, Decision::NotApp}) {
    if (!a.contains(x)) continue;
    for (Decision y : {Decision::Allow, Decision::Deny, Decision::NotApp}) {
      if (!b.contains(y)) continue;
      bits |= static_cast<std::uint8_t>(
          1u << static_cast<int>(decision_and(x, y)));
    }
  }
  return DecisionSet(bits);
}

TriValue eval_target(const TargetPtr& t, const Request& q) {
  switch (t->kind()) {
    case Target::Kind::Atom: {
      if (q.contains({t->attr_name(), t->attr_value()})) return TriValue::One;
      if (!q.has_attribute(t->attr_name())) return TriValue::Bot;
      return TriValue::Zero;
    }
    case Target::Kind::Not:
      return apply_unary(UnaryOpKind::Neg, eval_target(t->child(), q));
    case Target::Kind::Opt:
      return apply_unary(UnaryOpKind::Opt, eval_target(t->child(), q));
    case Target::Kind::And:
      return apply_binary(BinaryOpKind::WeakAnd, eval_target(t->left(), q),
                          eval_target(t->right(), q));
    case Target::Kind::Ref:
      break;
  }
  throw std::invalid_argument("eval_target: unresolved ref");
}

DecisionSet eval_policy(const PolicyPtr& p, const Request& q) {
  switch (p->kind()) {
    case Policy::Kind::Atom:
      return DecisionSet::of(p->decision());
    case Policy::Kind::Not:
      return set_not(eval_policy(p->child(), q));
    case Policy::Kind::Dbd:
      return set_dbd(eval_policy(p->child(), q));
    case Policy::Kind::And:
      return set_and(eval_policy(p->left(), q), eval_policy(p->right(), q));
    case Policy::Kind::Tar: {
      switch (eval_target(p->target(), q)) {
        case TriValue::One:
          return eval_policy(p->child(), q);
        case TriValue::Zero:
          return DecisionSet::of(Decision::NotApp);
        case TriValue::Bot:
          return DecisionSet::of(Decision::NotApp) |
                 eval_policy(p->child(), q);
      }
      throw std::logic_error("eval_policy: bad target value");
    }
    case Policy::Kind::Ref:
      break;
  }
  throw std::invalid_argument("eval_policy: unresolved ref");
}

TriValue eval_target(const PolicyEnv& env, const std::string& id,
                     const Request& q) {
  return eval_target(resolve_target(env, id), q);
}

DecisionSet eval_policy(const PolicyEnv& env, const std::string& id,
                        const Request& q) {
  return eval_policy(resolve_policy(env, id), q);
}

}  // namespace ptacl
