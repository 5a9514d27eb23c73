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

#include "ptacl/proof.hpp"

#include <array>

#include "ptacl/resistance.hpp"

namespace ptacl {

namespace {

struct ObligationToken {
  Obligation obligation;
  std::string_view token;
};

constexpr std::array<ObligationToken, 9> kObligationTokens = {{
    {Obligation::IsResistant, "isResistant"},
    {Obligation::IsWellFormed, "isWF"},
    {Obligation::IsWithoutNot, "isWN"},
    {Obligation::IsWithoutDbd, "isWD"},
    {Obligation::HasNoTarget, "isNoTarget"},
    {Obligation::IsWeaklyMonotonicPolicy, "isWM"},
    {Obligation::IsWeaklyMonotonicTarget, "isWMT"},
    {Obligation::CannotReturnAllow, "isCRA"},
    {Obligation::CannotReturnDeny, "isCRD"},
}};

struct RuleToken {
  RuleId rule;
  std::string_view token;
};

constexpr std::array<RuleToken, 30> kRuleTokens = {{
    {RuleId::ResWFWMWN, "ResWFWMWN"},
    {RuleId::ResWFWMWD, "ResWFWMWD"},
    {RuleId::ResCRA, "ResCRA"},
    {RuleId::ResNoTarget, "ResNoTarget"},
    {RuleId::ResPdbd, "ResPdbd"},
    {RuleId::ResPand, "ResPand"},
    {RuleId::ResExhaustive, "ResExhaustive"},
    {RuleId::WFBruteForce, "WFBruteForce"},
    {RuleId::WNBruteForce, "WNBruteForce"},
    {RuleId::WDBruteForce, "WDBruteForce"},
    {RuleId::NoTargetBruteForce, "NoTargetBruteForce"},
    {RuleId::WMPAtom, "WMPAtom"},
    {RuleId::WMPnot, "WMPnot"},
    {RuleId::WMPdbd, "WMPdbd"},
    {RuleId::WMPand, "WMPand"},
    {RuleId::WMPtar, "WMPtar"},
    {RuleId::WMTAtom, "WMTAtom"},
    {RuleId::WMTOpt, "WMTOpt"},
    {RuleId::WMTAnd, "WMTAnd"},
    {RuleId::CraPatomZero, "CRA-PatomZero"},
    {RuleId::CraPatomBot, "CRA-PatomBot"},
    {RuleId::CraPtar, "CRA-Ptar"},
    {RuleId::CraPdbd, "CRA-Pdbd"},
    {RuleId::CraPandL, "CRA-PandL"},
    {RuleId::CraPandR, "CRA-PandR"},
    {RuleId::CraPnotOfCrd, "CRA-PnotOfCRD"},
    {RuleId::CrdPatomOne, "CRD-PatomOne"},
    {RuleId::CrdPatomBot, "CRD-PatomBot"},
    {RuleId::CrdPtar, "CRD-Ptar"},
    {RuleId::CrdPnotOfCra, "CRD-PnotOfCRA"},
}};

}  // namespace

std::string_view to_token(Obligation o) {
  for (const auto& e : kObligationTokens)
    if (e.obligation == o) return e.token;
  throw std::logic_error("to_token: bad obligation");
}

std::string_view to_token(RuleId r) {
  for (const auto& e : kRuleTokens)
    if (e.rule == r) return e.token;
  throw std::logic_error("to_token: bad rule");
}

std::optional<Obligation> obligation_from_token(std::string_view token) {
  for (const auto& e : kObligationTokens)
    if (e.token == token) return e.obligation;
  return std::nullopt;
}

std::optional<RuleId> rule_from_token(std::string_view token) {
  for (const auto& e : kRuleTokens)
    if (e.token == token) return e.rule;
  return std::nullopt;
}

bool is_target_obligation(Obligation o) {
  return o == Obligation::IsWeaklyMonotonicTarget;
}

ProofSearch::ProofSearch(const NodeTable& table, ProofOptions opts)
    : table_(table), opts_(opts) {}

std::optional<ProofTree> ProofSearch::prove(Obligation goal,
                                            const std::string& subject) {
  auto memo_key = std::make_pair(static_cast<int>(goal), subject);
  if (auto it = memo_.find(memo_key); it != memo_.end()) return it->second;

  const PolicyNode* node = is_target_obligation(goal)
                               ? table_.find_target_node(subject)
                               : table_.find_policy_node(subject);
  if (!node)
    throw std::invalid_argument("ProofSearch: unknown node '" + subject + "'");
  std::optional<ProofTree> result = attempt(goal, *node);
  memo_.emplace(memo_key, result);
  return result;
}

std::optional<ProofTree> ProofSearch::scan_rule(const PolicyNode& node,
                                                Obligation goal, RuleId rule,
                                                bool ok) {
  if (!ok) return std::nullopt;
  return ProofTree{goal, node.id, rule, {}, 0};
}

std::optional<ProofTree> ProofSearch::attempt(Obligation goal,
                                              const PolicyNode& node) {
  switch (goal) {
    case Obligation::IsResistant:
      return attempt_resistant(node);
    case Obligation::IsWellFormed:
      return scan_rule(node, goal, RuleId::WFBruteForce,
                       structural_flags(node.policy).well_formed);
    case Obligation::IsWithoutNot:
      return scan_rule(node, goal, RuleId::WNBruteForce,
                       structural_flags(node.policy).without_pnot);
    case Obligation::IsWithoutDbd:
      return scan_rule(node, goal, RuleId::WDBruteForce,
                       structural_flags(node.policy).without_pdbd);
    case Obligation::HasNoTarget:
      return scan_rule(node, goal, RuleId::NoTargetBruteForce,
                       structural_flags(node.policy).without_ptar);
    case Obligation::IsWeaklyMonotonicPolicy:
      return attempt_wm_policy(node);
    case Obligation::IsWeaklyMonotonicTarget:
      return attempt_wm_target(node);
    case Obligation::CannotReturnAllow:
      return attempt_cra(node);
    case Obligation::CannotReturnDeny:
      return attempt_crd(node);
  }
  throw std::logic_error("ProofSearch: bad obligation");
}

std::optional<ProofTree> ProofSearch::attempt_resistant(
    const PolicyNode& node) {
  constexpr Obligation goal = Obligation::IsResistant;

  if (auto no_target = prove(Obligation::HasNoTarget, node.id))
    return ProofTree{goal, node.id, RuleId::ResNoTarget, {*no_target}, 0};

  if (auto cra = prove(Obligation::CannotReturnAllow, node.id))
    return ProofTree{goal, node.id, RuleId::ResCRA, {*cra}, 0};

  auto wf = prove(Obligation::IsWellFormed, node.id);
  if (wf) {
    auto wm = prove(Obligation::IsWeaklyMonotonicPolicy, node.id);
    if (wm) {
      if (auto wn = prove(Obligation::IsWithoutNot, node.id))
        return ProofTree{goal, node.id, RuleId::ResWFWMWN, {*wf, *wn, *wm}, 0};
      if (auto wd = prove(Obligation::IsWithoutDbd, node.id))
        return ProofTree{goal, node.id, RuleId::ResWFWMWD, {*wf, *wd, *wm}, 0};
    }
  }

  if (node.pkind == Policy::Kind::Dbd) {
    if (auto sub = prove(goal, node.operands[0]))
      return ProofTree{goal, node.id, RuleId::ResPdbd, {*sub}, 0};
  }
  if (node.pkind == Policy::Kind::And) {
    auto left = prove(goal, node.operands[0]);
    if (left) {
      if (auto right = prove(goal, node.operands[1]))
        return ProofTree{goal, node.id, RuleId::ResPand, {*left, *right}, 0};
    }
  }

  if (opts_.allow_exhaustive) {
    NfLattice lat(node.policy, opts_.max_lattice_bits);
    SearchOptions search_opts;
    search_opts.max_lattice_bits = opts_.max_lattice_bits;
    search_opts.limit = 1;
    if (find_counterexamples(node.policy, search_opts).empty())
      return ProofTree{goal, node.id, RuleId::ResExhaustive, {}, lat.size()};
  }
  return std::nullopt;
}

std::optional<ProofTree> ProofSearch::attempt_wm_policy(
    const PolicyNode& node) {
  constexpr Obligation goal = Obligation::IsWeaklyMonotonicPolicy;
  switch (node.pkind) {
    case Policy::Kind::Atom:
      return ProofTree{goal, node.id, RuleId::WMPAtom, {}, 0};
    case Policy::Kind::Not:
    case Policy::Kind::Dbd: {
      auto sub = prove(goal, node.operands[0]);
      if (!sub) return std::nullopt;
      RuleId rule = node.pkind == Policy::Kind::Not ? RuleId::WMPnot
                                                    : RuleId::WMPdbd;
      return ProofTree{goal, node.id, rule, {*sub}, 0};
    }
    case Policy::Kind::And: {
      auto left = prove(goal, node.operands[0]);
      if (!left) return std::nullopt;
      auto right = prove(goal, node.operands[1]);
      if (!right) return std::nullopt;
      return ProofTree{goal, node.id, RuleId::WMPand, {*left, *right}, 0};
    }
    case Policy::Kind::Tar: {
      auto target = prove(Obligation::IsWeaklyMonotonicTarget,
                          node.operands[0]);
      if (!target) return std::nullopt;
      auto body = prove(goal, node.operands[1]);
      if (!body) return std::nullopt;
      return ProofTree{goal, node.id, RuleId::WMPtar, {*target, *body}, 0};
    }
    case Policy::Kind::Ref:
      break;
  }
  throw std::logic_error("attempt_wm_policy: bad node");
}

std::optional<ProofTree> ProofSearch::attempt_wm_target(
    const PolicyNode& node) {
  constexpr Obligation goal = Obligation::IsWeaklyMonotonicTarget;
  switch (node.tkind) {
    case Target::Kind::Atom:
      return ProofTree{goal, node.id, RuleId::WMTAtom, {}, 0};
    case Target::Kind::Not:
      return std::nullopt;
    case Target::Kind::Opt: {
      auto sub = prove(goal, node.operands[0]);
      if (!sub) return std::nullopt;
      return ProofTree{goal, node.id, RuleId::WMTOpt, {*sub}, 0};
    }
    case Target::Kind::And: {
      auto left = prove(goal, node.operands[0]);
      if (!left) return std::nullopt;
      auto right = prove(goal, node.operands[1]);
      if (!right) return std::nullopt;
      return ProofTree{goal, node.id, RuleId::WMTAnd, {*left, *right}, 0};
    }
    case Target::Kind::Ref:
      break;
  }
  throw std::logic_error("attempt_wm_target: bad node");
}

std::optional<ProofTree> ProofSearch::attempt_cra(const PolicyNode& node) {
  constexpr Obligation goal = Obligation::CannotReturnAllow;
  switch (node.pkind) {
    case Policy::Kind::Atom:
      if (node.atom_decision == Decision::Deny)
        return ProofTree{goal, node.id, RuleId::CraPatomZero, {}, 0};
      if (node.atom_decision == Decision::NotApp)
        return ProofTree{goal, node.id, RuleId::CraPatomBot, {}, 0};
      return std::nullopt;
    case Policy::Kind::Tar: {
      auto body = prove(goal, node.operands[1]);
      if (!body) return std::nullopt;
      return ProofTree{goal, node.id, RuleId::CraPtar, {*body}, 0};
    }
    case Policy::Kind::Dbd: {
      auto sub = prove(goal, node.operands[0]);
      if (!sub) return std::nullopt;
      return ProofTree{goal, node.id, RuleId::CraPdbd, {*sub}, 0};
    }
    case Policy::Kind::And: {
      if (auto left = prove(goal, node.operands[0]))
        return ProofTree{goal, node.id, RuleId::CraPandL, {*left}, 0};
      if (auto right = prove(goal, node.operands[1]))
        return ProofTree{goal, node.id, RuleId::CraPandR, {*right}, 0};
      return std::nullopt;
    }
    case Policy::Kind::Not: {
      auto sub = prove(Obligation::CannotReturnDeny, node.operands[0]);
      if (!sub) return std::nullopt;
      return ProofTree{goal, node.id, RuleId::CraPnotOfCrd, {*sub}, 0};
    }
    case Policy::Kind::Ref:
      break;
  }
  throw std::logic_error("attempt_cra: bad node");
}

std::optional<ProofTree> ProofSearch::attempt_crd(const PolicyNode& node) {
  constexpr Obligation goal = Obligation::CannotReturnDeny;
  switch (node.pkind) {
    case Policy::Kind::Atom:
      if (node.atom_decision == Decision::Allow)
        return ProofTree{goal, node.id, RuleId::CrdPatomOne, {}, 0};
      if (node.atom_decision == Decision::NotApp)
        return ProofTree{goal, node.id, RuleId::CrdPatomBot, {}, 0};
      return std::nullopt;
    case Policy::Kind::Tar: {
      auto body = prove(goal, node.operands[1]);
      if (!body) return std::nullopt;
      return ProofTree{goal, node.id, RuleId::CrdPtar, {*body}, 0};
    }
    case Policy::Kind::Not: {
      auto sub = prove(Obligation::CannotReturnAllow, node.operands[0]);
      if (!sub) return std::nullopt;
      return ProofTree{goal, node.id, RuleId::CrdPnotOfCra, {*sub}, 0};
    }
    case Policy::Kind::Dbd:
    case Policy::Kind::And:
      return std::nullopt;
    case Policy::Kind::Ref:
      break;
  }
  throw std::logic_error("attempt_crd: bad node");
}

std::optional<ProofTree> prove_resistant(const PolicyEnv& env,
                                         const std::string& id,
                                         ProofOptions opts) {
  NodeTable table = NodeTable::build(env, id);
  return ProofSearch(table, opts).prove(Obligation::IsResistant, id);
}

std::optional<ProofTree> prove_resistant(const PolicyPtr& p,
                                         ProofOptions opts) {
  NodeTable table = NodeTable::build(p);
  return ProofSearch(table, opts).prove(Obligation::IsResistant,
                                        table.root());
}

std::optional<ProofTree> prove_weak_monotonic(const PolicyPtr& p) {
  NodeTable table = NodeTable::build(p);
  return ProofSearch(table).prove(Obligation::IsWeaklyMonotonicPolicy,
                                  table.root());
}

std::pair<std::optional<ProofTree>, std::optional<ProofTree>>
derive_cannot_return(const PolicyPtr& p) {
  NodeTable table = NodeTable::build(p);
  ProofSearch search(table);
  return {search.prove(Obligation::CannotReturnAllow, table.root()),
          search.prove(Obligation::CannotReturnDeny, table.root())};
}

}  // namespace ptacl
