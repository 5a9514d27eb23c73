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

#include "ptacl/resistance.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <thread>

#include "ptacl/evaluator.hpp"
#include "ptacl/parser.hpp"
#include "ptacl/trilogic.hpp"

namespace ptacl {

namespace {

constexpr std::uint8_t kAllowOnly =
    1u << static_cast<int>(Decision::Allow);
constexpr std::uint8_t kNotAppOnly =
    1u << static_cast<int>(Decision::NotApp);

struct SetTables {
  std::array<std::uint8_t, 8> not_table{};
  std::array<std::uint8_t, 8> dbd_table{};
  std::array<std::array<std::uint8_t, 8>, 8> and_table{};

  SetTables() {
    for (std::uint8_t a = 1; a < 8; ++a) {
      not_table[a] = set_not(DecisionSet(a)).bits();
      dbd_table[a] = set_dbd(DecisionSet(a)).bits();
      for (std::uint8_t b = 1; b < 8; ++b)
        and_table[a][b] = set_and(DecisionSet(a), DecisionSet(b)).bits();
    }
  }
};

const SetTables& set_tables() {
  static const SetTables tables;
  return tables;
}

/// Policy compiled to a flat post-order program over lattice masks. Target
/// instructions produce TriValue codes, policy instructions decision-set
/// bitmasks; slot i holds instruction i's result.
class LatticeEvaluator {
 public:
  LatticeEvaluator(const PolicyPtr& p, const NfLattice& lat) : lat_(lat) {
    compile_policy(p);
  }

  std::size_t instr_count() const { return prog_.size(); }

  std::uint8_t eval_mask(std::uint64_t mask,
                         std::vector<std::uint8_t>& scratch) const {
    const SetTables& t = set_tables();
    for (std::size_t i = 0; i < prog_.size(); ++i) {
      const Instr& in = prog_[i];
      switch (in.op) {
        case Op::TAtom:
          scratch[i] = (mask & in.bit)         ? 2
                       : (mask & in.name_mask) ? 1
                                               : 0;
          break;
        case Op::TNot:
          scratch[i] = static_cast<std::uint8_t>(apply_unary(
              UnaryOpKind::Neg, static_cast<TriValue>(scratch[in.a])));
          break;
        case Op::TOpt:
          scratch[i] = static_cast<std::uint8_t>(apply_unary(
              UnaryOpKind::Opt, static_cast<TriValue>(scratch[in.a])));
          break;
        case Op::TAnd:
          scratch[i] = static_cast<std::uint8_t>(apply_binary(
              BinaryOpKind::WeakAnd, static_cast<TriValue>(scratch[in.a]),
              static_cast<TriValue>(scratch[in.b])));
          break;
        case Op::PAtom:
          scratch[i] = in.imm;
          break;
        case Op::PNot:
          scratch[i] = t.not_table[scratch[in.a]];
          break;
        case Op::PDbd:
          scratch[i] = t.dbd_table[scratch[in.a]];
          break;
        case Op::PAnd:
          scratch[i] = t.and_table[scratch[in.a]][scratch[in.b]];
          break;
        case Op::PTar: {
          std::uint8_t tv = scratch[in.a];
          scratch[i] = tv == 2   ? scratch[in.b]
                       : tv == 1 ? kNotAppOnly
                                 : static_cast<std::uint8_t>(kNotAppOnly |
                                                             scratch[in.b]);
          break;
        }
      }
    }
    return scratch[prog_.size() - 1];
  }

 private:
  enum class Op : std::uint8_t {
    TAtom,
    TNot,
    TOpt,
    TAnd,
    PAtom,
    PNot,
    PDbd,
    PAnd,
    PTar,
  };

  struct Instr {
    Op op;
    std::uint32_t a = 0;
    std::uint32_t b = 0;
    std::uint64_t bit = 0;
    std::uint64_t name_mask = 0;
    std::uint8_t imm = 0;
  };

  std::uint32_t emit(Instr in) {
    prog_.push_back(in);
    return static_cast<std::uint32_t>(prog_.size() - 1);
  }

  std::uint32_t compile_target(const TargetPtr& t) {
    switch (t->kind()) {
      case Target::Kind::Atom: {
        Instr in{Op::TAtom};
        const auto& base = lat_.base();
        for (std::size_t i = 0; i < base.size(); ++i) {
          if (base[i].name != t->attr_name()) continue;
          in.name_mask |= std::uint64_t{1} << i;
          if (base[i].value == t->attr_value()) in.bit = std::uint64_t{1} << i;
        }
        if (in.bit == 0)
          throw std::logic_error(
              "LatticeEvaluator: atomic target missing from lattice base");
        return emit(in);
      }
      case Target::Kind::Not: {
        std::uint32_t a = compile_target(t->child());
        return emit({Op::TNot, a});
      }
      case Target::Kind::Opt: {
        std::uint32_t a = compile_target(t->child());
        return emit({Op::TOpt, a});
      }
      case Target::Kind::And: {
        std::uint32_t a = compile_target(t->left());
        std::uint32_t b = compile_target(t->right());
        return emit({Op::TAnd, a, b});
      }
      case Target::Kind::Ref:
        break;
    }
    throw std::invalid_argument("LatticeEvaluator: unresolved target ref");
  }

  std::uint32_t compile_policy(const PolicyPtr& p) {
    switch (p->kind()) {
      case Policy::Kind::Atom: {
        Instr in{Op::PAtom};
        in.imm = DecisionSet::of(p->decision()).bits();
        return emit(in);
      }
      case Policy::Kind::Not: {
        std::uint32_t a = compile_policy(p->child());
        return emit({Op::PNot, a});
      }
      case Policy::Kind::Dbd: {
        std::uint32_t a = compile_policy(p->child());
        return emit({Op::PDbd, a});
      }
      case Policy::Kind::And: {
        std::uint32_t a = compile_policy(p->left());
        std::uint32_t b = compile_policy(p->right());
        return emit({Op::PAnd, a, b});
      }
      case Policy::Kind::Tar: {
        std::uint32_t a = compile_target(p->target());
        std::uint32_t b = compile_policy(p->child());
        return emit({Op::PTar, a, b});
      }
      case Policy::Kind::Ref:
        break;
    }
    throw std::invalid_argument("LatticeEvaluator: unresolved policy ref");
  }

  const NfLattice& lat_;
  std::vector<Instr> prog_;
};

std::vector<std::uint8_t> fill_table(const LatticeEvaluator& ev,
                                     std::uint64_t n, unsigned jobs) {
  std::vector<std::uint8_t> table(n);
  auto work = [&](std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::uint8_t> scratch(ev.instr_count());
    for (std::uint64_t m = lo; m < hi; ++m) table[m] = ev.eval_mask(m, scratch);
  };
  if (jobs <= 1 || n < 1024) {
    work(0, n);
    return table;
  }
  std::vector<std::thread> threads;
  std::uint64_t chunk = (n + jobs - 1) / jobs;
  for (unsigned j = 0; j < jobs; ++j) {
    std::uint64_t lo = j * chunk;
    if (lo >= n) break;
    threads.emplace_back(work, lo, std::min(n, lo + chunk));
  }
  for (auto& t : threads) t.join();
  return table;
}

ResistanceVerdict search(const PolicyPtr& p, const SearchOptions& opts) {
  NfLattice lat(p, opts.max_lattice_bits);
  LatticeEvaluator ev(p, lat);
  std::vector<std::uint8_t> table = fill_table(ev, lat.size(), opts.jobs);

  ResistanceVerdict verdict{true, lat.size(), lat.size(), {}};
  const std::size_t k = lat.bits();
  lat.for_each_canonical([&](std::uint64_t mask) {
    if (table[mask] == kAllowOnly) return true;
    for (std::size_t i = 0; i < k; ++i) {
      if (!(mask >> i & 1)) continue;
      std::uint64_t sub = mask & ~(std::uint64_t{1} << i);
      if (table[sub] != kAllowOnly) continue;
      verdict.examples.emplace_back(p, lat.request_of(sub),
                                    lat.request_of(mask), lat.base()[i]);
      if (opts.limit && verdict.examples.size() >= opts.limit) return false;
    }
    return true;
  });
  verdict.resistant = verdict.examples.empty();
  return verdict;
}

}  // namespace

CounterExample::CounterExample(const PolicyPtr& p, Request smaller_req,
                               Request larger_req, AttrPair removed_pair)
    : smaller(std::move(smaller_req)),
      larger(std::move(larger_req)),
      removed(std::move(removed_pair)),
      eval_smaller(eval_policy(p, smaller)),
      eval_larger(eval_policy(p, larger)) {
  if (!smaller.subset_of(larger) ||
      larger.size() != smaller.size() + 1 || !larger.contains(removed) ||
      smaller.contains(removed))
    throw std::logic_error("CounterExample: larger must extend smaller by "
                           "exactly the removed pair");
  if (!eval_smaller.is_singleton(Decision::Allow))
    throw std::logic_error("CounterExample: smaller request of " +
                           render_request(smaller) + " does not evaluate to " +
                           "{ALLOW}");
  if (eval_larger.is_singleton(Decision::Allow))
    throw std::logic_error("CounterExample: larger request " +
                           render_request(larger) + " still evaluates to " +
                           "{ALLOW}");
}

std::vector<CounterExample> find_counterexamples(const PolicyPtr& p,
                                                 const SearchOptions& opts) {
  return search(p, opts).examples;
}

ResistanceVerdict is_resistant(const PolicyPtr& p, const SearchOptions& opts) {
  return search(p, opts);
}

ResistanceVerdict naive_oracle(const PolicyPtr& p, std::size_t cap_bits) {
  NfLattice lat(p, cap_bits);
  const std::uint64_t n = lat.size();
  std::vector<std::uint8_t> table(n);
  for (std::uint64_t m = 0; m < n; ++m)
    table[m] = eval_policy(p, lat.request_of(m)).bits();

  bool violated = false;
  for (std::uint64_t q = 0; q < n && !violated; ++q) {
    if (table[q] == kAllowOnly || q == 0) continue;
    for (std::uint64_t sub = (q - 1) & q;; sub = (sub - 1) & q) {
      if (table[sub] == kAllowOnly) {
        violated = true;
        break;
      }
      if (sub == 0) break;
    }
  }

  ResistanceVerdict verdict{!violated, n, n, {}};
  if (!violated) return verdict;

  const std::size_t k = lat.bits();
  lat.for_each_canonical([&](std::uint64_t mask) {
    if (table[mask] == kAllowOnly) return true;
    for (std::size_t i = 0; i < k; ++i) {
      if (!(mask >> i & 1)) continue;
      std::uint64_t sub = mask & ~(std::uint64_t{1} << i);
      if (table[sub] == kAllowOnly)
        verdict.examples.emplace_back(p, lat.request_of(sub),
                                      lat.request_of(mask), lat.base()[i]);
    }
    return true;
  });
  if (verdict.examples.empty())
    throw std::logic_error(
        "naive_oracle: subset violation with no one-step violation");
  return verdict;
}

}  // namespace ptacl
