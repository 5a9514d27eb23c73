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

#include "ptacl/generator.hpp"

#include <algorithm>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "ptacl/bench.hpp"
#include "ptacl/evaluator.hpp"
#include "ptacl/normal_form.hpp"
#include "ptacl/parser.hpp"

using namespace ptacl;

namespace {

int policy_height(const PolicyPtr& p) {
  switch (p->kind()) {
    case Policy::Kind::Atom:
      return 1;
    case Policy::Kind::Not:
    case Policy::Kind::Dbd:
      return 1 + policy_height(p->child());
    case Policy::Kind::And:
      return 1 + std::max(policy_height(p->left()), policy_height(p->right()));
    case Policy::Kind::Tar:
      return 1 + policy_height(p->child());
    case Policy::Kind::Ref:
      break;
  }
  throw std::logic_error("policy_height: unexpected node");
}

int target_width(const TargetPtr& t) {
  switch (t->kind()) {
    case Target::Kind::Atom:
      return 1;
    case Target::Kind::Not:
    case Target::Kind::Opt:
      return target_width(t->child());
    case Target::Kind::And:
      return target_width(t->left()) + target_width(t->right());
    case Target::Kind::Ref:
      break;
  }
  throw std::logic_error("target_width: unexpected node");
}

int target_height(const TargetPtr& t) {
  switch (t->kind()) {
    case Target::Kind::Atom:
      return 1;
    case Target::Kind::Not:
    case Target::Kind::Opt:
      return 1 + target_height(t->child());
    case Target::Kind::And:
      return 1 + std::max(target_height(t->left()), target_height(t->right()));
    case Target::Kind::Ref:
      break;
  }
  throw std::logic_error("target_height: unexpected node");
}

struct Shape {
  bool has_pnot = false;
  bool has_pdbd = false;
  bool has_tnot = false;
  std::vector<TargetPtr> targets;
};

void collect_target(const TargetPtr& t, Shape& shape) {
  if (t->kind() == Target::Kind::Not) shape.has_tnot = true;
  if (t->kind() == Target::Kind::Not || t->kind() == Target::Kind::Opt)
    collect_target(t->child(), shape);
  if (t->kind() == Target::Kind::And) {
    collect_target(t->left(), shape);
    collect_target(t->right(), shape);
  }
}

void collect(const PolicyPtr& p, Shape& shape) {
  switch (p->kind()) {
    case Policy::Kind::Atom:
      return;
    case Policy::Kind::Not:
      shape.has_pnot = true;
      return collect(p->child(), shape);
    case Policy::Kind::Dbd:
      shape.has_pdbd = true;
      return collect(p->child(), shape);
    case Policy::Kind::And:
      collect(p->left(), shape);
      return collect(p->right(), shape);
    case Policy::Kind::Tar:
      shape.targets.push_back(p->target());
      collect_target(p->target(), shape);
      return collect(p->child(), shape);
    case Policy::Kind::Ref:
      break;
  }
  throw std::logic_error("collect: unexpected node");
}

GenParams family(int m, int n, int k, int l, int r, std::uint64_t seed) {
  GenParams params;
  params.max_height = m;
  params.max_target_width = n;
  params.attribute_count = k;
  params.values_per_attribute = l;
  params.count = r;
  params.seed = seed;
  return params;
}

}  // namespace

TEST_CASE("generation is deterministic and independently indexable") {
  GenParams params = family(4, 3, 3, 3, 80, 7);
  std::vector<PolicyPtr> once = generate(params);
  std::vector<PolicyPtr> twice = generate(params);
  REQUIRE(once.size() == 80);
  for (std::size_t i = 0; i < once.size(); ++i) {
    CHECK(structurally_equal(once[i], twice[i]));
    CHECK(structurally_equal(once[i],
                             generate_one(params, static_cast<int>(i))));
  }
}

TEST_CASE("generated policies respect every size bound") {
  GenParams params = family(4, 3, 2, 2, 300, 11);
  for (const PolicyPtr& p : generate(params)) {
    CAPTURE(render_policy(p));
    CHECK(policy_height(p) <= params.max_height);
    CHECK(structural_flags(p).well_formed);

    Shape shape;
    collect(p, shape);
    for (const TargetPtr& t : shape.targets) {
      CHECK(target_width(t) <= params.max_target_width);
      CHECK(target_height(t) <= params.max_target_width);
    }

    for (const auto& [attr, value] : atomic_targets(p)) {
      CHECK((attr == "a1" || attr == "a2"));
      CHECK((value == "v1" || value == "v2"));
    }
  }
}

TEST_CASE("height one gives atomic policies only") {
  GenParams params = family(1, 3, 3, 3, 50, 3);
  for (const PolicyPtr& p : generate(params)) {
    CHECK(p->kind() == Policy::Kind::Atom);
    CHECK(policy_size(p) == 1);
  }
}

TEST_CASE("constructor restrictions are honored") {
  GenParams base = family(5, 3, 2, 2, 200, 17);

  SUBCASE("no policy negation") {
    base.with_pnot = false;
    for (const PolicyPtr& p : generate(base)) {
      Shape shape;
      collect(p, shape);
      CHECK_FALSE(shape.has_pnot);
    }
  }
  SUBCASE("no deny-by-default") {
    base.with_pdbd = false;
    for (const PolicyPtr& p : generate(base)) {
      Shape shape;
      collect(p, shape);
      CHECK_FALSE(shape.has_pdbd);
    }
  }
  SUBCASE("no target negation") {
    base.with_tnot = false;
    for (const PolicyPtr& p : generate(base)) {
      Shape shape;
      collect(p, shape);
      CHECK_FALSE(shape.has_tnot);
    }
  }
}

TEST_CASE("different seeds give different families") {
  GenParams a = family(4, 3, 3, 3, 50, 1);
  GenParams b = family(4, 3, 3, 3, 50, 2);
  std::vector<PolicyPtr> pa = generate(a);
  std::vector<PolicyPtr> pb = generate(b);
  int differing = 0;
  for (std::size_t i = 0; i < pa.size(); ++i)
    if (!structurally_equal(pa[i], pb[i])) ++differing;
  CHECK(differing > 0);
}

TEST_CASE("generator parameters are validated") {
  GenParams params;
  params.max_height = 0;
  CHECK_THROWS_AS(generate(params), std::invalid_argument);
  params = GenParams{};
  params.count = 0;
  CHECK_THROWS_AS(generate(params), std::invalid_argument);
  params = GenParams{};
  CHECK_THROWS_AS(generate_one(params, -1), std::invalid_argument);
  CHECK_THROWS_AS(generate_one(params, 1), std::invalid_argument);
}

TEST_CASE("generated environments name policies in order") {
  GenParams params = family(3, 2, 2, 2, 5, 9);
  PolicyEnv env = generate_env(params);
  std::vector<PolicyPtr> policies = generate(params);
  for (int i = 0; i < 5; ++i) {
    const PolicyPtr* p = env.find_policy("p" + std::to_string(i));
    REQUIRE(p != nullptr);
    CHECK(structurally_equal(*p, policies[static_cast<std::size_t>(i)]));
  }
  // The canonical rendering round-trips through the parser.
  PolicyEnv reparsed = parse_document(render_document(env));
  CHECK(render_document(reparsed) == render_document(env));
}

TEST_CASE("decisive singletons survive request growth without Tnot and Pdbd") {
  GenParams params = family(4, 3, 3, 3, 200, 29);
  params.with_tnot = false;
  params.with_pdbd = false;
  std::mt19937_64 rng(4242);
  for (const PolicyPtr& p : generate(params)) {
    Request max = max_request(p);
    for (int trial = 0; trial < 4; ++trial) {
      Request q = ptacl::test::random_subset(rng, max);
      DecisionSet small = eval_policy(p, q);
      if (small.size() != 1 || small.contains(Decision::NotApp)) continue;
      Request grown = q;
      for (const AttrPair& pair : max.pairs())
        if (rng() % 2 == 0) grown = grown.with(pair);
      CAPTURE(render_policy(p));
      CAPTURE(render_request(q));
      CAPTURE(render_request(grown));
      CHECK(eval_policy(p, grown) == small);
    }
  }
}

TEST_CASE("allow singletons survive request growth without Tnot and Pnot") {
  GenParams params = family(4, 3, 3, 3, 200, 31);
  params.with_tnot = false;
  params.with_pnot = false;
  std::mt19937_64 rng(2424);
  DecisionSet allow = ptacl::test::ds({Decision::Allow});
  for (const PolicyPtr& p : generate(params)) {
    Request max = max_request(p);
    for (int trial = 0; trial < 4; ++trial) {
      Request q = ptacl::test::random_subset(rng, max);
      if (eval_policy(p, q) != allow) continue;
      Request grown = q;
      for (const AttrPair& pair : max.pairs())
        if (rng() % 2 == 0) grown = grown.with(pair);
      CAPTURE(render_policy(p));
      CAPTURE(render_request(q));
      CAPTURE(render_request(grown));
      CHECK(eval_policy(p, grown) == allow);
    }
  }
}

TEST_CASE("bench produces one record per policy") {
  GenParams params = family(3, 2, 2, 2, 40, 5);
  BenchOptions opts;
  BenchResult result = run_bench(params, opts);
  REQUIRE(result.records.size() == 40);
  for (int i = 0; i < 40; ++i) {
    const BenchRecord& rec = result.records[static_cast<std::size_t>(i)];
    CHECK(rec.index == i);
    CHECK(rec.size >= 1);
    if (rec.verdict != BenchRecord::Verdict::Resistant) CHECK_FALSE(rec.proved);
  }
  CHECK(result.summary.total == 40);
  CHECK(result.summary.resistant + result.summary.capped <= 40);

  std::string csv = bench_csv(result);
  CHECK(csv.rfind("index,size,atoms,attrs,resistant,ce_count,search_us,"
                  "proved,proof_us\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 42);
  CHECK(csv.find("# summary: ") != std::string::npos);
}

TEST_CASE("bench without timings is reproducible across jobs") {
  GenParams params = family(3, 2, 2, 2, 30, 13);
  BenchOptions opts;
  opts.record_timings = false;

  BenchResult once = run_bench(params, opts);
  for (const BenchRecord& rec : once.records) {
    CHECK(rec.search_us == 0);
    CHECK(rec.proof_us == 0);
  }

  BenchOptions parallel = opts;
  parallel.jobs = 4;
  CHECK(bench_csv(once) == bench_csv(run_bench(params, opts)));
  CHECK(bench_csv(once) == bench_csv(run_bench(params, parallel)));
}

TEST_CASE("height-one families are fully resistant and fully proved") {
  GenParams params = family(1, 1, 2, 2, 60, 21);
  BenchOptions opts;
  BenchResult result = run_bench(params, opts);
  CHECK(result.summary.capped == 0);
  CHECK(result.summary.resistant == 60);
  CHECK(result.summary.proved == 60);
  CHECK(result.summary.resistant_ratio == doctest::Approx(1.0));
  CHECK(result.summary.proof_ratio == doctest::Approx(1.0));
}
