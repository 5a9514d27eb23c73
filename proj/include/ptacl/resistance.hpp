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
#include <vector>

#include "ptacl/ast.hpp"
#include "ptacl/normal_form.hpp"

namespace ptacl {

/// One resistance violation: removing `removed` from `larger` turns a
/// non-{Allow} evaluation into {Allow}. Construction re-evaluates both
/// requests and throws std::logic_error when the claim does not hold, so a
/// CounterExample is trustworthy by existence.
struct CounterExample {
  Request smaller;
  Request larger;
  AttrPair removed;
  DecisionSet eval_smaller;
  DecisionSet eval_larger;

  CounterExample(const PolicyPtr& p, Request smaller_req, Request larger_req,
                 AttrPair removed_pair);

  bool operator==(const CounterExample&) const = default;
};

struct SearchOptions {
  std::size_t max_lattice_bits = kDefaultLatticeCapBits;
  std::size_t limit = 0;  // 0 = report all counter-examples
  unsigned jobs = 1;
};

/// resistant == examples.empty(). checked_requests counts lattice points,
/// evaluations counts policy evaluations performed (for the complexity
/// bound 2^k * (k+1)).
struct ResistanceVerdict {
  bool resistant;
  std::uint64_t checked_requests;
  std::uint64_t evaluations;
  std::vector<CounterExample> examples;
};

/// One-step search over the normal-form lattice: for every request q with
/// eval(q) != {Allow}, test each q minus one pair for {Allow}. Output is in
/// canonical lattice order and independent of `jobs`.
std::vector<CounterExample> find_counterexamples(const PolicyPtr& p,
                                                 const SearchOptions& opts = {});

ResistanceVerdict is_resistant(const PolicyPtr& p,
                               const SearchOptions& opts = {});

/// All-pairs oracle: checks every q' subseteq q over the lattice directly
/// against the reference evaluator. Test oracle only; tight cap.
ResistanceVerdict naive_oracle(const PolicyPtr& p, std::size_t cap_bits = 12);

}  // namespace ptacl
