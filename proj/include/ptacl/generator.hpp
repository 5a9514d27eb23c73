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

// Seeded random policy generation over the family P<m,n,k,l,r>: r policies
// of constructor height at most m, targets with at most n atomic leaves,
// atoms drawn from attributes "a1".."ak" and values "v1".."vl".

#ifndef PTACL_GENERATOR_HPP_
#define PTACL_GENERATOR_HPP_

#include <cstdint>
#include <vector>

#include "ptacl/ast.hpp"

namespace ptacl {

struct GenParams {
  int max_height = 1;            // m
  int max_target_width = 1;      // n
  int attribute_count = 1;       // k
  int values_per_attribute = 1;  // l
  int count = 1;                 // r
  std::uint64_t seed = 0;

  // Constructor restrictions for the monotonicity test families. All true
  // reproduces the unrestricted generator.
  bool with_pnot = true;
  bool with_pdbd = true;
  bool with_tnot = true;
};

// Generates the index-th policy of the family. Each index owns an
// independent RNG stream derived from (seed, index), so any subsequence of
// the family can be produced without generating the rest.
PolicyPtr generate_one(const GenParams& params, int index);

// All r policies, in index order.
std::vector<PolicyPtr> generate(const GenParams& params);

// The same policies packaged as definitions "p0".."p{r-1}".
PolicyEnv generate_env(const GenParams& params);

}  // namespace ptacl

#endif  // PTACL_GENERATOR_HPP_
