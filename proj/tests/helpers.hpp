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

#include <initializer_list>
#include <random>
#include <utility>
#include <vector>

#include "ptacl/ast.hpp"
#include "ptacl/parser.hpp"

namespace ptacl::test {

// The running nationality example: p1 denies Austrian nationals (allowing
// everyone else), p2 allows French nationals (denying everyone else).
inline const char* kNationalityDoc =
    "t1 :: (Tatom \"nat\" \"AT\")\n"
    "p1 : Pnot (Pdbd (Pnot (Ptar t1 (Patom Zero))))\n"
    "t2 :: (Tatom \"nat\" \"FR\")\n"
    "p2 : Pdbd (Ptar t2 (Patom One))\n";

inline PolicyEnv nationality_env() { return parse_document(kNationalityDoc); }

inline Request req(
    std::initializer_list<std::pair<const char*, const char*>> pairs) {
  std::vector<AttrPair> v;
  for (const auto& [n, val] : pairs) v.push_back({n, val});
  return Request(std::move(v));
}

inline DecisionSet ds(std::initializer_list<Decision> decisions) {
  std::uint8_t bits = 0;
  for (Decision d : decisions) bits |= static_cast<std::uint8_t>(
      1u << static_cast<int>(d));
  return DecisionSet(bits);
}

// Random request over a small vocabulary plus occasional foreign pairs, for
// the normal-form and monotonicity properties.
inline Request random_request(std::mt19937_64& rng, int attrs, int vals,
                              bool with_foreign = true) {
  std::vector<AttrPair> pairs;
  for (int a = 1; a <= attrs; ++a) {
    for (int v = 1; v <= vals; ++v) {
      if (rng() % 3 == 0)
        pairs.push_back(
            {"a" + std::to_string(a), "v" + std::to_string(v)});
    }
  }
  if (with_foreign && rng() % 4 == 0) pairs.push_back({"zz", "q"});
  return Request(std::move(pairs));
}

// Random subset of a request's pairs.
inline Request random_subset(std::mt19937_64& rng, const Request& q) {
  std::vector<AttrPair> pairs;
  for (const AttrPair& p : q.pairs())
    if (rng() % 2 == 0) pairs.push_back(p);
  return Request(std::move(pairs));
}

}  // namespace ptacl::test
