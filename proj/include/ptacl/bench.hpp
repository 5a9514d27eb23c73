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

// Benchmark harness: generates a policy family, runs the complete
// counter-example search on each policy and attempts a structural proof for
// the resistant ones, recording sizes, verdicts and timings.

#ifndef PTACL_BENCH_HPP_
#define PTACL_BENCH_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "ptacl/generator.hpp"

namespace ptacl {

struct BenchRecord {
  enum class Verdict : std::uint8_t { NotResistant, Resistant, Capped };

  int index = 0;
  int size = 0;   // constructor count
  int atoms = 0;  // |A(p)|
  int attrs = 0;  // distinct attribute names
  Verdict verdict = Verdict::NotResistant;
  int ce_count = 0;
  std::int64_t search_us = 0;
  bool proved = false;
  std::int64_t proof_us = 0;
};

struct BenchSummary {
  int total = 0;
  int capped = 0;
  int resistant = 0;
  int proved = 0;
  double resistant_ratio = 0.0;  // resistant / (total - capped)
  double proof_ratio = 0.0;      // proved / resistant; 1.0 when none resistant
};

struct BenchOptions {
  bool allow_exhaustive = false;
  int jobs = 1;
  std::size_t max_lattice_bits = 24;
  // When false all *_us columns are zero, making output byte-identical
  // across runs.
  bool record_timings = true;
};

struct BenchResult {
  std::vector<BenchRecord> records;
  BenchSummary summary;
};

BenchResult run_bench(const GenParams& params, const BenchOptions& options);

// CSV with header index,size,atoms,attrs,resistant,ce_count,search_us,
// proved,proof_us and a trailing summary comment row.
std::string bench_csv(const BenchResult& result);

}  // namespace ptacl

#endif  // PTACL_BENCH_HPP_
