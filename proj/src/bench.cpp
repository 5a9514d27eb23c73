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

#include "ptacl/bench.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <thread>

#include "ptacl/normal_form.hpp"
#include "ptacl/proof.hpp"
#include "ptacl/resistance.hpp"

namespace ptacl {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t elapsed_us(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() -
                                                               start)
      .count();
}

BenchRecord bench_one(const GenParams& params, int index,
                      const BenchOptions& options) {
  PolicyPtr p = generate_one(params, index);

  BenchRecord rec;
  rec.index = index;
  rec.size = static_cast<int>(policy_size(p));
  rec.atoms = static_cast<int>(atomic_targets(p).size());
  rec.attrs = static_cast<int>(attributes(p).size());

  SearchOptions search;
  search.max_lattice_bits = options.max_lattice_bits;
  Clock::time_point start = Clock::now();
  try {
    ResistanceVerdict verdict = is_resistant(p, search);
    rec.search_us = elapsed_us(start);
    rec.verdict = verdict.resistant ? BenchRecord::Verdict::Resistant
                                    : BenchRecord::Verdict::NotResistant;
    rec.ce_count = static_cast<int>(verdict.examples.size());
  } catch (const SearchSpaceTooLarge&) {
    rec.search_us = elapsed_us(start);
    rec.verdict = BenchRecord::Verdict::Capped;
  }

  if (rec.verdict == BenchRecord::Verdict::Resistant) {
    ProofOptions proof;
    proof.allow_exhaustive = options.allow_exhaustive;
    proof.max_lattice_bits = options.max_lattice_bits;
    start = Clock::now();
    try {
      rec.proved = prove_resistant(p, proof).has_value();
    } catch (const SearchSpaceTooLarge&) {
      rec.proved = false;
    }
    rec.proof_us = elapsed_us(start);
  }

  if (!options.record_timings) {
    rec.search_us = 0;
    rec.proof_us = 0;
  }
  return rec;
}

}  // namespace

BenchResult run_bench(const GenParams& params, const BenchOptions& options) {
  BenchResult result;
  result.records.resize(static_cast<std::size_t>(params.count));

  int jobs = options.jobs < 1 ? 1 : options.jobs;
  if (jobs > params.count) jobs = params.count;
  if (jobs == 1) {
    for (int i = 0; i < params.count; ++i)
      result.records[static_cast<std::size_t>(i)] =
          bench_one(params, i, options);
  } else {
    std::atomic<int> next{0};
    auto worker = [&] {
      for (int i = next.fetch_add(1); i < params.count;
           i = next.fetch_add(1))
        result.records[static_cast<std::size_t>(i)] =
            bench_one(params, i, options);
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(jobs));
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  BenchSummary& s = result.summary;
  s.total = params.count;
  for (const BenchRecord& rec : result.records) {
    switch (rec.verdict) {
      case BenchRecord::Verdict::Capped:
        ++s.capped;
        break;
      case BenchRecord::Verdict::Resistant:
        ++s.resistant;
        if (rec.proved) ++s.proved;
        break;
      case BenchRecord::Verdict::NotResistant:
        break;
    }
  }
  int uncapped = s.total - s.capped;
  s.resistant_ratio =
      uncapped == 0 ? 0.0 : static_cast<double>(s.resistant) / uncapped;
  s.proof_ratio =
      s.resistant == 0 ? 1.0 : static_cast<double>(s.proved) / s.resistant;
  return result;
}

std::string bench_csv(const BenchResult& result) {
  std::string out =
      "index,size,atoms,attrs,resistant,ce_count,search_us,proved,proof_us\n";
  for (const BenchRecord& rec : result.records) {
    out += std::to_string(rec.index) + "," + std::to_string(rec.size) + "," +
           std::to_string(rec.atoms) + "," + std::to_string(rec.attrs) + ",";
    switch (rec.verdict) {
      case BenchRecord::Verdict::Resistant:
        out += "1";
        break;
      case BenchRecord::Verdict::NotResistant:
        out += "0";
        break;
      case BenchRecord::Verdict::Capped:
        out += "cap";
        break;
    }
    out += "," + std::to_string(rec.ce_count) + "," +
           std::to_string(rec.search_us) + "," + (rec.proved ? "1" : "0") +
           "," + std::to_string(rec.proof_us) + "\n";
  }

  const BenchSummary& s = result.summary;
  char line[160];
  std::snprintf(line, sizeof(line),
                "# summary: resistant=%d/%d resistant_ratio=%.6f "
                "proved=%d/%d proof_ratio=%.6f capped=%d\n",
                s.resistant, s.total - s.capped, s.resistant_ratio, s.proved,
                s.resistant, s.proof_ratio, s.capped);
  out += line;
  return out;
}

}  // namespace ptacl
