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

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "ptacl/bench.hpp"
#include "ptacl/certificate.hpp"
#include "ptacl/evaluator.hpp"
#include "ptacl/generator.hpp"
#include "ptacl/normal_form.hpp"
#include "ptacl/parser.hpp"
#include "ptacl/proof.hpp"
#include "ptacl/resistance.hpp"

namespace {

constexpr int kExitHolds = 0;
constexpr int kExitFails = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << content;
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
}

ptacl::PolicyEnv load_env(const std::string& path) {
  return ptacl::parse_document(read_file(path));
}

const ptacl::PolicyPtr& lookup_policy(const ptacl::PolicyEnv& env,
                                      const std::string& id) {
  const ptacl::PolicyPtr* p = env.find_policy(id);
  if (!p) throw std::runtime_error("unknown policy '" + id + "'");
  return *p;
}

int cmd_eval(const std::string& file, const std::string& id,
             const std::string& request_literal) {
  ptacl::PolicyEnv env = load_env(file);
  lookup_policy(env, id);
  ptacl::Request q = ptacl::parse_request(request_literal);
  std::cout << ptacl::render_decisions(ptacl::eval_policy(env, id, q)) << "\n";
  return kExitHolds;
}

int cmd_check(const std::string& file, const std::string& id, bool first_only,
              std::size_t max_lattice_bits, int jobs) {
  ptacl::PolicyEnv env = load_env(file);
  ptacl::PolicyPtr p = ptacl::resolve_policy(env, id);

  ptacl::SearchOptions opts;
  opts.max_lattice_bits = max_lattice_bits;
  opts.limit = first_only ? 1 : 0;
  opts.jobs = jobs;
  ptacl::ResistanceVerdict verdict = ptacl::is_resistant(p, opts);

  if (verdict.resistant) {
    std::cout << "RESISTANT (" << verdict.checked_requests
              << " requests checked)\n";
    return kExitHolds;
  }
  int index = 0;
  for (const ptacl::CounterExample& ce : verdict.examples) {
    std::cout << "Counter-example #" << ++index << "\n"
              << ptacl::render_request(ce.smaller) << ": "
              << ptacl::render_decisions(ce.eval_smaller) << "\n"
              << ptacl::render_request(ce.larger) << ": "
              << ptacl::render_decisions(ce.eval_larger) << "\n";
  }
  std::cout << "NOT RESISTANT (" << verdict.checked_requests
            << " requests checked, " << verdict.examples.size()
            << " counter-example" << (verdict.examples.size() == 1 ? "" : "s")
            << ")\n";
  return kExitFails;
}

int cmd_prove(const std::string& file, const std::string& id,
              bool allow_exhaustive, std::size_t max_lattice_bits,
              std::string out_path) {
  ptacl::PolicyEnv env = load_env(file);
  lookup_policy(env, id);

  ptacl::ProofOptions opts;
  opts.allow_exhaustive = allow_exhaustive;
  opts.max_lattice_bits = max_lattice_bits;
  std::optional<ptacl::ProofTree> proof = ptacl::prove_resistant(env, id, opts);
  if (!proof) {
    std::cout << "NO STRUCTURAL PROOF FOUND\n";
    return kExitFails;
  }

  ptacl::Certificate cert = ptacl::make_certificate(env, id, *proof);
  if (out_path.empty()) out_path = id + ".cert";
  write_file(out_path, ptacl::encode(cert));
  std::cout << ptacl::render_human(cert, env);
  return kExitHolds;
}

int cmd_verify(const std::string& cert_path, const std::string& file) {
  ptacl::Certificate cert = ptacl::decode(read_file(cert_path));
  ptacl::PolicyEnv env = load_env(file);
  ptacl::CheckResult result = ptacl::check(cert, env);
  if (result.valid) {
    std::cout << "VALID\n";
    return kExitHolds;
  }
  std::cout << "INVALID: " << result.reason;
  if (!result.path.empty()) std::cout << " at " << result.path;
  std::cout << "\n";
  return kExitFails;
}

int cmd_gen(const ptacl::GenParams& params, const std::string& out_path) {
  std::string doc = ptacl::render_document(ptacl::generate_env(params));
  if (out_path.empty())
    std::cout << doc;
  else
    write_file(out_path, doc);
  return kExitHolds;
}

int cmd_bench(const ptacl::GenParams& params, const ptacl::BenchOptions& opts,
              const std::string& csv_path) {
  ptacl::BenchResult result = ptacl::run_bench(params, opts);
  std::string csv = ptacl::bench_csv(result);
  if (csv_path.empty())
    std::cout << csv;
  else
    write_file(csv_path, csv);
  return kExitHolds;
}

void add_gen_flags(CLI::App* cmd, ptacl::GenParams& params) {
  cmd->add_option("--height", params.max_height, "Maximal policy height")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--width", params.max_target_width,
                  "Maximal atomic leaves per target")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--attrs", params.attribute_count, "Attribute count")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--vals", params.values_per_attribute,
                  "Values per attribute")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--count", params.count, "Number of policies")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--seed", params.seed, "RNG seed");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"PTaCL policy evaluation, resistance analysis and proofs"};
  app.require_subcommand(1);

  std::string file, id, request_literal, cert_path, out_path, csv_path;
  bool first_only = false, all = false, allow_exhaustive = false,
       no_timing = false;
  std::size_t max_lattice_bits = ptacl::kDefaultLatticeCapBits;
  int jobs = 1;
  ptacl::GenParams params;
  ptacl::BenchOptions bench_opts;

  CLI::App* eval = app.add_subcommand("eval", "Evaluate a policy on a request");
  eval->add_option("file", file, "Policy document")->required();
  eval->add_option("policy-id", id, "Policy identifier")->required();
  eval->add_option("request", request_literal, "Request literal")->required();

  CLI::App* check =
      app.add_subcommand("check", "Search for attribute-hiding counter-examples");
  check->add_option("file", file, "Policy document")->required();
  check->add_option("policy-id", id, "Policy identifier")->required();
  check->add_flag("--all", all, "Report every counter-example (default)");
  CLI::Option* first_flag =
      check->add_flag("--first", first_only, "Stop at the first counter-example");
  first_flag->excludes("--all");
  check->add_option("--max-lattice", max_lattice_bits,
                    "Maximal request-lattice bits");
  check->add_option("--jobs", jobs, "Worker threads")
      ->check(CLI::PositiveNumber);

  CLI::App* prove =
      app.add_subcommand("prove", "Generate a resistance certificate");
  prove->add_option("file", file, "Policy document")->required();
  prove->add_option("policy-id", id, "Policy identifier")->required();
  prove->add_flag("--allow-exhaustive", allow_exhaustive,
                  "Permit exhaustive-search leaves");
  prove->add_option("--max-lattice", max_lattice_bits,
                    "Maximal request-lattice bits");
  prove->add_option("--out", out_path, "Certificate path (default <id>.cert)");

  CLI::App* verify =
      app.add_subcommand("verify", "Check a certificate against a document");
  verify->add_option("cert", cert_path, "Certificate file")->required();
  verify->add_option("file", file, "Policy document")->required();

  CLI::App* gen = app.add_subcommand("gen", "Generate a random policy family");
  add_gen_flags(gen, params);
  gen->add_option("--out", out_path, "Output document path (default stdout)");

  CLI::App* bench =
      app.add_subcommand("bench", "Benchmark search and proving on a family");
  add_gen_flags(bench, params);
  bench->add_option("--csv", csv_path, "CSV output path (default stdout)");
  bench->add_option("--jobs", bench_opts.jobs, "Worker threads")
      ->check(CLI::PositiveNumber);
  bench->add_flag("--allow-exhaustive", bench_opts.allow_exhaustive,
                  "Permit exhaustive-search leaves when proving");
  bench->add_option("--max-lattice", bench_opts.max_lattice_bits,
                    "Maximal request-lattice bits");
  bench->add_flag("--no-timing", no_timing,
                  "Zero timing columns for reproducible output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (eval->parsed()) return cmd_eval(file, id, request_literal);
    if (check->parsed())
      return cmd_check(file, id, first_only, max_lattice_bits, jobs);
    if (prove->parsed())
      return cmd_prove(file, id, allow_exhaustive, max_lattice_bits, out_path);
    if (verify->parsed()) return cmd_verify(cert_path, file);
    if (gen->parsed()) return cmd_gen(params, out_path);
    if (bench->parsed()) {
      bench_opts.record_timings = !no_timing;
      return cmd_bench(params, bench_opts, csv_path);
    }
  } catch (const ptacl::SearchSpaceTooLarge& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
