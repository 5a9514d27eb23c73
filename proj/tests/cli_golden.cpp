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

// Golden tests for the ptacl command line: exact stdout bytes and exit codes.
// Usage: cli_golden <ptacl-binary> <samples-dir>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

int failures = 0;

struct RunResult {
  std::string out;
  int exit_code = -1;
};

RunResult run(const std::string& command) {
  RunResult result;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) {
    std::cerr << "popen failed for: " << command << "\n";
    ++failures;
    return result;
  }
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) result.out.append(buf, got);
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

void expect(const std::string& name, const RunResult& r,
            const std::string& want_out, int want_exit) {
  if (r.out == want_out && r.exit_code == want_exit) return;
  ++failures;
  std::cerr << "FAIL " << name << "\n  exit: got " << r.exit_code << ", want "
            << want_exit << "\n  stdout got:\n" << r.out
            << "  stdout want:\n" << want_out;
}

void expect_exit(const std::string& name, const RunResult& r, int want_exit) {
  if (r.exit_code == want_exit) return;
  ++failures;
  std::cerr << "FAIL " << name << ": exit got " << r.exit_code << ", want "
            << want_exit << "\n";
}

std::string quoted(const std::string& s) { return "'" + s + "'"; }

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void spit(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: cli_golden <ptacl-binary> <samples-dir>\n";
    return 1;
  }
  const std::string bin = quoted(argv[1]);
  const std::string samples(argv[2]);
  const std::string doc = quoted(samples + "/nationality.ptacl");
  const std::string structured = quoted(samples + "/p2_structured.ptacl");

  // -- eval ---------------------------------------------------------------
  expect("eval p1 empty",
         run(bin + " eval " + doc + " p1 '{}'"), "{ALLOW, DENY}\n", 0);
  expect("eval p1 FR",
         run(bin + " eval " + doc + " p1 '{(\"nat\",\"FR\")}'"),
         "{ALLOW}\n", 0);
  expect("eval p2 AT",
         run(bin + " eval " + doc + " p2 '{(\"nat\",\"AT\")}'"),
         "{DENY}\n", 0);

  // -- check --------------------------------------------------------------
  expect("check p1",
         run(bin + " check " + doc + " p1"),
         "Counter-example #1\n"
         "{(\"nat\",\"new_value\")}: {ALLOW}\n"
         "{(\"nat\",\"AT\"), (\"nat\",\"new_value\")}: {DENY}\n"
         "NOT RESISTANT (4 requests checked, 1 counter-example)\n",
         1);
  expect("check p1 --first",
         run(bin + " check " + doc + " p1 --first"),
         "Counter-example #1\n"
         "{(\"nat\",\"new_value\")}: {ALLOW}\n"
         "{(\"nat\",\"AT\"), (\"nat\",\"new_value\")}: {DENY}\n"
         "NOT RESISTANT (4 requests checked, 1 counter-example)\n",
         1);
  expect("check p2",
         run(bin + " check " + doc + " p2"),
         "RESISTANT (4 requests checked)\n", 0);
  expect("check p2 --jobs 4",
         run(bin + " check " + doc + " p2 --jobs 4"),
         "RESISTANT (4 requests checked)\n", 0);
  expect_exit("check unknown id",
              run(bin + " check " + doc + " nosuch 2>/dev/null"), 2);
  expect_exit("check over lattice cap",
              run(bin + " check " + doc + " p1 --max-lattice 1 2>/dev/null"),
              3);

  // -- prove / verify -----------------------------------------------------
  const std::string cert_path = "cli_tmp_p2.cert";
  std::filesystem::remove(cert_path);
  const std::string proof_text =
      "p2 is resistant, since it is well-formed, weakly-monotonic and "
      "without-not\n"
      "  p2 is well-formed, which can be checked by brute-force\n"
      "  p2 is without-not, which can be checked by brute-force\n"
      "  p2 is weakly-monotonic, since it is the deny-by-default of the "
      "weakly-monotonic policy p2.1\n"
      "    p2.1 is weakly-monotonic, since it is the composition of the "
      "weakly-monotonic target t2 and of the weakly-monotonic policy "
      "p2.1.2\n"
      "      t2 is weakly-monotonic, since it is atomic\n"
      "      p2.1.2 is weakly-monotonic, since it is atomic\n";
  expect("prove p2",
         run(bin + " prove " + doc + " p2 --out " + cert_path),
         proof_text, 0);
  if (!std::filesystem::exists(cert_path)) {
    std::cerr << "FAIL prove p2: certificate file not written\n";
    ++failures;
  }

  expect("verify fresh certificate",
         run(bin + " verify " + cert_path + " " + doc), "VALID\n", 0);
  expect("verify against different document",
         run(bin + " verify " + cert_path + " " + structured),
         "INVALID: digest mismatch\n", 1);

  const std::string tampered_path = "cli_tmp_p2_tampered.cert";
  std::string tampered = slurp(cert_path);
  auto pos = tampered.find("WNBruteForce");
  if (pos == std::string::npos) {
    std::cerr << "FAIL tamper setup: WNBruteForce not in certificate\n";
    ++failures;
  } else {
    tampered.replace(pos, 12, "WFBruteForce");
    spit(tampered_path, tampered);
    expect("verify tampered certificate",
           run(bin + " verify " + tampered_path + " " + doc),
           "INVALID: WFBruteForce proves isWF, not isWN at "
           "isResistant p2 / isWN p2\n",
           1);
  }

  const std::string no_cert = "cli_tmp_p1.cert";
  std::filesystem::remove(no_cert);
  expect("prove p1",
         run(bin + " prove " + doc + " p1 --out " + no_cert),
         "NO STRUCTURAL PROOF FOUND\n", 1);
  if (std::filesystem::exists(no_cert)) {
    std::cerr << "FAIL prove p1: wrote a certificate despite failing\n";
    ++failures;
  }
  expect_exit("prove over lattice cap",
              run(bin + " prove " + doc +
                  " p1 --allow-exhaustive --max-lattice 1 2>/dev/null"),
              3);

  // -- structured document: proofs keep user names ------------------------
  const std::string structured_cert = "cli_tmp_pt.cert";
  RunResult structured_prove =
      run(bin + " prove " + structured + " p2 --out " + structured_cert);
  expect_exit("prove structured p2", structured_prove, 0);
  if (structured_prove.out.find(
          "pt is weakly-monotonic, since it is the composition of the "
          "weakly-monotonic target t2 and of the weakly-monotonic policy "
          "pone") == std::string::npos) {
    std::cerr << "FAIL prove structured p2: missing named composition line;"
              << " got:\n" << structured_prove.out;
    ++failures;
  }

  // -- error paths ----------------------------------------------------------
  const std::string bad_doc = "cli_tmp_bad.ptacl";
  spit(bad_doc, "p : Pand p\n");
  expect_exit("malformed document",
              run(bin + " eval " + bad_doc + " p '{}' 2>/dev/null"), 2);
  expect_exit("unknown subcommand", run(bin + " frobnicate 2>/dev/null"), 2);
  expect_exit("missing required argument",
              run(bin + " eval 2>/dev/null"), 2);

  // -- gen / bench determinism ---------------------------------------------
  const std::string gen_flags =
      " gen --height 3 --width 2 --attrs 2 --vals 2 --count 5 --seed 9";
  RunResult gen_a = run(bin + gen_flags);
  RunResult gen_b = run(bin + gen_flags);
  expect_exit("gen exit", gen_a, 0);
  if (gen_a.out != gen_b.out || gen_a.out.empty()) {
    std::cerr << "FAIL gen determinism: outputs differ or empty\n";
    ++failures;
  }
  if (gen_a.out.rfind("p0 : ", 0) != 0) {
    std::cerr << "FAIL gen naming: expected leading 'p0 : ', got:\n"
              << gen_a.out.substr(0, 40) << "\n";
    ++failures;
  }

  const std::string bench_flags =
      " bench --height 3 --width 2 --attrs 2 --vals 2 --count 10 --seed 5"
      " --no-timing";
  RunResult bench_a = run(bin + bench_flags);
  RunResult bench_b = run(bin + bench_flags);
  RunResult bench_j4 = run(bin + bench_flags + " --jobs 4");
  expect_exit("bench exit", bench_a, 0);
  if (bench_a.out != bench_b.out || bench_a.out.empty()) {
    std::cerr << "FAIL bench determinism across runs\n";
    ++failures;
  }
  if (bench_a.out != bench_j4.out) {
    std::cerr << "FAIL bench determinism across --jobs\n";
    ++failures;
  }

  if (failures == 0) std::cout << "cli_golden: all cases passed\n";
  return failures > 255 ? 255 : failures;
}
