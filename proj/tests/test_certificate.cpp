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

#include "ptacl/certificate.hpp"

#include <cstdio>

#include "doctest.h"
#include "helpers.hpp"
#include "ptacl/proof.hpp"

using namespace ptacl;

namespace {

std::string hex16(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(v));
  return buf;
}

Certificate p2_certificate(const PolicyEnv& env) {
  std::optional<ProofTree> proof = prove_resistant(env, "p2");
  REQUIRE(proof.has_value());
  return make_certificate(env, "p2", *proof);
}

}  // namespace

TEST_CASE("the digest is 64-bit FNV-1a") {
  CHECK(fnv1a64("") == 0xcbf29ce484222325ull);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cull);
  CHECK(fnv1a64("foobar") == 0x85944171f73967e8ull);

  PolicyEnv env = ptacl::test::nationality_env();
  CHECK(document_digest(env) == fnv1a64(render_document(env)));
}

TEST_CASE("encoding is the exact s-expression layout") {
  PolicyEnv env = ptacl::test::nationality_env();
  Certificate cert = p2_certificate(env);

  std::string expected =
      "(certificate\n"
      "  (version \"0.1.0\")\n"
      "  (policy p2)\n"
      "  (digest " + hex16(document_digest(env)) + ")\n"
      "  (proof\n"
      "    (isResistant p2 ResWFWMWN\n"
      "      (isWF p2 WFBruteForce)\n"
      "      (isWN p2 WNBruteForce)\n"
      "      (isWM p2 WMPdbd\n"
      "        (isWM p2.1 WMPtar\n"
      "          (isWMT t2 WMTAtom)\n"
      "          (isWM p2.1.2 WMPAtom))))))\n";
  CHECK(encode(cert) == expected);
}

TEST_CASE("decode inverts encode") {
  PolicyEnv env = ptacl::test::nationality_env();
  Certificate cert = p2_certificate(env);
  CHECK(decode(encode(cert)) == cert);

  // Extra whitespace between tokens is tolerated.
  Certificate spaced = decode(
      "(certificate (version \"0.1.0\") (policy p2)\n"
      "   (digest 0123456789abcdef)\n"
      "   (proof (isResistant p2 ResNoTarget\n"
      "           (isNoTarget p2 NoTargetBruteForce))))");
  CHECK(spaced.policy_id == "p2");
  CHECK(spaced.document_digest == 0x0123456789abcdefull);
  CHECK(spaced.proof.rule == RuleId::ResNoTarget);
}

TEST_CASE("exhaustive nodes carry their lattice size through the text form") {
  PolicyEnv env = parse_document(
      "t :: (Tnot (Tnot (Tatom \"a\" \"v1\")))\n"
      "p : Ptar t (Patom One)\n");
  ProofOptions opts;
  opts.allow_exhaustive = true;
  std::optional<ProofTree> proof = prove_resistant(env, "p", opts);
  REQUIRE(proof.has_value());
  Certificate cert = make_certificate(env, "p", *proof);

  std::string text = encode(cert);
  CHECK(text.find("(isResistant p ResExhaustive (lattice 4))") !=
        std::string::npos);
  CHECK(decode(text) == cert);
  CHECK(check(cert, env).valid);
}

TEST_CASE("malformed certificates report line and column") {
  CHECK_THROWS_AS(decode(""), MalformedCertificate);
  CHECK_THROWS_AS(decode("(certificate"), MalformedCertificate);

  try {
    decode("(certificate\n  (version 0.1.0)\n");
    FAIL("expected MalformedCertificate");
  } catch (const MalformedCertificate& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 12);
    CHECK(std::string(e.what()) ==
          "2:12: expected version string, got '0.1.0'");
  }

  std::string head =
      "(certificate\n  (version \"0.1.0\")\n  (policy p)\n";
  std::string proof =
      "  (proof (isResistant p ResNoTarget"
      " (isNoTarget p NoTargetBruteForce))))\n";

  CHECK_THROWS_WITH(decode(head + "  (digest 123)\n" + proof),
                    "4:11: digest must be 16 hex digits");
  CHECK_THROWS_WITH(decode(head + "  (digest 0123456789abcdeg)\n" + proof),
                    "4:11: digest must be 16 hex digits");
  CHECK_THROWS_AS(decode("(certificate\n  (version \"0.1.0\n"),
                  MalformedCertificate);

  std::string digest = "  (digest 0123456789abcdef)\n";
  CHECK_THROWS_WITH(
      decode(head + digest +
             "  (proof (isAllow p ResNoTarget))))\n"),
      "5:11: unknown obligation 'isAllow'");
  CHECK_THROWS_WITH(
      decode(head + digest +
             "  (proof (isResistant p ResMagic))))\n"),
      "5:25: unknown rule 'ResMagic'");
  CHECK_THROWS_WITH(
      decode(head + digest + proof + "leftover"),
      "6:1: trailing content after certificate");
}

TEST_CASE("checking accepts the searched proof and rejects tampering") {
  PolicyEnv env = ptacl::test::nationality_env();
  Certificate cert = p2_certificate(env);

  CheckResult good = check(cert, env);
  CHECK(good.valid);
  CHECK(good.reason.empty());
  CHECK(good.path.empty());

  SUBCASE("digest tamper") {
    Certificate bad = cert;
    bad.document_digest ^= 1;
    CheckResult r = check(bad, env);
    CHECK_FALSE(r.valid);
    CHECK(r.reason == "digest mismatch");
  }

  SUBCASE("different document") {
    PolicyEnv other = parse_document(
        "t2 :: (Tatom \"nat\" \"FR\")\n"
        "pone : Patom One\n"
        "pt : Ptar t2 pone\n"
        "p2 : Pdbd pt\n");
    CheckResult r = check(cert, other);
    CHECK_FALSE(r.valid);
    CHECK(r.reason == "digest mismatch");
  }

  SUBCASE("unknown policy") {
    Certificate bad = cert;
    bad.policy_id = "zz";
    CheckResult r = check(bad, env);
    CHECK_FALSE(r.valid);
    CHECK(r.reason == "unknown policy 'zz'");
  }

  SUBCASE("root subject mismatch") {
    Certificate bad = cert;
    bad.policy_id = "p1";
    bad.document_digest = document_digest(env);
    CheckResult r = check(bad, env);
    CHECK_FALSE(r.valid);
    CHECK(r.reason == "proof root must conclude isResistant p1");
  }

  SUBCASE("missing premise") {
    Certificate bad = cert;
    bad.proof.premises.pop_back();
    CheckResult r = check(bad, env);
    CHECK_FALSE(r.valid);
    CHECK(r.reason == "ResWFWMWN expects 3 premises");
    CHECK(r.path == "isResistant p2");
  }

  SUBCASE("singular arity message") {
    Certificate bad = cert;
    bad.proof.rule = RuleId::ResPdbd;
    CheckResult r = check(bad, env);
    CHECK_FALSE(r.valid);
    CHECK(r.reason == "ResPdbd expects 1 premise");
  }

  SUBCASE("premise shape mismatch") {
    Certificate bad = cert;
    bad.proof.premises[0].conclusion = Obligation::IsWithoutNot;
    CheckResult r = check(bad, env);
    CHECK_FALSE(r.valid);
    CHECK(r.reason == "ResWFWMWN premise 1 must conclude isWF p2");
    CHECK(r.path == "isResistant p2");
  }

  SUBCASE("rule proves a different obligation") {
    Certificate bad = cert;
    bad.proof.premises[0].rule = RuleId::WNBruteForce;
    bad.proof.premises[0].conclusion = Obligation::IsWellFormed;
    CheckResult r = check(bad, env);
    CHECK_FALSE(r.valid);
    CHECK(r.reason == "WNBruteForce proves isWN, not isWF");
    CHECK(r.path == "isResistant p2 / isWF p2");
  }

  SUBCASE("stray lattice size") {
    Certificate bad = cert;
    bad.proof.lattice_size = 7;
    CheckResult r = check(bad, env);
    CHECK_FALSE(r.valid);
    CHECK(r.reason == "only ResExhaustive carries a lattice size");
    CHECK(r.path == "isResistant p2");
  }

  SUBCASE("rule applied to the wrong node kind") {
    Certificate bad = cert;
    bad.proof.premises[2] =
        ProofTree{Obligation::IsWeaklyMonotonicPolicy, "p2",
                  RuleId::WMPAtom, {}, 0};
    CheckResult r = check(bad, env);
    CHECK_FALSE(r.valid);
    CHECK(r.reason == "WMPAtom requires an atomic policy node");
    CHECK(r.path == "isResistant p2 / isWM p2");
  }
}

TEST_CASE("claimed exhaustive proofs are re-searched") {
  PolicyEnv env = ptacl::test::nationality_env();

  // p1 has a counter-example; an exhaustive claim must not survive.
  Certificate forged{
      "p1", document_digest(env), std::string(kToolVersion),
      ProofTree{Obligation::IsResistant, "p1", RuleId::ResExhaustive, {}, 4}};
  CheckResult r = check(forged, env);
  CHECK_FALSE(r.valid);
  CHECK(r.reason == "exhaustive search found a counter-example");
  CHECK(r.path == "isResistant p1");
}

TEST_CASE("exhaustive proofs must state the right lattice size") {
  PolicyEnv env = parse_document(
      "t :: (Tnot (Tnot (Tatom \"a\" \"v1\")))\n"
      "p : Ptar t (Patom One)\n");
  ProofOptions opts;
  opts.allow_exhaustive = true;
  Certificate cert = make_certificate(env, "p", *prove_resistant(env, "p", opts));
  cert.proof.lattice_size = 5;
  CheckResult r = check(cert, env);
  CHECK_FALSE(r.valid);
  CHECK(r.reason == "lattice size mismatch: expected 4, certificate says 5");
}

TEST_CASE("a fabricated cannot-return chain fails at its side condition") {
  PolicyEnv env = ptacl::test::nationality_env();
  ProofTree leafnode{Obligation::CannotReturnAllow, "p2.1.2",
                     RuleId::CraPatomZero, {}, 0};
  ProofTree tar{Obligation::CannotReturnAllow, "p2.1", RuleId::CraPtar,
                {leafnode}, 0};
  ProofTree dbd{Obligation::CannotReturnAllow, "p2", RuleId::CraPdbd,
                {tar}, 0};
  Certificate forged{
      "p2", document_digest(env), std::string(kToolVersion),
      ProofTree{Obligation::IsResistant, "p2", RuleId::ResCRA, {dbd}, 0}};

  CheckResult r = check(forged, env);
  CHECK_FALSE(r.valid);
  CHECK(r.reason == "CRA-PatomZero requires the atomic deny policy");
  CHECK(r.path ==
        "isResistant p2 / isCRA p2 / isCRA p2.1 / isCRA p2.1.2");
}

TEST_CASE("human rendering of the nationality proof") {
  PolicyEnv env = ptacl::test::nationality_env();
  Certificate cert = p2_certificate(env);
  CHECK(render_human(cert, env) ==
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
        "      p2.1.2 is weakly-monotonic, since it is atomic\n");
}

TEST_CASE("human rendering names user-defined sub-policies") {
  PolicyEnv env = parse_document(
      "t2 :: (Tatom \"nat\" \"FR\")\n"
      "pone : Patom One\n"
      "pt : Ptar t2 pone\n"
      "p2 : Pdbd pt\n");
  Certificate cert = p2_certificate(env);
  std::string text = render_human(cert, env);
  CHECK(text.find("pt is weakly-monotonic, since it is the composition of "
                  "the weakly-monotonic target t2 and of the "
                  "weakly-monotonic policy pone") != std::string::npos);
}

TEST_CASE("human rendering of a cannot-return-allow proof") {
  PolicyEnv env = parse_document(
      "t :: (Tatom \"nat\" \"FR\")\n"
      "guard : Ptar t (Patom Zero)\n");
  std::optional<ProofTree> proof = prove_resistant(env, "guard");
  REQUIRE(proof.has_value());
  Certificate cert = make_certificate(env, "guard", *proof);
  CHECK(render_human(cert, env) ==
        "guard is resistant, since it cannot return allow\n"
        "  guard cannot return allow, since its body guard.2 cannot return "
        "allow\n"
        "    guard.2 cannot return allow, since it is the atomic deny "
        "policy\n");
}

TEST_CASE("human rendering refuses invalid certificates") {
  PolicyEnv env = ptacl::test::nationality_env();
  Certificate cert = p2_certificate(env);
  cert.document_digest ^= 1;
  CHECK_THROWS_AS(render_human(cert, env), std::invalid_argument);
}
