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

#include <limits>
#include <random>
#include <stdexcept>
#include <string>

namespace ptacl {

namespace {

void validate(const GenParams& params) {
  if (params.max_height < 1 || params.max_target_width < 1 ||
      params.attribute_count < 1 || params.values_per_attribute < 1 ||
      params.count < 1)
    throw std::invalid_argument("generator parameters must be positive");
}

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t x = seed + 0x9e3779b97f4a7c15ull * (index + 1);
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// mt19937_64 output is pinned by the standard; std::uniform_int_distribution
// is not, so bounded draws are done by rejection here to keep generated
// families byte-identical across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform value in [0, bound).
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit =
        std::numeric_limits<std::uint64_t>::max() -
        std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t draw;
    do {
      draw = engine_();
    } while (draw >= limit);
    return draw % bound;
  }

 private:
  std::mt19937_64 engine_;
};

class Generator {
 public:
  Generator(const GenParams& params, std::uint64_t stream)
      : params_(params), rng_(stream) {}

  PolicyPtr policy() { return gen_policy(params_.max_height); }

 private:
  enum class PCtor : std::uint8_t { Atom, Not, Dbd, And, Tar };
  enum class TCtor : std::uint8_t { Atom, Not, Opt, And };

  PolicyPtr gen_policy(int height) {
    if (height <= 1) return atom_policy();
    PCtor choices[5];
    std::size_t n = 0;
    choices[n++] = PCtor::Atom;
    if (params_.with_pnot) choices[n++] = PCtor::Not;
    if (params_.with_pdbd) choices[n++] = PCtor::Dbd;
    choices[n++] = PCtor::And;
    choices[n++] = PCtor::Tar;
    switch (choices[rng_.below(n)]) {
      case PCtor::Atom:
        return atom_policy();
      case PCtor::Not:
        return Policy::make_not(gen_policy(height - 1));
      case PCtor::Dbd:
        return Policy::make_dbd(gen_policy(height - 1));
      case PCtor::And: {
        PolicyPtr l = gen_policy(height - 1);
        return Policy::make_and(std::move(l), gen_policy(height - 1));
      }
      case PCtor::Tar: {
        TargetPtr t =
            gen_target(params_.max_target_width, params_.max_target_width);
        return Policy::make_tar(std::move(t), gen_policy(height - 1));
      }
    }
    throw std::logic_error("gen_policy: bad constructor");
  }

  PolicyPtr atom_policy() {
    return Policy::atom(rng_.below(2) == 0 ? Decision::Allow : Decision::Deny);
  }

  TargetPtr gen_target(int width, int height) {
    if (width <= 1 || height <= 1) return atom_target();
    TCtor choices[4];
    std::size_t n = 0;
    choices[n++] = TCtor::Atom;
    if (params_.with_tnot) choices[n++] = TCtor::Not;
    choices[n++] = TCtor::Opt;
    choices[n++] = TCtor::And;
    switch (choices[rng_.below(n)]) {
      case TCtor::Atom:
        return atom_target();
      case TCtor::Not:
        return Target::make_not(gen_target(width, height - 1));
      case TCtor::Opt:
        return Target::make_opt(gen_target(width, height - 1));
      case TCtor::And: {
        int left_width =
            1 + static_cast<int>(rng_.below(static_cast<std::uint64_t>(
                    width - 1)));
        TargetPtr l = gen_target(left_width, height - 1);
        return Target::make_and(std::move(l),
                                gen_target(width - left_width, height - 1));
      }
    }
    throw std::logic_error("gen_target: bad constructor");
  }

  TargetPtr atom_target() {
    std::uint64_t a = 1 + rng_.below(
                              static_cast<std::uint64_t>(params_.attribute_count));
    std::uint64_t v = 1 + rng_.below(static_cast<std::uint64_t>(
                              params_.values_per_attribute));
    return Target::atom("a" + std::to_string(a), "v" + std::to_string(v));
  }

  const GenParams& params_;
  Rng rng_;
};

}  // namespace

PolicyPtr generate_one(const GenParams& params, int index) {
  validate(params);
  if (index < 0 || index >= params.count)
    throw std::invalid_argument("policy index out of range");
  Generator gen(params, stream_seed(params.seed,
                                    static_cast<std::uint64_t>(index)));
  return gen.policy();
}

std::vector<PolicyPtr> generate(const GenParams& params) {
  validate(params);
  std::vector<PolicyPtr> out;
  out.reserve(static_cast<std::size_t>(params.count));
  for (int i = 0; i < params.count; ++i) out.push_back(generate_one(params, i));
  return out;
}

PolicyEnv generate_env(const GenParams& params) {
  PolicyEnv env;
  std::vector<PolicyPtr> policies = generate(params);
  for (int i = 0; i < params.count; ++i)
    env.define_policy("p" + std::to_string(i),
                      policies[static_cast<std::size_t>(i)]);
  return env;
}

}  // namespace ptacl
