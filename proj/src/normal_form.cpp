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

#include "ptacl/normal_form.hpp"

#include <algorithm>

namespace ptacl {

SearchSpaceTooLarge::SearchSpaceTooLarge(std::size_t bits,
                                         std::size_t cap_bits)
    : std::runtime_error("search space of 2^" + std::to_string(bits) +
                         " requests exceeds cap of 2^" +
                         std::to_string(cap_bits)),
      bits_(bits),
      cap_bits_(cap_bits) {}

UnknownAttributeError::UnknownAttributeError(const std::string& name)
    : std::invalid_argument("attribute '" + name +
                            "' does not occur in the policy"),
      name_(name) {}

NormalFormContext NormalFormContext::make(const PolicyPtr& p) {
  NormalFormContext ctx;
  ctx.atoms_ = atomic_targets(p);
  std::set<std::string> names;
  for (const auto& pair : ctx.atoms_) names.insert(pair.name);
  for (const auto& name : names) {
    std::string candidate = "new_value";
    for (unsigned i = 1; ctx.atoms_.contains({name, candidate}); ++i)
      candidate = "new_value_" + std::to_string(i);
    ctx.fresh_.emplace(name, std::move(candidate));
  }
  return ctx;
}

const std::string& NormalFormContext::fresh_value(
    const std::string& name) const {
  auto it = fresh_.find(name);
  if (it == fresh_.end()) throw UnknownAttributeError(name);
  return it->second;
}

Request NormalFormContext::normalize(const Request& q) const {
  std::vector<AttrPair> out;
  for (const auto& pair : q.pairs()) {
    if (atoms_.contains(pair)) {
      out.push_back(pair);
      continue;
    }
    auto it = fresh_.find(pair.name);
    if (it != fresh_.end()) out.push_back({pair.name, it->second});
  }
  return Request(std::move(out));
}

Request NormalFormContext::max_request() const {
  std::vector<AttrPair> out(atoms_.begin(), atoms_.end());
  for (const auto& [name, value] : fresh_) out.push_back({name, value});
  return Request(std::move(out));
}

std::string fresh_value(const PolicyPtr& p, const std::string& name) {
  return NormalFormContext::make(p).fresh_value(name);
}

Request normalize(const PolicyPtr& p, const Request& q) {
  return NormalFormContext::make(p).normalize(q);
}

Request max_request(const PolicyPtr& p) {
  return NormalFormContext::make(p).max_request();
}

NfLattice::NfLattice(const PolicyPtr& p, std::size_t cap_bits) {
  Request top = NormalFormContext::make(p).max_request();
  base_ = top.pairs();
  if (base_.size() > cap_bits || base_.size() >= 64)
    throw SearchSpaceTooLarge(base_.size(), cap_bits);
}

Request NfLattice::request_of(std::uint64_t mask) const {
  std::vector<AttrPair> out;
  for (std::size_t i = 0; i < base_.size(); ++i)
    if (mask >> i & 1) out.push_back(base_[i]);
  return Request(std::move(out));
}

std::vector<std::uint64_t> NfLattice::canonical_masks() const {
  std::vector<std::uint64_t> out;
  out.reserve(size());
  for_each_canonical([&](std::uint64_t mask) {
    out.push_back(mask);
    return true;
  });
  return out;
}

std::vector<Request> enumerate_nf(const PolicyPtr& p, std::size_t cap_bits) {
  NfLattice lat(p, cap_bits);
  std::vector<Request> out;
  out.reserve(lat.size());
  lat.for_each_canonical([&](std::uint64_t mask) {
    out.push_back(lat.request_of(mask));
    return true;
  });
  return out;
}

}  // namespace ptacl
