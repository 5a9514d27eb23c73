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
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "ptacl/ast.hpp"

namespace ptacl {

inline constexpr std::size_t kDefaultLatticeCapBits = 24;

class SearchSpaceTooLarge : public std::runtime_error {
 public:
  SearchSpaceTooLarge(std::size_t bits, std::size_t cap_bits);

  std::size_t bits() const { return bits_; }
  std::size_t cap_bits() const { return cap_bits_; }

 private:
  std::size_t bits_;
  std::size_t cap_bits_;
};

class UnknownAttributeError : public std::invalid_argument {
 public:
  explicit UnknownAttributeError(const std::string& name);

  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

/// Precomputed fresh values and atomic targets for one policy.
///
/// The fresh value for attribute n is "new_value", or "new_value_1",
/// "new_value_2", ... when the policy itself mentions the earlier candidates
/// for n. Fresh values are deterministic so searches are reproducible.
class NormalFormContext {
 public:
  static NormalFormContext make(const PolicyPtr& p);

  const std::set<AttrPair>& atoms() const { return atoms_; }
  const std::map<std::string, std::string>& fresh() const { return fresh_; }

  /// Throws UnknownAttributeError if `name` does not occur in the policy.
  const std::string& fresh_value(const std::string& name) const;

  /// Keeps pairs in A(p); collapses other pairs over a policy attribute to
  /// that attribute's fresh pair; drops pairs over foreign attributes.
  Request normalize(const Request& q) const;

  /// A(p) plus one fresh pair per attribute of p: the top of the
  /// normal-form request lattice.
  Request max_request() const;

 private:
  std::set<AttrPair> atoms_;
  std::map<std::string, std::string> fresh_;
};

std::string fresh_value(const PolicyPtr& p, const std::string& name);
Request normalize(const PolicyPtr& p, const Request& q);
Request max_request(const PolicyPtr& p);

/// The subset lattice of max_request(p), one bit per base pair. Base pairs
/// are sorted, so bit order is the canonical pair order.
class NfLattice {
 public:
  explicit NfLattice(const PolicyPtr& p,
                     std::size_t cap_bits = kDefaultLatticeCapBits);

  std::size_t bits() const { return base_.size(); }
  std::uint64_t size() const { return std::uint64_t{1} << base_.size(); }
  const std::vector<AttrPair>& base() const { return base_; }

  Request request_of(std::uint64_t mask) const;

  /// Visit every subset mask in canonical order: by subset size, then
  /// lexicographically on the sorted pair sequence. `fn` returns false to
  /// stop; the result says whether the walk ran to completion.
  template <typename F>
  bool for_each_canonical(F&& fn) const {
    const std::size_t k = base_.size();
    if (!fn(std::uint64_t{0})) return false;
    std::vector<std::size_t> idx;
    for (std::size_t s = 1; s <= k; ++s) {
      idx.resize(s);
      for (std::size_t i = 0; i < s; ++i) idx[i] = i;
      while (true) {
        std::uint64_t mask = 0;
        for (std::size_t i : idx) mask |= std::uint64_t{1} << i;
        if (!fn(mask)) return false;
        std::size_t j = s;
        while (j > 0 && idx[j - 1] == k - s + (j - 1)) --j;
        if (j == 0) break;
        ++idx[j - 1];
        for (std::size_t t = j; t < s; ++t) idx[t] = idx[t - 1] + 1;
      }
    }
    return true;
  }

  std::vector<std::uint64_t> canonical_masks() const;

 private:
  std::vector<AttrPair> base_;
};

/// All normal-form requests of p in canonical order. Materializes the whole
/// lattice; intended for small policies and tests.
std::vector<Request> enumerate_nf(const PolicyPtr& p,
                                  std::size_t cap_bits = kDefaultLatticeCapBits);

}  // namespace ptacl
