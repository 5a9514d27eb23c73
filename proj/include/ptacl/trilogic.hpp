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

#include <array>
#include <cstdint>
#include <string_view>

namespace ptacl {

/// Three-valued truth value used both for target applicability and, under
/// the Allow/Deny/NotApp reading, for policy decisions.
///
/// The numeric encoding follows the information order Bot < Zero < One, so
/// `tri_leq` is a plain integer comparison.
enum class TriValue : std::uint8_t {
  Bot = 0,   ///< indeterminate (missing information)
  Zero = 1,  ///< false / no-match
  One = 2,   ///< true / match
};

/// The four binary operators of the 3-valued logic. Weak operators treat
/// Bot as absorbing; strong operators resolve it where one operand decides
/// the result on its own.
enum class BinaryOpKind : std::uint8_t {
  WeakAnd = 0,
  WeakOr = 1,
  StrongAnd = 2,
  StrongOr = 3,
};

enum class UnaryOpKind : std::uint8_t {
  Neg = 0,  ///< swaps One/Zero, fixes Bot
  Opt = 1,  ///< maps Bot to Zero, fixes One/Zero
};

namespace detail {

using TriTable = std::array<std::array<TriValue, 3>, 3>;

// Row = left operand, column = right operand; index order Bot, Zero, One.
inline constexpr TriTable kWeakAnd = {{
    {TriValue::Bot, TriValue::Bot, TriValue::Bot},
    {TriValue::Bot, TriValue::Zero, TriValue::Zero},
    {TriValue::Bot, TriValue::Zero, TriValue::One},
}};

inline constexpr TriTable kWeakOr = {{
    {TriValue::Bot, TriValue::Bot, TriValue::Bot},
    {TriValue::Bot, TriValue::Zero, TriValue::One},
    {TriValue::Bot, TriValue::One, TriValue::One},
}};

inline constexpr TriTable kStrongAnd = {{
    {TriValue::Bot, TriValue::Zero, TriValue::Bot},
    {TriValue::Zero, TriValue::Zero, TriValue::Zero},
    {TriValue::Bot, TriValue::Zero, TriValue::One},
}};

inline constexpr TriTable kStrongOr = {{
    {TriValue::Bot, TriValue::Bot, TriValue::One},
    {TriValue::Bot, TriValue::Zero, TriValue::One},
    {TriValue::One, TriValue::One, TriValue::One},
}};

inline constexpr std::array<TriValue, 3> kNeg = {TriValue::Bot, TriValue::One,
                                                 TriValue::Zero};

inline constexpr std::array<TriValue, 3> kOpt = {TriValue::Zero, TriValue::Zero,
                                                 TriValue::One};

}  // namespace detail

constexpr TriValue apply_binary(BinaryOpKind op, TriValue a, TriValue b) {
  const auto i = static_cast<std::size_t>(a);
  const auto j = static_cast<std::size_t>(b);
  switch (op) {
    case BinaryOpKind::WeakAnd:
      return detail::kWeakAnd[i][j];
    case BinaryOpKind::WeakOr:
      return detail::kWeakOr[i][j];
    case BinaryOpKind::StrongAnd:
      return detail::kStrongAnd[i][j];
    case BinaryOpKind::StrongOr:
      return detail::kStrongOr[i][j];
  }
  return TriValue::Bot;  // unreachable
}

constexpr TriValue apply_unary(UnaryOpKind op, TriValue a) {
  const auto i = static_cast<std::size_t>(a);
  return op == UnaryOpKind::Neg ? detail::kNeg[i] : detail::kOpt[i];
}

/// Reflexive closure of Bot < Zero < One (the information order behind
/// weak monotonicity).
constexpr bool tri_leq(TriValue a, TriValue b) {
  return static_cast<std::uint8_t>(a) <= static_cast<std::uint8_t>(b);
}

constexpr std::string_view to_string(TriValue v) {
  switch (v) {
    case TriValue::One:
      return "1";
    case TriValue::Zero:
      return "0";
    case TriValue::Bot:
      return "bot";
  }
  return "?";
}

inline constexpr std::array<TriValue, 3> kAllTriValues = {
    TriValue::Bot, TriValue::Zero, TriValue::One};

}  // namespace ptacl
