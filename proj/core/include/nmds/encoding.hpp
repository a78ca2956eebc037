// Copyright 2026 The nmds Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Text encodings shared by the CLI and JSON output.
//
//   element / polynomial:  "[c0,c1,...]"  constant term first
//   field descriptor:      "p^e"

#ifndef NMDS_ENCODING_HPP
#define NMDS_ENCODING_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "nmds/field.hpp"
#include "nmds/primes.hpp"

namespace nmds {

std::string format_coeffs(std::span<const std::uint32_t> coeffs);
std::string format_element(const Element& a);

/// Parses "[c0,c1,...]" (whitespace allowed). A bare non-negative integer is
/// accepted as a one-entry list. Throws kParse.
std::vector<std::uint32_t> parse_coeffs(std::string_view text);

/// Parses an element of f; the list must have exactly f.degree() entries,
/// except that a bare integer is accepted for prime fields. Throws kParse or
/// kInvalidArgument.
Element parse_element(const FieldCtx& f, std::string_view text);

/// Parses "p^e". Throws kParse.
PrimePower parse_descriptor(std::string_view text);

}  // namespace nmds

#endif  // NMDS_ENCODING_HPP
