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

#include "nmds/encoding.hpp"

#include <cctype>
#include <charconv>

#include "nmds/error.hpp"

namespace nmds {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::uint32_t parse_uint(std::string_view s, std::string_view context) {
  s = trim(s);
  std::uint32_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw Error(ErrorCode::kParse, "bad integer '" + std::string(s) + "' in '" +
                                       std::string(context) + "'");
  }
  return v;
}

}  // namespace

std::string format_coeffs(std::span<const std::uint32_t> coeffs) {
  std::string out = "[";
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(coeffs[i]);
  }
  out += ']';
  return out;
}

std::string format_element(const Element& a) { return format_coeffs(a.coeffs()); }

std::vector<std::uint32_t> parse_coeffs(std::string_view text) {
  const std::string_view s = trim(text);
  if (s.empty()) throw Error(ErrorCode::kParse, "empty coefficient list");
  if (s.front() != '[') return {parse_uint(s, text)};
  if (s.back() != ']') throw Error(ErrorCode::kParse, "unterminated list '" + std::string(text) + "'");
  std::string_view body = trim(s.substr(1, s.size() - 2));
  std::vector<std::uint32_t> out;
  if (body.empty()) throw Error(ErrorCode::kParse, "empty coefficient list");
  while (true) {
    const auto comma = body.find(',');
    out.push_back(parse_uint(body.substr(0, comma), text));
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  return out;
}

Element parse_element(const FieldCtx& f, std::string_view text) {
  const auto coeffs = parse_coeffs(text);
  const bool bare = trim(text).front() != '[';
  if (coeffs.size() != f.degree() && !(bare && f.degree() == 1)) {
    throw Error(ErrorCode::kParse, "expected " + std::to_string(f.degree()) +
                                       " coefficients in '" + std::string(text) + "'");
  }
  return f.from_coeffs(coeffs);
}

PrimePower parse_descriptor(std::string_view text) {
  const std::string_view s = trim(text);
  const auto caret = s.find('^');
  if (caret == std::string_view::npos) {
    throw Error(ErrorCode::kParse, "field descriptor must look like p^e: '" + std::string(text) + "'");
  }
  return PrimePower{parse_uint(s.substr(0, caret), text), parse_uint(s.substr(caret + 1), text)};
}

}  // namespace nmds
