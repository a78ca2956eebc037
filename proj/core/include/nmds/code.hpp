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

// The length-(q+1) code over GF(q)
//
//   C = { c(b, c) = ( (Tr(b x + b) + c)_{x in D}, -Tr(b) ) : b in GF(q^2), c in GF(q) }
//
// with coordinates in the order of ExtFieldCtx::domain() and the -Tr(b)
// position last.

#ifndef NMDS_CODE_HPP
#define NMDS_CODE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nmds/ext_field.hpp"
#include "nmds/solver.hpp"

namespace nmds {

class WeightDistribution {
 public:
  explicit WeightDistribution(std::size_t length = 0) : counts_(length + 1, 0) {}

  std::size_t length() const noexcept { return counts_.size() - 1; }
  /// A_w; zero for w outside [0, n].
  std::uint64_t operator[](std::size_t w) const noexcept {
    return w < counts_.size() ? counts_[w] : 0;
  }
  void add(std::size_t w, std::uint64_t count = 1);

  std::uint64_t total() const noexcept;
  /// Weights with A_w != 0, ascending.
  std::map<std::size_t, std::uint64_t> nonzero() const;
  /// Least w > 0 with A_w != 0.
  std::optional<std::size_t> min_positive_weight() const noexcept;

  friend bool operator==(const WeightDistribution&, const WeightDistribution&) = default;

 private:
  std::vector<std::uint64_t> counts_;
};

/// "{8:114, 7:84, ...}", descending weight.
std::string to_string(const WeightDistribution& dist);

class Code {
 public:
  /// Generator rows c(1, 0), c(alpha, 0), c(0, 1). Throws kVerificationFailed
  /// when q > 2 and the rows are not independent.
  static Code build(const ExtFieldCtx& ctx);

  const ExtFieldCtx& ctx() const noexcept { return ctx_; }
  std::size_t length() const noexcept { return ctx_.q() + 1; }
  /// Rank of the generator rows: 3 for q > 2.
  std::size_t dimension() const noexcept { return dimension_; }
  const std::vector<std::vector<Element>>& generator() const noexcept { return generator_; }

 private:
  explicit Code(ExtFieldCtx ctx) : ctx_(std::move(ctx)) {}

  ExtFieldCtx ctx_;
  std::vector<std::vector<Element>> generator_;
  std::size_t dimension_ = 0;
};

std::vector<Element> codeword(const ExtFieldCtx& ctx, const Element& b, const Element& c);

std::size_t hamming_weight(const FieldCtx& f, std::span<const Element> word);

/// Rank over f of a list of equal-length rows.
std::size_t rank(const FieldCtx& f, std::vector<std::vector<Element>> rows);

inline constexpr std::uint64_t kMaxEnumeratedCodewords = 1ull << 27;

/// Exact tally over all q^3 pairs (b, c). Throws kTooLarge past
/// kMaxEnumeratedCodewords.
WeightDistribution weight_distribution_bruteforce(const Code& code);

/// Closed-form distribution. Throws kUnsupported for q <= 2 and
/// kInvalidArgument when q is not a prime power.
WeightDistribution weight_distribution_closed(std::uint64_t q,
                                              ClosedForm form = ClosedForm::kTabulated);

std::size_t minimum_distance(const Code& code);

/// Smallest number of linearly dependent generator columns, searched over
/// subsets of size at most 4; n + 1 if there is none (trivial dual).
std::size_t dual_distance(const Code& code);

/// Minimum weight of the dual code by listing its q^(n-k) words.
/// Throws kTooLarge past kMaxEnumeratedCodewords.
std::size_t dual_distance_by_enumeration(const Code& code);

enum class Classification { kMDS, kAMDS, kNMDS, kOther };

std::string_view to_string(Classification c) noexcept;

struct CodeSummary {
  std::size_t n;
  std::size_t k;
  std::size_t d;
  std::size_t d_dual;
  /// n - k + 1 - d.
  std::size_t singleton_defect;
  /// Defect of the dual: k + 1 - d_dual.
  std::size_t dual_defect;
  Classification classification;
};

/// Classification from parameters alone.
CodeSummary summarize(std::size_t n, std::size_t k, std::size_t d, std::size_t d_dual);

/// Throws kUnsupported for q <= 2.
CodeSummary classify(const Code& code);

struct ConjectureReport {
  std::uint64_t q;
  Parity parity;
  ClosedForm form;
  WeightDistribution enumerated;
  WeightDistribution closed;
  CodeSummary summary;
  /// What the closed form predicts: MDS with d = q - 1 when it has no
  /// weight-(q-2) words, otherwise NMDS with d = q - 2 and d_dual = 3.
  Classification expected_classification;
  std::size_t expected_d;
  std::optional<std::size_t> expected_d_dual;

  bool distribution_match() const { return enumerated == closed; }
  bool classification_match() const;
  bool passed() const { return distribution_match() && classification_match(); }
  /// Description of the first mismatching quantity, if any.
  std::optional<std::string> first_mismatch() const;
  /// Throws kVerificationFailed carrying first_mismatch().
  void require_passed() const;
};

ConjectureReport verify_conjecture(std::uint64_t q, ClosedForm form = ClosedForm::kTabulated,
                                   const ExtOptions& options = {});

/// Same, on an already-built extension (custom modulus or alpha).
ConjectureReport verify_conjecture(const ExtFieldCtx& ctx,
                                   ClosedForm form = ClosedForm::kTabulated);

}  // namespace nmds

#endif  // NMDS_CODE_HPP
