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

// Solutions of E(b, c):  Tr(b x + b) + c = 0  with x in D = mu_{q+1} \ {-1},
// for b in GF(q^2) and c in GF(q).
//
// Write b = b1 + b2 * alpha. The count N(b, c) is one of q, 0, 1, 2 and is
// fixed by a case split on (b, c) plus a discriminant in GF(q):
//
//   p = 2, b2 != c:  delta = (c^2 N(alpha) + c b1) / (b2 + c)^2
//                    N = 2 iff the absolute trace of delta is 0
//   p odd, b, c != 0: Delta = b2^2 - (c^2 + 4 c b1) / (4 N(alpha))
//                    N = 1 + eta(Delta)
//
// `solve` constructs the solutions from these quadratics rather than
// searching; `brute_solutions` scans D and is the oracle for it.

#ifndef NMDS_SOLVER_HPP
#define NMDS_SOLVER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nmds/ext_field.hpp"

namespace nmds {

enum class Parity { kEven, kOdd };

std::string_view to_string(Parity parity) noexcept;

class EquationInstance {
 public:
  /// b in GF(q^2), c in GF(q). b1, b2 are recomputed from b.
  EquationInstance(const ExtFieldCtx& ctx, const Element& b, const Element& c);
  static EquationInstance from_parts(const ExtFieldCtx& ctx, const Element& b1, const Element& b2,
                                     const Element& c);

  const ExtFieldCtx& ctx() const noexcept { return *ctx_; }
  const Element& b() const noexcept { return b_; }
  const Element& b1() const noexcept { return b1_; }
  const Element& b2() const noexcept { return b2_; }
  const Element& c() const noexcept { return c_; }

 private:
  const ExtFieldCtx* ctx_;
  Element b_;
  Element b1_;
  Element b2_;
  Element c_;
};

/// Cases (i)..(vii) of the solution-count analysis.
enum class CaseId { kI = 1, kII, kIII, kIV, kV, kVI, kVII };

struct CaseAnalysis {
  Parity parity;
  CaseId id;
  /// Census sub-split: 0 when the case is not split, else 1 or 2.
  /// Even q splits (vi)/(vii) on b2 != 0 (1) / b2 = 0 (2).
  /// Odd q splits (iv)..(vii) on b1 != 0 (1) / b1 = 0 (2).
  int split;
  /// delta (even) or Delta (odd), when defined for the case.
  std::optional<Element> discriminant;
  std::uint64_t predicted_count;

  /// "i", "iv.1", "vii.2", ...
  std::string label() const;
};

CaseAnalysis classify_case(const EquationInstance& inst);

/// N(b, c); always one of 0, 1, 2, q.
std::uint64_t count_solutions(const EquationInstance& inst);

/// The solution set in D, sorted in canonical element order.
std::vector<Element> solve(const EquationInstance& inst);

/// Scan of D; same ordering as solve.
std::vector<Element> brute_solutions(const EquationInstance& inst);

/// Which closed forms to compare against. kTabulated is the published set;
/// kCorrected fixes the sub-cases whose derivation does not hold for even q
/// and for q = 1 (mod 4).
enum class ClosedForm { kTabulated, kCorrected };

std::string_view to_string(ClosedForm form) noexcept;

struct CensusRow {
  std::string label;
  std::uint64_t tallied;
  std::uint64_t predicted;
};

struct Census {
  std::uint64_t q;
  Parity parity;
  ClosedForm form;
  std::vector<CensusRow> rows;

  bool matches() const noexcept;
  std::uint64_t total_tallied() const noexcept;
};

/// Closed-form number of (b, c) per case, in row order.
std::vector<CensusRow> census_closed_form(std::uint64_t q, Parity parity, int eta_minus_one,
                                          ClosedForm form);

/// Classifies all q^3 pairs (b, c) and tallies them next to the closed forms.
Census case_census(const ExtFieldCtx& ctx, ClosedForm form = ClosedForm::kTabulated);

}  // namespace nmds

#endif  // NMDS_SOLVER_HPP
