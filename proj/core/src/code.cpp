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

#include "nmds/code.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "nmds/error.hpp"
#include "nmds/primes.hpp"

namespace nmds {
namespace {

// Reduced row echelon form in place; returns the pivot column of each
// nonzero row.
std::vector<std::size_t> row_reduce(const FieldCtx& f, std::vector<std::vector<Element>>& rows) {
  std::vector<std::size_t> pivots;
  if (rows.empty()) return pivots;
  const std::size_t cols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < rows.size() && f.is_zero(rows[pivot][c])) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    const Element inv = f.inv(rows[r][c]);
    for (auto& v : rows[r]) v = f.mul(v, inv);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || f.is_zero(rows[i][c])) continue;
      const Element factor = rows[i][c];
      for (std::size_t k = 0; k < cols; ++k) {
        rows[i][k] = f.sub(rows[i][k], f.mul(factor, rows[r][k]));
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::uint64_t checked_power(std::uint64_t base, std::size_t exp, std::uint64_t limit) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (out > limit / base) return limit + 1;
    out *= base;
  }
  return out;
}

int eta_minus_one_of(std::uint64_t q) {
  if (q % 2 == 0) return 1;
  return q % 4 == 1 ? 1 : -1;
}

}  // namespace

void WeightDistribution::add(std::size_t w, std::uint64_t count) {
  if (w >= counts_.size()) throw Error(ErrorCode::kInvalidArgument, "weight exceeds length");
  counts_[w] += count;
}

std::uint64_t WeightDistribution::total() const noexcept {
  std::uint64_t s = 0;
  for (auto v : counts_) s += v;
  return s;
}

std::map<std::size_t, std::uint64_t> WeightDistribution::nonzero() const {
  std::map<std::size_t, std::uint64_t> out;
  for (std::size_t w = 0; w < counts_.size(); ++w) {
    if (counts_[w] != 0) out.emplace(w, counts_[w]);
  }
  return out;
}

std::optional<std::size_t> WeightDistribution::min_positive_weight() const noexcept {
  for (std::size_t w = 1; w < counts_.size(); ++w) {
    if (counts_[w] != 0) return w;
  }
  return std::nullopt;
}

std::string to_string(const WeightDistribution& dist) {
  std::ostringstream os;
  os << '{';
  const auto nz = dist.nonzero();
  bool first = true;
  for (auto it = nz.rbegin(); it != nz.rend(); ++it) {
    if (!first) os << ", ";
    first = false;
    os << it->first << ':' << it->second;
  }
  os << '}';
  return os.str();
}

std::vector<Element> codeword(const ExtFieldCtx& ctx, const Element& b, const Element& c) {
  const FieldCtx& f = ctx.base();
  const FieldCtx& ext = ctx.ext();
  ext.check(b);
  f.check(c);
  std::vector<Element> word;
  word.reserve(ctx.q() + 1);
  for (const Element& x : ctx.domain()) {
    word.push_back(f.add(ctx.trace(ext.add(ext.mul(b, x), b)), c));
  }
  word.push_back(f.neg(ctx.trace(b)));
  return word;
}

std::size_t hamming_weight(const FieldCtx& f, std::span<const Element> word) {
  return static_cast<std::size_t>(
      std::count_if(word.begin(), word.end(), [&](const Element& v) { return !f.is_zero(v); }));
}

std::size_t rank(const FieldCtx& f, std::vector<std::vector<Element>> rows) {
  return row_reduce(f, rows).size();
}

Code Code::build(const ExtFieldCtx& ctx) {
  Code code(ctx);
  const FieldCtx& f = code.ctx_.base();
  const FieldCtx& ext = code.ctx_.ext();
  code.generator_ = {codeword(code.ctx_, ext.one(), f.zero()),
                     codeword(code.ctx_, code.ctx_.alpha(), f.zero()),
                     codeword(code.ctx_, ext.zero(), f.one())};
  code.dimension_ = rank(f, code.generator_);
  if (ctx.q() > 2 && code.dimension_ != 3) {
    throw Error(ErrorCode::kVerificationFailed,
                "generator rank " + std::to_string(code.dimension_) + ", expected 3");
  }
  return code;
}

WeightDistribution weight_distribution_bruteforce(const Code& code) {
  const ExtFieldCtx& ctx = code.ctx();
  const FieldCtx& f = ctx.base();
  const FieldCtx& ext = ctx.ext();
  const std::uint64_t q = ctx.q();
  if (checked_power(q, 3, kMaxEnumeratedCodewords) > kMaxEnumeratedCodewords) {
    throw Error(ErrorCode::kTooLarge, "q^3 codewords exceed the enumeration limit");
  }
  const std::size_t n = code.length();
  WeightDistribution dist(n);

  // For fixed b the D-coordinates are t_x + c with t_x = Tr(b x + b); the
  // number of zeros among them is the multiplicity of -c among the t_x.
  std::vector<std::uint64_t> multiplicity(q);
  for (std::uint64_t bi = 0; bi < ext.order(); ++bi) {
    const Element b = ext.element_at(bi);
    std::fill(multiplicity.begin(), multiplicity.end(), 0);
    for (const Element& x : ctx.domain()) {
      ++multiplicity[f.index_of(ctx.trace(ext.add(ext.mul(b, x), b)))];
    }
    const std::size_t last = f.is_zero(ctx.trace(b)) ? 0 : 1;
    for (std::uint64_t ci = 0; ci < q; ++ci) {
      const Element c = f.element_at(ci);
      const std::uint64_t zeros = multiplicity[f.index_of(f.neg(c))];
      dist.add(n - 1 - zeros + last);
    }
  }
  return dist;
}

WeightDistribution weight_distribution_closed(std::uint64_t q_unsigned, ClosedForm form) {
  if (!as_prime_power(q_unsigned)) {
    throw Error(ErrorCode::kInvalidArgument, std::to_string(q_unsigned) + " is not a prime power");
  }
  if (q_unsigned <= 2) throw Error(ErrorCode::kUnsupported, "closed forms need q > 2");
  const auto q = static_cast<std::int64_t>(q_unsigned);
  const std::int64_t eta = eta_minus_one_of(q_unsigned);

  // A_{q+1}, A_q, A_{q-1}, A_{q-2}.
  std::array<std::int64_t, 4> a{};
  if (q % 2 == 0) {
    if (form == ClosedForm::kTabulated) {
      a = {q * (q - 1) * (q - 2) / 2, (q - 1) * (5 * q + 4) / 2, q * (q - 1) * (q - 2) / 2,
           (q - 2) * (q - 1) / 2};
    } else {
      a = {q * (q - 1) * (q - 2) / 2, (q - 1) * (5 * q + 2) / 2, q * (q - 1) * (q - 2) / 2,
           q * (q - 1) / 2};
    }
  } else if (form == ClosedForm::kTabulated) {
    a = {(q - 1) * (q * q - 2 * q + 3) / 2, (q - 1) * (5 * q - 6 + eta) / 2,
         (q - 1) * (q * q - 2 * q + 9) / 2, (q - 1) * (q - 4 - eta) / 2};
  } else {
    const std::int64_t eps = -eta;
    const std::int64_t sq = (q - 1) * (q - 1);
    a = {(q - 1) * (sq + eps + 1) / 2, (q - 1) * (5 * q - 4 - 3 * eps) / 2,
         (q - 1) * (sq + 3 * eps + 5) / 2, (q - 1) * (q - 2 - eps) / 2};
  }

  const auto n = static_cast<std::size_t>(q + 1);
  WeightDistribution dist(n);
  dist.add(0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < 0) throw Error(ErrorCode::kUnsupported, "closed form negative at q = " + std::to_string(q));
    dist.add(n - i, static_cast<std::uint64_t>(a[i]));
  }
  return dist;
}

std::size_t minimum_distance(const Code& code) {
  const auto d = weight_distribution_bruteforce(code).min_positive_weight();
  if (!d) throw Error(ErrorCode::kInvalidArgument, "code has no nonzero codeword");
  return *d;
}

std::size_t dual_distance(const Code& code) {
  const FieldCtx& f = code.ctx().base();
  const auto& g = code.generator();
  const std::size_t n = code.length();
  const std::size_t max_t = std::min<std::size_t>(4, n);

  for (std::size_t t = 1; t <= max_t; ++t) {
    std::vector<std::size_t> idx(t);
    for (std::size_t i = 0; i < t; ++i) idx[i] = i;
    while (true) {
      // Columns as rows: t vectors of length k.
      std::vector<std::vector<Element>> cols(t);
      for (std::size_t i = 0; i < t; ++i) {
        for (const auto& row : g) cols[i].push_back(row[idx[i]]);
      }
      if (rank(f, std::move(cols)) < t) return t;

      std::size_t i = t;
      while (i > 0 && idx[i - 1] == n - t + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < t; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  if (max_t < n) {
    // Any k + 1 columns are dependent; reaching here means k >= 4.
    throw Error(ErrorCode::kUnsupported, "dual distance above the searched subset size");
  }
  return n + 1;
}

std::size_t dual_distance_by_enumeration(const Code& code) {
  const FieldCtx& f = code.ctx().base();
  const std::size_t n = code.length();
  auto rows = code.generator();
  const auto pivots = row_reduce(f, rows);
  const std::size_t k = pivots.size();
  const std::size_t r = n - k;
  if (r == 0) return n + 1;
  const std::uint64_t q = f.order();
  const std::uint64_t count = checked_power(q, r, kMaxEnumeratedCodewords);
  if (count > kMaxEnumeratedCodewords) {
    throw Error(ErrorCode::kTooLarge, "dual code exceeds the enumeration limit");
  }

  // Null-space basis: one vector per free column.
  std::vector<std::vector<Element>> basis;
  for (std::size_t c = 0; c < n; ++c) {
    if (std::find(pivots.begin(), pivots.end(), c) != pivots.end()) continue;
    std::vector<Element> v(n, f.zero());
    v[c] = f.one();
    for (std::size_t i = 0; i < k; ++i) v[pivots[i]] = f.neg(rows[i][c]);
    basis.push_back(std::move(v));
  }

  const auto elements = f.elements();
  std::vector<std::uint64_t> digits(r, 0);
  std::size_t best = n + 1;
  for (std::uint64_t word = 1; word < count; ++word) {
    for (std::size_t i = 0; i < r; ++i) {
      if (++digits[i] < q) break;
      digits[i] = 0;
    }
    std::vector<Element> v(n, f.zero());
    for (std::size_t i = 0; i < r; ++i) {
      if (digits[i] == 0) continue;
      const Element& s = elements[digits[i]];
      for (std::size_t j = 0; j < n; ++j) v[j] = f.add(v[j], f.mul(s, basis[i][j]));
    }
    best = std::min(best, hamming_weight(f, v));
  }
  return best;
}

std::string_view to_string(Classification c) noexcept {
  switch (c) {
    case Classification::kMDS: return "MDS";
    case Classification::kAMDS: return "AMDS";
    case Classification::kNMDS: return "NMDS";
    case Classification::kOther: break;
  }
  return "other";
}

CodeSummary summarize(std::size_t n, std::size_t k, std::size_t d, std::size_t d_dual) {
  if (d > n - k + 1 || d_dual > k + 1) {
    throw Error(ErrorCode::kInvalidArgument, "parameters violate the Singleton bound");
  }
  CodeSummary s{n, k, d, d_dual, n - k + 1 - d, k + 1 - d_dual, Classification::kOther};
  if (s.singleton_defect == 0) {
    s.classification = Classification::kMDS;
  } else if (s.singleton_defect == 1) {
    s.classification = s.dual_defect == 1 ? Classification::kNMDS : Classification::kAMDS;
  }
  return s;
}

CodeSummary classify(const Code& code) {
  if (code.ctx().q() <= 2) throw Error(ErrorCode::kUnsupported, "classification needs q > 2");
  return summarize(code.length(), code.dimension(), minimum_distance(code), dual_distance(code));
}

bool ConjectureReport::classification_match() const {
  if (summary.classification != expected_classification || summary.d != expected_d) return false;
  return !expected_d_dual || summary.d_dual == *expected_d_dual;
}

std::optional<std::string> ConjectureReport::first_mismatch() const {
  const std::string at = " at q = " + std::to_string(q);
  if (!distribution_match()) {
    for (std::size_t w = 0; w <= closed.length(); ++w) {
      if (enumerated[w] != closed[w]) {
        return "A_" + std::to_string(w) + at + ": enumerated " + std::to_string(enumerated[w]) +
               ", closed form " + std::to_string(closed[w]);
      }
    }
  }
  if (summary.classification != expected_classification) {
    return "classification" + at + ": " + std::string(to_string(summary.classification)) +
           ", expected " + std::string(to_string(expected_classification));
  }
  if (summary.d != expected_d) {
    return "d" + at + ": " + std::to_string(summary.d) + ", expected " + std::to_string(expected_d);
  }
  if (expected_d_dual && summary.d_dual != *expected_d_dual) {
    return "d_dual" + at + ": " + std::to_string(summary.d_dual) + ", expected " +
           std::to_string(*expected_d_dual);
  }
  return std::nullopt;
}

void ConjectureReport::require_passed() const {
  if (auto m = first_mismatch()) throw Error(ErrorCode::kVerificationFailed, *m);
}

ConjectureReport verify_conjecture(const ExtFieldCtx& ctx, ClosedForm form) {
  const std::uint64_t q = ctx.q();
  if (q <= 2) throw Error(ErrorCode::kUnsupported, "the conjecture concerns q > 2");
  const Code code = Code::build(ctx);
  WeightDistribution enumerated = weight_distribution_bruteforce(code);
  WeightDistribution closed = weight_distribution_closed(q, form);

  const auto d = enumerated.min_positive_weight();
  if (!d) throw Error(ErrorCode::kInvalidArgument, "code has no nonzero codeword");
  const CodeSummary summary =
      summarize(code.length(), code.dimension(), *d, dual_distance(code));

  ConjectureReport report{q,       ctx.is_even() ? Parity::kEven : Parity::kOdd,
                          form,    std::move(enumerated),
                          closed,  summary,
                          Classification::kNMDS, static_cast<std::size_t>(q - 2),
                          std::size_t{3}};
  if (closed[q - 2] == 0) {
    report.expected_classification = Classification::kMDS;
    report.expected_d = static_cast<std::size_t>(q - 1);
    report.expected_d_dual.reset();
  }
  return report;
}

ConjectureReport verify_conjecture(std::uint64_t q, ClosedForm form, const ExtOptions& options) {
  const auto pp = as_prime_power(q);
  if (!pp) throw Error(ErrorCode::kInvalidArgument, std::to_string(q) + " is not a prime power");
  if (q <= 2) throw Error(ErrorCode::kUnsupported, "the conjecture concerns q > 2");
  const FieldCtx base = FieldCtx::make(pp->p, pp->e);
  return verify_conjecture(ExtFieldCtx::make(base, options), form);
}

}  // namespace nmds
