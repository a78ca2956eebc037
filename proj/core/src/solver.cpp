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

#include "nmds/solver.hpp"

#include <algorithm>
#include <array>

#include "nmds/error.hpp"

namespace nmds {
namespace {

constexpr std::array<std::string_view, 8> kRoman = {"", "i", "ii", "iii", "iv", "v", "vi", "vii"};

Parity parity_of(const ExtFieldCtx& ctx) { return ctx.is_even() ? Parity::kEven : Parity::kOdd; }

// delta = (c^2 N(alpha) + c b1) / (b2 + c)^2, requires b2 != c.
Element even_discriminant(const EquationInstance& inst) {
  const FieldCtx& f = inst.ctx().base();
  const Element& c = inst.c();
  const Element s = f.add(inst.b2(), c);
  if (f.is_zero(s)) throw Error(ErrorCode::kInvalidArgument, "delta needs b2 != c");
  const Element num = f.add(f.mul(f.square(c), inst.ctx().alpha_norm()), f.mul(c, inst.b1()));
  return f.div(num, f.square(s));
}

// Delta = b2^2 - (c^2 + 4 c b1) / (4 N(alpha)).
Element odd_discriminant(const EquationInstance& inst) {
  const FieldCtx& f = inst.ctx().base();
  const Element& c = inst.c();
  const Element four = f.from_int(4);
  const Element num = f.add(f.square(c), f.mul(four, f.mul(c, inst.b1())));
  // 4 != 0 in odd characteristic and N(alpha) != 0 since alpha != 0.
  const Element den = f.mul(four, inst.ctx().alpha_norm());
  return f.sub(f.square(inst.b2()), f.div(num, den));
}

std::vector<std::string_view> row_labels(Parity parity) {
  if (parity == Parity::kEven) {
    return {"i", "ii", "iii", "iv", "v", "vi.1", "vi.2", "vii.1", "vii.2"};
  }
  return {"i", "ii", "iii", "iv.1", "iv.2", "v.1", "v.2", "vi.1", "vi.2", "vii.1", "vii.2"};
}

}  // namespace

std::string_view to_string(Parity parity) noexcept {
  return parity == Parity::kEven ? "even" : "odd";
}

std::string_view to_string(ClosedForm form) noexcept {
  return form == ClosedForm::kTabulated ? "tabulated" : "corrected";
}

EquationInstance::EquationInstance(const ExtFieldCtx& ctx, const Element& b, const Element& c)
    : ctx_(&ctx), b_(b), c_(c) {
  ctx.base().check(c);
  auto [b1, b2] = ctx.decompose(b);
  b1_ = b1;
  b2_ = b2;
}

EquationInstance EquationInstance::from_parts(const ExtFieldCtx& ctx, const Element& b1,
                                              const Element& b2, const Element& c) {
  return EquationInstance(ctx, ctx.compose(b1, b2), c);
}

std::string CaseAnalysis::label() const {
  std::string out(kRoman[static_cast<int>(id)]);
  if (split != 0) out += "." + std::to_string(split);
  return out;
}

CaseAnalysis classify_case(const EquationInstance& inst) {
  const ExtFieldCtx& ctx = inst.ctx();
  const FieldCtx& f = ctx.base();
  CaseAnalysis a{parity_of(ctx), CaseId::kI, 0, std::nullopt, 0};

  if (ctx.ext().is_zero(inst.b())) {
    a.id = f.is_zero(inst.c()) ? CaseId::kI : CaseId::kII;
    a.predicted_count = f.is_zero(inst.c()) ? ctx.q() : 0;
    return a;
  }

  if (a.parity == Parity::kEven) {
    if (f.is_zero(inst.c())) {
      a.id = f.is_zero(inst.b2()) ? CaseId::kIII : CaseId::kIV;
      a.predicted_count = f.is_zero(inst.b2()) ? 0 : 1;
    } else if (inst.b2() == inst.c()) {
      a.id = CaseId::kV;
      a.predicted_count = 1;
    } else {
      a.discriminant = even_discriminant(inst);
      const bool solvable = absolute_trace(f, *a.discriminant) == 0;
      a.id = solvable ? CaseId::kVII : CaseId::kVI;
      a.predicted_count = solvable ? 2 : 0;
      a.split = f.is_zero(inst.b2()) ? 2 : 1;
    }
    return a;
  }

  const int split = f.is_zero(inst.b1()) ? 2 : 1;
  if (f.is_zero(inst.c())) {
    if (f.is_zero(inst.b2())) {
      a.id = CaseId::kIII;
      a.predicted_count = 0;
    } else {
      a.id = CaseId::kIV;
      a.predicted_count = 1;
      a.split = split;
    }
    return a;
  }
  a.discriminant = odd_discriminant(inst);
  a.split = split;
  switch (quadratic_character(f, *a.discriminant)) {
    case 0: a.id = CaseId::kV; a.predicted_count = 1; break;
    case -1: a.id = CaseId::kVI; a.predicted_count = 0; break;
    default: a.id = CaseId::kVII; a.predicted_count = 2; break;
  }
  return a;
}

std::uint64_t count_solutions(const EquationInstance& inst) {
  return classify_case(inst).predicted_count;
}

std::vector<Element> solve(const EquationInstance& inst) {
  const ExtFieldCtx& ctx = inst.ctx();
  const FieldCtx& f = ctx.base();
  const FieldCtx& ext = ctx.ext();
  const Element& b = inst.b();
  const Element& c = inst.c();

  if (ext.is_zero(b)) {
    if (!f.is_zero(c)) return {};
    std::vector<Element> all(ctx.domain().begin(), ctx.domain().end());
    std::sort(all.begin(), all.end());
    return all;
  }

  // Every solution has the form b x + b + (shift) = y * (direction) with y in
  // GF(q), where (shift, direction) = (c alpha, 1) for p = 2 and
  // (c / 2, alpha) for odd p; y runs over the roots of a quadratic.
  std::vector<Element> ys;
  Element shift;
  Element direction;
  if (ctx.is_even()) {
    // y^2 + s y + t = 0, s = c + b2, t = c^2 N(alpha) + c b1.
    const Element s = f.add(c, inst.b2());
    const Element t = f.add(f.mul(f.square(c), ctx.alpha_norm()), f.mul(c, inst.b1()));
    if (f.is_zero(s)) {
      ys.push_back(*sqrt(f, t));
    } else if (auto z = artin_schreier_root(f, f.div(t, f.square(s)))) {
      // y = s z with z^2 + z = t / s^2.
      ys.push_back(f.mul(s, *z));
      ys.push_back(f.mul(s, f.add(*z, f.one())));
    }
    shift = ext.mul(ctx.embed(c), ctx.alpha());
    direction = ext.one();
  } else {
    // (y - b2)^2 = Delta.
    const Element delta = odd_discriminant(inst);
    if (auto r = sqrt(f, delta)) {
      ys.push_back(f.add(inst.b2(), *r));
      ys.push_back(f.sub(inst.b2(), *r));
    }
    shift = ctx.embed(f.div(c, f.from_int(2)));
    direction = ctx.alpha();
  }

  std::vector<Element> xs;
  const Element b_inv = ext.inv(b);
  for (const Element& y : ys) {
    const Element lhs = ext.sub(ext.sub(ext.mul(ctx.embed(y), direction), b), shift);
    const Element x = ext.mul(lhs, b_inv);
    if (x != ctx.minus_one()) xs.push_back(x);
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

std::vector<Element> brute_solutions(const EquationInstance& inst) {
  const ExtFieldCtx& ctx = inst.ctx();
  const FieldCtx& f = ctx.base();
  const FieldCtx& ext = ctx.ext();
  std::vector<Element> out;
  for (const Element& x : ctx.domain()) {
    const Element value = f.add(ctx.trace(ext.add(ext.mul(inst.b(), x), inst.b())), inst.c());
    if (f.is_zero(value)) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool Census::matches() const noexcept {
  return std::all_of(rows.begin(), rows.end(),
                     [](const CensusRow& r) { return r.tallied == r.predicted; });
}

std::uint64_t Census::total_tallied() const noexcept {
  std::uint64_t total = 0;
  for (const auto& r : rows) total += r.tallied;
  return total;
}

std::vector<CensusRow> census_closed_form(std::uint64_t q_unsigned, Parity parity,
                                          int eta_minus_one, ClosedForm form) {
  const auto q = static_cast<std::int64_t>(q_unsigned);
  std::vector<std::int64_t> values;
  if (parity == Parity::kEven) {
    const std::int64_t split_half = q * (q - 1) * (q - 2) / 2;
    std::int64_t vi2 = q * (q - 1) / 2;
    std::int64_t vii2 = (q / 2 - 1) * (q - 1);
    if (form == ClosedForm::kCorrected) std::swap(vi2, vii2);
    values = {1, q - 1, q - 1, q * (q - 1), q * (q - 1), split_half, vi2, split_half, vii2};
  } else if (form == ClosedForm::kTabulated) {
    const std::int64_t eta = eta_minus_one;
    values = {1,
              q - 1,
              q - 1,
              (q - 1) * (q - 1),
              q - 1,
              q * q - 3 * q + 2,
              2 * q - 2,
              (q - 1) * (q * q - 2 * q + 1) / 2,
              (q - 1) * (q - 2 + eta) / 2,
              (q - 1) * (q * q - 2 * q + 3) / 2,
              (q - 1) * (q - 4 - eta) / 2};
  } else {
    // eps = eta(N(alpha)) = -eta(-1).
    const std::int64_t eps = -eta_minus_one;
    const std::int64_t sq = (q - 1) * (q - 1);
    values = {1,
              q - 1,
              q - 1,
              sq,
              q - 1,
              sq - eps * (q - 1),
              (q - 1) * (1 + eps),
              (q - 1) * (sq + eps - 1) / 2,
              (q - 1) * (q - 2 - eps) / 2,
              (q - 1) * (sq + eps + 1) / 2,
              (q - 1) * (q - 2 - eps) / 2};
  }
  const auto labels = row_labels(parity);
  std::vector<CensusRow> rows;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (values[i] < 0) {
      throw Error(ErrorCode::kUnsupported, "closed form negative at q = " + std::to_string(q));
    }
    rows.push_back({std::string(labels[i]), 0, static_cast<std::uint64_t>(values[i])});
  }
  return rows;
}

Census case_census(const ExtFieldCtx& ctx, ClosedForm form) {
  const FieldCtx& f = ctx.base();
  const Parity parity = parity_of(ctx);
  const int eta_minus_one = ctx.is_even() ? 1 : quadratic_character(f, f.from_int(-1));
  Census census{ctx.q(), parity, form, census_closed_form(ctx.q(), parity, eta_minus_one, form)};

  const auto base_elements = f.elements();
  for (std::uint64_t i = 0; i < ctx.ext().order(); ++i) {
    const Element b = ctx.ext().element_at(i);
    for (const Element& c : base_elements) {
      const std::string label = classify_case(EquationInstance(ctx, b, c)).label();
      auto row = std::find_if(census.rows.begin(), census.rows.end(),
                              [&](const CensusRow& r) { return r.label == label; });
      if (row == census.rows.end()) {
        throw Error(ErrorCode::kInvalidArgument, "unexpected case label " + label);
      }
      ++row->tallied;
    }
  }
  return census;
}

}  // namespace nmds
