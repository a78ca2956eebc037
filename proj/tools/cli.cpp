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

#include "cli.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <optional>
#include <set>

#include "CLI11.hpp"
#include "json.hpp"
#include "nmds/code.hpp"
#include "nmds/encoding.hpp"
#include "nmds/error.hpp"
#include "nmds/primes.hpp"
#include "nmds/solver.hpp"

namespace nmds::cli {
namespace {

using json = nlohmann::ordered_json;

struct FieldOptions {
  std::uint64_t q = 0;
  std::string modulus;
  std::string ext_modulus;
  std::size_t alpha_rank = 0;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void add_field_options(CLI::App* cmd, FieldOptions& opts) {
  cmd->add_option("--q", opts.q, "Field order q (prime power)")->required();
  cmd->add_option("--modulus", opts.modulus, "Degree-e modulus of GF(q), e.g. [1,1,1]");
  cmd->add_option("--ext-modulus", opts.ext_modulus, "Degree-2e modulus of GF(q^2)");
  cmd->add_option("--alpha-rank", opts.alpha_rank, "Use the n-th valid alpha (0 = least)");
}

void add_formulas_option(CLI::App* cmd, std::string& formulas) {
  cmd->add_option("--formulas", formulas, "Closed forms to compare against")
      ->check(CLI::IsMember({"tabulated", "corrected"}));
}

ClosedForm closed_form_of(const std::string& name) {
  return name == "corrected" ? ClosedForm::kCorrected : ClosedForm::kTabulated;
}

PrimePower require_prime_power(std::uint64_t q, std::uint64_t min_q) {
  const auto pp = as_prime_power(q);
  if (!pp) throw UsageError("q = " + std::to_string(q) + " is not a prime power");
  if (q < min_q) throw UsageError("q must be at least " + std::to_string(min_q));
  return *pp;
}

ExtFieldCtx make_context(const FieldOptions& opts, std::uint64_t min_q) {
  const PrimePower pp = require_prime_power(opts.q, min_q);
  std::optional<Polynomial> modulus;
  if (!opts.modulus.empty()) modulus = parse_coeffs(opts.modulus);
  const FieldCtx base = FieldCtx::make(pp.p, pp.e, modulus);
  ExtOptions ext;
  if (!opts.ext_modulus.empty()) ext.modulus = parse_coeffs(opts.ext_modulus);
  ext.alpha_rank = opts.alpha_rank;
  return ExtFieldCtx::make(base, ext);
}

json weights_json(const WeightDistribution& dist) {
  json out = json::object();
  for (const auto& [w, a] : dist.nonzero()) out[std::to_string(w)] = a;
  return out;
}

// ---- table ----------------------------------------------------------------

int run_table(const FieldOptions& opts, const std::string& format, const std::string& formulas,
              std::ostream& out) {
  const ExtFieldCtx ctx = make_context(opts, 3);
  const ConjectureReport r = verify_conjecture(ctx, closed_form_of(formulas));
  const CodeSummary& s = r.summary;
  const bool match = r.distribution_match();

  if (format == "json") {
    json doc;
    doc["q"] = r.q;
    doc["parity"] = to_string(r.parity);
    doc["n"] = s.n;
    doc["k"] = s.k;
    doc["d"] = s.d;
    doc["d_dual"] = s.d_dual;
    doc["classification"] = to_string(s.classification);
    doc["weights"] = weights_json(r.enumerated);
    doc["closed_form_weights"] = weights_json(r.closed);
    doc["formulas"] = to_string(r.form);
    doc["closed_form_match"] = match;
    out << doc.dump(2) << '\n';
  } else if (format == "csv") {
    out << "weight,frequency\n";
    for (const auto& [w, a] : r.enumerated.nonzero()) out << w << ',' << a << '\n';
  } else {
    out << "code over GF(" << r.q << "), " << to_string(r.parity) << " q: [" << s.n << ','
        << s.k << ',' << s.d << "], d_dual = " << s.d_dual << ", "
        << to_string(s.classification) << '\n';
    out << std::setw(6) << "weight" << std::setw(12) << "enumerated" << std::setw(13)
        << "closed form" << '\n';
    std::set<std::size_t> weights;
    for (const auto& [w, a] : r.enumerated.nonzero()) weights.insert(w);
    for (const auto& [w, a] : r.closed.nonzero()) weights.insert(w);
    for (std::size_t w : weights) {
      out << std::setw(6) << w << std::setw(12) << r.enumerated[w] << std::setw(13) << r.closed[w]
          << (r.enumerated[w] == r.closed[w] ? "" : "  *") << '\n';
    }
    out << "closed-form match (" << to_string(r.form) << "): " << (match ? "yes" : "no") << '\n';
  }
  return match ? kExitOk : kExitMismatch;
}

// ---- verify ---------------------------------------------------------------

struct SweepResult {
  bool counts_ok = true;
  std::uint64_t total_solutions = 0;
};

// N(b, c) from the case analysis against a scan of D, and solve() against the
// same scan, for all q^3 pairs.
SweepResult oracle_sweep(const ExtFieldCtx& ctx) {
  SweepResult res;
  const auto base = ctx.base().elements();
  for (std::uint64_t i = 0; i < ctx.ext().order(); ++i) {
    const Element b = ctx.ext().element_at(i);
    for (const Element& c : base) {
      const EquationInstance inst(ctx, b, c);
      const auto scanned = brute_solutions(inst);
      res.total_solutions += scanned.size();
      if (count_solutions(inst) != scanned.size() || solve(inst) != scanned) res.counts_ok = false;
    }
  }
  const std::uint64_t q = ctx.q();
  if (res.total_solutions != q * q * q) res.counts_ok = false;
  return res;
}

int run_verify(std::uint64_t qmin, std::uint64_t qmax, const std::string& format,
               const std::string& formulas, std::ostream& out) {
  if (qmin <= 2) throw UsageError("qmin must be greater than 2");
  if (qmin > qmax) throw UsageError("qmin exceeds qmax");
  const auto qs = prime_powers_in(qmin, qmax);
  if (qs.empty()) throw UsageError("no prime powers in the requested range");
  const ClosedForm form = closed_form_of(formulas);

  json rows = json::array();
  std::size_t passed = 0;
  for (std::uint64_t q : qs) {
    const PrimePower pp = *as_prime_power(q);
    const ExtFieldCtx ctx = ExtFieldCtx::make(FieldCtx::make(pp.p, pp.e));
    const ConjectureReport r = verify_conjecture(ctx, form);
    const SweepResult sweep = oracle_sweep(ctx);
    const bool census_ok = case_census(ctx, form).matches();
    const bool ok = r.distribution_match() && sweep.counts_ok && census_ok &&
                    r.classification_match();
    if (ok) ++passed;
    const CodeSummary& s = r.summary;

    if (format == "json") {
      json row;
      row["q"] = q;
      row["parity"] = to_string(r.parity);
      row["n"] = s.n;
      row["k"] = s.k;
      row["d"] = s.d;
      row["d_dual"] = s.d_dual;
      row["classification"] = to_string(s.classification);
      row["weights"] = weights_json(r.enumerated);
      row["closed_form_match"] = r.distribution_match();
      row["solution_counts_match"] = sweep.counts_ok;
      row["census_match"] = census_ok;
      row["classification_match"] = r.classification_match();
      if (auto m = r.first_mismatch()) row["first_mismatch"] = *m;
      row["pass"] = ok;
      rows.push_back(std::move(row));
    } else {
      auto mark = [](bool b) { return b ? "ok" : "FAIL"; };
      out << "q = " << std::setw(3) << q << "  distribution " << mark(r.distribution_match())
          << "  counts " << mark(sweep.counts_ok) << "  census " << mark(census_ok)
          << "  classification " << mark(r.classification_match()) << "  ["
          << s.n << ',' << s.k << ',' << s.d << "] d_dual = " << s.d_dual << ' '
          << to_string(s.classification) << "  " << (ok ? "PASS" : "FAIL") << '\n';
      if (auto m = r.first_mismatch()) out << "        " << *m << '\n';
    }
  }

  if (format == "json") {
    json doc;
    doc["qmin"] = qmin;
    doc["qmax"] = qmax;
    doc["formulas"] = to_string(form);
    doc["results"] = std::move(rows);
    doc["passed"] = passed;
    doc["failed"] = qs.size() - passed;
    out << doc.dump(2) << '\n';
  } else {
    out << qs.size() << " prime powers in [" << qmin << ", " << qmax << "]: " << passed
        << " passed, " << qs.size() - passed << " failed (" << to_string(form)
        << " closed forms)\n";
  }
  return passed == qs.size() ? kExitOk : kExitMismatch;
}

// ---- solve ----------------------------------------------------------------

int run_solve(const FieldOptions& opts, const std::string& b1_text, const std::string& b2_text,
              const std::string& c_text, const std::string& format, std::ostream& out) {
  const ExtFieldCtx ctx = make_context(opts, 2);
  const FieldCtx& f = ctx.base();
  const EquationInstance inst = EquationInstance::from_parts(
      ctx, parse_element(f, b1_text), parse_element(f, b2_text), parse_element(f, c_text));
  const CaseAnalysis a = classify_case(inst);
  const auto xs = solve(inst);
  const bool oracle_ok = xs == brute_solutions(inst) && xs.size() == a.predicted_count;

  if (format == "json") {
    json doc;
    doc["q"] = ctx.q();
    doc["b"] = format_element(inst.b());
    doc["b1"] = format_element(inst.b1());
    doc["b2"] = format_element(inst.b2());
    doc["c"] = format_element(inst.c());
    doc["case"] = a.label();
    doc["discriminant"] = a.discriminant ? json(format_element(*a.discriminant)) : json(nullptr);
    doc["count"] = a.predicted_count;
    json sol = json::array();
    for (const auto& x : xs) sol.push_back(format_element(x));
    doc["solutions"] = std::move(sol);
    doc["oracle_match"] = oracle_ok;
    out << doc.dump(2) << '\n';
  } else {
    out << "b = " << format_element(inst.b()) << " (b1 = " << format_element(inst.b1())
        << ", b2 = " << format_element(inst.b2()) << "), c = " << format_element(inst.c())
        << '\n';
    out << "alpha = " << format_element(ctx.alpha()) << '\n';
    out << "case: " << a.label() << '\n';
    out << "discriminant: " << (a.discriminant ? format_element(*a.discriminant) : "-") << '\n';
    out << "count: " << a.predicted_count << '\n';
    out << "solutions:";
    for (const auto& x : xs) out << ' ' << format_element(x);
    out << '\n';
    if (!oracle_ok) out << "oracle mismatch\n";
  }
  return oracle_ok ? kExitOk : kExitMismatch;
}

// ---- census ---------------------------------------------------------------

int run_census(const FieldOptions& opts, const std::string& format, const std::string& formulas,
               std::ostream& out) {
  const ExtFieldCtx ctx = make_context(opts, 3);
  const Census census = case_census(ctx, closed_form_of(formulas));
  const bool match = census.matches();

  if (format == "json") {
    json doc;
    doc["q"] = census.q;
    doc["parity"] = to_string(census.parity);
    doc["formulas"] = to_string(census.form);
    json rows = json::array();
    for (const auto& r : census.rows) {
      rows.push_back({{"case", r.label}, {"tallied", r.tallied}, {"closed_form", r.predicted}});
    }
    doc["rows"] = std::move(rows);
    doc["total"] = census.total_tallied();
    doc["match"] = match;
    out << doc.dump(2) << '\n';
  } else if (format == "csv") {
    out << "case,tallied,closed_form\n";
    for (const auto& r : census.rows) out << r.label << ',' << r.tallied << ',' << r.predicted << '\n';
  } else {
    out << "case census over GF(" << census.q << "), " << to_string(census.parity) << " q\n";
    out << std::setw(6) << "case" << std::setw(10) << "tallied" << std::setw(13) << "closed form"
        << '\n';
    for (const auto& r : census.rows) {
      out << std::setw(6) << r.label << std::setw(10) << r.tallied << std::setw(13) << r.predicted
          << (r.tallied == r.predicted ? "" : "  *") << '\n';
    }
    out << "total: " << census.total_tallied() << '\n';
    out << "closed-form match (" << to_string(census.form) << "): " << (match ? "yes" : "no")
        << '\n';
  }
  return match ? kExitOk : kExitMismatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Trace equations on the unit circle and the codes they define"};
  app.name("nmds");
  app.require_subcommand(1);

  FieldOptions field;
  std::string format = "text";
  std::string formulas = "tabulated";
  std::uint64_t qmin = 0;
  std::uint64_t qmax = 0;
  std::string b1, b2, c;
  const auto formats3 = CLI::IsMember({"text", "json", "csv"});
  const auto formats2 = CLI::IsMember({"text", "json"});

  auto* table = app.add_subcommand("table", "Weight distribution and code parameters");
  add_field_options(table, field);
  table->add_option("--format", format, "text, json or csv")->check(formats3);
  add_formulas_option(table, formulas);

  auto* verify = app.add_subcommand("verify", "Check every prime power in a range");
  verify->add_option("--qmin", qmin, "Smallest q")->required();
  verify->add_option("--qmax", qmax, "Largest q")->required();
  verify->add_option("--format", format, "text or json")->check(formats2);
  add_formulas_option(verify, formulas);

  auto* solve_cmd = app.add_subcommand("solve", "Solve Tr(bx + b) + c = 0 on the unit circle");
  add_field_options(solve_cmd, field);
  solve_cmd->add_option("--b1", b1, "b1 in GF(q), e.g. [1,0]")->required();
  solve_cmd->add_option("--b2", b2, "b2 in GF(q)")->required();
  solve_cmd->add_option("--c", c, "c in GF(q)")->required();
  solve_cmd->add_option("--format", format, "text or json")->check(formats2);

  auto* census = app.add_subcommand("census", "Tally (b, c) pairs by case");
  add_field_options(census, field);
  census->add_option("--format", format, "text, json or csv")->check(formats3);
  add_formulas_option(census, formulas);

  try {
    // CLI11 consumes arguments from the back.
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*table) return run_table(field, format, formulas, out);
    if (*verify) return run_verify(qmin, qmax, format, formulas, out);
    if (*solve_cmd) return run_solve(field, b1, b2, c, format, out);
    if (*census) return run_census(field, format, formulas, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::kVerificationFailed ? kExitMismatch : kExitUsage;
  }
  return kExitUsage;
}

}  // namespace nmds::cli
