// Copyright 2026 The hermrank Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// hermrank command-line front end.
//
// Exit status: 0 on success, 1 when a proven statement is violated (or a
// span check fails), 2 on usage or input errors.

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "hermrank/gaps.hpp"
#include "hermrank/harness.hpp"
#include "hermrank/io.hpp"
#include "hermrank/macaulay.hpp"
#include "hermrank/sos.hpp"
#include "hermrank/span_lab.hpp"

namespace {

using namespace hermrank;

constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

HermitianPoly load_poly(const std::string& path, std::size_t n) {
  const std::string text = read_file(path);
  if (path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0) {
    HermitianPoly f = poly_from_json(parse_json(text));
    if (f.n() != n) {
      throw Error(ErrorKind::DimensionMismatch,
                  path + " has n = " + std::to_string(f.n()) + ", form has " + std::to_string(n) + " variables");
    }
    return f;
  }
  return parse_poly(text, n);
}

std::string interval_list(const std::vector<Interval>& ivs) {
  std::string out;
  for (const auto& iv : ivs) {
    if (!out.empty()) out += " ";
    out += "[" + std::to_string(iv.lo) + "," + std::to_string(iv.hi) + "]";
  }
  return out.empty() ? "-" : out;
}

void print_profile_table(const GapProfile& p) {
  std::cout << "variant " << variant_name(p.variant) << "  n=" << p.n << "  tau=" << p.tau << "  k0=" << p.k0
            << "  tail=" << p.tail << "\n";
  std::cout << std::left << std::setw(10) << "kind" << std::right << std::setw(10) << "lo" << std::setw(10) << "hi"
            << "\n";
  std::vector<std::pair<Interval, const char*>> rows;
  for (const auto& iv : p.allowed) rows.emplace_back(iv, "allowed");
  for (const auto& iv : p.forbidden) rows.emplace_back(iv, "forbidden");
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.first.lo < b.first.lo; });
  for (const auto& [iv, kind] : rows) {
    std::cout << std::left << std::setw(10) << kind << std::right << std::setw(10) << iv.lo << std::setw(10) << iv.hi
              << "\n";
  }
  std::cout << std::left << std::setw(10) << "tail" << std::right << std::setw(10) << p.tail << std::setw(10) << "inf"
            << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact ranks of Hermitian sums of squares and their gap structure"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  // rank
  std::string form_text, input, out_path;
  bool as_json = false;
  auto* rank_cmd = app.add_subcommand("rank", "Rank and signature of A * <z,z>_form");
  rank_cmd->add_option("--form", form_text, "Signature r,s,t")->required();
  rank_cmd->add_option("--input", input, "Polynomial A (.hp text or .json)")->required();
  rank_cmd->add_flag("--json", as_json, "Print JSON");

  // decompose
  auto* dec_cmd = app.add_subcommand("decompose", "Exact weighted decomposition of A * <z,z>_form");
  dec_cmd->add_option("--form", form_text, "Signature r,s,t")->required();
  dec_cmd->add_option("--input", input, "Polynomial A (.hp text or .json)")->required();
  dec_cmd->add_option("--out", out_path, "Output JSON path")->required();

  // gaps
  std::int64_t gap_n = 0, gap_tau = 0;
  std::string variant_text = "general";
  auto* gaps_cmd = app.add_subcommand("gaps", "Allowed and forbidden ranks");
  gaps_cmd->add_option("--n", gap_n, "Number of variables")->required();
  gaps_cmd->add_option("--tau", gap_tau, "Null directions of the form")->default_val(0);
  gaps_cmd->add_option("--variant", variant_text, "conjecture|general|homo|corollary|remark")->default_val("general");
  gaps_cmd->add_flag("--json", as_json, "Print JSON instead of a table");

  // macaulay
  std::string mac_a;
  long mac_n = 0;
  auto* mac_cmd = app.add_subcommand("macaulay", "Macaulay representation and lowering operator");
  mac_cmd->add_option("--a", mac_a, "Positive integer A")->required();
  mac_cmd->add_option("--n", mac_n, "Representation order n")->required();
  mac_cmd->add_flag("--json", as_json, "Print JSON");

  // spans
  std::string check = "hyperplane";
  std::uint64_t seed = 0;
  int trials = 5;
  long m1 = 0, m2 = 0;
  auto* spans_cmd = app.add_subcommand("spans", "Span-dimension checks on the induced map (JSON lines)");
  spans_cmd->add_option("--check", check, "hyperplane|orthopair|dimprop")
      ->check(CLI::IsMember({"hyperplane", "orthopair", "dimprop"}));
  spans_cmd->add_option("--form", form_text, "Signature r,s,t")->required();
  spans_cmd->add_option("--input", input, "Polynomial A (.hp text or .json)")->required();
  spans_cmd->add_option("--seed", seed, "Master seed")->default_val(0);
  spans_cmd->add_option("--trials", trials, "Samples per check")->default_val(5)->check(CLI::PositiveNumber);
  spans_cmd->add_option("--m1", m1, "orthopair: first projective dimension")->default_val(0);
  spans_cmd->add_option("--m2", m2, "orthopair: second projective dimension")->default_val(0);

  // verify
  FamilySpec spec;
  std::string family = "random-bihomogeneous", csv_path;
  std::size_t n_vars = 0;
  bool timing = false;
  bool rank_only = false;
  auto* verify_cmd = app.add_subcommand("verify", "Run a verification campaign over a family");
  verify_cmd->add_option("--family", family, "monomial-exhaustive|random-bihomogeneous|random-general")->required();
  verify_cmd->add_option("--n", n_vars, "Number of variables")->required();
  verify_cmd->add_option("--form", form_text, "Signature r,s,t (default n,0,0)");
  verify_cmd->add_option("--degree", spec.degree, "Degree bound (bidegree for bihomogeneous)")->default_val(1);
  verify_cmd->add_option("--coef-range", spec.coef_range, "Coefficient parts in [-c, c]")->default_val(3);
  verify_cmd->add_option("--count", spec.count, "Instances (limit for monomial-exhaustive)")->default_val(0);
  verify_cmd->add_option("--support-cap", spec.support_cap, "monomial-exhaustive: max squared monomials")
      ->default_val(1);
  verify_cmd->add_flag("--exact-degree", spec.exact_degree, "monomial-exhaustive: only monomials of degree d");
  verify_cmd->add_option("--variant", variant_text, "Profile to check against")->default_val("general");
  verify_cmd->add_option("--seed", spec.seed, "Master seed")->default_val(0);
  verify_cmd->add_option("--report", out_path, "Report JSON path")->required();
  verify_cmd->add_option("--csv", csv_path, "Also write per-instance CSV");
  verify_cmd->add_flag("--timing", timing, "Record wall-clock time (report bytes then vary)");
  verify_cmd->add_flag("--rank-only", rank_only, "Skip decompositions; ranks from the inertia computation only");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (rank_cmd->parsed()) {
      const SignatureForm form = SignatureForm::parse(form_text);
      const RankResult r = sos_rank(load_poly(input, form.n()), form);
      if (as_json) {
        std::cout << canonical_dump(
            {{"rank", r.rank}, {"p", r.positive}, {"q", r.negative}, {"homogenized", r.homogenized}});
      } else {
        std::cout << "R=" << r.rank << " (p=" << r.positive << ",q=" << r.negative << ")"
                  << (r.homogenized ? " [homogenized]" : "") << "\n";
      }
      return 0;
    }
    if (dec_cmd->parsed()) {
      const SignatureForm form = SignatureForm::parse(form_text);
      const HermitianPoly a = load_poly(input, form.n());
      const WeightedSOSDecomposition d = decompose(a, form);
      if (!verify_decomposition(sos_product(a, form), d)) {
        std::cerr << "internal error: decomposition failed to verify\n";
        return kExitViolation;
      }
      Json j = to_json(d);
      j["form"] = form.to_string();
      j["input"] = to_json(a);
      write_file(out_path, canonical_dump(j));
      std::cout << "R=" << d.rank() << " (p=" << d.p() << ",q=" << d.q() << ") written to " << out_path << "\n";
      return 0;
    }
    if (gaps_cmd->parsed()) {
      const GapProfile p = gap_profile(gap_n, gap_tau, parse_variant(variant_text));
      if (as_json) {
        std::cout << canonical_dump(to_json(p));
      } else {
        print_profile_table(p);
      }
      return 0;
    }
    if (mac_cmd->parsed()) {
      BigInt a;
      if (a.set_str(mac_a, 10) != 0) throw Error(ErrorKind::InvalidInput, "--a expects an integer, got " + mac_a);
      const MacaulayRep rep = macaulay_rep(a, mac_n);
      const BigInt lowered = lower_op(a, mac_n);
      if (as_json) {
        std::cout << canonical_dump({{"a", a.get_str()},
                                     {"n", mac_n},
                                     {"representation", rep.to_string()},
                                     {"lower", lowered.get_str()}});
      } else {
        std::cout << a.get_str() << " = " << rep.to_string() << "\n"
                  << "lower_op = " << lowered.get_str() << "\n";
      }
      return 0;
    }
    if (spans_cmd->parsed()) {
      const SignatureForm form = SignatureForm::parse(form_text);
      const HermitianPoly a = load_poly(input, form.n());
      const InducedMap f = induced_map(decompose(a, form));
      if (f.n != form.n()) {
        throw Error(ErrorKind::InvalidInput, "A * <z,z> is not bihomogeneous; span checks need a bihomogeneous product");
      }
      std::vector<SpanReport> reports;
      if (check == "hyperplane") {
        reports = check_hyperplane_restriction(f, form, trials, seed);
      } else if (check == "orthopair") {
        reports = check_orthogonal_span_bound(f, form, m1, m2, trials, seed);
      } else {
        reports = check_dim_prop_all(f, trials, seed);
      }
      bool ok = true;
      for (const auto& r : reports) {
        std::cout << to_json(r).dump() << "\n";
        ok = ok && (r.pass || !r.applicable);
      }
      return ok ? 0 : kExitViolation;
    }
    if (verify_cmd->parsed()) {
      spec.kind = parse_family(family);
      spec.n = n_vars;
      spec.form = form_text.empty() ? SignatureForm::euclidean(n_vars) : SignatureForm::parse(form_text);
      const auto start = std::chrono::steady_clock::now();
      Report report = run_verification(spec, parse_variant(variant_text), worker_count(), !rank_only);
      if (timing) {
        report.wall_clock_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      }
      write_file(out_path, canonical_dump(to_json(report)));
      if (!csv_path.empty()) write_file(csv_path, report_csv(report));
      std::cout << report.instances.size() << " instances, " << report.skipped << " skipped, "
                << report.violations.size() << " violations, " << report.candidates.size()
                << " counterexample candidates\n";
      for (const auto& v : report.violations) {
        std::cout << "violation #" << v.index << " " << v.kind << ": " << v.detail << "\n";
      }
      return report.has_violations() ? kExitViolation : 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
