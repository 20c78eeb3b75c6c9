// Copyright 2026 The oosym Authors
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

#include "oosym/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "oosym/errors.hpp"
#include "oosym/io.hpp"
#include "oosym/projectors.hpp"
#include "oosym/simplex.hpp"
#include "oosym/verify.hpp"

namespace oosym::cli {

namespace {

struct Options {
  int d = 0;
  int K = 1;
  std::string alpha;
  std::string out_path;
  std::string state_path;
  std::string fid_path;
  std::string mask;
  double tol = kDefaultTol;
  int grid = 0;
  int pair = 0;
  int bob_pair = -1;
  std::uint64_t seed = kDefaultSeed;
};

// Writes text to the --out file when given, otherwise to out.
void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw std::invalid_argument("cannot write '" + path + "'");
  file << text;
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

MultiIndex parse_alpha(const std::string& text, int K) {
  std::vector<int> digits;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.size() != 1 || item[0] < '0' || item[0] > '2') {
      throw std::invalid_argument("--alpha expects comma-separated digits 0..2");
    }
    digits.push_back(item[0] - '0');
  }
  if (static_cast<int>(digits.size()) != K) {
    throw std::invalid_argument("--alpha needs exactly K digits");
  }
  return MultiIndex(std::move(digits));
}

int cmd_projectors(const Options& o, std::ostream& out) {
  const MultiIndex alpha = parse_alpha(o.alpha, o.K);
  const ComplexOperator proj = build_multipartite(o.d, o.K, alpha);
  Json doc = operator_to_json(proj);
  doc["d"] = o.d;
  doc["K"] = o.K;
  doc["alpha"] = alpha.digits();
  doc["trace"] = std::to_string(multipartite_trace(o.d, alpha));
  emit(dump(doc), o.out_path, out);
  return kOk;
}

int cmd_twirl(const Options& o, std::ostream& out) {
  const ComplexOperator rho = operator_from_json(read_json_file(o.state_path));
  emit(dump(fidelity_to_json(twirl_coords(rho, o.d, o.K))), o.out_path, out);
  return kOk;
}

int cmd_ppt(const Options& o, std::ostream& out) {
  const FidelityVector f = fidelity_from_json(read_json_file(o.fid_path));
  std::vector<PptVerdict> verdicts;
  if (o.mask.empty()) {
    verdicts = ppt_all(f, o.tol);
  } else {
    verdicts.push_back(ppt_check(f, TranspositionMask::parse(o.mask), o.tol));
  }
  Json list = Json::array();
  bool all_ppt = true;
  for (const auto& v : verdicts) {
    list.push_back(verdict_to_json(v));
    all_ppt = all_ppt && v.is_ppt;
  }
  const Json doc{{"d", f.d()}, {"K", f.K()}, {"tol", o.tol}, {"all_ppt", all_ppt},
                 {"verdicts", list}};
  emit(dump(doc), o.out_path, out);
  return kOk;
}

int cmd_sep(const Options& o, std::ostream& out) {
  const FidelityVector f = fidelity_from_json(read_json_file(o.fid_path));
  emit(dump(sep_result_to_json(f, sep_bound_check(f, o.tol))), o.out_path, out);
  return kOk;
}

int cmd_scan(const Options& o, std::ostream& out) {
  const int n = o.grid > 0 ? o.grid : default_grid_size(o.K);
  const auto points = scan_region(o.d, o.K, n, o.tol);
  std::ostringstream csv;
  write_scan_csv(csv, o.K, points);
  emit(csv.str(), o.out_path, out);
  return kOk;
}

int cmd_reduce(const Options& o, std::ostream& out) {
  const FidelityVector f = fidelity_from_json(read_json_file(o.fid_path));
  const FidelityVector reduced =
      o.bob_pair < 0 ? reduce(f, o.pair) : reduce_mixed(f, o.pair, o.bob_pair);
  emit(dump(fidelity_to_json(reduced)), o.out_path, out);
  return kOk;
}

Json coords_json(const std::array<double, 3>& c) { return Json::array({c[0], c[1], c[2]}); }

int cmd_vertices(const Options& o, std::ostream& out) {
  Json vertices = Json::array();
  for (const auto& v : hull_vertices(o.d, o.K)) {
    vertices.push_back({{"labels", v.labels}, {"pi", v.coords.pi()}});
  }
  const IntersectionPoint point = intersection_point(o.d);
  const LineCrossing crossing = werner_isotropic_crossing(o.d);
  const Json doc{
      {"d", o.d},
      {"K", o.K},
      {"vertices", vertices},
      {"intersection",
       {{"q", point.q},
        {"p", point.p},
        {"werner_coords", coords_json(point.werner_coords)},
        {"isotropic_coords", coords_json(point.isotropic_coords)},
        {"line_residual", point.line_residual},
        {"lines_agree", point.lines_agree}}},
      {"line_crossing",
       {{"q", crossing.q}, {"p", crossing.p}, {"coords", coords_json(crossing.coords)}}},
  };
  emit(dump(doc), o.out_path, out);
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  const auto cases =
      o.d > 0 ? std::vector<SuiteCase>{{o.d, o.K}} : default_suite_cases();
  const auto reports = run_suite(cases, o.seed);
  Json list = Json::array();
  for (const auto& r : reports) list.push_back(report_to_json(r));
  emit(dump(list), o.out_path, out);
  if (const auto failure = first_failure(reports)) {
    err << "verification failed: " << failure->check << " (d=" << failure->d
        << ", K=" << failure->K << ") residual " << format_double(failure->max_residual)
        << " > " << format_double(failure->tolerance) << "\n";
    return kVerificationFailed;
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Orthogonally invariant multipartite states: construction, PPT and separability"};
  app.require_subcommand(1);
  Options o;

  auto add_dk = [&o](CLI::App* sub, bool k_required) {
    sub->add_option("--d", o.d, "local dimension")->required()->check(CLI::Range(2, 4096));
    auto* k = sub->add_option("--K", o.K, "number of Alice-Bob pairs")->check(CLI::Range(1, 19));
    if (k_required) k->required();
  };

  auto* projectors = app.add_subcommand("projectors", "dense Pi^alpha as JSON");
  add_dk(projectors, true);
  projectors->add_option("--alpha", o.alpha, "comma-separated digits, e.g. 0,2")->required();
  projectors->add_option("--out", o.out_path);

  auto* twirl = app.add_subcommand("twirl", "fidelities Tr(rho Pi^alpha) of a dense state");
  add_dk(twirl, true);
  twirl->add_option("--state", o.state_path, "dense operator JSON")->required();
  twirl->add_option("--out", o.out_path);

  auto* ppt = app.add_subcommand("ppt", "PPT verdicts in fidelity coordinates");
  ppt->add_option("--fid", o.fid_path, "fidelity JSON")->required();
  ppt->add_option("--mask", o.mask, "bits b1..bK; default all nonzero masks");
  ppt->add_option("--tol", o.tol);
  ppt->add_option("--out", o.out_path);

  auto* sep = app.add_subcommand("sep", "product-state separability bounds");
  sep->add_option("--fid", o.fid_path, "fidelity JSON")->required();
  sep->add_option("--tol", o.tol);
  sep->add_option("--out", o.out_path);

  auto* scan = app.add_subcommand("scan", "classify a lattice over the simplex (CSV)");
  add_dk(scan, true);
  scan->add_option("--grid", o.grid, "lattice resolution n (points are c/n)")
      ->check(CLI::PositiveNumber);
  scan->add_option("--tol", o.tol);
  scan->add_option("--out", o.out_path, "CSV file");

  auto* red = app.add_subcommand("reduce", "trace out one Alice-Bob pair");
  red->add_option("--fid", o.fid_path, "fidelity JSON")->required();
  red->add_option("--pair", o.pair, "0-based pair index (Alice side)")->required();
  red->add_option("--bob-pair", o.bob_pair, "0-based Bob pair for a mixed reduction");
  red->add_option("--out", o.out_path);

  auto* vertices = app.add_subcommand("vertices", "hull generators and the K=1 intersection");
  add_dk(vertices, false);
  vertices->add_option("--out", o.out_path);

  auto* verify = app.add_subcommand("verify", "dense cross-checks; exit 0 iff all pass");
  verify->add_option("--d", o.d)->check(CLI::Range(2, 4096));
  verify->add_option("--K", o.K)->check(CLI::Range(1, 19));
  verify->add_option("--seed", o.seed);
  verify->add_option("--out", o.out_path);

  std::vector<std::string> argv_storage{"oosym"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kArgumentError;
  }

  try {
    if (*projectors) return cmd_projectors(o, out);
    if (*twirl) return cmd_twirl(o, out);
    if (*ppt) return cmd_ppt(o, out);
    if (*sep) return cmd_sep(o, out);
    if (*scan) return cmd_scan(o, out);
    if (*red) return cmd_reduce(o, out);
    if (*vertices) return cmd_vertices(o, out);
    if (*verify) return cmd_verify(o, out, err);
  } catch (const CapacityError& e) {
    err << "capacity error: " << e.what() << "\n";
    return kCapacityError;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return kDomainError;
  } catch (const IndexError& e) {
    err << "argument error: " << e.what() << "\n";
    return kArgumentError;
  } catch (const std::invalid_argument& e) {
    err << "argument error: " << e.what() << "\n";
    return kArgumentError;
  }
  return kArgumentError;
}

}  // namespace oosym::cli
