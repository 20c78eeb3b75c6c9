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

#include "oosym/io.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>

namespace oosym {

namespace {

template <typename T>
T get_field(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) {
    throw std::invalid_argument(std::string("missing field '") + key + "'");
  }
  try {
    return doc.at(key).get<T>();
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("bad field '") + key + "': " + e.what());
  }
}

}  // namespace

Json operator_to_json(const ComplexOperator& op) {
  const int n = op.dim();
  std::vector<double> re(static_cast<std::size_t>(n) * n);
  std::vector<double> im(re.size());
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      re[static_cast<std::size_t>(r) * n + c] = op(r, c).real();
      im[static_cast<std::size_t>(r) * n + c] = op(r, c).imag();
    }
  }
  return Json{{"dim", n}, {"shape", op.shape()}, {"re", re}, {"im", im}};
}

ComplexOperator operator_from_json(const Json& doc) {
  const int n = get_field<int>(doc, "dim");
  const auto shape = get_field<std::vector<int>>(doc, "shape");
  const auto re = get_field<std::vector<double>>(doc, "re");
  const auto im = get_field<std::vector<double>>(doc, "im");
  if (n < 1 || n > kDefaultMaxDim) throw std::invalid_argument("dim out of range");
  const std::size_t count = static_cast<std::size_t>(n) * n;
  if (re.size() != count || im.size() != count) {
    throw std::invalid_argument("re/im must hold dim*dim entries");
  }
  Matrix m(n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      const std::size_t k = static_cast<std::size_t>(r) * n + c;
      m(r, c) = Complex(re[k], im[k]);
    }
  }
  return ComplexOperator(std::move(m), shape);
}

Json fidelity_to_json(const FidelityVector& f) {
  return Json{{"d", f.d()}, {"K", f.K()}, {"pi", f.pi()}};
}

FidelityVector fidelity_from_json(const Json& doc) {
  return FidelityVector(get_field<int>(doc, "d"), get_field<int>(doc, "K"),
                        get_field<std::vector<double>>(doc, "pi"));
}

Json verdict_to_json(const PptVerdict& verdict) {
  Json violations = Json::array();
  for (const auto& v : verdict.violations) {
    violations.push_back({{"alpha", v.alpha.to_string()}, {"value", v.value}});
  }
  return Json{{"mask", verdict.mask.to_string()},
              {"is_ppt", verdict.is_ppt},
              {"violations", violations},
              {"transposed_pi", verdict.transposed.pi()}};
}

Json sep_result_to_json(const FidelityVector& f, const SepBoundResult& result) {
  Json bounds = Json::array();
  for (int rank = 0; rank < f.size(); ++rank) {
    const double bound = result.bounds[rank];
    bounds.push_back({{"sigma", MultiIndex::from_rank(rank, f.K()).to_string()},
                      {"pi", f[rank]},
                      {"bound", bound}});
  }
  Json violated = Json::array();
  for (const auto& sigma : result.violated) violated.push_back(sigma.to_string());
  return Json{{"d", f.d()},
              {"K", f.K()},
              {"passes", result.passes},
              {"label", result.sufficient ? "sufficient" : "necessary"},
              {"bounds", bounds},
              {"violated", violated}};
}

Json report_to_json(const VerificationReport& report) {
  Json doc{{"check", report.check},
           {"d", report.d},
           {"K", report.K},
           {"samples", report.samples},
           {"seed", report.seed},
           {"max_residual", report.max_residual},
           {"tolerance", report.tolerance},
           {"pass", report.pass}};
  if (!report.mask.empty()) doc["mask"] = report.mask;
  if (!report.note.empty()) doc["note"] = report.note;
  return doc;
}

std::string format_double(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

void write_scan_csv(std::ostream& out, int K, const std::vector<ScanPoint>& points) {
  const auto masks = nonzero_masks(K);
  out << "point";
  for (int rank = 0; rank < simplex_size(K); ++rank) {
    out << ",pi_" << MultiIndex::from_rank(rank, K).to_string();
  }
  out << ",sep_bound";
  for (const auto& m : masks) out << ",ppt_" << m.to_string();
  out << ",class\n";

  for (const auto& p : points) {
    out << p.index;
    for (double v : p.coords.pi()) out << ',' << format_double(v);
    out << ',' << (p.bound_pass ? 1 : 0);
    for (bool ok : p.ppt) out << ',' << (ok ? 1 : 0);
    out << ',' << to_string(p.region) << '\n';
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument("invalid JSON in '" + path + "': " + e.what());
  }
}

}  // namespace oosym
