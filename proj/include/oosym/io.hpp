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

#pragma once

// JSON and CSV encodings used by the command-line tool.
//
//   dense operator  {"dim": n, "shape": [...], "re": [n*n], "im": [n*n]}, row-major
//   fidelities      {"d": d, "K": K, "pi": [3^K]}, base-3 rank order
//
// Malformed documents raise std::invalid_argument.

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "oosym/dense_ops.hpp"
#include "oosym/simplex.hpp"
#include "oosym/verify.hpp"

namespace oosym {

using Json = nlohmann::json;

Json operator_to_json(const ComplexOperator& op);
ComplexOperator operator_from_json(const Json& doc);

Json fidelity_to_json(const FidelityVector& f);
FidelityVector fidelity_from_json(const Json& doc);

Json verdict_to_json(const PptVerdict& verdict);
Json sep_result_to_json(const FidelityVector& f, const SepBoundResult& result);
Json report_to_json(const VerificationReport& report);

// printf("%.17g")
std::string format_double(double value);

// Header: point, pi_<digits>..., sep_bound, ppt_<mask>..., class
void write_scan_csv(std::ostream& out, int K, const std::vector<ScanPoint>& points);

Json read_json_file(const std::string& path);

}  // namespace oosym
