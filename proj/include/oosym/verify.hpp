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

// Brute-force cross-checks of the closed-form fidelity calculus against dense
// matrices built from scratch. Residuals are max absolute entry differences.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "oosym/dense_ops.hpp"

namespace oosym {

inline constexpr std::uint64_t kDefaultSeed = 0x5eed2026ULL;

struct VerificationReport {
  std::string check;
  int d = 0;
  int K = 0;
  std::string mask;  // empty when the check is mask independent
  int samples = 0;
  std::uint64_t seed = 0;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string note;
};

// Expands (1 x tau) Pi~^beta over Pi~^alpha by trace inner products and
// compares with c_matrix(d).
VerificationReport verify_c_matrix(int d, double tol = 1e-12);

// Completeness and pairwise orthogonality of the 3^K projectors.
VerificationReport verify_resolution(int d, int K, double tol = 1e-12);

// Commutators with O_1 x .. x O_K x O_1 x .. x O_K over seeded orthogonal tuples.
VerificationReport verify_invariance(int d, int K, int trials,
                                     std::uint64_t seed = kDefaultSeed, double tol = 1e-10);

// Dense partial transpose of sum pi Pi~ against sum pt_map(pi) Pi~, plus the
// smallest eigenvalue. An empty mask string means every nonzero mask.
VerificationReport verify_pt_consistency(int d, int K, int samples,
                                         std::uint64_t seed = kDefaultSeed,
                                         const std::string& mask = "", double tol = 1e-11);

// Closed-form product-state fidelities against Tr(sigma Pi^alpha); every
// sample must also satisfy the product-state bounds.
VerificationReport verify_product_fidelities(int d, int K, int trials, Field field,
                                             std::uint64_t seed = kDefaultSeed,
                                             double tol = 1e-12);

// Gram determinant of {Q~0, Q~1, P~0, P~1} and the identity Q0 + Q1 - P0 - P1 = 0.
VerificationReport verify_coplanarity(int d, double tol = 1e-12);

// reduce() against partial_trace + twirl_coords for every pair index.
VerificationReport verify_reduction(int d, int K, int samples,
                                    std::uint64_t seed = kDefaultSeed, double tol = 1e-12);

struct SuiteCase {
  int d;
  int K;
};

// Default cases: d=2 with K=1,2 and d=3 with K=1.
std::vector<SuiteCase> default_suite_cases();

std::vector<VerificationReport> run_suite(const std::vector<SuiteCase>& cases,
                                          std::uint64_t seed = kDefaultSeed);

std::optional<VerificationReport> first_failure(const std::vector<VerificationReport>& reports);

}  // namespace oosym
