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

#include "oosym/verify.hpp"

#include <gtest/gtest.h>

#include "oosym/errors.hpp"

using namespace oosym;

TEST(verify_c_matrix, passes_for_small_d) {
  for (int d = 2; d <= 5; ++d) {
    const auto r = verify_c_matrix(d);
    EXPECT_TRUE(r.pass) << d << " " << r.max_residual;
    EXPECT_LE(r.max_residual, 1e-12);
    EXPECT_EQ(r.check, "c_matrix");
  }
}

TEST(verify_resolution, passes) {
  for (auto [d, K] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}, {3, 2}, {2, 3}}) {
    EXPECT_TRUE(verify_resolution(d, K).pass) << d << "," << K;
  }
  EXPECT_THROW(verify_resolution(3, 4), CapacityError);
}

TEST(verify_invariance, passes_and_handles_zero_trials) {
  const auto r = verify_invariance(2, 2, 10);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.samples, 10);
  EXPECT_EQ(r.seed, kDefaultSeed);
  const auto empty = verify_invariance(2, 1, 0);
  EXPECT_TRUE(empty.pass);
  EXPECT_EQ(empty.samples, 0);
  EXPECT_EQ(empty.note, "no samples");
}

TEST(verify_pt_consistency, all_masks_and_single_mask) {
  EXPECT_TRUE(verify_pt_consistency(2, 1, 10).pass);
  EXPECT_TRUE(verify_pt_consistency(2, 2, 10).pass);
  const auto single = verify_pt_consistency(3, 2, 3, 9, "10");
  EXPECT_TRUE(single.pass);
  EXPECT_EQ(single.mask, "10");
  EXPECT_THROW(verify_pt_consistency(2, 2, 3, 9, "1"), IndexError);
}

TEST(verify_product_fidelities, both_fields) {
  const auto real = verify_product_fidelities(3, 2, 20, Field::Real);
  const auto complex = verify_product_fidelities(3, 2, 20, Field::Complex);
  EXPECT_TRUE(real.pass);
  EXPECT_TRUE(complex.pass);
  EXPECT_EQ(real.check, "product_fidelities_real");
  EXPECT_EQ(complex.check, "product_fidelities_complex");
}

TEST(verify_coplanarity, passes) {
  for (int d = 2; d <= 6; ++d) EXPECT_TRUE(verify_coplanarity(d).pass) << d;
}

TEST(verify_reduction, passes) {
  EXPECT_TRUE(verify_reduction(2, 2, 5).pass);
  EXPECT_TRUE(verify_reduction(2, 3, 3).pass);
  EXPECT_THROW(verify_reduction(2, 1, 3), DomainError);
}

TEST(verify, deterministic_under_seed) {
  const auto a = verify_pt_consistency(2, 2, 5, 123);
  const auto b = verify_pt_consistency(2, 2, 5, 123);
  EXPECT_EQ(a.max_residual, b.max_residual);
  const auto c = verify_invariance(3, 1, 5, 7);
  const auto e = verify_invariance(3, 1, 5, 7);
  EXPECT_EQ(c.max_residual, e.max_residual);
}

TEST(run_suite, default_cases_pass) {
  const auto cases = default_suite_cases();
  ASSERT_EQ(cases.size(), 3u);
  const auto reports = run_suite(cases);
  EXPECT_FALSE(reports.empty());
  for (const auto& r : reports) EXPECT_TRUE(r.pass) << r.check << " d=" << r.d << " K=" << r.K;
  EXPECT_FALSE(first_failure(reports).has_value());
}

TEST(first_failure, returns_first_failing_report) {
  std::vector<VerificationReport> reports(3);
  reports[0].pass = true;
  reports[1].pass = false;
  reports[1].check = "x";
  reports[2].pass = false;
  reports[2].check = "y";
  const auto f = first_failure(reports);
  ASSERT_TRUE(f.has_value());
  EXPECT_EQ(f->check, "x");
}
