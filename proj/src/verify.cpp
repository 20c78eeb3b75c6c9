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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "oosym/errors.hpp"
#include "oosym/projectors.hpp"
#include "oosym/simplex.hpp"

namespace oosym {

namespace {

VerificationReport make_report(std::string check, int d, int K, double residual, double tol) {
  VerificationReport report;
  report.check = std::move(check);
  report.d = d;
  report.K = K;
  report.max_residual = residual;
  report.tolerance = tol;
  report.pass = residual <= tol;
  return report;
}

// Explicitly built family with exact traces; independent of the recursive
// contraction used by twirl_coords / reconstruct.
struct DenseFamily {
  std::vector<ComplexOperator> projectors;
  std::vector<double> traces;

  DenseFamily(int d, int K) : projectors(build_family(d, K)) {
    for (int rank = 0; rank < static_cast<int>(projectors.size()); ++rank) {
      traces.push_back(static_cast<double>(multipartite_trace(d, MultiIndex::from_rank(rank, K))));
    }
  }

  // sum_alpha coeff_alpha Pi^alpha / Tr Pi^alpha
  ComplexOperator combine(const std::vector<double>& coeffs) const {
    ComplexOperator out = ComplexOperator::zero(projectors.front().shape());
    for (std::size_t a = 0; a < projectors.size(); ++a) {
      out += projectors[a] * Complex(coeffs[a] / traces[a]);
    }
    return out;
  }

  std::vector<double> fidelities(const ComplexOperator& rho) const {
    std::vector<double> pi;
    for (const auto& proj : projectors) pi.push_back((rho * proj).trace().real());
    return pi;
  }
};

ComplexOperator kron_all(const std::vector<ComplexOperator>& factors) {
  ComplexOperator out = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) out = kron(out, factors[i]);
  return out;
}

}  // namespace

VerificationReport verify_c_matrix(int d, double tol) {
  check_dense_capacity(d, 2);
  const BipartiteBasis basis = build_bipartite(d);
  const CMatrix c = c_matrix(d);
  double residual = 0.0;
  for (int beta = 0; beta < 3; ++beta) {
    const ComplexOperator normalized =
        basis.pi(beta) * Complex(1.0 / static_cast<double>(bipartite_trace(d, beta)));
    const ComplexOperator transposed = partial_transpose(normalized, SubsystemSet{1});
    for (int alpha = 0; alpha < 3; ++alpha) {
      // Tr(Pi~^g Pi^alpha) = delta, so the trace picks out the Pi~^alpha coefficient.
      const double coeff = (transposed * basis.pi(alpha)).trace().real();
      residual = std::max(residual, std::abs(coeff - c(beta, alpha)));
    }
  }
  return make_report("c_matrix", d, 1, residual, tol);
}

VerificationReport verify_resolution(int d, int K, double tol) {
  const auto family = build_family(d, K);
  const Shape shape(2 * K, d);
  ComplexOperator total = ComplexOperator::zero(shape);
  for (const auto& proj : family) total += proj;
  double residual = max_abs_diff(total, ComplexOperator::identity(shape));
  for (std::size_t a = 0; a < family.size(); ++a) {
    for (std::size_t b = 0; b < family.size(); ++b) {
      const ComplexOperator product = family[a] * family[b];
      const double r = a == b ? max_abs_diff(product, family[b]) : max_abs(product);
      residual = std::max(residual, r);
    }
  }
  auto report = make_report("resolution", d, K, residual, tol);
  report.samples = static_cast<int>(family.size());
  return report;
}

VerificationReport verify_invariance(int d, int K, int trials, std::uint64_t seed, double tol) {
  const auto family = build_family(d, K);
  double residual = 0.0;
  for (int t = 0; t < trials; ++t) {
    std::vector<ComplexOperator> factors;
    for (int i = 0; i < K; ++i) {
      factors.push_back(random_orthogonal(d, mix_seed(seed, static_cast<std::uint64_t>(t) * K + i)));
    }
    std::vector<ComplexOperator> legs = factors;
    legs.insert(legs.end(), factors.begin(), factors.end());
    const ComplexOperator oo = kron_all(legs);
    for (const auto& proj : family) {
      residual = std::max(residual, max_abs_diff(oo * proj, proj * oo));
    }
  }
  auto report = make_report("invariance", d, K, residual, tol);
  report.samples = trials;
  report.seed = seed;
  if (trials <= 0) report.note = "no samples";
  return report;
}

VerificationReport verify_pt_consistency(int d, int K, int samples, std::uint64_t seed,
                                         const std::string& mask, double tol) {
  const DenseFamily family(d, K);
  std::vector<TranspositionMask> masks;
  if (mask.empty()) {
    masks = nonzero_masks(K);
  } else {
    masks.push_back(TranspositionMask::parse(mask));
    if (masks.front().size() != K) throw IndexError("mask length must equal K");
  }

  double residual = 0.0;
  int sign_disagreements = 0;
  for (int s = 0; s < samples; ++s) {
    const FidelityVector f = random_state_coords(d, K, mix_seed(seed, s));
    const ComplexOperator rho = family.combine(f.pi());
    for (const auto& m : masks) {
      const ComplexOperator dense = partial_transpose(rho, m.bob_subsystems());
      const FidelityVector image = pt_map(f, m).coords;
      residual = std::max(residual, max_abs_diff(dense, family.combine(image.pi())));

      // Spectrum of sum pi' Pi~ is {pi'_alpha / Tr Pi^alpha}.
      double expected_min = std::numeric_limits<double>::infinity();
      for (int a = 0; a < image.size(); ++a) {
        expected_min = std::min(expected_min, image[a] / family.traces[a]);
      }
      const double dense_min = min_eigenvalue(dense);
      residual = std::max(residual, std::abs(dense_min - expected_min));
      if ((dense_min >= -kPsdTol) != (image.min() >= -kDefaultTol)) ++sign_disagreements;
    }
  }
  auto report = make_report("pt_consistency", d, K, residual, tol);
  report.mask = mask.empty() ? "all" : mask;
  report.samples = samples;
  report.seed = seed;
  if (sign_disagreements > 0) {
    report.pass = false;
    report.note = std::to_string(sign_disagreements) + " PPT sign disagreements";
  } else if (samples <= 0) {
    report.note = "no samples";
  }
  return report;
}

VerificationReport verify_product_fidelities(int d, int K, int trials, Field field,
                                             std::uint64_t seed, double tol) {
  const DenseFamily family(d, K);
  double residual = 0.0;
  int bound_failures = 0;
  for (int t = 0; t < trials; ++t) {
    std::vector<Vector> psis, phis;
    for (int i = 0; i < K; ++i) {
      const std::uint64_t stream = static_cast<std::uint64_t>(t) * 2 * K + 2 * i;
      psis.push_back(random_unit_vector(d, field, mix_seed(seed, stream)));
      phis.push_back(random_unit_vector(d, field, mix_seed(seed, stream + 1)));
    }
    std::vector<ComplexOperator> legs;
    for (const auto& v : psis) legs.push_back(outer_projector(v));
    for (const auto& v : phis) legs.push_back(outer_projector(v));
    const ComplexOperator sigma = kron_all(legs);

    const auto dense = family.fidelities(sigma);
    const FidelityVector closed = product_state_fidelities(psis, phis);
    for (int a = 0; a < closed.size(); ++a) {
      residual = std::max(residual, std::abs(dense[a] - closed[a]));
    }
    if (!sep_bound_check(closed, tol).passes) ++bound_failures;
  }
  auto report = make_report(field == Field::Real ? "product_fidelities_real"
                                                 : "product_fidelities_complex",
                            d, K, residual, tol);
  report.samples = trials;
  report.seed = seed;
  if (bound_failures > 0) {
    report.pass = false;
    report.note = std::to_string(bound_failures) + " product states over the bounds";
  } else if (trials <= 0) {
    report.note = "no samples";
  }
  return report;
}

VerificationReport verify_coplanarity(int d, double tol) {
  const BipartiteBasis basis = build_bipartite(d);
  const std::vector<const ComplexOperator*> ops{&basis.q0, &basis.q1, &basis.p0, &basis.p1};
  std::vector<ComplexOperator> normalized;
  for (const auto* op : ops) normalized.push_back(*op * Complex(1.0 / op->trace().real()));

  Eigen::Matrix4d gram;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) gram(i, j) = (normalized[i] * normalized[j]).trace().real();
  }
  const double det = std::abs(gram.determinant());
  const double dependence = max_abs(basis.q0 + basis.q1 - basis.p0 - basis.p1);
  auto report = make_report("coplanarity", d, 1, std::max(det, dependence), tol);
  char note[48];
  std::snprintf(note, sizeof(note), "det=%.3g", det);
  report.note = note;
  return report;
}

VerificationReport verify_reduction(int d, int K, int samples, std::uint64_t seed, double tol) {
  if (K < 2) throw DomainError("reduction check needs K >= 2");
  check_dense_capacity(d, K);
  double residual = 0.0;
  for (int s = 0; s < samples; ++s) {
    const FidelityVector f = random_state_coords(d, K, mix_seed(seed, s));
    const ComplexOperator rho = reconstruct(f);
    for (int i = 0; i < K; ++i) {
      const ComplexOperator marginal = partial_trace(rho, SubsystemSet{i, K + i});
      const FidelityVector dense = twirl_coords(marginal, d, K - 1);
      residual = std::max(residual, max_abs_diff(dense, reduce(f, i)));
    }
  }
  auto report = make_report("reduction", d, K, residual, tol);
  report.samples = samples;
  report.seed = seed;
  if (samples <= 0) report.note = "no samples";
  return report;
}

std::vector<SuiteCase> default_suite_cases() { return {{2, 1}, {2, 2}, {3, 1}}; }

std::vector<VerificationReport> run_suite(const std::vector<SuiteCase>& cases,
                                          std::uint64_t seed) {
  std::vector<VerificationReport> reports;
  std::vector<int> seen_d;
  for (const auto& c : cases) {
    check_dense_capacity(c.d, c.K);
    if (std::find(seen_d.begin(), seen_d.end(), c.d) == seen_d.end()) {
      seen_d.push_back(c.d);
      if (c.d <= 8) reports.push_back(verify_c_matrix(c.d));
      reports.push_back(verify_coplanarity(c.d));
    }
    reports.push_back(verify_resolution(c.d, c.K));
    reports.push_back(verify_invariance(c.d, c.K, 20, seed));
    reports.push_back(verify_pt_consistency(c.d, c.K, 20, seed));
    reports.push_back(verify_product_fidelities(c.d, c.K, 20, Field::Real, seed));
    reports.push_back(verify_product_fidelities(c.d, c.K, 20, Field::Complex, seed));
    if (c.K >= 2) reports.push_back(verify_reduction(c.d, c.K, 10, seed));
  }
  return reports;
}

std::optional<VerificationReport> first_failure(const std::vector<VerificationReport>& reports) {
  for (const auto& r : reports) {
    if (!r.pass) return r;
  }
  return std::nullopt;
}

}  // namespace oosym
