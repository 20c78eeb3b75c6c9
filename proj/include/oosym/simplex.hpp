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

// Fidelity coordinates of O x O invariant 2K-partite states.
//
// An invariant state is rho = sum_alpha pi_alpha Pi^alpha / Tr Pi^alpha with
// pi_alpha = Tr(rho Pi^alpha). Everything in this header works on the 3^K
// numbers pi_alpha; the dense side lives in dense_ops / projectors and is used
// only by twirl_coords and reconstruct.

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "oosym/dense_ops.hpp"
#include "oosym/projectors.hpp"

namespace oosym {

inline constexpr double kDefaultTol = 1e-9;
// Allowed |sum(pi) - 1| for a vector to count as a state.
inline constexpr double kStateSumTol = 1e-10;

class FidelityVector {
 public:
  // Requires d >= 2, K >= 1 and pi.size() == 3^K. Values are not checked.
  FidelityVector(int d, int K, std::vector<double> pi);

  static FidelityVector vertex(int d, int K, const MultiIndex& alpha);
  static FidelityVector uniform(int d, int K);

  int d() const { return d_; }
  int K() const { return K_; }
  int size() const { return static_cast<int>(pi_.size()); }
  const std::vector<double>& pi() const { return pi_; }
  double operator[](int rank) const { return pi_[rank]; }
  double at(const MultiIndex& alpha) const { return pi_.at(alpha.rank()); }

  double sum() const;
  double min() const;
  // Every coordinate >= -tol and the sum within kStateSumTol of 1.
  bool is_state(double tol = kDefaultTol) const;

 private:
  int d_;
  int K_;
  std::vector<double> pi_;
};

double max_abs_diff(const FidelityVector& a, const FidelityVector& b);

// Binary K-vector a; bit i set means Bob's subsystem B_{i+1} is transposed.
class TranspositionMask {
 public:
  explicit TranspositionMask(std::vector<int> bits);
  // Rank in base 2 with the first bit most significant.
  static TranspositionMask from_rank(int rank, int length);
  static TranspositionMask parse(const std::string& text);

  int size() const { return static_cast<int>(bits_.size()); }
  int operator[](int i) const { return bits_[i]; }
  const std::vector<int>& bits() const { return bits_; }
  int rank() const;
  bool is_zero() const;
  std::string to_string() const;
  // Dense subsystems K+i for every set bit i.
  SubsystemSet bob_subsystems() const;

 private:
  std::vector<int> bits_;
};

// Nonzero masks in binary-rank order: K=2 gives 01, 10, 11.
std::vector<TranspositionMask> nonzero_masks(int K);

// Partial transposition of one pair in fidelity coordinates:
// pi'_alpha = sum_beta pi_beta C(beta, alpha). Rows sum to 1.
struct CMatrix {
  int d;
  std::array<std::array<double, 3>, 3> entries;

  double operator()(int row, int col) const { return entries[row][col]; }
};

CMatrix c_matrix(int d);

struct TransposedCoords {
  FidelityVector coords;
  // False when some coordinate is below -tol, i.e. tau_a rho is not positive.
  bool state_valued;
};

// Applies C^{a_1} x ... x C^{a_K} with C^0 = identity.
TransposedCoords pt_map(const FidelityVector& f, const TranspositionMask& mask,
                        double tol = kDefaultTol);

struct PptViolation {
  MultiIndex alpha;
  double value;
};

struct PptVerdict {
  TranspositionMask mask;
  bool is_ppt;
  std::vector<PptViolation> violations;
  FidelityVector transposed;
};

PptVerdict ppt_check(const FidelityVector& f, const TranspositionMask& mask,
                     double tol = kDefaultTol);
std::vector<PptVerdict> ppt_all(const FidelityVector& f, double tol = kDefaultTol);

// Left-hand sides of the two six-row PPT systems for K = 2. For leading index
// i the (01) pair is (pi_i0 + pi_i1 - (d-1) pi_i2, pi_i0 - pi_i1 + pi_i2); the
// (10) system is the same with the digits exchanged.
struct PptInequalities {
  std::array<double, 6> sys01;
  std::array<double, 6> sys10;
};

PptInequalities ppt_inequalities_01_10(const FidelityVector& f);
bool all_at_least(const std::array<double, 6>& residuals, double threshold);

// pi_sigma = prod_i u_i for the product state P_psi1 x .. x P_psiK x P_phi1 x .. x P_phiK.
FidelityVector product_state_fidelities(std::span<const Vector> psis,
                                        std::span<const Vector> phis);

// 1 / (f_{sigma_1} ... f_{sigma_K}) with f_0 = 1, f_1 = 2, f_2 = d.
double sep_bound(int d, const MultiIndex& sigma);

struct SepBoundResult {
  bool passes;
  // True for K = 1, where the bounds characterize separability exactly.
  bool sufficient;
  std::vector<MultiIndex> violated;
  std::vector<double> bounds;
};

SepBoundResult sep_bound_check(const FidelityVector& f, double tol = kDefaultTol);

// pi_alpha = Tr(rho Pi^alpha). rho must be a density matrix on d^{2K} dimensions.
FidelityVector twirl_coords(const ComplexOperator& rho, int d, int K);

// sum_alpha pi_alpha Pi^alpha / Tr Pi^alpha on shape [d] * 2K.
ComplexOperator reconstruct(const FidelityVector& f);

// Trace over the pair (A_i, B_i): sums out digit i.
FidelityVector reduce(const FidelityVector& f, int pair_index);
// Trace over A_i and B_j; for i != j this is the two natural reductions i and j.
FidelityVector reduce_mixed(const FidelityVector& f, int alice_pair, int bob_pair);

enum class PairFamily { Werner, Isotropic };

// Coordinates of Q~0, Q~1 (Werner) or P~0, P~1 (isotropic) in the Pi~ simplex.
std::array<double, 3> pair_vertex_coords(int d, PairFamily family, int index);

struct HullVertex {
  // One of "Q0", "Q1", "P0", "P1" per pair.
  std::vector<std::string> labels;
  FidelityVector coords;
};

// All 4^K tensor products of the bipartite hull generators.
std::vector<HullVertex> hull_vertices(int d, int K);

struct IntersectionPoint {
  double q;
  double p;
  // (1-q) Q~0 + q Q~1
  std::array<double, 3> werner_coords;
  // (1-p) P~0 + p P~1
  std::array<double, 3> isotropic_coords;
  double line_residual;
  bool lines_agree;
};

// Evaluates q = 1/2 - 1/(d(d+1)) and p = (2/(d(d+1))) (1/2 + 1/(d(d+1))) and
// reports how far apart the two parametrizations land.
IntersectionPoint intersection_point(int d, double tol = 1e-12);

struct LineCrossing {
  double q;
  double p;
  std::array<double, 3> coords;
};

// Solves (1-q) Q~0 + q Q~1 = (1-p) P~0 + p P~1 in fidelity coordinates.
LineCrossing werner_isotropic_crossing(int d);

// Uniform sample of the simplex (flat Dirichlet).
FidelityVector random_state_coords(int d, int K, std::uint64_t seed);

// Number of compositions of n into `parts` nonnegative parts; saturates at
// limit + 1 so callers can compare against a cap without overflow.
long long composition_count(int n, int parts, long long limit);

// Visits compositions of n into `parts` parts in lexicographic order of
// (c_0, c_1, ...), each as a point c / n of the simplex.
void for_each_lattice_point(int n, int parts,
                            const std::function<void(const std::vector<int>&)>& visit);

inline constexpr long long kMaxScanPoints = 100000;

// Largest n with composition_count(n, 3^K) <= kMaxScanPoints.
int default_grid_size(int K);

enum class RegionClass { Npt, PptAll, BoundPass };
std::string to_string(RegionClass region);

struct ScanPoint {
  long long index;
  FidelityVector coords;
  bool bound_pass;
  std::vector<bool> ppt;  // one per nonzero mask, binary-rank order
  RegionClass region;
};

// Classifies every lattice point: NPT if some mask fails, otherwise bound-pass
// when the separability bounds hold, otherwise PPT-all.
std::vector<ScanPoint> scan_region(int d, int K, int n, double tol = kDefaultTol);

}  // namespace oosym
