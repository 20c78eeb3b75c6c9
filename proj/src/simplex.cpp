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

#include "oosym/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "oosym/errors.hpp"

namespace oosym {

namespace {

void require_d(int d) {
  if (d < 2) throw DomainError("local dimension must be at least 2");
}

int pow3(int k) { return simplex_size(k); }

void require_state(const FidelityVector& f, double tol) {
  if (!f.is_state(tol)) {
    throw DomainError("fidelity vector is not a state (min " + std::to_string(f.min()) +
                      ", sum " + std::to_string(f.sum()) + ")");
  }
}

// Contracts the leading pair of a pair-ordered operator X on (d^2)^k against
// each bipartite projector and recurses, writing Tr(X Pi^alpha) into out.
void contract_pairs(const Matrix& x, const BipartiteBasis& basis, int prefix,
                    std::vector<double>& out) {
  const int m = basis.d * basis.d;
  if (x.rows() == 1) {
    out[prefix] = x(0, 0).real();
    return;
  }
  const int rest = static_cast<int>(x.rows()) / m;
  for (int a = 0; a < 3; ++a) {
    const Matrix& pi = basis.pi(a).matrix();
    Matrix y = Matrix::Zero(rest, rest);
    for (int c1 = 0; c1 < m; ++c1) {
      for (int r1 = 0; r1 < m; ++r1) {
        const Complex w = pi(c1, r1);
        if (w == Complex(0.0)) continue;
        y += w * x.block(r1 * rest, c1 * rest, rest, rest);
      }
    }
    contract_pairs(y, basis, 3 * prefix + a, out);
  }
}

Matrix kron_matrix(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

// sum over the remaining digits of pi_alpha * (x Pi~^{alpha_i}) in pair order.
Matrix assemble_pairs(const FidelityVector& f, const std::array<Matrix, 3>& normalized,
                      int depth, int prefix) {
  if (depth == f.K()) return Matrix::Constant(1, 1, f[prefix]);
  Matrix sum;
  for (int a = 0; a < 3; ++a) {
    Matrix term = kron_matrix(normalized[a], assemble_pairs(f, normalized, depth + 1, 3 * prefix + a));
    if (a == 0) {
      sum = std::move(term);
    } else {
      sum += term;
    }
  }
  return sum;
}

std::vector<int> inverse_permutation(const std::vector<int>& perm) {
  std::vector<int> inv(perm.size());
  for (std::size_t j = 0; j < perm.size(); ++j) inv[perm[j]] = static_cast<int>(j);
  return inv;
}

std::array<double, 3> mix(const std::array<double, 3>& a, const std::array<double, 3>& b,
                          double t) {
  return {(1 - t) * a[0] + t * b[0], (1 - t) * a[1] + t * b[1], (1 - t) * a[2] + t * b[2]};
}

}  // namespace

// ---------------------------------------------------------------------------
// FidelityVector / TranspositionMask

FidelityVector::FidelityVector(int d, int K, std::vector<double> pi)
    : d_(d), K_(K), pi_(std::move(pi)) {
  require_d(d);
  if (K < 1) throw DomainError("K must be at least 1");
  if (static_cast<int>(pi_.size()) != pow3(K)) {
    throw IndexError("fidelity vector for K=" + std::to_string(K) + " needs " +
                     std::to_string(pow3(K)) + " entries, got " + std::to_string(pi_.size()));
  }
}

FidelityVector FidelityVector::vertex(int d, int K, const MultiIndex& alpha) {
  if (alpha.size() != K) throw IndexError("multi-index length must equal K");
  std::vector<double> pi(pow3(K), 0.0);
  pi[alpha.rank()] = 1.0;
  return FidelityVector(d, K, std::move(pi));
}

FidelityVector FidelityVector::uniform(int d, int K) {
  const int n = pow3(K);
  return FidelityVector(d, K, std::vector<double>(n, 1.0 / n));
}

double FidelityVector::sum() const { return std::accumulate(pi_.begin(), pi_.end(), 0.0); }

double FidelityVector::min() const { return *std::min_element(pi_.begin(), pi_.end()); }

bool FidelityVector::is_state(double tol) const {
  return min() >= -tol && std::abs(sum() - 1.0) <= kStateSumTol;
}

double max_abs_diff(const FidelityVector& a, const FidelityVector& b) {
  if (a.size() != b.size()) throw IndexError("fidelity vectors differ in length");
  double worst = 0.0;
  for (int i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

TranspositionMask::TranspositionMask(std::vector<int> bits) : bits_(std::move(bits)) {
  if (bits_.empty()) throw IndexError("mask must have at least one bit");
  for (int bit : bits_) {
    if (bit != 0 && bit != 1) throw IndexError("mask bits must be 0 or 1");
  }
}

TranspositionMask TranspositionMask::from_rank(int rank, int length) {
  if (length < 1 || length > 30 || rank < 0 || rank >= (1 << length)) {
    throw IndexError("mask rank out of range");
  }
  std::vector<int> bits(length);
  for (int i = length - 1; i >= 0; --i) {
    bits[i] = rank & 1;
    rank >>= 1;
  }
  return TranspositionMask(std::move(bits));
}

TranspositionMask TranspositionMask::parse(const std::string& text) {
  std::vector<int> bits;
  for (char ch : text) {
    if (ch != '0' && ch != '1') throw IndexError("bad mask '" + text + "'");
    bits.push_back(ch - '0');
  }
  return TranspositionMask(std::move(bits));
}

int TranspositionMask::rank() const {
  int rank = 0;
  for (int bit : bits_) rank = 2 * rank + bit;
  return rank;
}

bool TranspositionMask::is_zero() const {
  return std::all_of(bits_.begin(), bits_.end(), [](int b) { return b == 0; });
}

std::string TranspositionMask::to_string() const {
  std::string out;
  for (int bit : bits_) out.push_back(static_cast<char>('0' + bit));
  return out;
}

SubsystemSet TranspositionMask::bob_subsystems() const {
  std::vector<int> subs;
  for (int i = 0; i < size(); ++i) {
    if (bits_[i]) subs.push_back(size() + i);
  }
  return SubsystemSet(std::move(subs));
}

std::vector<TranspositionMask> nonzero_masks(int K) {
  if (K < 1 || K > 30) throw DomainError("K out of range for mask enumeration");
  std::vector<TranspositionMask> masks;
  for (int rank = 1; rank < (1 << K); ++rank) masks.push_back(TranspositionMask::from_rank(rank, K));
  return masks;
}

// ---------------------------------------------------------------------------
// Partial transposition and PPT

CMatrix c_matrix(int d) {
  require_d(d);
  const double dd = d;
  const double s = 1.0 / (2.0 * dd);
  return CMatrix{d,
                 {{{(dd - 2) * s, dd * s, 2 * s},
                   {(dd + 2) * s, dd * s, -2 * s},
                   {(dd - 1) * (dd + 2) * s, -dd * (dd - 1) * s, 2 * s}}}};
}

TransposedCoords pt_map(const FidelityVector& f, const TranspositionMask& mask, double tol) {
  if (mask.size() != f.K()) {
    throw IndexError("mask length " + std::to_string(mask.size()) + " does not match K=" +
                     std::to_string(f.K()));
  }
  const CMatrix c = c_matrix(f.d());
  std::vector<double> pi = f.pi();
  const int n = f.size();
  for (int i = 0; i < f.K(); ++i) {
    if (!mask[i]) continue;
    const int stride = pow3(f.K() - 1 - i);
    for (int base = 0; base < n; ++base) {
      if ((base / stride) % 3 != 0) continue;
      const std::array<double, 3> in{pi[base], pi[base + stride], pi[base + 2 * stride]};
      for (int alpha = 0; alpha < 3; ++alpha) {
        pi[base + alpha * stride] = in[0] * c(0, alpha) + in[1] * c(1, alpha) + in[2] * c(2, alpha);
      }
    }
  }
  FidelityVector out(f.d(), f.K(), std::move(pi));
  const bool state_valued = out.is_state(tol);
  return {std::move(out), state_valued};
}

PptVerdict ppt_check(const FidelityVector& f, const TranspositionMask& mask, double tol) {
  require_state(f, tol);
  auto image = pt_map(f, mask, tol);
  std::vector<PptViolation> violations;
  for (int rank = 0; rank < image.coords.size(); ++rank) {
    if (image.coords[rank] < -tol) {
      violations.push_back({MultiIndex::from_rank(rank, f.K()), image.coords[rank]});
    }
  }
  const bool is_ppt = violations.empty();
  return {mask, is_ppt, std::move(violations), std::move(image.coords)};
}

std::vector<PptVerdict> ppt_all(const FidelityVector& f, double tol) {
  std::vector<PptVerdict> verdicts;
  for (const auto& mask : nonzero_masks(f.K())) verdicts.push_back(ppt_check(f, mask, tol));
  return verdicts;
}

PptInequalities ppt_inequalities_01_10(const FidelityVector& f) {
  if (f.K() != 2) throw DomainError("the (01)/(10) inequality systems are defined for K = 2");
  const double dm1 = f.d() - 1.0;
  auto pi = [&](int a, int b) { return f[3 * a + b]; };
  PptInequalities out{};
  for (int i = 0; i < 3; ++i) {
    out.sys01[2 * i] = pi(i, 0) + pi(i, 1) - dm1 * pi(i, 2);
    out.sys01[2 * i + 1] = pi(i, 0) - pi(i, 1) + pi(i, 2);
    out.sys10[2 * i] = pi(0, i) + pi(1, i) - dm1 * pi(2, i);
    out.sys10[2 * i + 1] = pi(0, i) - pi(1, i) + pi(2, i);
  }
  return out;
}

bool all_at_least(const std::array<double, 6>& residuals, double threshold) {
  return std::all_of(residuals.begin(), residuals.end(),
                     [threshold](double r) { return r >= threshold; });
}

// ---------------------------------------------------------------------------
// Separability bounds

FidelityVector product_state_fidelities(std::span<const Vector> psis,
                                        std::span<const Vector> phis) {
  if (psis.empty() || psis.size() != phis.size()) {
    throw IndexError("need the same positive number of psi and phi vectors");
  }
  const int K = static_cast<int>(psis.size());
  const int d = static_cast<int>(psis[0].size());
  require_d(d);

  std::vector<std::array<double, 3>> u(K);
  for (int i = 0; i < K; ++i) {
    const Vector& psi = psis[i];
    const Vector& phi = phis[i];
    if (psi.size() != d || phi.size() != d) throw IndexError("vectors must share dimension d");
    if (std::abs(psi.norm() - 1.0) > 1e-10 || std::abs(phi.norm() - 1.0) > 1e-10) {
      throw DomainError("product-state vectors must be unit norm");
    }
    const double alpha = std::norm(psi.dot(phi));
    const double beta = std::norm(psi.dot(phi.conjugate()));
    u[i] = {(1 + alpha) / 2 - beta / d, (1 - alpha) / 2, beta / d};
  }

  const int n = pow3(K);
  std::vector<double> pi(n);
  for (int rank = 0; rank < n; ++rank) {
    const MultiIndex sigma = MultiIndex::from_rank(rank, K);
    double value = 1.0;
    for (int i = 0; i < K; ++i) value *= u[i][sigma[i]];
    pi[rank] = value;
  }
  return FidelityVector(d, K, std::move(pi));
}

double sep_bound(int d, const MultiIndex& sigma) {
  require_d(d);
  const double f[3] = {1.0, 2.0, static_cast<double>(d)};
  double denom = 1.0;
  for (int digit : sigma.digits()) denom *= f[digit];
  return 1.0 / denom;
}

SepBoundResult sep_bound_check(const FidelityVector& f, double tol) {
  require_state(f, tol);
  SepBoundResult result{true, f.K() == 1, {}, {}};
  result.bounds.reserve(f.size());
  for (int rank = 0; rank < f.size(); ++rank) {
    const MultiIndex sigma = MultiIndex::from_rank(rank, f.K());
    const double bound = sep_bound(f.d(), sigma);
    result.bounds.push_back(bound);
    if (f[rank] > bound + tol) result.violated.push_back(sigma);
  }
  result.passes = result.violated.empty();
  return result;
}

// ---------------------------------------------------------------------------
// Dense bridge

FidelityVector twirl_coords(const ComplexOperator& rho, int d, int K) {
  check_dense_capacity(d, K);
  const int legs = 2 * K;
  const Shape shape(legs, d);
  if (rho.dim() != shape_product(shape)) {
    throw IndexError("state dimension " + std::to_string(rho.dim()) + " does not match d^(2K)");
  }
  const ComplexOperator state = rho.reshaped(shape);
  if (std::abs(state.trace().real() - 1.0) > 1e-10 || std::abs(state.trace().imag()) > 1e-10) {
    throw DomainError("state must have unit trace");
  }
  if (!is_psd(state)) throw DomainError("state is not positive semidefinite");

  const ComplexOperator pair_ordered =
      permute_legs(state, inverse_permutation(pair_permutation(K)));
  std::vector<double> pi(pow3(K));
  contract_pairs(pair_ordered.matrix(), build_bipartite(d), 0, pi);
  return FidelityVector(d, K, std::move(pi));
}

ComplexOperator reconstruct(const FidelityVector& f) {
  check_dense_capacity(f.d(), f.K());
  const BipartiteBasis basis = build_bipartite(f.d());
  std::array<Matrix, 3> normalized;
  for (int a = 0; a < 3; ++a) {
    normalized[a] = basis.pi(a).matrix() / static_cast<double>(bipartite_trace(f.d(), a));
  }
  ComplexOperator pair_ordered(assemble_pairs(f, normalized, 0, 0), Shape(2 * f.K(), f.d()));
  return permute_legs(pair_ordered, pair_permutation(f.K()));
}

// ---------------------------------------------------------------------------
// Reductions

FidelityVector reduce(const FidelityVector& f, int pair_index) {
  if (f.K() < 2) throw DomainError("reduction needs K >= 2");
  if (pair_index < 0 || pair_index >= f.K()) throw IndexError("pair index out of range");
  const int K = f.K() - 1;
  std::vector<double> pi(pow3(K), 0.0);
  const int stride = pow3(f.K() - 1 - pair_index);
  for (int rank = 0; rank < f.size(); ++rank) {
    // Drop digit pair_index from the rank.
    const int high = rank / (3 * stride);
    const int low = rank % stride;
    pi[high * stride + low] += f[rank];
  }
  return FidelityVector(f.d(), K, std::move(pi));
}

FidelityVector reduce_mixed(const FidelityVector& f, int alice_pair, int bob_pair) {
  if (alice_pair == bob_pair) return reduce(f, alice_pair);
  if (f.K() < 3) throw DomainError("a mixed reduction needs K >= 3");
  if (std::min(alice_pair, bob_pair) < 0 || std::max(alice_pair, bob_pair) >= f.K()) {
    throw IndexError("pair index out of range");
  }
  const auto [lo, hi] = std::minmax(alice_pair, bob_pair);
  return reduce(reduce(f, hi), lo);
}

// ---------------------------------------------------------------------------
// Bipartite hull

std::array<double, 3> pair_vertex_coords(int d, PairFamily family, int index) {
  require_d(d);
  if (index != 0 && index != 1) throw IndexError("vertex index must be 0 or 1");
  const double t0 = static_cast<double>(bipartite_trace(d, 0));
  const double t1 = static_cast<double>(bipartite_trace(d, 1));
  if (family == PairFamily::Werner) {
    if (index == 1) return {0.0, 1.0, 0.0};
    // Q0 = Pi0 + Pi2
    const double tq0 = t0 + 1.0;
    return {t0 / tq0, 0.0, 1.0 / tq0};
  }
  if (index == 1) return {0.0, 0.0, 1.0};
  // P0 = Pi0 + Pi1
  const double tp0 = t0 + t1;
  return {t0 / tp0, t1 / tp0, 0.0};
}

std::vector<HullVertex> hull_vertices(int d, int K) {
  require_d(d);
  if (K < 1) throw DomainError("K must be at least 1");
  struct Generator {
    const char* label;
    std::array<double, 3> coords;
  };
  const std::array<Generator, 4> gens{{
      {"Q0", pair_vertex_coords(d, PairFamily::Werner, 0)},
      {"Q1", pair_vertex_coords(d, PairFamily::Werner, 1)},
      {"P0", pair_vertex_coords(d, PairFamily::Isotropic, 0)},
      {"P1", pair_vertex_coords(d, PairFamily::Isotropic, 1)},
  }};
  const int n = pow3(K);
  long long count = 1;
  for (int i = 0; i < K; ++i) {
    count *= 4;
    if (count > kMaxScanPoints) throw CapacityError("too many hull vertices");
  }

  std::vector<HullVertex> out;
  out.reserve(static_cast<std::size_t>(count));
  std::vector<int> choice(K, 0);
  for (long long v = 0; v < count; ++v) {
    long long rest = v;
    for (int i = K - 1; i >= 0; --i) {
      choice[i] = static_cast<int>(rest % 4);
      rest /= 4;
    }
    std::vector<double> pi(n);
    for (int rank = 0; rank < n; ++rank) {
      const MultiIndex alpha = MultiIndex::from_rank(rank, K);
      double value = 1.0;
      for (int i = 0; i < K; ++i) value *= gens[choice[i]].coords[alpha[i]];
      pi[rank] = value;
    }
    std::vector<std::string> labels;
    for (int c : choice) labels.emplace_back(gens[c].label);
    out.push_back({std::move(labels), FidelityVector(d, K, std::move(pi))});
  }
  return out;
}

IntersectionPoint intersection_point(int d, double tol) {
  require_d(d);
  // q = 1/2 - 1/s and p = (2/s)(1/2 + 1/s) with s = d(d+1), each rounded once
  const double s = static_cast<double>(d) * (d + 1);
  const double q = (s - 2.0) / (2.0 * s);
  const double p = (s + 2.0) / (s * s);
  const auto werner = mix(pair_vertex_coords(d, PairFamily::Werner, 0),
                          pair_vertex_coords(d, PairFamily::Werner, 1), q);
  const auto isotropic = mix(pair_vertex_coords(d, PairFamily::Isotropic, 0),
                             pair_vertex_coords(d, PairFamily::Isotropic, 1), p);
  double residual = 0.0;
  for (int k = 0; k < 3; ++k) residual = std::max(residual, std::abs(werner[k] - isotropic[k]));
  return {q, p, werner, isotropic, residual, residual <= tol};
}

LineCrossing werner_isotropic_crossing(int d) {
  require_d(d);
  const auto w0 = pair_vertex_coords(d, PairFamily::Werner, 0);
  const auto w1 = pair_vertex_coords(d, PairFamily::Werner, 1);
  const auto i0 = pair_vertex_coords(d, PairFamily::Isotropic, 0);
  const auto i1 = pair_vertex_coords(d, PairFamily::Isotropic, 1);
  // w0 + q (w1 - w0) = i0 + p (i1 - i0), components 1 and 2 (the third follows).
  const double a11 = w1[1] - w0[1], a12 = -(i1[1] - i0[1]), b1 = i0[1] - w0[1];
  const double a21 = w1[2] - w0[2], a22 = -(i1[2] - i0[2]), b2 = i0[2] - w0[2];
  const double det = a11 * a22 - a12 * a21;
  const double q = (b1 * a22 - a12 * b2) / det;
  const double p = (a11 * b2 - b1 * a21) / det;
  return {q, p, mix(w0, w1, q)};
}

// ---------------------------------------------------------------------------
// Sampling and lattice scans

FidelityVector random_state_coords(int d, int K, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::exponential_distribution<double> exponential(1.0);
  std::vector<double> pi(pow3(K));
  for (double& x : pi) x = exponential(rng);
  const double total = std::accumulate(pi.begin(), pi.end(), 0.0);
  for (double& x : pi) x /= total;
  return FidelityVector(d, K, std::move(pi));
}

long long composition_count(int n, int parts, long long limit) {
  if (n < 0 || parts < 1) throw DomainError("invalid composition parameters");
  // C(n + parts - 1, parts - 1), built incrementally as C(n + k, k).
  long double value = 1.0L;
  for (int k = 1; k < parts; ++k) {
    value = value * (n + k) / k;
    if (value > static_cast<long double>(limit)) return limit + 1;
  }
  return std::llround(value);
}

void for_each_lattice_point(int n, int parts,
                            const std::function<void(const std::vector<int>&)>& visit) {
  if (n < 0 || parts < 1) throw DomainError("invalid composition parameters");
  std::vector<int> c(parts, 0);
  c[parts - 1] = n;
  while (true) {
    visit(c);
    // Successor: move one unit from the last nonzero part k to part k-1 and
    // push the remainder of part k to the end.
    int k = parts - 1;
    while (k > 0 && c[k] == 0) --k;
    if (k == 0) return;
    const int tail = c[k];
    c[k] = 0;
    ++c[k - 1];
    c[parts - 1] = tail - 1;
  }
}

int default_grid_size(int K) {
  const int parts = pow3(K);
  int n = 1;
  while (composition_count(n + 1, parts, kMaxScanPoints) <= kMaxScanPoints) ++n;
  return n;
}

std::string to_string(RegionClass region) {
  switch (region) {
    case RegionClass::Npt: return "NPT";
    case RegionClass::PptAll: return "PPT-all";
    case RegionClass::BoundPass: return "bound-pass";
  }
  return "unknown";
}

std::vector<ScanPoint> scan_region(int d, int K, int n, double tol) {
  require_d(d);
  if (n < 1) throw DomainError("grid size must be positive");
  const int parts = pow3(K);
  if (composition_count(n, parts, kMaxScanPoints) > kMaxScanPoints) {
    throw CapacityError("grid of size " + std::to_string(n) + " exceeds " +
                        std::to_string(kMaxScanPoints) + " points");
  }
  const auto masks = nonzero_masks(K);
  std::vector<ScanPoint> points;
  long long index = 0;
  for_each_lattice_point(n, parts, [&](const std::vector<int>& c) {
    std::vector<double> pi(parts);
    for (int k = 0; k < parts; ++k) pi[k] = static_cast<double>(c[k]) / n;
    FidelityVector f(d, K, std::move(pi));
    std::vector<bool> ppt;
    bool all_ppt = true;
    for (const auto& mask : masks) {
      const bool ok = ppt_check(f, mask, tol).is_ppt;
      ppt.push_back(ok);
      all_ppt = all_ppt && ok;
    }
    const bool bound_pass = sep_bound_check(f, tol).passes;
    const RegionClass region =
        !all_ppt ? RegionClass::Npt : (bound_pass ? RegionClass::BoundPass : RegionClass::PptAll);
    points.push_back({index++, std::move(f), bound_pass, std::move(ppt), region});
  });
  return points;
}

}  // namespace oosym
