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

// Test-only reference computations written directly from index definitions.
// They deliberately avoid the library's dense helpers so that comparisons
// against the library are two independent routes.

#include <array>
#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace oosym::oracle {

using Cx = std::complex<double>;
using Dense = Eigen::MatrixXcd;

// <ij| F |kl> = delta_il delta_jk
inline Dense flip(int d) {
  Dense f = Dense::Zero(d * d, d * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l)
          if (i == l && j == k) f(i * d + j, k * d + l) = 1.0;
  return f;
}

// <ij| P+ |kl> = delta_ij delta_kl / d
inline Dense pplus(int d) {
  Dense p = Dense::Zero(d * d, d * d);
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k) p(i * d + i, k * d + k) = 1.0 / d;
  return p;
}

// Pi^k for k = 0, 1, 2 from the flip and P+.
inline Dense pi(int d, int k) {
  const Dense id = Dense::Identity(d * d, d * d);
  const Dense f = flip(d);
  if (k == 0) return 0.5 * (id + f) - pplus(d);
  if (k == 1) return 0.5 * (id - f);
  return pplus(d);
}

// Transpose of the second factor of a d x d bipartite operator:
// <ij| X^{T_B} |kl> = <il| X |kj>.
inline Dense transpose_second(const Dense& x, int d) {
  Dense out(d * d, d * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l) out(i * d + j, k * d + l) = x(i * d + l, k * d + j);
  return out;
}

// C(beta, alpha) = Tr[(1 x tau)(Pi^beta / Tr Pi^beta) Pi^alpha], all by loops.
inline std::array<std::array<double, 3>, 3> c_matrix(int d) {
  std::array<std::array<double, 3>, 3> c{};
  for (int beta = 0; beta < 3; ++beta) {
    const Dense p = pi(d, beta);
    const Dense t = transpose_second(p / p.trace().real(), d);
    for (int alpha = 0; alpha < 3; ++alpha) c[beta][alpha] = (t * pi(d, alpha)).trace().real();
  }
  return c;
}

// Tr(P_psi x P_phi . Pi^k) computed as <psi phi| Pi^k |psi phi>.
inline std::array<double, 3> product_fidelities(const Eigen::VectorXcd& psi,
                                                const Eigen::VectorXcd& phi) {
  const int d = static_cast<int>(psi.size());
  Eigen::VectorXcd v(d * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) v(i * d + j) = psi(i) * phi(j);
  std::array<double, 3> out{};
  for (int k = 0; k < 3; ++k) out[k] = (v.adjoint() * pi(d, k) * v)(0, 0).real();
  return out;
}

// Every composition of n into `parts` parts, brute force over all tuples.
inline std::vector<std::vector<int>> compositions(int n, int parts) {
  std::vector<std::vector<int>> out;
  std::vector<int> c(parts, 0);
  long long total = 1;
  for (int i = 0; i < parts; ++i) total *= (n + 1);
  for (long long code = 0; code < total; ++code) {
    long long rest = code;
    int sum = 0;
    for (int i = parts - 1; i >= 0; --i) {
      c[i] = static_cast<int>(rest % (n + 1));
      rest /= (n + 1);
      sum += c[i];
    }
    if (sum == n) out.push_back(c);
  }
  return out;
}

}  // namespace oosym::oracle
