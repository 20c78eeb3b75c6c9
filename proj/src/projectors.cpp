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

#include "oosym/projectors.hpp"

#include <string>

#include "oosym/errors.hpp"

namespace oosym {

MultiIndex::MultiIndex(std::vector<int> digits) : digits_(std::move(digits)) {
  for (int digit : digits_) {
    if (digit < 0 || digit > 2) throw IndexError("multi-index digits must be 0, 1 or 2");
  }
}

MultiIndex MultiIndex::from_rank(int rank, int length) {
  if (rank < 0 || rank >= simplex_size(length)) {
    throw IndexError("rank " + std::to_string(rank) + " out of range for length " +
                     std::to_string(length));
  }
  std::vector<int> digits(length);
  for (int i = length - 1; i >= 0; --i) {
    digits[i] = rank % 3;
    rank /= 3;
  }
  return MultiIndex(std::move(digits));
}

MultiIndex MultiIndex::parse(const std::string& text) {
  std::vector<int> digits;
  for (char ch : text) {
    if (ch < '0' || ch > '2') throw IndexError("bad multi-index '" + text + "'");
    digits.push_back(ch - '0');
  }
  return MultiIndex(std::move(digits));
}

int MultiIndex::rank() const {
  int rank = 0;
  for (int digit : digits_) rank = 3 * rank + digit;
  return rank;
}

std::string MultiIndex::to_string() const {
  std::string out;
  for (int digit : digits_) out.push_back(static_cast<char>('0' + digit));
  return out;
}

int simplex_size(int K) {
  if (K < 0) throw DomainError("K must be nonnegative");
  if (K > 19) throw CapacityError("3^K overflows for K = " + std::to_string(K));
  int n = 1;
  for (int i = 0; i < K; ++i) n *= 3;
  return n;
}

void check_dense_capacity(int d, int K, int max_dim) {
  if (d < 2) throw DomainError("local dimension must be at least 2");
  if (K < 1) throw DomainError("K must be at least 1");
  long long dim = 1;
  for (int i = 0; i < 2 * K; ++i) {
    dim *= d;
    if (dim > max_dim) {
      throw CapacityError("d^(2K) exceeds dense cap " + std::to_string(max_dim) + " (d=" +
                          std::to_string(d) + ", K=" + std::to_string(K) + ")");
    }
  }
}

ComplexOperator flip(int d) {
  if (d < 2) throw DomainError("flip requires d >= 2");
  Matrix f = Matrix::Zero(d * d, d * d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) f(i * d + j, j * d + i) = 1.0;
  }
  return ComplexOperator(std::move(f), {d, d});
}

ComplexOperator max_entangled(int d) {
  if (d < 2) throw DomainError("maximally entangled projector requires d >= 2");
  Matrix p = Matrix::Zero(d * d, d * d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) p(i * d + i, j * d + j) = 1.0 / d;
  }
  return ComplexOperator(std::move(p), {d, d});
}

const ComplexOperator& BipartiteBasis::pi(int k) const {
  switch (k) {
    case 0: return pi0;
    case 1: return pi1;
    case 2: return pi2;
    default: throw IndexError("projector index must be 0, 1 or 2");
  }
}

BipartiteBasis build_bipartite(int d) {
  const ComplexOperator f = flip(d);
  const ComplexOperator id = ComplexOperator::identity({d, d});
  const ComplexOperator pplus = max_entangled(d);
  const ComplexOperator q0 = (id + f) * Complex(0.5);
  const ComplexOperator q1 = (id - f) * Complex(0.5);
  const ComplexOperator p0 = id - pplus;
  return BipartiteBasis{
      .d = d,
      .flip = f,
      .pplus = pplus,
      .q0 = q0,
      .q1 = q1,
      .p0 = p0,
      .p1 = pplus,
      .pi0 = q0 - pplus,
      .pi1 = q1,
      .pi2 = pplus,
  };
}

long long bipartite_trace(int d, int k) {
  if (d < 2) throw DomainError("local dimension must be at least 2");
  const long long dd = d;
  switch (k) {
    case 0: return dd * (dd + 1) / 2 - 1;
    case 1: return dd * (dd - 1) / 2;
    case 2: return 1;
    default: throw IndexError("projector index must be 0, 1 or 2");
  }
}

long long multipartite_trace(int d, const MultiIndex& alpha) {
  long long trace = 1;
  for (int digit : alpha.digits()) trace *= bipartite_trace(d, digit);
  return trace;
}

std::vector<int> pair_permutation(int K) {
  if (K < 1) throw DomainError("K must be at least 1");
  std::vector<int> perm(2 * K);
  for (int i = 0; i < K; ++i) {
    perm[2 * i] = i;
    perm[2 * i + 1] = K + i;
  }
  return perm;
}

ComplexOperator build_multipartite(const BipartiteBasis& basis, const MultiIndex& alpha) {
  const int K = alpha.size();
  check_dense_capacity(basis.d, K);
  ComplexOperator pair_ordered = basis.pi(alpha[0]);
  for (int i = 1; i < K; ++i) pair_ordered = kron(pair_ordered, basis.pi(alpha[i]));
  return permute_legs(pair_ordered, pair_permutation(K));
}

ComplexOperator build_multipartite(int d, int K, const MultiIndex& alpha) {
  if (alpha.size() != K) throw IndexError("multi-index length must equal K");
  check_dense_capacity(d, K);
  return build_multipartite(build_bipartite(d), alpha);
}

std::vector<ComplexOperator> build_family(int d, int K) {
  check_dense_capacity(d, K);
  const BipartiteBasis basis = build_bipartite(d);
  std::vector<ComplexOperator> family;
  const int n = simplex_size(K);
  family.reserve(n);
  for (int rank = 0; rank < n; ++rank) {
    family.push_back(build_multipartite(basis, MultiIndex::from_rank(rank, K)));
  }
  return family;
}

NormalizedProjector normalized_projector(int d, int K, const MultiIndex& alpha) {
  return {build_multipartite(d, K, alpha), multipartite_trace(d, alpha)};
}

}  // namespace oosym
