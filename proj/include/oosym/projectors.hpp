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

// Orthogonally invariant projector families.
//
// Bipartite (shape [d, d]):
//   F          flip, F(psi x phi) = phi x psi
//   P+         maximally entangled projector, (1/d) sum_ij |ii><jj|
//   Q0, Q1     symmetric / antisymmetric projectors (I +- F)/2
//   P0, P1     I - P+, P+
//   Pi0 = Q0 - P+,  Pi1 = Q1,  Pi2 = P+
//
// The 2K-partite projector Pi^alpha acts on A_1..A_K B_1..B_K and factors as
// Pi^{alpha_1} on (A_1, B_1) x ... x Pi^{alpha_K} on (A_K, B_K).

#include <string>
#include <vector>

#include "oosym/dense_ops.hpp"

namespace oosym {

// Trinary multi-index alpha in {0,1,2}^K. Rank is base 3 with the first digit
// (pair 1) most significant.
class MultiIndex {
 public:
  explicit MultiIndex(std::vector<int> digits);
  static MultiIndex from_rank(int rank, int length);
  // Parses a digit string such as "02".
  static MultiIndex parse(const std::string& text);

  int rank() const;
  int size() const { return static_cast<int>(digits_.size()); }
  int operator[](int i) const { return digits_[i]; }
  const std::vector<int>& digits() const { return digits_; }
  std::string to_string() const;

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

 private:
  std::vector<int> digits_;
};

// 3^K, throwing CapacityError if it does not fit comfortably in an int.
int simplex_size(int K);

// Throws CapacityError when d^{2K} exceeds the dense cap; DomainError for d < 2 or K < 1.
void check_dense_capacity(int d, int K, int max_dim = kDefaultMaxDim);

ComplexOperator flip(int d);
ComplexOperator max_entangled(int d);

struct BipartiteBasis {
  int d;
  ComplexOperator flip;
  ComplexOperator pplus;
  ComplexOperator q0, q1;
  ComplexOperator p0, p1;
  ComplexOperator pi0, pi1, pi2;

  const ComplexOperator& pi(int k) const;
};

BipartiteBasis build_bipartite(int d);

// Exact trace of the bipartite Pi^k: d(d+1)/2 - 1, d(d-1)/2, 1.
long long bipartite_trace(int d, int k);
// Exact trace of Pi^alpha = product of bipartite traces.
long long multipartite_trace(int d, const MultiIndex& alpha);

// perm[j] is the party-order position of pair-ordered leg j, where pair order
// is A_1 B_1 A_2 B_2 ... and party order is A_1 .. A_K B_1 .. B_K.
std::vector<int> pair_permutation(int K);

ComplexOperator build_multipartite(const BipartiteBasis& basis, const MultiIndex& alpha);
ComplexOperator build_multipartite(int d, int K, const MultiIndex& alpha);

// All 3^K projectors indexed by rank.
std::vector<ComplexOperator> build_family(int d, int K);

// A projector kept together with its exact trace; the normalized operator is
// formed only on request.
struct NormalizedProjector {
  ComplexOperator op;
  long long trace;

  ComplexOperator normalized() const { return op * Complex(1.0 / static_cast<double>(trace)); }
};

NormalizedProjector normalized_projector(int d, int K, const MultiIndex& alpha);

}  // namespace oosym
