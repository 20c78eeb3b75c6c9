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

// Dense complex operators on factorized Hilbert spaces.
//
// Subsystems are numbered from 0, leftmost tensor factor first. A multipartite
// operator over shape [n0, n1, ..., n_{k-1}] stores its entries in the usual
// Kronecker order: the row index is sum_i digit_i * stride_i with the last
// factor varying fastest.

#include <complex>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include <Eigen/Dense>

namespace oosym {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Shape = std::vector<int>;

inline constexpr int kDefaultMaxDim = 4096;
inline constexpr double kHermTol = 1e-12;
inline constexpr double kPsdTol = 1e-9;

class ComplexOperator {
 public:
  // Validates that shape multiplies out to the (square) matrix size.
  ComplexOperator(Matrix entries, Shape shape);
  // Single-factor operator: shape = {rows}.
  explicit ComplexOperator(Matrix entries);

  static ComplexOperator identity(const Shape& shape);
  static ComplexOperator zero(const Shape& shape);

  int dim() const { return static_cast<int>(entries_.rows()); }
  const Shape& shape() const { return shape_; }
  const Matrix& matrix() const { return entries_; }
  Complex operator()(int row, int col) const { return entries_(row, col); }

  Complex trace() const { return entries_.trace(); }
  ComplexOperator adjoint() const;
  ComplexOperator transpose() const;
  // Same entries, different factorization (product must match).
  ComplexOperator reshaped(Shape shape) const;

  ComplexOperator& operator+=(const ComplexOperator& other);
  ComplexOperator& operator-=(const ComplexOperator& other);
  ComplexOperator& operator*=(Complex scalar);

 private:
  Matrix entries_;
  Shape shape_;
};

ComplexOperator operator+(ComplexOperator a, const ComplexOperator& b);
ComplexOperator operator-(ComplexOperator a, const ComplexOperator& b);
ComplexOperator operator*(ComplexOperator a, Complex scalar);
ComplexOperator operator*(Complex scalar, ComplexOperator a);
// Matrix product; both factors must share a shape.
ComplexOperator operator*(const ComplexOperator& a, const ComplexOperator& b);

// Largest |a_ij - b_ij|. Dimensions must agree.
double max_abs_diff(const ComplexOperator& a, const ComplexOperator& b);
double max_abs(const ComplexOperator& a);

// Sorted, duplicate-free list of subsystem positions.
class SubsystemSet {
 public:
  SubsystemSet() = default;
  SubsystemSet(std::initializer_list<int> indices);
  explicit SubsystemSet(std::vector<int> indices);

  const std::vector<int>& indices() const { return indices_; }
  bool contains(int index) const;
  bool empty() const { return indices_.empty(); }
  std::size_t size() const { return indices_.size(); }

  // Throws IndexError unless every index lies in [0, shape.size()).
  void check_against(const Shape& shape) const;

 private:
  std::vector<int> indices_;
};

int shape_product(const Shape& shape);

ComplexOperator kron(const ComplexOperator& a, const ComplexOperator& b,
                     int max_dim = kDefaultMaxDim);

// Swaps row and column digits of every subsystem in subs.
ComplexOperator partial_transpose(const ComplexOperator& a, const SubsystemSet& subs);

// Traces out subs; the result lives on the remaining factors in their original
// order. Tracing everything yields a 1x1 operator of shape {1}.
ComplexOperator partial_trace(const ComplexOperator& a, const SubsystemSet& subs);

// Relabels tensor legs: input leg j becomes output leg perm[j].
ComplexOperator permute_legs(const ComplexOperator& a, const std::vector<int>& perm);

// max |A - A^dagger|
double hermitian_deviation(const ComplexOperator& a);

// Smallest eigenvalue of the Hermitian part. Throws DomainError when
// hermitian_deviation exceeds kHermTol times the largest entry magnitude.
double min_eigenvalue(const ComplexOperator& a);
std::vector<double> eigenvalues(const ComplexOperator& a);
bool is_psd(const ComplexOperator& a, double tol = kPsdTol);

enum class Field { Real, Complex };

// Haar-distributed orthogonal matrix: QR of a real Ginibre matrix with the
// signs of R's diagonal moved into Q.
ComplexOperator random_orthogonal(int d, std::uint64_t seed);
// Haar-distributed unitary, same construction over complex Ginibre entries.
ComplexOperator random_unitary(int d, std::uint64_t seed);
Vector random_unit_vector(int d, Field field, std::uint64_t seed);
// rho = G G^dagger / Tr(G G^dagger) for a complex Ginibre G.
ComplexOperator random_density_matrix(const Shape& shape, std::uint64_t seed);

// Deterministic child seed for stream `stream` of a base seed (splitmix64).
std::uint64_t mix_seed(std::uint64_t base, std::uint64_t stream);

// |v><v|
ComplexOperator outer_projector(const Vector& v);

}  // namespace oosym
