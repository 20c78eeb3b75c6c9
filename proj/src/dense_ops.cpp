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

#include "oosym/dense_ops.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "oosym/errors.hpp"

namespace oosym {

namespace {

std::vector<int> strides_of(const Shape& shape) {
  std::vector<int> strides(shape.size(), 1);
  for (int i = static_cast<int>(shape.size()) - 2; i >= 0; --i) {
    strides[i] = strides[i + 1] * shape[i + 1];
  }
  return strides;
}

void require_same_dim(const ComplexOperator& a, const ComplexOperator& b) {
  if (a.dim() != b.dim()) {
    throw IndexError("operator dimensions differ: " + std::to_string(a.dim()) + " vs " +
                     std::to_string(b.dim()));
  }
}

Matrix ginibre(int d, Field field, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  Matrix g(d, d);
  for (int j = 0; j < d; ++j) {
    for (int i = 0; i < d; ++i) {
      const double re = normal(rng);
      const double im = field == Field::Complex ? normal(rng) : 0.0;
      g(i, j) = Complex(re, im);
    }
  }
  return g;
}

// Q from a Householder QR with R's diagonal made real positive.
Matrix haar_from_ginibre(const Matrix& g) {
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  const Matrix& r = qr.matrixQR();
  for (int j = 0; j < g.cols(); ++j) {
    const double mag = std::abs(r(j, j));
    if (mag > 0.0) q.col(j) *= r(j, j) / mag;
  }
  return q;
}

}  // namespace

int shape_product(const Shape& shape) {
  long long total = 1;
  for (int n : shape) {
    if (n < 1) throw DomainError("local dimensions must be positive");
    total *= n;
    if (total > (1LL << 30)) throw CapacityError("shape product overflows");
  }
  return static_cast<int>(total);
}

ComplexOperator::ComplexOperator(Matrix entries, Shape shape)
    : entries_(std::move(entries)), shape_(std::move(shape)) {
  if (entries_.rows() != entries_.cols()) throw DomainError("operator must be square");
  if (entries_.rows() < 1) throw DomainError("operator must have positive dimension");
  if (shape_.empty()) shape_ = {static_cast<int>(entries_.rows())};
  if (shape_product(shape_) != entries_.rows()) {
    throw DomainError("shape product " + std::to_string(shape_product(shape_)) +
                      " does not match dimension " + std::to_string(entries_.rows()));
  }
}

ComplexOperator::ComplexOperator(Matrix entries)
    : ComplexOperator(std::move(entries), Shape{}) {}

ComplexOperator ComplexOperator::identity(const Shape& shape) {
  const int n = shape_product(shape);
  return ComplexOperator(Matrix::Identity(n, n), shape);
}

ComplexOperator ComplexOperator::zero(const Shape& shape) {
  const int n = shape_product(shape);
  return ComplexOperator(Matrix::Zero(n, n), shape);
}

ComplexOperator ComplexOperator::adjoint() const {
  return ComplexOperator(entries_.adjoint(), shape_);
}

ComplexOperator ComplexOperator::transpose() const {
  return ComplexOperator(entries_.transpose(), shape_);
}

ComplexOperator ComplexOperator::reshaped(Shape shape) const {
  return ComplexOperator(entries_, std::move(shape));
}

ComplexOperator& ComplexOperator::operator+=(const ComplexOperator& other) {
  require_same_dim(*this, other);
  entries_ += other.entries_;
  return *this;
}

ComplexOperator& ComplexOperator::operator-=(const ComplexOperator& other) {
  require_same_dim(*this, other);
  entries_ -= other.entries_;
  return *this;
}

ComplexOperator& ComplexOperator::operator*=(Complex scalar) {
  entries_ *= scalar;
  return *this;
}

ComplexOperator operator+(ComplexOperator a, const ComplexOperator& b) { return a += b; }
ComplexOperator operator-(ComplexOperator a, const ComplexOperator& b) { return a -= b; }
ComplexOperator operator*(ComplexOperator a, Complex scalar) { return a *= scalar; }
ComplexOperator operator*(Complex scalar, ComplexOperator a) { return a *= scalar; }

ComplexOperator operator*(const ComplexOperator& a, const ComplexOperator& b) {
  require_same_dim(a, b);
  return ComplexOperator(a.matrix() * b.matrix(), a.shape());
}

double max_abs_diff(const ComplexOperator& a, const ComplexOperator& b) {
  require_same_dim(a, b);
  return (a.matrix() - b.matrix()).cwiseAbs().maxCoeff();
}

double max_abs(const ComplexOperator& a) { return a.matrix().cwiseAbs().maxCoeff(); }

SubsystemSet::SubsystemSet(std::initializer_list<int> indices)
    : SubsystemSet(std::vector<int>(indices)) {}

SubsystemSet::SubsystemSet(std::vector<int> indices) : indices_(std::move(indices)) {
  std::sort(indices_.begin(), indices_.end());
  if (std::adjacent_find(indices_.begin(), indices_.end()) != indices_.end()) {
    throw IndexError("duplicate subsystem index");
  }
  if (!indices_.empty() && indices_.front() < 0) throw IndexError("negative subsystem index");
}

bool SubsystemSet::contains(int index) const {
  return std::binary_search(indices_.begin(), indices_.end(), index);
}

void SubsystemSet::check_against(const Shape& shape) const {
  if (!indices_.empty() && indices_.back() >= static_cast<int>(shape.size())) {
    throw IndexError("subsystem index " + std::to_string(indices_.back()) +
                     " out of range for " + std::to_string(shape.size()) + " factors");
  }
}

ComplexOperator kron(const ComplexOperator& a, const ComplexOperator& b, int max_dim) {
  const long long dim = static_cast<long long>(a.dim()) * b.dim();
  if (dim > max_dim) {
    throw CapacityError("Kronecker product dimension " + std::to_string(dim) +
                        " exceeds cap " + std::to_string(max_dim));
  }
  const int nb = b.dim();
  Matrix out(dim, dim);
  for (int i = 0; i < a.dim(); ++i) {
    for (int j = 0; j < a.dim(); ++j) {
      out.block(i * nb, j * nb, nb, nb) = a(i, j) * b.matrix();
    }
  }
  Shape shape = a.shape();
  shape.insert(shape.end(), b.shape().begin(), b.shape().end());
  return ComplexOperator(std::move(out), std::move(shape));
}

ComplexOperator partial_transpose(const ComplexOperator& a, const SubsystemSet& subs) {
  subs.check_against(a.shape());
  const auto strides = strides_of(a.shape());
  const int n = a.dim();
  Matrix out(n, n);
  for (int c = 0; c < n; ++c) {
    for (int r = 0; r < n; ++r) {
      int r2 = r;
      int c2 = c;
      for (int s : subs.indices()) {
        const int dr = (r / strides[s]) % a.shape()[s];
        const int dc = (c / strides[s]) % a.shape()[s];
        r2 += (dc - dr) * strides[s];
        c2 += (dr - dc) * strides[s];
      }
      out(r2, c2) = a(r, c);
    }
  }
  return ComplexOperator(std::move(out), a.shape());
}

ComplexOperator partial_trace(const ComplexOperator& a, const SubsystemSet& subs) {
  subs.check_against(a.shape());
  const Shape& shape = a.shape();
  const auto strides = strides_of(shape);

  // Offsets of every kept / traced multi-index inside the full index.
  std::vector<int> kept_offsets{0};
  std::vector<int> traced_offsets{0};
  Shape kept_shape;
  for (int i = 0; i < static_cast<int>(shape.size()); ++i) {
    auto& offsets = subs.contains(i) ? traced_offsets : kept_offsets;
    if (!subs.contains(i)) kept_shape.push_back(shape[i]);
    std::vector<int> next;
    next.reserve(offsets.size() * shape[i]);
    for (int base : offsets) {
      for (int digit = 0; digit < shape[i]; ++digit) next.push_back(base + digit * strides[i]);
    }
    offsets = std::move(next);
  }
  if (kept_shape.empty()) kept_shape = {1};

  const int m = static_cast<int>(kept_offsets.size());
  Matrix out = Matrix::Zero(m, m);
  for (int c = 0; c < m; ++c) {
    for (int r = 0; r < m; ++r) {
      Complex sum = 0.0;
      for (int t : traced_offsets) sum += a(kept_offsets[r] + t, kept_offsets[c] + t);
      out(r, c) = sum;
    }
  }
  return ComplexOperator(std::move(out), std::move(kept_shape));
}

ComplexOperator permute_legs(const ComplexOperator& a, const std::vector<int>& perm) {
  const Shape& shape = a.shape();
  const int legs = static_cast<int>(shape.size());
  if (static_cast<int>(perm.size()) != legs) throw IndexError("permutation length mismatch");
  std::vector<bool> seen(legs, false);
  for (int p : perm) {
    if (p < 0 || p >= legs || seen[p]) throw IndexError("not a permutation of the legs");
    seen[p] = true;
  }

  Shape out_shape(legs);
  for (int j = 0; j < legs; ++j) out_shape[perm[j]] = shape[j];
  const auto in_strides = strides_of(shape);
  const auto out_strides = strides_of(out_shape);

  const int n = a.dim();
  std::vector<int> target(n);
  for (int idx = 0; idx < n; ++idx) {
    int mapped = 0;
    for (int j = 0; j < legs; ++j) {
      mapped += ((idx / in_strides[j]) % shape[j]) * out_strides[perm[j]];
    }
    target[idx] = mapped;
  }

  Matrix out(n, n);
  for (int c = 0; c < n; ++c) {
    for (int r = 0; r < n; ++r) out(target[r], target[c]) = a(r, c);
  }
  return ComplexOperator(std::move(out), std::move(out_shape));
}

double hermitian_deviation(const ComplexOperator& a) {
  return (a.matrix() - a.matrix().adjoint()).cwiseAbs().maxCoeff();
}

std::vector<double> eigenvalues(const ComplexOperator& a) {
  const double scale = max_abs(a);
  const double deviation = hermitian_deviation(a);
  if (deviation > kHermTol * scale) {
    throw DomainError("operator is not Hermitian (deviation " + std::to_string(deviation) + ")");
  }
  const Matrix hermitian_part = 0.5 * (a.matrix() + a.matrix().adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(hermitian_part, Eigen::EigenvaluesOnly);
  const auto& values = solver.eigenvalues();
  return {values.data(), values.data() + values.size()};
}

double min_eigenvalue(const ComplexOperator& a) { return eigenvalues(a).front(); }

bool is_psd(const ComplexOperator& a, double tol) { return min_eigenvalue(a) >= -tol; }

ComplexOperator random_orthogonal(int d, std::uint64_t seed) {
  if (d < 1) throw DomainError("dimension must be positive");
  std::mt19937_64 rng(seed);
  Matrix q = haar_from_ginibre(ginibre(d, Field::Real, rng));
  // Householder arithmetic on real data leaves exact zeros in the imaginary part.
  q = q.real().cast<Complex>();
  return ComplexOperator(std::move(q));
}

ComplexOperator random_unitary(int d, std::uint64_t seed) {
  if (d < 1) throw DomainError("dimension must be positive");
  std::mt19937_64 rng(seed);
  return ComplexOperator(haar_from_ginibre(ginibre(d, Field::Complex, rng)));
}

Vector random_unit_vector(int d, Field field, std::uint64_t seed) {
  if (d < 1) throw DomainError("dimension must be positive");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  Vector v(d);
  for (int i = 0; i < d; ++i) {
    const double re = normal(rng);
    const double im = field == Field::Complex ? normal(rng) : 0.0;
    v(i) = Complex(re, im);
  }
  const double norm = v.norm();
  if (norm == 0.0) {
    v.setZero();
    v(0) = 1.0;
    return v;
  }
  return v / norm;
}

ComplexOperator random_density_matrix(const Shape& shape, std::uint64_t seed) {
  const int n = shape_product(shape);
  std::mt19937_64 rng(seed);
  const Matrix g = ginibre(n, Field::Complex, rng);
  Matrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  rho = 0.5 * (rho + rho.adjoint()).eval();
  return ComplexOperator(std::move(rho), shape);
}

std::uint64_t mix_seed(std::uint64_t base, std::uint64_t stream) {
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

ComplexOperator outer_projector(const Vector& v) {
  return ComplexOperator(v * v.adjoint());
}

}  // namespace oosym
