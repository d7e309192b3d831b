// Copyright 2026 The entangle-net Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "entnet/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace entnet {

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Matrix annihilation(Eigen::Index fock_dim) {
  if (fock_dim < 1) throw std::invalid_argument("annihilation: fock_dim must be >= 1");
  Matrix a = Matrix::Zero(fock_dim, fock_dim);
  for (Eigen::Index n = 1; n < fock_dim; ++n) a(n - 1, n) = std::sqrt(double(n));
  return a;
}

Eigen::Index SpaceLayout::total() const {
  Eigen::Index p = 1;
  for (Eigen::Index d : dims) p *= d;
  return p;
}

Matrix partial_trace(const Matrix& rho, const SpaceLayout& layout,
                     const std::vector<int>& keep) {
  const int n = int(layout.dims.size());
  if (rho.rows() != rho.cols() || rho.rows() != layout.total())
    throw std::invalid_argument("partial_trace: rho does not match layout");
  std::vector<int> kp = keep;
  std::sort(kp.begin(), kp.end());
  if (std::adjacent_find(kp.begin(), kp.end()) != kp.end())
    throw std::invalid_argument("partial_trace: duplicate keep index");
  for (int k : kp)
    if (k < 0 || k >= n) throw std::invalid_argument("partial_trace: keep index out of range");

  // strides of the flat index, rightmost factor fastest
  std::vector<Eigen::Index> stride(n, 1);
  for (int i = n - 2; i >= 0; --i) stride[i] = stride[i + 1] * layout.dims[i + 1];

  std::vector<int> tr;
  for (int i = 0; i < n; ++i)
    if (!std::binary_search(kp.begin(), kp.end(), i)) tr.push_back(i);

  Eigen::Index dk = 1, dt = 1;
  for (int k : kp) dk *= layout.dims[k];
  for (int t : tr) dt *= layout.dims[t];

  // offset of a kept (resp. traced) multi-index inside the flat index
  auto offsets = [&](const std::vector<int>& slots, Eigen::Index count) {
    std::vector<Eigen::Index> off(count);
    for (Eigen::Index flat = 0; flat < count; ++flat) {
      Eigen::Index rem = flat, o = 0;
      for (int s = int(slots.size()) - 1; s >= 0; --s) {
        const Eigen::Index d = layout.dims[slots[s]];
        o += (rem % d) * stride[slots[s]];
        rem /= d;
      }
      off[flat] = o;
    }
    return off;
  };
  const std::vector<Eigen::Index> koff = offsets(kp, dk);
  const std::vector<Eigen::Index> toff = offsets(tr, dt);

  Matrix out = Matrix::Zero(dk, dk);
  for (Eigen::Index r = 0; r < dk; ++r)
    for (Eigen::Index c = 0; c < dk; ++c) {
      Complex acc = 0.0;
      for (Eigen::Index t = 0; t < dt; ++t) acc += rho(koff[r] + toff[t], koff[c] + toff[t]);
      out(r, c) = acc;
    }
  return out;
}

Matrix evolve_hermitian(const Matrix& h, double t) {
  if (hermiticity_defect(h) > 1e-10)
    throw std::invalid_argument("evolve_hermitian: matrix is not Hermitian");
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  const Eigen::VectorXd w = es.eigenvalues();
  const Matrix& v = es.eigenvectors();
  Vector phases(w.size());
  for (Eigen::Index i = 0; i < w.size(); ++i)
    phases(i) = std::exp(Complex(0.0, -w(i) * t));
  return v * phases.asDiagonal() * v.adjoint();
}

double hermiticity_defect(const Matrix& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

double unitarity_defect(const Matrix& u) {
  return (u.adjoint() * u - Matrix::Identity(u.cols(), u.cols())).cwiseAbs().maxCoeff();
}

double min_eigenvalue(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> es((m + m.adjoint()) / 2.0);
  return es.eigenvalues().minCoeff();
}

void require_density(const Matrix& rho, double tol) {
  if (rho.rows() != rho.cols())
    throw std::invalid_argument("density: matrix is not square");
  if (std::abs(rho.trace() - Complex(1.0)) > tol)
    throw std::invalid_argument("density: trace differs from 1 by " +
                                std::to_string(std::abs(rho.trace() - Complex(1.0))));
  if (hermiticity_defect(rho) > tol)
    throw std::invalid_argument("density: matrix is not Hermitian");
  if (min_eigenvalue(rho) < -tol)
    throw std::invalid_argument("density: matrix has a negative eigenvalue");
}

}  // namespace entnet
