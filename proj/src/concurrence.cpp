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

#include "entnet/concurrence.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace entnet {

namespace {

Matrix sigma_y_pair() {
  Matrix yy = Matrix::Zero(4, 4);  // sigma_y (x) sigma_y
  yy(0, 3) = -1.0;
  yy(1, 2) = 1.0;
  yy(2, 1) = 1.0;
  yy(3, 0) = -1.0;
  return yy;
}

double concurrence_unchecked(const Matrix& rho) {
  static const Matrix yy = sigma_y_pair();
  const Matrix rho_tilde = yy * rho.conjugate() * yy;

  Eigen::SelfAdjointEigenSolver<Matrix> es(rho);
  const Vector w = es.eigenvalues().cwiseMax(0.0).cwiseSqrt().cast<Complex>();
  const Matrix sqrt_rho = es.eigenvectors() * w.asDiagonal() * es.eigenvectors().adjoint();

  Eigen::SelfAdjointEigenSolver<Matrix> em(sqrt_rho * rho_tilde * sqrt_rho);
  const Eigen::VectorXd lam = em.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  std::array<double, 4> s{lam(0), lam(1), lam(2), lam(3)};
  std::sort(s.begin(), s.end(), std::greater<>());
  return std::max(0.0, s[0] - s[1] - s[2] - s[3]);
}

}  // namespace

Matrix XState::to_matrix() const {
  Matrix m = Matrix::Zero(4, 4);
  m(0, 0) = a;
  m(1, 1) = b;
  m(2, 2) = c;
  m(3, 3) = d;
  m(0, 3) = f;
  m(3, 0) = std::conj(f);
  m(1, 2) = e;
  m(2, 1) = std::conj(e);
  return m;
}

std::optional<XState> XState::from_matrix(const Matrix& rho, double off_x_tol) {
  if (rho.rows() != 4 || rho.cols() != 4) return std::nullopt;
  for (Eigen::Index i = 0; i < 4; ++i)
    for (Eigen::Index j = 0; j < 4; ++j) {
      const bool on_x = (i == j) || (i + j == 3);
      if (!on_x && std::abs(rho(i, j)) > off_x_tol) return std::nullopt;
    }
  XState x;
  x.a = rho(0, 0).real();
  x.b = rho(1, 1).real();
  x.c = rho(2, 2).real();
  x.d = rho(3, 3).real();
  x.f = rho(0, 3);
  x.e = rho(1, 2);
  return x;
}

double concurrence(const Matrix& rho) {
  if (rho.rows() != 4 || rho.cols() != 4)
    throw std::invalid_argument("concurrence: expected a 4x4 density matrix");
  require_density(rho);
  return concurrence_unchecked(rho);
}

double concurrence_x(const XState& x) {
  const double fb = std::abs(x.f) - std::sqrt(std::max(x.b * x.c, 0.0));
  const double eb = std::abs(x.e) - std::sqrt(std::max(x.a * x.d, 0.0));
  return 2.0 * std::max({0.0, fb, eb});
}

double pair_concurrence(const Matrix& rho) {
  if (auto x = XState::from_matrix(rho)) return concurrence_x(*x);
  return concurrence_unchecked(rho);
}

}  // namespace entnet
