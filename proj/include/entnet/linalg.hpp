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

#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace entnet {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Kronecker product a (x) b.
Matrix kron(const Matrix& a, const Matrix& b);

/// Truncated bosonic annihilation operator, <n-1|a|n> = sqrt(n).
Matrix annihilation(Eigen::Index fock_dim);

/// Ordered list of subsystem dimensions of a tensor-product space.
/// The rightmost factor varies fastest in the flat index.
struct SpaceLayout {
  std::vector<Eigen::Index> dims;
  Eigen::Index total() const;
};

/// Partial trace keeping the subsystems listed in `keep` (positions into
/// layout.dims, kept in ascending layout order). Throws std::invalid_argument
/// on out-of-range or duplicate positions, or if rho does not match layout.
Matrix partial_trace(const Matrix& rho, const SpaceLayout& layout,
                     const std::vector<int>& keep);

/// U(t) = exp(-i h t) through the eigendecomposition of a Hermitian h.
/// Throws std::invalid_argument if max|h - h^dag| > 1e-10.
Matrix evolve_hermitian(const Matrix& h, double t);

double hermiticity_defect(const Matrix& m);  // max |m - m^dag|
double unitarity_defect(const Matrix& u);    // max |u^dag u - 1|

/// Smallest eigenvalue of the Hermitian part of m.
double min_eigenvalue(const Matrix& m);

/// Checks trace, Hermiticity and positivity of a density matrix; throws
/// std::invalid_argument naming the violated property.
void require_density(const Matrix& rho, double tol = 1e-8);

}  // namespace entnet
