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

#include "entnet/linalg.hpp"
#include "entnet/model.hpp"

namespace entnet {

// One two-level atom exchanging excitations with one cavity mode at zero
// detuning. Operators act on (qubit (x) Fock), qubit basis |e>=0, |g>=1,
// and all times are dimensionless, tau = lambda*t.

/// H / (hbar lambda) = (omega/lambda) Nhat + (sigma+ a + sigma- a^dag).
Matrix jc_hamiltonian(const ModelParams& p);

/// Excitation number Nhat = a^dag a + sigma_z / 2.
Matrix jc_excitation_number(int fock_dim);

/// Closed-form evolution operator: e^{-i w t Nhat} times the 2x2 block
/// matrix with cos(tau sqrt(a a^dag)) / sinc-type entries. Identical to
/// evolve_hermitian(jc_hamiltonian(p), tau) on the truncated space.
Matrix jc_unitary(const ModelParams& p, double tau);

/// Reduced A1A2 density matrix of the double JC model, both cavities
/// prepared in |N><N|, via the closed-form block unitary.
Matrix double_jc_reduced(const PreparedState& state, const ModelParams& p, double tau);

/// Same reduction through the eigendecomposition route; oracle for
/// double_jc_reduced.
Matrix double_jc_reduced_brute(const PreparedState& state, const ModelParams& p, double tau);

}  // namespace entnet
