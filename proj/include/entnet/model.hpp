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

namespace entnet {

/// Two-parameter Bell-type preparation families:
///   phi:  cos(a)|ee> + sin(a)|gg>
///   psi:  cos(a)|eg> + sin(a)|ge>
enum class Family { phi, psi };

enum class PairKind { same, cross };  // A1A2 (= B1B2) vs A1B2 (= A2B1)

/// Initial-state descriptor. Both pairs carry the same family and angle,
/// both cavities hold exactly `photons` excitations.
struct PreparedState {
  Family family = Family::phi;
  double alpha = 0.0;  // radians, in [0, pi/2]
  int photons = 0;
};

/// Single cavity-block parameters. Dynamics is expressed in the
/// dimensionless time tau = lambda*t, so only omega/lambda matters.
struct ModelParams {
  double lambda = 1.0;  // qubit-mode coupling rate
  double omega = 0.0;   // mode frequency (= qubit frequency, zero detuning)
  int fock_dim = 2;

  double omega_over_lambda() const { return omega / lambda; }
};

}  // namespace entnet
