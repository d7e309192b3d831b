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

#include <optional>

#include "entnet/linalg.hpp"

namespace entnet {

/// Two-qubit state with support on the diagonal and the anti-diagonal only:
///
///     [ a  .  .  f ]
///     [ .  b  e  . ]
///     [ .  e* c  . ]
///     [ f* .  .  d ]
struct XState {
  double a = 0.0, b = 0.0, c = 0.0, d = 0.0;
  Complex f = 0.0;  // <ee|rho|gg>
  Complex e = 0.0;  // <eg|rho|ge>

  Matrix to_matrix() const;

  /// Recognizes an X-form matrix; every entry outside the two diagonals must
  /// be smaller than off_x_tol in magnitude.
  static std::optional<XState> from_matrix(const Matrix& rho,
                                           double off_x_tol = 1e-10);
};

/// Wootters concurrence of an arbitrary two-qubit density matrix.
/// The spin-flip spectrum is taken from the Hermitian form
/// sqrt(rho) rho~ sqrt(rho), with round-off negatives clamped before the
/// square roots. Throws std::invalid_argument for non-density input.
double concurrence(const Matrix& rho);

/// Closed-form concurrence 2*max(0, |f|-sqrt(bc), |e|-sqrt(ad)).
double concurrence_x(const XState& x);

/// X fast path with fallback to the general routine. No density validation;
/// intended for trusted matrices produced by the dynamics modules.
double pair_concurrence(const Matrix& rho);

}  // namespace entnet
