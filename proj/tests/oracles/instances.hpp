// Copyright 2026 The locc-discrim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Instance builders shared by the unit, acceptance and benchmark targets.

#include <cstddef>
#include <vector>

#include "locc/numerics.hpp"
#include "locc/states.hpp"

namespace locc::testing {

// Bell states in C^2 (x) C^2, A-major amplitudes.
ComplexVector phi_plus();
ComplexVector phi_minus();
ComplexVector psi_plus();
ComplexVector psi_minus();
ComplexVector product_state(std::size_t a, std::size_t b, std::size_t dim_a, std::size_t dim_b);

ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();

/// M orthonormal states: first M columns of a Haar unitary on C^{dA dB}.
StateFamily random_family(std::size_t dim_a, std::size_t dim_b, std::size_t m, Rng &rng);

/// Three states in C^4 (x) C^4 with X_l = W_l D V, D = diag(sqrt(0.4, 0.3,
/// 0.2, 0.1)), W = {I, sx(x)I, I(x)sx}, V a B-side unitary. Every W_m^* W_l
/// (m != l) has zero diagonal, so the states are orthonormal, each Schmidt
/// profile is (0.4, 0.3, 0.2, 0.1), and K is spanned by the three real
/// symmetric D (W_m^* W_l) D, giving dim K = 3.
StateFamily conclusive_family(const ComplexMatrix &b_unitary);
StateFamily conclusive_family();

/// N random traceless Hermitian d x d operators, unit Frobenius norm.
std::vector<ComplexMatrix> random_traceless_tuple(std::size_t n, std::size_t d, Rng &rng);

} // namespace locc::testing
