// Copyright 2026 The mubking Authors
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

#include "mubking/linalg.hpp"
#include "mubking/mub.hpp"
#include "mubking/pauli.hpp"

namespace mubking {

/// |B_{m*,n}^k⟩ = N^{-1/2} Σ_l χ(l⊙n) |e_l^{k*}⟩ ⊗ |e_{l⊕m}^k⟩, where the
/// first factor is the entrywise conjugate of the basis state.
Ket bell_state(const MubFamily &family, Element m, Element n, int basis);

/// All Bell states relative to `basis`, one column per label m·N + n.
Operator bell_matrix(const MubFamily &family, int basis);

/// bell_matrix for the computational basis, built straight from the tables.
Operator computational_bell_matrix(const ArithmeticContext &ctx);

struct BellImage {
    Element m = 0;
    Element n = 0;
    Complex phase = 1.0;
};

/// For basis k ≥ 1: |B_{m,n}^k⟩ = phase · |B_{m',n'}^0⟩ with
/// (m', n') = (n, ⊖m ⊕ (k-1)⊙n) and phase = χ(⊖(m⊙n))·phi[k][n].
BellImage bell_transform(const ArithmeticContext &ctx, const PhaseSystem &phases, int basis, Element m, Element n);

/// Symplectic form m1⊙n2 ⊖ n1⊙m2.
Element symplectic_form(const ArithmeticContext &ctx, Element m1, Element n1, Element m2, Element n2);

/// Applies (conj(V) ⊗ V) with V = V_shift^phase (= V_j^i with j the shift,
/// i the phase) to |B_{m,n}^0⟩, which is the state-level form of
/// V·(·)·V⁻¹ on the associated displacement. Checks the result equals
/// χ(m⊙i ⊖ n⊙j)·|B_{m,n}^0⟩ and returns that phase; throws
/// VerificationError naming the indices otherwise.
Complex pauli_conjugation_check(
    const ArithmeticContext &ctx, Element i, Element j, Element m, Element n, double tol = kDefaultTolerance);

}  // namespace mubking
