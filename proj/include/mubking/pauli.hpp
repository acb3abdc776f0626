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

#include <vector>

#include "mubking/galois.hpp"
#include "mubking/linalg.hpp"

namespace mubking {

/// V_shift^phase = Σ_k χ((k ⊕ shift) ⊙ phase) |k ⊕ shift⟩⟨k|.
Operator displacement_v(const ArithmeticContext &ctx, Element shift, Element phase);

/// Square-root phases phi[i][l] = (χ((i-1) ⊙ l ⊙ l))^{1/2} for the commuting
/// classes i = 1..N. They satisfy the cocycle relation
///
///     phi[i][a ⊕ b] = phi[i][a] · phi[i][b] · χ((i-1) ⊙ a ⊙ b)
///
/// which is what makes the phased displacements of a class a representation
/// of the additive group. Class 0 is the diagonal class and carries no phase.
class PhaseSystem {
   public:
    PhaseSystem(int dim, std::vector<Complex> table) : dim_(dim), table_(std::move(table)) {
    }

    int dim() const {
        return dim_;
    }
    int num_classes() const {
        return dim_ + 1;
    }
    Complex operator()(int cls, Element l) const;

   private:
    int dim_;
    std::vector<Complex> table_;  // (dim+1) rows of dim entries
};

/// Odd characteristic and odd modular dimensions: phi = χ(half((i-1)⊙l⊙l)).
/// Characteristic 2: phi[i][2^n] = i^{lowest digit of (i-1)⊙2^n⊙2^n} on the
/// polynomial basis, extended to every l through the cocycle relation.
/// Throws std::domain_error for even modular dimensions.
PhaseSystem build_phase_system(const ArithmeticContext &ctx);

/// U_l^i = conj(phi[i][l]) · V_l^{(i-1)⊙l} for i ≥ 1, and U_l^0 = V_0^l.
Operator displacement_u(const ArithmeticContext &ctx, const PhaseSystem &phases, int cls, Element l);

/// (χ(m ⊙ n))^{1/2}, determined consistently with the class phases: for
/// m ≠ 0 in galois mode this is phi[n/m + 1][m]; in modular mode it is
/// χ(half(m ⊙ n)).
Complex slope_phase(const ArithmeticContext &ctx, const PhaseSystem &phases, Element m, Element n);

/// Phased displacement with shift m and phase n: conj(slope_phase(m, n))·V_m^n.
/// Coincides with U of the class containing (m, n).
Operator phased_displacement(const ArithmeticContext &ctx, const PhaseSystem &phases, Element m, Element n);

/// Class index of the displacement (m, n): 0 when m = 0, otherwise n/m + 1.
int class_of(const ArithmeticContext &ctx, Element m, Element n);

/// Direct transcription of the product formula for characteristic-2 phases:
/// each set bit n of l contributes i^{c⊙2^n⊙2^n}·(-1)^{c⊙2^n⊙2^{n'}}, with n'
/// the next set bit above n (wrapping to bit 0). Exponents are reduced to
/// their lowest binary digit.
std::vector<Complex> literal_even_phases(const ArithmeticContext &ctx, int cls);

struct EvenPhaseComparison {
    int entries = 0;
    /// Entries where the literal product differs from the built system.
    int mismatches = 0;
    /// (class, a, b) triples where the literal product breaks the cocycle.
    int cocycle_violations = 0;
};

EvenPhaseComparison compare_literal_even_phases(
    const ArithmeticContext &ctx, const PhaseSystem &phases, double tol = kDefaultTolerance);

}  // namespace mubking
