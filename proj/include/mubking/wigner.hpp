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
#include "mubking/meanking.hpp"
#include "mubking/mub.hpp"
#include "mubking/pauli.hpp"

namespace mubking {

/// Tr(U_(m,n)·O): the coefficient of O along the phased displacement with
/// shift m and phase n.
Complex weyl_function(const ArithmeticContext &ctx, const PhaseSystem &phases, const Operator &op, Element m, Element n);

/// (1/N) Σ_{m,n} weyl_function(O, m, n)·U_(m,n)†.
Operator weyl_reconstruct(const ArithmeticContext &ctx, const PhaseSystem &phases, const Operator &op);

/// Turns Alice's ket into a bra: a state Σ ψ(a·N + b)|a⟩|b⟩ becomes the
/// operator Σ ψ(a·N + b)|b⟩⟨a|.
Operator turnover(const Ket &state);

/// Phase-space point operators
///
///     W_(i1,i2) = (1/N) Σ_{m,n} χ(i2⊙m ⊖ i1⊙n)·U_(m,n),
///
/// hermitian with unit trace. They are √N times the turnover of the
/// relabelled Mean King states Ψ'_(i1,i2).
struct WignerOperatorSet {
    ArithmeticContext ctx;
    std::vector<Operator> ops;

    int dim() const {
        return ctx.dim();
    }
    const Operator &at(Element i1, Element i2) const {
        return ops.at(static_cast<size_t>(i1) * dim() + i2);
    }
};

/// Builds the set and checks it against the Mean King states; throws
/// VerificationError when the turnover identity fails.
WignerOperatorSet wigner_operator_set(
    const ExtensionContext &ext, const PhaseSystem &phases, double tol = kDefaultTolerance);

/// Tr(W_(i1,i2)·O). Throws std::domain_error when the value is not real,
/// which happens for non-hermitian O.
double wigner_function(
    const WignerOperatorSet &set, const Operator &op, Element i1, Element i2, double tol = kDefaultTolerance);

/// Points of line `line` in striation `basis`. Basis 0: {(line, β)}. Basis
/// k ≥ 1: the computational line transported back through the basis-k
/// symplectic map, {(t, (k-1)⊙t ⊖ line)}.
std::vector<IndexPair> striation_line(const ArithmeticContext &ctx, int basis, Element line);

/// Sum of the point operators on a striation line; equals N·|e_line^k⟩⟨e_line^k|.
Operator marginal(const WignerOperatorSet &set, const MubFamily &family, int basis, Element line);

struct ParityOperators {
    int dim = 0;
    /// (1/N) Σ_{α,β} U_(α,β).
    Operator parity;
    /// U_(2α,2β)·parity at index α·N + β.
    std::vector<Operator> displaced;

    const Operator &at(Element alpha, Element beta) const {
        return displaced.at(static_cast<size_t>(alpha) * dim + beta);
    }
};

/// Odd characteristic only (std::domain_error otherwise). Checks
/// parity|k⟩ = |⊖k⟩ and parity² = I, throwing VerificationError on failure.
ParityOperators parity_operators(
    const ArithmeticContext &ctx, const PhaseSystem &phases, double tol = kDefaultTolerance);

/// True when k ↦ ⊖k is the identity, i.e. in characteristic 2, where the
/// displaced-parity construction collapses.
bool parity_is_trivial(const ArithmeticContext &ctx);

/// Number of point operators proportional to some phased displacement.
int wigner_weyl_coincidences(const WignerOperatorSet &set, const PhaseSystem &phases, double tol = kDefaultTolerance);

}  // namespace mubking
