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

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mubking/galois.hpp"
#include "mubking/linalg.hpp"
#include "mubking/mub.hpp"
#include "mubking/pauli.hpp"

namespace mubking {

struct IndexPair {
    Element first = 0;
    Element second = 0;
    bool operator==(const IndexPair &) const = default;
};

/// Alice's final measurement basis together with the table that turns her
/// outcome (i1, i2) and the announced basis k into the King's result l.
class MeanKingBasis {
   public:
    MeanKingBasis(ArithmeticContext ctx, Operator states, std::vector<Element> inference)
        : ctx_(std::move(ctx)), states_(std::move(states)), inference_(std::move(inference)) {
    }

    const ArithmeticContext &ctx() const {
        return ctx_;
    }
    int dim() const {
        return ctx_.dim();
    }
    /// Column i1·N + i2 holds Ψ_(i1,i2).
    const Operator &states() const {
        return states_;
    }
    Ket state(Element i1, Element i2) const {
        return states_.col(i1 * dim() + i2);
    }
    /// Numerically derived King outcome for announced basis k.
    Element infer(int basis, Element i1, Element i2) const {
        return inference_.at((static_cast<size_t>(basis) * dim() + i1) * dim() + i2);
    }

   private:
    ArithmeticContext ctx_;
    Operator states_;
    std::vector<Element> inference_;
};

/// Ψ_(i1,i2) = (1/N) Σ_{m,n} χ̂((i1,i2)⊙⊙(m,n))·(χ(m⊙n))^{1/2}·|B_{m,n}^0⟩ with
/// χ̂ the extension character.
Ket mean_king_state(const ExtensionContext &ext, const PhaseSystem &phases, Element i1, Element i2);
/// Modular form: the extension character is replaced by χ(⊖(i1⊙n) ⊕ i2⊙m).
Ket mean_king_state_modular(const ArithmeticContext &ctx, const PhaseSystem &phases, Element i1, Element i2);

/// Columns k·N + l hold the King's product states |e_l^{k*}⟩ ⊗ |e_l^k⟩.
Operator king_product_states(const MubFamily &family);

/// Builds the basis and derives the inference table from overlaps. Throws
/// VerificationError when some (k, i1, i2) is not compatible with exactly
/// one l.
MeanKingBasis mean_king_basis(const MubFamily &family, const ExtensionContext &ext, const PhaseSystem &phases);
MeanKingBasis mean_king_basis(const MubFamily &family, const PhaseSystem &phases);

/// k = 0: l = ⊖(i2⊙R); k ≥ 1: l = ⊖(i1 ⊕ i2⊙(k-1)⊙R).
Element infer_closed_form(const ExtensionContext &ext, int basis, Element i1, Element i2);
/// k = 0: l = i1; k ≥ 1: l = (k-1)⊙i1 ⊖ i2.
Element infer_closed_form_modular(const ArithmeticContext &ctx, int basis, Element i1, Element i2);

/// (i1, i2) ↦ (i2, ⊖i1/R): Ψ'_(i1,i2) = Ψ_(symplectic_relabel(i1, i2)).
IndexPair symplectic_relabel(const ExtensionContext &ext, Element i1, Element i2);
IndexPair symplectic_relabel_inverse(const ExtensionContext &ext, Element i1, Element i2);

/// (i1, i2) ↦ ((k-1)⊙i1 ⊖ i2, i1), the index transport between the
/// computational frame and basis k.
IndexPair symplectic_transport(const ArithmeticContext &ctx, int basis, Element i1, Element i2);
IndexPair symplectic_transport_inverse(const ArithmeticContext &ctx, int basis, Element i1, Element i2);

/// Ψ'^k_(a,b) = (1/N) Σ_{m,n} χ(b⊙m ⊖ a⊙n)·(χ(m⊙n))^{1/2}·|B_{m,n}^k⟩.
Ket relabelled_state(const MubFamily &family, const PhaseSystem &phases, int basis, Element a, Element b);
/// Every Ψ'^k, one column per label a·N + b.
Operator relabelled_states(const MubFamily &family, const PhaseSystem &phases, int basis);

struct SymplecticReport {
    int checked = 0;
    /// (k, i1, i2) with Ψ'^k at the transported label not equal to Ψ'^0_(i1,i2)
    /// as a projector.
    int violations = 0;
    /// Label pairs where the symplectic form is not preserved.
    int form_violations = 0;
    bool ok() const {
        return violations == 0 && form_violations == 0;
    }
};

SymplecticReport verify_symplectic_invariance(
    const MubFamily &family, const PhaseSystem &phases, double tol = kDefaultTolerance);

/// Probability of each Alice outcome (index i1·N + i2) given that the King
/// measured basis k and found l, computed from overlaps.
std::vector<double> outcome_distribution(const MeanKingBasis &basis, const MubFamily &family, int k, Element l);

/// Count of (k, l, m ≠ 0, n) with a nonzero overlap between the King's
/// product state and |B_{m,n}^k⟩; zero when every product state lies in the
/// span of the |B_{0,n}^k⟩.
int king_bell_support_violations(const MubFamily &family, double tol = kDefaultTolerance);

struct AravindReport {
    int states = 0;
    /// States orthogonal to every product state off the affine line
    /// l(0) = k0, l(m) = (m-1)⊙k0 ⊕ k1 with (k0, k1) = (⊖i2⊙R, ⊖i1).
    int agreeing = 0;
};

AravindReport aravind_cross_check(const MeanKingBasis &basis, const MubFamily &family, const ExtensionContext &ext);

enum class ProtocolMode { exhaustive, monte_carlo };

std::string to_string(ProtocolMode mode);

struct ProtocolReport {
    ProtocolMode mode = ProtocolMode::exhaustive;
    std::uint64_t seed = 0;
    long trials = 0;
    long successes = 0;
    /// (k, l, i1, i2) → count.
    std::map<std::array<int, 4>, long> histogram;

    double success_rate() const {
        return trials == 0 ? 0.0 : static_cast<double>(successes) / trials;
    }
};

/// Simulates the protocol starting from |B_{0,0}^0⟩. Exhaustive mode visits
/// every (k, l, outcome) branch with nonzero probability once; Monte-Carlo
/// mode samples `trials` runs from a seeded generator. Throws
/// VerificationError if a King outcome does not have probability 1/N.
ProtocolReport run_protocol(
    const MeanKingBasis &basis,
    const MubFamily &family,
    ProtocolMode mode,
    long trials,
    std::uint64_t seed,
    double tol = kDefaultTolerance);

}  // namespace mubking
