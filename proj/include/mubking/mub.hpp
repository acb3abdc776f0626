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

#include <cstdint>
#include <vector>

#include "mubking/galois.hpp"
#include "mubking/linalg.hpp"
#include "mubking/pauli.hpp"

namespace mubking {

/// The N+1 bases. bases[0] is the computational basis; column k of bases[i]
/// is |e_k^i⟩ = N^{-1/2} Σ_q χ(⊖q⊙k)·phi[i][q]·|q⟩.
struct MubFamily {
    ArithmeticContext ctx;
    std::vector<Operator> bases;

    int dim() const {
        return ctx.dim();
    }
    int num_bases() const {
        return static_cast<int>(bases.size());
    }
    Ket state(int basis, Element k) const {
        return bases.at(basis).col(k);
    }
};

MubFamily mub_family(const ArithmeticContext &ctx, const PhaseSystem &phases);

struct BasisPairOverlap {
    int first = 0;
    int second = 0;
    double min_overlap2 = 0;
    double max_overlap2 = 0;
    bool unbiased = false;
};

struct UnbiasednessReport {
    std::vector<BasisPairOverlap> pairs;
    int unbiased_pairs = 0;
    /// Bases that are orthonormal within tolerance.
    int orthonormal_bases = 0;
    /// Size of the largest subset of bases that are pairwise unbiased.
    int largest_unbiased_set = 0;
    /// p + 1, the most mutually unbiased bases expected among the modular
    /// bases.
    int conjecture_bound = 0;

    int total_pairs() const {
        return static_cast<int>(pairs.size());
    }
    bool all_unbiased() const {
        return unbiased_pairs == total_pairs();
    }
};

UnbiasednessReport unbiasedness_report(const MubFamily &family, double tol = kDefaultTolerance);

struct EigenViolation {
    int cls = 0;
    Element l = 0;
    Element k = 0;
    double residual = 0;
};

struct EigenbasisReport {
    int checked = 0;
    std::vector<EigenViolation> violations;
    bool ok() const {
        return violations.empty();
    }
};

/// Eigenvalue of V_l^{(i-1)⊙l} on |e_k^i⟩: χ(l⊙k)·phi[i][l].
Complex class_eigenvalue(const ArithmeticContext &ctx, const PhaseSystem &phases, int cls, Element l, Element k);

/// Checks V_l^{(i-1)⊙l}|e_k^i⟩ = χ(l⊙k)·phi[i][l]·|e_k^i⟩ for every class,
/// and that V_0^l is diagonal on the computational basis.
EigenbasisReport verify_eigenbasis(
    const MubFamily &family, const PhaseSystem &phases, double tol = kDefaultTolerance);

struct JointEigenbasisReport {
    /// Classes whose numerically diagonalised eigenvectors reproduce the
    /// formula basis as a set of rank-1 projectors.
    int matching_classes = 0;
    int classes = 0;
    bool ok() const {
        return matching_classes == classes;
    }
};

/// Diagonalises a seeded random hermitian combination of each class's
/// commuting displacements and compares the eigenprojectors with the
/// constructed bases.
JointEigenbasisReport verify_joint_eigenbasis(const MubFamily &family, std::uint64_t seed, double tol = 1e-8);

}  // namespace mubking
