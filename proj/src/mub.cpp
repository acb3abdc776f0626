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

#include "mubking/mub.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace mubking {

namespace {

// Exhaustive clique search; at most 22 vertices here.
void grow_clique(const std::vector<std::vector<bool>> &adj, std::vector<int> &chosen, int next, int &best) {
    best = std::max(best, static_cast<int>(chosen.size()));
    int n = static_cast<int>(adj.size());
    for (int v = next; v < n; v++) {
        if (static_cast<int>(chosen.size()) + (n - v) <= best) {
            return;
        }
        bool ok = std::all_of(chosen.begin(), chosen.end(), [&](int u) { return adj[u][v]; });
        if (ok) {
            chosen.push_back(v);
            grow_clique(adj, chosen, v + 1, best);
            chosen.pop_back();
        }
    }
}

}  // namespace

MubFamily mub_family(const ArithmeticContext &ctx, const PhaseSystem &phases) {
    int n = ctx.dim();
    if (phases.dim() != n) {
        throw std::invalid_argument("phase system dimension does not match the context");
    }
    MubFamily family{ctx, {}};
    family.bases.reserve(n + 1);
    family.bases.push_back(identity(n));
    double norm = 1.0 / std::sqrt(static_cast<double>(n));
    for (int cls = 1; cls <= n; cls++) {
        Operator basis(n, n);
        for (Element k = 0; k < n; k++) {
            for (Element q = 0; q < n; q++) {
                basis(q, k) = norm * ctx.character(ctx.neg(ctx.mul(q, k))) * phases(cls, q);
            }
        }
        family.bases.push_back(std::move(basis));
    }
    return family;
}

UnbiasednessReport unbiasedness_report(const MubFamily &family, double tol) {
    UnbiasednessReport report;
    int n = family.dim();
    double target = 1.0 / n;
    report.conjecture_bound = family.ctx.characteristic() + 1;
    for (const auto &basis : family.bases) {
        if (is_unitary(basis, tol)) {
            report.orthonormal_bases++;
        }
    }
    for (int a = 0; a < family.num_bases(); a++) {
        for (int b = a + 1; b < family.num_bases(); b++) {
            Eigen::MatrixXd overlap2 = (family.bases[a].adjoint() * family.bases[b]).cwiseAbs2();
            BasisPairOverlap pair;
            pair.first = a;
            pair.second = b;
            pair.min_overlap2 = overlap2.minCoeff();
            pair.max_overlap2 = overlap2.maxCoeff();
            pair.unbiased = std::abs(pair.min_overlap2 - target) <= tol && std::abs(pair.max_overlap2 - target) <= tol;
            if (pair.unbiased) {
                report.unbiased_pairs++;
            }
            report.pairs.push_back(pair);
        }
    }
    std::vector<std::vector<bool>> adj(family.num_bases(), std::vector<bool>(family.num_bases(), false));
    for (const auto &pair : report.pairs) {
        adj[pair.first][pair.second] = adj[pair.second][pair.first] = pair.unbiased;
    }
    std::vector<int> chosen;
    grow_clique(adj, chosen, 0, report.largest_unbiased_set);
    return report;
}

Complex class_eigenvalue(const ArithmeticContext &ctx, const PhaseSystem &phases, int cls, Element l, Element k) {
    if (cls == 0) {
        return ctx.character(ctx.mul(k, l));
    }
    return ctx.character(ctx.mul(l, k)) * phases(cls, l);
}

EigenbasisReport verify_eigenbasis(const MubFamily &family, const PhaseSystem &phases, double tol) {
    EigenbasisReport report;
    const auto &ctx = family.ctx;
    int n = family.dim();
    for (int cls = 0; cls <= n; cls++) {
        for (Element l = 0; l < n; l++) {
            Operator v = cls == 0 ? displacement_v(ctx, 0, l) : displacement_v(ctx, l, ctx.mul(cls - 1, l));
            Operator image = v * family.bases[cls];
            for (Element k = 0; k < n; k++) {
                report.checked++;
                Complex lambda = class_eigenvalue(ctx, phases, cls, l, k);
                double residual = max_abs_diff(image.col(k), lambda * family.bases[cls].col(k));
                residual = std::max(residual, std::abs(std::abs(lambda) - 1.0));
                if (residual > tol) {
                    report.violations.push_back({cls, l, k, residual});
                }
            }
        }
    }
    return report;
}

JointEigenbasisReport verify_joint_eigenbasis(const MubFamily &family, std::uint64_t seed, double tol) {
    JointEigenbasisReport report;
    const auto &ctx = family.ctx;
    int n = family.dim();
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coeff(-1.0, 1.0);
    for (int cls = 0; cls <= n; cls++) {
        report.classes++;
        Operator h = Operator::Zero(n, n);
        for (Element l = 1; l < n; l++) {
            Operator v = cls == 0 ? displacement_v(ctx, 0, l) : displacement_v(ctx, l, ctx.mul(cls - 1, l));
            Complex w{coeff(rng), coeff(rng)};
            h += w * v;
            h += std::conj(w) * v.adjoint();
        }
        Eigen::SelfAdjointEigenSolver<Operator> solver(h);
        if (solver.info() != Eigen::Success) {
            continue;
        }
        const Operator &vecs = solver.eigenvectors();
        const Operator &basis = family.bases[cls];
        // Every eigenvector must coincide (up to phase) with exactly one
        // basis state; with unit vectors that is |overlap| = 1.
        Eigen::MatrixXd overlaps = (vecs.adjoint() * basis).cwiseAbs();
        bool match = true;
        for (int r = 0; r < n && match; r++) {
            int hits = 0;
            for (int c = 0; c < n; c++) {
                if (std::abs(overlaps(r, c) - 1.0) <= tol) {
                    hits++;
                } else if (overlaps(r, c) > tol) {
                    match = false;
                }
            }
            match = match && hits == 1;
        }
        if (match) {
            report.matching_classes++;
        }
    }
    return report;
}

}  // namespace mubking
