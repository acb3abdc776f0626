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

#include "mubking/meanking.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "mubking/bell.hpp"

namespace mubking {

namespace {

// Coefficient of |B_{m,n}^0⟩ in a Mean King state, before the 1/N.
template <typename CharFn>
Ket combine_bells(const ArithmeticContext &ctx, const PhaseSystem &phases, CharFn chi) {
    int dim = ctx.dim();
    Operator bells = computational_bell_matrix(ctx);
    Ket coeffs(static_cast<Eigen::Index>(dim) * dim);
    for (Element m = 0; m < dim; m++) {
        for (Element n = 0; n < dim; n++) {
            coeffs(m * dim + n) = chi(m, n) * slope_phase(ctx, phases, m, n);
        }
    }
    return bells * coeffs / static_cast<double>(dim);
}

MeanKingBasis finish_basis(const MubFamily &family, Operator states) {
    int dim = family.dim();
    double expected = 1.0 / std::sqrt(static_cast<double>(dim));
    double tol = std::max(default_tolerance(), 1e-12);
    Operator products = king_product_states(family);
    Eigen::MatrixXd overlaps = (states.adjoint() * products).cwiseAbs();
    std::vector<Element> inference(static_cast<size_t>(dim + 1) * dim * dim, -1);
    for (int k = 0; k <= dim; k++) {
        for (Element i = 0; i < dim * dim; i++) {
            int hits = 0;
            bool clean = true;
            Element found = -1;
            for (Element l = 0; l < dim; l++) {
                double ov = overlaps(i, k * dim + l);
                if (std::abs(ov - expected) <= tol) {
                    hits++;
                    found = l;
                } else if (ov > tol) {
                    clean = false;
                }
            }
            if (hits != 1 || !clean) {
                std::ostringstream msg;
                msg << "Mean King basis state (" << i / dim << "," << i % dim << ") is not compatible with exactly "
                    << "one outcome of basis " << k << "; overlaps:";
                for (Element l = 0; l < dim; l++) {
                    msg << " " << overlaps(i, k * dim + l);
                }
                throw VerificationError(msg.str());
            }
            inference[(static_cast<size_t>(k) * dim * dim) + i] = found;
        }
    }
    return MeanKingBasis(family.ctx, std::move(states), std::move(inference));
}

}  // namespace

Ket mean_king_state(const ExtensionContext &ext, const PhaseSystem &phases, Element i1, Element i2) {
    const auto &ctx = ext.base();
    ctx.check_element(i1);
    ctx.check_element(i2);
    return combine_bells(ctx, phases, [&](Element m, Element n) {
        return ext.character(ext.mul({i1, i2}, {m, n}));
    });
}

Ket mean_king_state_modular(const ArithmeticContext &ctx, const PhaseSystem &phases, Element i1, Element i2) {
    ctx.check_element(i1);
    ctx.check_element(i2);
    return combine_bells(ctx, phases, [&](Element m, Element n) {
        return ctx.character(ctx.add(ctx.neg(ctx.mul(i1, n)), ctx.mul(i2, m)));
    });
}

Operator king_product_states(const MubFamily &family) {
    int dim = family.dim();
    Operator out(static_cast<Eigen::Index>(dim) * dim, static_cast<Eigen::Index>(dim + 1) * dim);
    for (int k = 0; k <= dim; k++) {
        for (Element l = 0; l < dim; l++) {
            Ket e = family.state(k, l);
            out.col(k * dim + l) = tensor(Ket(e.conjugate()), e);
        }
    }
    return out;
}

MeanKingBasis mean_king_basis(const MubFamily &family, const ExtensionContext &ext, const PhaseSystem &phases) {
    int dim = family.dim();
    if (ext.base().dim() != dim) {
        throw std::invalid_argument("extension does not match the family dimension");
    }
    Operator states(static_cast<Eigen::Index>(dim) * dim, static_cast<Eigen::Index>(dim) * dim);
    for (Element i1 = 0; i1 < dim; i1++) {
        for (Element i2 = 0; i2 < dim; i2++) {
            states.col(i1 * dim + i2) = mean_king_state(ext, phases, i1, i2);
        }
    }
    return finish_basis(family, std::move(states));
}

MeanKingBasis mean_king_basis(const MubFamily &family, const PhaseSystem &phases) {
    const auto &ctx = family.ctx;
    if (ctx.is_galois()) {
        throw std::invalid_argument("galois families need the quadratic extension");
    }
    if (ctx.dim() % 2 == 0) {
        throw std::domain_error("the modular Mean King basis needs odd N");
    }
    int dim = ctx.dim();
    Operator states(static_cast<Eigen::Index>(dim) * dim, static_cast<Eigen::Index>(dim) * dim);
    for (Element i1 = 0; i1 < dim; i1++) {
        for (Element i2 = 0; i2 < dim; i2++) {
            states.col(i1 * dim + i2) = mean_king_state_modular(ctx, phases, i1, i2);
        }
    }
    return finish_basis(family, std::move(states));
}

Element infer_closed_form(const ExtensionContext &ext, int basis, Element i1, Element i2) {
    const auto &f = ext.base();
    f.check_element(i1);
    f.check_element(i2);
    if (basis < 0 || basis > f.dim()) {
        throw std::out_of_range("basis index out of range");
    }
    Element r = ext.residue();
    if (basis == 0) {
        return f.neg(f.mul(i2, r));
    }
    return f.neg(f.add(i1, f.mul(f.mul(i2, basis - 1), r)));
}

Element infer_closed_form_modular(const ArithmeticContext &ctx, int basis, Element i1, Element i2) {
    ctx.check_element(i1);
    ctx.check_element(i2);
    if (basis < 0 || basis > ctx.dim()) {
        throw std::out_of_range("basis index out of range");
    }
    if (basis == 0) {
        return i1;
    }
    return ctx.sub(ctx.mul(basis - 1, i1), i2);
}

IndexPair symplectic_relabel(const ExtensionContext &ext, Element i1, Element i2) {
    const auto &f = ext.base();
    return {i2, f.div(f.neg(i1), ext.residue())};
}

IndexPair symplectic_relabel_inverse(const ExtensionContext &ext, Element i1, Element i2) {
    const auto &f = ext.base();
    return {f.neg(f.mul(i2, ext.residue())), i1};
}

IndexPair symplectic_transport(const ArithmeticContext &ctx, int basis, Element i1, Element i2) {
    if (basis < 1 || basis > ctx.dim()) {
        throw std::out_of_range("symplectic transport needs a basis index in 1..N");
    }
    return {ctx.sub(ctx.mul(basis - 1, i1), i2), i1};
}

IndexPair symplectic_transport_inverse(const ArithmeticContext &ctx, int basis, Element i1, Element i2) {
    if (basis < 1 || basis > ctx.dim()) {
        throw std::out_of_range("symplectic transport needs a basis index in 1..N");
    }
    return {i2, ctx.sub(ctx.mul(basis - 1, i2), i1)};
}

Operator relabelled_states(const MubFamily &family, const PhaseSystem &phases, int basis) {
    const auto &ctx = family.ctx;
    int dim = family.dim();
    Eigen::Index d2 = static_cast<Eigen::Index>(dim) * dim;
    Operator coeffs(d2, d2);
    for (Element m = 0; m < dim; m++) {
        for (Element n = 0; n < dim; n++) {
            Complex s = slope_phase(ctx, phases, m, n);
            for (Element a = 0; a < dim; a++) {
                for (Element b = 0; b < dim; b++) {
                    coeffs(m * dim + n, a * dim + b) = ctx.character(ctx.sub(ctx.mul(b, m), ctx.mul(a, n))) * s;
                }
            }
        }
    }
    return bell_matrix(family, basis) * coeffs / static_cast<double>(dim);
}

Ket relabelled_state(const MubFamily &family, const PhaseSystem &phases, int basis, Element a, Element b) {
    family.ctx.check_element(a);
    family.ctx.check_element(b);
    return relabelled_states(family, phases, basis).col(a * family.dim() + b);
}

SymplecticReport verify_symplectic_invariance(const MubFamily &family, const PhaseSystem &phases, double tol) {
    SymplecticReport report;
    const auto &ctx = family.ctx;
    int dim = family.dim();
    Operator reference = relabelled_states(family, phases, 0);
    for (int k = 1; k <= dim; k++) {
        Operator frame = relabelled_states(family, phases, k);
        for (Element i1 = 0; i1 < dim; i1++) {
            for (Element i2 = 0; i2 < dim; i2++) {
                report.checked++;
                IndexPair moved = symplectic_transport(ctx, k, i1, i2);
                if (!same_ray(frame.col(moved.first * dim + moved.second), reference.col(i1 * dim + i2), tol)) {
                    report.violations++;
                }
            }
        }
        for (int p = 0; p < dim * dim; p++) {
            IndexPair a = symplectic_transport(ctx, k, p / dim, p % dim);
            for (int q = 0; q < dim * dim; q++) {
                IndexPair b = symplectic_transport(ctx, k, q / dim, q % dim);
                if (symplectic_form(ctx, a.first, a.second, b.first, b.second) !=
                    symplectic_form(ctx, p / dim, p % dim, q / dim, q % dim)) {
                    report.form_violations++;
                }
            }
        }
    }
    return report;
}

std::vector<double> outcome_distribution(const MeanKingBasis &basis, const MubFamily &family, int k, Element l) {
    Ket e = family.state(k, l);
    Ket product = tensor(Ket(e.conjugate()), e);
    Eigen::VectorXd probs = (basis.states().adjoint() * product).cwiseAbs2();
    return {probs.data(), probs.data() + probs.size()};
}

int king_bell_support_violations(const MubFamily &family, double tol) {
    int dim = family.dim();
    int violations = 0;
    for (int k = 0; k <= dim; k++) {
        Operator bells = bell_matrix(family, k);
        for (Element l = 0; l < dim; l++) {
            Ket e = family.state(k, l);
            Ket product = tensor(Ket(e.conjugate()), e);
            Eigen::VectorXd ov = (bells.adjoint() * product).cwiseAbs();
            for (Element m = 1; m < dim; m++) {
                for (Element n = 0; n < dim; n++) {
                    if (ov(m * dim + n) > tol) {
                        violations++;
                    }
                }
            }
        }
    }
    return violations;
}

AravindReport aravind_cross_check(const MeanKingBasis &basis, const MubFamily &family, const ExtensionContext &ext) {
    AravindReport report;
    const auto &f = ext.base();
    int dim = family.dim();
    double tol = default_tolerance();
    Operator products = king_product_states(family);
    Eigen::MatrixXd overlaps = (basis.states().adjoint() * products).cwiseAbs();
    for (Element i1 = 0; i1 < dim; i1++) {
        for (Element i2 = 0; i2 < dim; i2++) {
            report.states++;
            Element k0 = f.neg(f.mul(i2, ext.residue()));
            Element k1 = f.neg(i1);
            bool agrees = true;
            for (int m = 0; m <= dim; m++) {
                Element allowed = m == 0 ? k0 : f.add(f.mul(m - 1, k0), k1);
                for (Element l = 0; l < dim; l++) {
                    if (l != allowed && overlaps(i1 * dim + i2, m * dim + l) > tol) {
                        agrees = false;
                    }
                }
            }
            if (agrees) {
                report.agreeing++;
            }
        }
    }
    return report;
}

std::string to_string(ProtocolMode mode) {
    return mode == ProtocolMode::exhaustive ? "exhaustive" : "monte_carlo";
}

ProtocolReport run_protocol(
    const MeanKingBasis &basis,
    const MubFamily &family,
    ProtocolMode mode,
    long trials,
    std::uint64_t seed,
    double tol) {
    int dim = family.dim();
    if (basis.dim() != dim) {
        throw std::invalid_argument("basis and family dimensions differ");
    }
    double norm = 1.0 / std::sqrt(static_cast<double>(dim));
    Ket initial = Ket::Zero(static_cast<Eigen::Index>(dim) * dim);
    for (Element q = 0; q < dim; q++) {
        initial(q * dim + q) = norm;
    }
    Operator id = identity(dim);

    // King outcome distribution and Alice's conditional distributions, per
    // (k, l), derived from the actual post-measurement state.
    std::vector<std::vector<double>> alice(static_cast<size_t>(dim + 1) * dim);
    for (int k = 0; k <= dim; k++) {
        for (Element l = 0; l < dim; l++) {
            Ket after = apply_tensor(id, projector(family.state(k, l)), initial);
            double p = after.squaredNorm();
            if (std::abs(p - 1.0 / dim) > tol) {
                std::ostringstream msg;
                msg << "King outcome " << l << " in basis " << k << " has probability " << p;
                throw VerificationError(msg.str());
            }
            after /= std::sqrt(p);
            Eigen::VectorXd probs = (basis.states().adjoint() * after).cwiseAbs2();
            alice[static_cast<size_t>(k) * dim + l].assign(probs.data(), probs.data() + probs.size());
        }
    }

    ProtocolReport report;
    report.mode = mode;
    report.seed = seed;
    auto record = [&](int k, Element l, int outcome) {
        Element i1 = outcome / dim;
        Element i2 = outcome % dim;
        report.trials++;
        if (basis.infer(k, i1, i2) == l) {
            report.successes++;
        }
        report.histogram[{k, l, i1, i2}]++;
    };

    if (mode == ProtocolMode::exhaustive) {
        for (int k = 0; k <= dim; k++) {
            for (Element l = 0; l < dim; l++) {
                const auto &probs = alice[static_cast<size_t>(k) * dim + l];
                for (int outcome = 0; outcome < dim * dim; outcome++) {
                    if (probs[outcome] > tol) {
                        record(k, l, outcome);
                    }
                }
            }
        }
        return report;
    }

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick_basis(0, dim);
    std::uniform_int_distribution<int> pick_king(0, dim - 1);
    std::vector<std::discrete_distribution<int>> pick_alice;
    pick_alice.reserve(alice.size());
    for (const auto &probs : alice) {
        pick_alice.emplace_back(probs.begin(), probs.end());
    }
    for (long t = 0; t < trials; t++) {
        int k = pick_basis(rng);
        Element l = pick_king(rng);
        int outcome = pick_alice[static_cast<size_t>(k) * dim + l](rng);
        record(k, l, outcome);
    }
    return report;
}

}  // namespace mubking
