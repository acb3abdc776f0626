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

#include "mubking/wigner.hpp"

#include <cmath>
#include <sstream>

namespace mubking {

Complex weyl_function(const ArithmeticContext &ctx, const PhaseSystem &phases, const Operator &op, Element m, Element n) {
    if (op.rows() != ctx.dim() || op.cols() != ctx.dim()) {
        throw std::invalid_argument("operator dimension does not match the context");
    }
    // U_(m,n) has a single nonzero per column: (k ⊕ m, k).
    Complex s = std::conj(slope_phase(ctx, phases, m, n));
    Complex tr = 0;
    for (Element k = 0; k < ctx.dim(); k++) {
        Element row = ctx.add(k, m);
        tr += ctx.character(ctx.mul(row, n)) * op(k, row);
    }
    return s * tr;
}

Operator weyl_reconstruct(const ArithmeticContext &ctx, const PhaseSystem &phases, const Operator &op) {
    int n = ctx.dim();
    Operator out = Operator::Zero(n, n);
    for (Element a = 0; a < n; a++) {
        for (Element b = 0; b < n; b++) {
            out += weyl_function(ctx, phases, op, a, b) * phased_displacement(ctx, phases, a, b).adjoint();
        }
    }
    return out / static_cast<double>(n);
}

Operator turnover(const Ket &state) {
    int n = exact_sqrt(static_cast<int>(state.size()));
    Operator out(n, n);
    for (int a = 0; a < n; a++) {
        for (int b = 0; b < n; b++) {
            out(b, a) = state(a * n + b);
        }
    }
    return out;
}

WignerOperatorSet wigner_operator_set(const ExtensionContext &ext, const PhaseSystem &phases, double tol) {
    const auto &ctx = ext.base();
    int n = ctx.dim();
    std::vector<Operator> displacements;
    displacements.reserve(static_cast<size_t>(n) * n);
    for (Element m = 0; m < n; m++) {
        for (Element k = 0; k < n; k++) {
            displacements.push_back(phased_displacement(ctx, phases, m, k));
        }
    }
    WignerOperatorSet set{ctx, {}};
    set.ops.reserve(static_cast<size_t>(n) * n);
    double root_n = std::sqrt(static_cast<double>(n));
    for (Element i1 = 0; i1 < n; i1++) {
        for (Element i2 = 0; i2 < n; i2++) {
            Operator w = Operator::Zero(n, n);
            for (Element m = 0; m < n; m++) {
                for (Element k = 0; k < n; k++) {
                    w += ctx.character(ctx.sub(ctx.mul(i2, m), ctx.mul(i1, k))) * displacements[m * n + k];
                }
            }
            w /= static_cast<double>(n);
            IndexPair label = symplectic_relabel(ext, i1, i2);
            Operator turned = root_n * turnover(mean_king_state(ext, phases, label.first, label.second));
            if (!approx_equal(w, turned, tol)) {
                std::ostringstream msg;
                msg << "point operator (" << i1 << "," << i2 << ") differs from the turned-over Mean King state";
                throw VerificationError(msg.str());
            }
            set.ops.push_back(std::move(w));
        }
    }
    return set;
}

double wigner_function(const WignerOperatorSet &set, const Operator &op, Element i1, Element i2, double tol) {
    Complex v = (set.at(i1, i2) * op).trace();
    if (std::abs(v.imag()) > tol) {
        throw std::domain_error("Wigner value is not real; the operator is not hermitian");
    }
    return v.real();
}

std::vector<IndexPair> striation_line(const ArithmeticContext &ctx, int basis, Element line) {
    ctx.check_element(line);
    if (basis < 0 || basis > ctx.dim()) {
        throw std::out_of_range("striation index out of range");
    }
    std::vector<IndexPair> points;
    for (Element t = 0; t < ctx.dim(); t++) {
        if (basis == 0) {
            points.push_back({line, t});
        } else {
            points.push_back(symplectic_transport_inverse(ctx, basis, line, t));
        }
    }
    return points;
}

Operator marginal(const WignerOperatorSet &set, const MubFamily &family, int basis, Element line) {
    if (family.dim() != set.dim()) {
        throw std::invalid_argument("family and operator set dimensions differ");
    }
    Operator sum = Operator::Zero(set.dim(), set.dim());
    for (const auto &point : striation_line(set.ctx, basis, line)) {
        sum += set.at(point.first, point.second);
    }
    return sum;
}

ParityOperators parity_operators(const ArithmeticContext &ctx, const PhaseSystem &phases, double tol) {
    if (parity_is_trivial(ctx) || (ctx.is_galois() && ctx.characteristic() == 2)) {
        throw std::domain_error("displaced parity operators need odd characteristic");
    }
    int n = ctx.dim();
    ParityOperators out;
    out.dim = n;
    out.parity = Operator::Zero(n, n);
    for (Element a = 0; a < n; a++) {
        for (Element b = 0; b < n; b++) {
            out.parity += phased_displacement(ctx, phases, a, b);
        }
    }
    out.parity /= static_cast<double>(n);

    Operator expected = Operator::Zero(n, n);
    for (Element k = 0; k < n; k++) {
        expected(ctx.neg(k), k) = 1.0;
    }
    if (!approx_equal(out.parity, expected, tol)) {
        throw VerificationError("parity operator does not map |k> to |-k>");
    }
    if (!approx_equal(out.parity * out.parity, identity(n), tol)) {
        throw VerificationError("parity operator is not an involution");
    }
    out.displaced.reserve(static_cast<size_t>(n) * n);
    for (Element a = 0; a < n; a++) {
        for (Element b = 0; b < n; b++) {
            out.displaced.push_back(phased_displacement(ctx, phases, ctx.add(a, a), ctx.add(b, b)) * out.parity);
        }
    }
    return out;
}

bool parity_is_trivial(const ArithmeticContext &ctx) {
    for (Element k = 0; k < ctx.dim(); k++) {
        if (ctx.neg(k) != k) {
            return false;
        }
    }
    return true;
}

int wigner_weyl_coincidences(const WignerOperatorSet &set, const PhaseSystem &phases, double tol) {
    int n = set.dim();
    int hits = 0;
    for (const auto &w : set.ops) {
        for (Element m = 0; m < n; m++) {
            for (Element k = 0; k < n; k++) {
                if (proportional(w, phased_displacement(set.ctx, phases, m, k), tol)) {
                    hits++;
                }
            }
        }
    }
    return hits;
}

}  // namespace mubking
