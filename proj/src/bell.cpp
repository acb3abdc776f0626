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

#include "mubking/bell.hpp"

#include <cmath>
#include <sstream>

namespace mubking {

Ket bell_state(const MubFamily &family, Element m, Element n, int basis) {
    const auto &ctx = family.ctx;
    ctx.check_element(m);
    ctx.check_element(n);
    if (basis < 0 || basis >= family.num_bases()) {
        throw std::out_of_range("basis index out of range");
    }
    int dim = family.dim();
    const Operator &b = family.bases[basis];
    Ket out = Ket::Zero(static_cast<Eigen::Index>(dim) * dim);
    for (Element l = 0; l < dim; l++) {
        out += ctx.character(ctx.mul(l, n)) * tensor(Ket(b.col(l).conjugate()), Ket(b.col(ctx.add(l, m))));
    }
    return out / std::sqrt(static_cast<double>(dim));
}

Operator bell_matrix(const MubFamily &family, int basis) {
    int dim = family.dim();
    Operator out(static_cast<Eigen::Index>(dim) * dim, static_cast<Eigen::Index>(dim) * dim);
    for (Element m = 0; m < dim; m++) {
        for (Element n = 0; n < dim; n++) {
            out.col(m * dim + n) = bell_state(family, m, n, basis);
        }
    }
    return out;
}

Operator computational_bell_matrix(const ArithmeticContext &ctx) {
    int dim = ctx.dim();
    double norm = 1.0 / std::sqrt(static_cast<double>(dim));
    Operator out = Operator::Zero(dim * dim, dim * dim);
    for (Element m = 0; m < dim; m++) {
        for (Element n = 0; n < dim; n++) {
            for (Element k = 0; k < dim; k++) {
                out(k * dim + ctx.add(k, m), m * dim + n) = norm * ctx.character(ctx.mul(k, n));
            }
        }
    }
    return out;
}

BellImage bell_transform(const ArithmeticContext &ctx, const PhaseSystem &phases, int basis, Element m, Element n) {
    if (basis < 1 || basis > ctx.dim()) {
        throw std::out_of_range("bell_transform needs a basis index in 1..N");
    }
    ctx.check_element(m);
    ctx.check_element(n);
    Element c = basis - 1;
    BellImage image;
    image.m = n;
    image.n = ctx.add(ctx.neg(m), ctx.mul(c, n));
    image.phase = ctx.character(ctx.neg(ctx.mul(m, n))) * phases(basis, n);
    return image;
}

Element symplectic_form(const ArithmeticContext &ctx, Element m1, Element n1, Element m2, Element n2) {
    return ctx.sub(ctx.mul(m1, n2), ctx.mul(n1, m2));
}

Complex pauli_conjugation_check(const ArithmeticContext &ctx, Element i, Element j, Element m, Element n, double tol) {
    int dim = ctx.dim();
    Operator v = displacement_v(ctx, j, i);
    Ket bell = Ket::Zero(static_cast<Eigen::Index>(dim) * dim);
    double norm = 1.0 / std::sqrt(static_cast<double>(dim));
    for (Element k = 0; k < dim; k++) {
        bell(k * dim + ctx.add(k, m)) = norm * ctx.character(ctx.mul(k, n));
    }
    Ket image = apply_tensor(v.conjugate(), v, bell);
    Complex phase = ctx.character(ctx.sub(ctx.mul(m, i), ctx.mul(n, j)));
    if (!approx_equal(image, phase * bell, tol)) {
        std::ostringstream msg;
        msg << "Bell invariance fails for V_" << j << "^" << i << " on B_" << m << "," << n;
        throw VerificationError(msg.str());
    }
    return phase;
}

}  // namespace mubking
