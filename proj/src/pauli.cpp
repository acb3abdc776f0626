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

#include "mubking/pauli.hpp"

#include <stdexcept>

namespace mubking {

namespace {

constexpr Complex kI{0.0, 1.0};

void check_class(int dim, int cls) {
    if (cls < 0 || cls > dim) {
        throw std::out_of_range("class index " + std::to_string(cls) + " out of range 0.." + std::to_string(dim));
    }
}

int top_bit(int l) {
    int b = 1;
    while (b * 2 <= l) {
        b *= 2;
    }
    return b;
}

}  // namespace

Operator displacement_v(const ArithmeticContext &ctx, Element shift, Element phase) {
    ctx.check_element(shift);
    ctx.check_element(phase);
    int n = ctx.dim();
    Operator v = Operator::Zero(n, n);
    for (Element k = 0; k < n; k++) {
        Element target = ctx.add(k, shift);
        v(target, k) = ctx.character(ctx.mul(target, phase));
    }
    return v;
}

Complex PhaseSystem::operator()(int cls, Element l) const {
    check_class(dim_, cls);
    if (l < 0 || l >= dim_) {
        throw std::out_of_range("phase index out of range");
    }
    return table_[static_cast<size_t>(cls) * dim_ + l];
}

PhaseSystem build_phase_system(const ArithmeticContext &ctx) {
    int n = ctx.dim();
    std::vector<Complex> table(static_cast<size_t>(n + 1) * n, Complex{1.0, 0.0});
    bool even = ctx.is_galois() ? ctx.characteristic() == 2 : n % 2 == 0;
    if (even && !ctx.is_galois()) {
        throw std::domain_error("square-root phases need odd N in modular mode");
    }
    for (int cls = 1; cls <= n; cls++) {
        Element c = cls - 1;
        Complex *row = &table[static_cast<size_t>(cls) * n];
        if (!even) {
            for (Element l = 0; l < n; l++) {
                row[l] = ctx.character(ctx.half(ctx.mul(c, ctx.mul(l, l))));
            }
            continue;
        }
        // Labels are polynomials over GF(2); bit b of the label is x^log2(b).
        // Generators first, then l = rest ⊕ top through the cocycle.
        for (Element l = 1; l < n; l++) {
            Element top = top_bit(l);
            Element rest = l ^ top;
            if (rest == 0) {
                Element g = ctx.mul(c, ctx.mul(l, l));
                row[l] = (g % 2) ? kI : Complex{1.0, 0.0};
            } else {
                row[l] = row[rest] * row[top] * ctx.character(ctx.mul(c, ctx.mul(rest, top)));
            }
        }
    }
    return PhaseSystem(n, std::move(table));
}

Operator displacement_u(const ArithmeticContext &ctx, const PhaseSystem &phases, int cls, Element l) {
    check_class(ctx.dim(), cls);
    if (cls == 0) {
        return displacement_v(ctx, 0, l);
    }
    Element c = cls - 1;
    return std::conj(phases(cls, l)) * displacement_v(ctx, l, ctx.mul(c, l));
}

int class_of(const ArithmeticContext &ctx, Element m, Element n) {
    if (m == 0) {
        return 0;
    }
    return ctx.div(n, m) + 1;
}

Complex slope_phase(const ArithmeticContext &ctx, const PhaseSystem &phases, Element m, Element n) {
    ctx.check_element(m);
    ctx.check_element(n);
    if (!ctx.is_galois()) {
        return ctx.character(ctx.half(ctx.mul(m, n)));
    }
    if (m == 0) {
        return 1.0;
    }
    return phases(class_of(ctx, m, n), m);
}

Operator phased_displacement(const ArithmeticContext &ctx, const PhaseSystem &phases, Element m, Element n) {
    return std::conj(slope_phase(ctx, phases, m, n)) * displacement_v(ctx, m, n);
}

std::vector<Complex> literal_even_phases(const ArithmeticContext &ctx, int cls) {
    if (!ctx.is_galois() || ctx.characteristic() != 2) {
        throw std::domain_error("literal even phases need characteristic 2");
    }
    check_class(ctx.dim(), cls);
    int n = ctx.dim();
    int m = ctx.degree();
    Element c = cls == 0 ? 0 : cls - 1;
    std::vector<Complex> out(n, Complex{1.0, 0.0});
    for (Element l = 0; l < n; l++) {
        Complex v = 1.0;
        for (int bit = 0; bit < m; bit++) {
            if (!((l >> bit) & 1)) {
                continue;
            }
            int next = 0;
            for (int b = bit + 1; b < m; b++) {
                if ((l >> b) & 1) {
                    next = b;
                    break;
                }
            }
            Element e = 1 << bit;
            Element square = ctx.mul(c, ctx.mul(e, e));
            Element cross = ctx.mul(c, ctx.mul(e, 1 << next));
            v *= (square % 2) ? kI : Complex{1.0, 0.0};
            v *= (cross % 2) ? -1.0 : 1.0;
        }
        out[l] = v;
    }
    return out;
}

EvenPhaseComparison compare_literal_even_phases(const ArithmeticContext &ctx, const PhaseSystem &phases, double tol) {
    EvenPhaseComparison cmp;
    int n = ctx.dim();
    for (int cls = 1; cls <= n; cls++) {
        auto literal = literal_even_phases(ctx, cls);
        Element c = cls - 1;
        for (Element l = 0; l < n; l++) {
            cmp.entries++;
            if (!approx_equal(literal[l], phases(cls, l), tol)) {
                cmp.mismatches++;
            }
        }
        for (Element a = 0; a < n; a++) {
            for (Element b = 0; b < n; b++) {
                Complex rhs = literal[a] * literal[b] * ctx.character(ctx.mul(c, ctx.mul(a, b)));
                if (!approx_equal(literal[ctx.add(a, b)], rhs, tol)) {
                    cmp.cocycle_violations++;
                }
            }
        }
    }
    return cmp;
}

}  // namespace mubking
