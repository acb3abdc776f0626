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

#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"

using namespace mubking;

namespace {

const std::vector<std::pair<int, int>> kFields{{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}};

oracle::Matrix oracle_v(const oracle::Field &f, int shift, int phase) {
    oracle::Matrix v = oracle::Matrix::Zero(f.n, f.n);
    for (int k = 0; k < f.n; k++) {
        int row = f.add(k, shift);
        v(row, k) = f.chi(f.mul(row, phase));
    }
    return v;
}

}  // namespace

TEST(Displacement, MatchesDirectExpansion) {
    for (auto [p, m] : kFields) {
        oracle::Field o(p, m);
        auto ctx = ArithmeticContext::galois(p, m);
        for (int i = 0; i < o.n; i++) {
            for (int j = 0; j < o.n; j++) {
                ASSERT_LE(oracle::max_diff(displacement_v(ctx, i, j), oracle_v(o, i, j)), 1e-12);
            }
        }
    }
}

TEST(Displacement, QubitOperators) {
    auto ctx = ArithmeticContext::galois(2, 1);
    EXPECT_TRUE(approx_equal(displacement_v(ctx, 0, 0), identity(2)));
    EXPECT_TRUE(approx_equal(displacement_v(ctx, 0, 1), oracle::pauli_z()));
    EXPECT_TRUE(approx_equal(displacement_v(ctx, 1, 0), oracle::pauli_x()));
    Operator v11(2, 2);
    v11 << 0, 1, -1, 0;
    EXPECT_TRUE(approx_equal(displacement_v(ctx, 1, 1), v11));
    EXPECT_TRUE(approx_equal(displacement_v(ctx, 1, 1), Complex(0, 1) * oracle::pauli_y()));
}

TEST(Displacement, UnitaryAndTraceless) {
    for (auto [p, m] : kFields) {
        auto ctx = ArithmeticContext::galois(p, m);
        int n = ctx.dim();
        for (int i = 0; i < n; i++) {
            for (int j = 0; j < n; j++) {
                Operator v = displacement_v(ctx, i, j);
                EXPECT_TRUE(is_unitary(v));
                EXPECT_TRUE(approx_equal(v.trace(), Complex(i == 0 && j == 0 ? n : 0)));
            }
        }
    }
}

TEST(Displacement, CompositionLaw) {
    for (auto [p, m] : kFields) {
        auto ctx = ArithmeticContext::galois(p, m);
        oracle::Field o(p, m);
        int n = ctx.dim();
        auto check = [&](int i, int j, int l, int k) {
            Operator lhs = displacement_v(ctx, i, j) * displacement_v(ctx, l, k);
            Operator rhs = o.chi(o.neg(o.mul(i, k))) * oracle_v(o, o.add(i, l), o.add(j, k));
            return oracle::max_diff(lhs, rhs) <= 1e-9;
        };
        if (n <= 5) {
            for (int t = 0; t < n * n * n * n; t++) {
                ASSERT_TRUE(check(t % n, t / n % n, t / (n * n) % n, t / (n * n * n)));
            }
        } else {
            std::mt19937_64 rng(20050501);
            std::uniform_int_distribution<int> pick(0, n - 1);
            for (int t = 0; t < 10000; t++) {
                ASSERT_TRUE(check(pick(rng), pick(rng), pick(rng), pick(rng)));
            }
        }
    }
}

TEST(Displacement, AdjointIndexOrder) {
    for (auto [p, m] : kFields) {
        auto ctx = ArithmeticContext::galois(p, m);
        int n = ctx.dim();
        for (int i = 0; i < n; i++) {
            for (int j = 0; j < n; j++) {
                Operator rhs = ctx.character(ctx.neg(ctx.mul(i, j))) * displacement_v(ctx, ctx.neg(i), ctx.neg(j));
                EXPECT_TRUE(approx_equal(displacement_v(ctx, i, j).adjoint(), rhs));
            }
        }
    }
    // With shift and phase exchanged the relation fails.
    auto ctx = ArithmeticContext::galois(3, 1);
    Operator swapped = ctx.character(ctx.neg(ctx.mul(1, 0))) * displacement_v(ctx, ctx.neg(0), ctx.neg(1));
    EXPECT_FALSE(approx_equal(displacement_v(ctx, 1, 0).adjoint(), swapped));
}

TEST(Displacement, HilbertSchmidtOrthogonality) {
    for (auto [p, m] : kFields) {
        auto ctx = ArithmeticContext::galois(p, m);
        int n = ctx.dim();
        std::vector<Operator> v;
        for (int t = 0; t < n * n; t++) {
            v.push_back(displacement_v(ctx, t / n, t % n));
        }
        for (int a = 0; a < n * n; a++) {
            for (int b = 0; b < n * n; b++) {
                ASSERT_TRUE(approx_equal(hs_inner(v[a], v[b]), Complex(a == b ? n : 0)));
            }
        }
    }
}

TEST(Displacement, ClassesCommute) {
    for (auto [p, m] : kFields) {
        auto ctx = ArithmeticContext::galois(p, m);
        int n = ctx.dim();
        for (int cls = 0; cls <= n; cls++) {
            for (int l = 0; l < n; l++) {
                Operator x = cls == 0 ? displacement_v(ctx, 0, l) : displacement_v(ctx, l, ctx.mul(cls - 1, l));
                for (int r = 0; r < n; r++) {
                    Operator y = cls == 0 ? displacement_v(ctx, 0, r) : displacement_v(ctx, r, ctx.mul(cls - 1, r));
                    ASSERT_TRUE(approx_equal(x * y, y * x));
                }
            }
        }
    }
}

TEST(Phases, Values) {
    auto f3 = ArithmeticContext::galois(3, 1);
    auto ph3 = build_phase_system(f3);
    EXPECT_TRUE(approx_equal(ph3(2, 1), std::polar(1.0, 4 * oracle::kPi / 3)));
    auto f2 = ArithmeticContext::galois(2, 1);
    auto ph2 = build_phase_system(f2);
    // Class 2 is the Y class for a qubit.
    EXPECT_TRUE(approx_equal(ph2(2, 1), Complex(0, 1)) || approx_equal(ph2(2, 1), Complex(0, -1)));
    EXPECT_TRUE(approx_equal(ph2(1, 1), 1.0));
    for (auto [p, m] : kFields) {
        auto ctx = ArithmeticContext::galois(p, m);
        auto ph = build_phase_system(ctx);
        for (int cls = 0; cls <= ctx.dim(); cls++) {
            EXPECT_TRUE(approx_equal(ph(cls, 0), 1.0));
        }
    }
    EXPECT_THROW(build_phase_system(ArithmeticContext::modular(8)), std::domain_error);
}

TEST(Phases, OddCharacteristicFormula) {
    for (auto [p, m] : std::vector<std::pair<int, int>>{{3, 1}, {5, 1}, {7, 1}, {3, 2}}) {
        oracle::Field o(p, m);
        auto ph = build_phase_system(ArithmeticContext::galois(p, m));
        int inv2 = (p + 1) / 2;  // in the prime subfield
        for (int cls = 1; cls <= o.n; cls++) {
            for (int l = 0; l < o.n; l++) {
                int half = o.mul(o.mul(cls - 1, o.mul(l, l)), inv2);
                EXPECT_TRUE(approx_equal(ph(cls, l), o.chi(half)));
            }
        }
    }
}

TEST(Phases, CocycleAndSquare) {
    std::vector<ArithmeticContext> contexts;
    for (auto [p, m] : kFields) {
        contexts.push_back(ArithmeticContext::galois(p, m));
    }
    contexts.push_back(ArithmeticContext::galois(2, 4));
    contexts.push_back(ArithmeticContext::modular(9));
    contexts.push_back(ArithmeticContext::modular(15));
    for (const auto &ctx : contexts) {
        auto ph = build_phase_system(ctx);
        int n = ctx.dim();
        for (int cls = 1; cls <= n; cls++) {
            int c = cls - 1;
            for (int a = 0; a < n; a++) {
                EXPECT_TRUE(approx_equal(ph(cls, a) * ph(cls, a), ctx.character(ctx.mul(c, ctx.mul(a, a)))));
                for (int b = 0; b < n; b++) {
                    Complex rhs = ph(cls, a) * ph(cls, b) * ctx.character(ctx.mul(c, ctx.mul(a, b)));
                    ASSERT_TRUE(approx_equal(ph(cls, ctx.add(a, b)), rhs)) << "N=" << n << " class " << cls;
                }
            }
        }
    }
}

TEST(Phases, LiteralEvenFormulaIsReportOnly) {
    for (int m : {1, 2, 3}) {
        auto ctx = ArithmeticContext::galois(2, m);
        auto cmp = compare_literal_even_phases(ctx, build_phase_system(ctx));
        EXPECT_EQ(cmp.entries, ctx.dim() * ctx.dim());
        EXPECT_GE(cmp.mismatches, 0);
    }
    EXPECT_THROW(literal_even_phases(ArithmeticContext::galois(3, 1), 1), std::domain_error);
}

TEST(PhasedDisplacement, GroupLawWithinClass) {
    std::vector<ArithmeticContext> contexts;
    for (auto [p, m] : kFields) {
        contexts.push_back(ArithmeticContext::galois(p, m));
    }
    contexts.push_back(ArithmeticContext::modular(15));
    for (const auto &ctx : contexts) {
        auto ph = build_phase_system(ctx);
        int n = ctx.dim();
        for (int cls = 0; cls <= n; cls++) {
            EXPECT_TRUE(approx_equal(displacement_u(ctx, ph, cls, 0), identity(n)));
            for (int a = 0; a < n; a++) {
                Operator ua = displacement_u(ctx, ph, cls, a);
                for (int b = 0; b < n; b++) {
                    ASSERT_TRUE(approx_equal(ua * displacement_u(ctx, ph, cls, b), displacement_u(ctx, ph, cls, ctx.add(a, b))));
                }
            }
        }
    }
}

TEST(PhasedDisplacement, QubitYClass) {
    auto ctx = ArithmeticContext::galois(2, 1);
    auto ph = build_phase_system(ctx);
    Operator u = displacement_u(ctx, ph, 2, 1);
    EXPECT_TRUE(approx_equal(u, oracle::pauli_y()) || approx_equal(u, -oracle::pauli_y()));
    EXPECT_TRUE(approx_equal(displacement_u(ctx, ph, 0, 1), oracle::pauli_z()));
    EXPECT_TRUE(approx_equal(displacement_u(ctx, ph, 1, 1), oracle::pauli_x()));
    EXPECT_THROW(displacement_u(ctx, ph, 3, 1), std::out_of_range);
}

TEST(PhasedDisplacement, SlopeLabels) {
    for (auto [p, m] : kFields) {
        auto ctx = ArithmeticContext::galois(p, m);
        auto ph = build_phase_system(ctx);
        int n = ctx.dim();
        for (int a = 0; a < n; a++) {
            for (int b = 0; b < n; b++) {
                Operator u = phased_displacement(ctx, ph, a, b);
                int cls = class_of(ctx, a, b);
                Operator expected = a == 0 ? displacement_v(ctx, 0, b) : displacement_u(ctx, ph, cls, a);
                ASSERT_TRUE(approx_equal(u, expected)) << a << "," << b;
            }
        }
    }
}
