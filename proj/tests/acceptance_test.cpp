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

// Acceptance criteria AC1-AC8, one PASS/FAIL line each.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "mubking/bell.hpp"
#include "mubking/meanking.hpp"
#include "mubking/mub.hpp"
#include "mubking/pauli.hpp"
#include "mubking/wigner.hpp"

using namespace mubking;

namespace {

constexpr double kTol = 1e-9;

struct Galois {
    ArithmeticContext ctx;
    PhaseSystem phases;
    MubFamily family;

    explicit Galois(ArithmeticContext c) : ctx(c), phases(build_phase_system(ctx)), family(mub_family(ctx, phases)) {
    }
};

const std::vector<int> kDims{2, 3, 4, 5, 7, 8, 9};
const std::vector<int> kAllGalois{2, 3, 4, 5, 7, 8, 9, 11, 13, 16};

ArithmeticContext field(int n) {
    for (int p = 2; p <= n; p++) {
        if (n % p == 0) {
            int m = 0;
            for (int r = n; r > 1; r /= p) {
                m++;
            }
            return ArithmeticContext::galois(p, m);
        }
    }
    throw std::invalid_argument("bad dimension");
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

using Criterion = std::function<bool(std::ostringstream &)>;

bool ac1(std::ostringstream &note) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    for (int n : kDims) {
        Galois g(field(n));
        for (int a = 0; a <= n; a++) {
            for (int b = a + 1; b <= n; b++) {
                Eigen::MatrixXd ov = (g.family.bases[a].adjoint() * g.family.bases[b]).cwiseAbs2();
                ok = ok && (ov.array() - 1.0 / n).abs().maxCoeff() <= kTol;
            }
        }
    }
    double secs = seconds_since(t0);
    note << "overlaps within 1e-9 of 1/N for N in {2,3,4,5,7,8,9}; " << secs << " s";
    return ok && secs < 5.0;
}

bool ac2(std::ostringstream &note) {
    long tuples = 0;
    long bad = 0;
    for (int n : kDims) {
        auto ctx = field(n);
        auto ph = build_phase_system(ctx);
        std::vector<Operator> v(n * n);
        for (int t = 0; t < n * n; t++) {
            v[t] = displacement_v(ctx, t / n, t % n);
        }
        auto law = [&](int i, int j, int l, int k) {
            Operator lhs = v[i * n + j] * v[l * n + k];
            Operator rhs = ctx.character(ctx.neg(ctx.mul(i, k))) * v[ctx.add(i, l) * n + ctx.add(j, k)];
            tuples++;
            bad += !approx_equal(lhs, rhs, kTol);
        };
        if (n <= 5) {
            for (int t = 0; t < n * n * n * n; t++) {
                law(t % n, t / n % n, t / (n * n) % n, t / (n * n * n));
            }
        } else {
            std::mt19937_64 rng(20050501);
            std::uniform_int_distribution<int> pick(0, n - 1);
            for (int t = 0; t < 10000; t++) {
                law(pick(rng), pick(rng), pick(rng), pick(rng));
            }
        }
        for (int cls = 0; cls <= n; cls++) {
            for (int a = 0; a < n; a++) {
                for (int b = 0; b < n; b++) {
                    Operator prod = displacement_u(ctx, ph, cls, a) * displacement_u(ctx, ph, cls, b);
                    bad += !approx_equal(prod, displacement_u(ctx, ph, cls, ctx.add(a, b)), kTol);
                }
            }
        }
        for (int a = 0; a < n * n; a++) {
            for (int b = 0; b < n * n; b++) {
                bad += !approx_equal(hs_inner(v[a], v[b]), Complex(a == b ? n : 0), kTol);
            }
        }
    }
    note << tuples << " composition tuples, class group law, HS orthogonality; " << bad << " violations";
    return bad == 0;
}

bool ac3(std::ostringstream &note) {
    long bad = 0;
    for (int n : {2, 3, 4, 5}) {
        Galois g(field(n));
        const auto &f = g.ctx;
        Operator reference = bell_matrix(g.family, 0);
        for (int t = 0; t < n * n * n * n; t++) {
            int i = t % n, j = t / n % n, m = t / (n * n) % n, k = t / (n * n * n);
            // V with shift j and phase i.
            Operator v = displacement_v(f, j, i);
            Ket image = apply_tensor(v.conjugate(), v, reference.col(m * n + k));
            Complex phase = f.character(f.sub(f.mul(m, i), f.mul(k, j)));
            bad += !approx_equal(image, phase * reference.col(m * n + k), kTol);
        }
        for (int basis = 1; basis <= n; basis++) {
            Operator bells = bell_matrix(g.family, basis);
            std::vector<int> seen(n * n, 0);
            for (int m = 0; m < n; m++) {
                for (int j = 0; j < n; j++) {
                    BellImage img = bell_transform(f, g.phases, basis, m, j);
                    seen[img.m * n + img.n]++;
                    bad += !approx_equal(bells.col(m * n + j), img.phase * reference.col(img.m * n + img.n), kTol);
                }
            }
            for (int s : seen) {
                bad += s != 1;
            }
        }
    }
    Galois q(ArithmeticContext::galois(2, 1));
    auto z = [&](int m, int n) { return bell_state(q.family, m, n, 0); };
    auto x = [&](int m, int n) { return bell_state(q.family, m, n, 1); };
    bool table = approx_equal(z(0, 0), x(0, 0)) && approx_equal(z(0, 1), x(1, 0)) && approx_equal(z(1, 0), x(0, 1)) &&
                 approx_equal(z(1, 1), -x(1, 1));
    note << "invariance and permutation exhaustive for N in {2,3,4,5}; " << bad
         << " violations; qubit table " << (table ? "matches" : "differs");
    return bad == 0 && table;
}

bool ac4(std::ostringstream &note) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    long branches = 0;
    for (int n : kDims) {
        Galois g(field(n));
        ExtensionContext ext(g.ctx);
        auto basis = mean_king_basis(g.family, ext, g.phases);
        auto r = run_protocol(basis, g.family, ProtocolMode::exhaustive, 0, 20050501);
        ok = ok && r.successes == r.trials && r.success_rate() == 1.0;
        branches += r.trials;
    }
    for (int n : {9, 15}) {
        Galois g(ArithmeticContext::modular(n));
        auto basis = mean_king_basis(g.family, g.phases);
        auto r = run_protocol(basis, g.family, ProtocolMode::exhaustive, 0, 20050501);
        ok = ok && r.successes == r.trials && r.success_rate() == 1.0;
        branches += r.trials;
    }
    Galois g4(field(4));
    ExtensionContext ext4(g4.ctx);
    auto mc = run_protocol(mean_king_basis(g4.family, ext4, g4.phases), g4.family, ProtocolMode::monte_carlo, 10000,
                           20050501);
    ok = ok && mc.trials == 10000 && mc.successes == 10000;
    double secs = seconds_since(t0);
    note << branches << " exhaustive branches; Monte-Carlo N=4 " << mc.successes << "/" << mc.trials << "; " << secs
         << " s";
    return ok && secs < 30.0;
}

bool ac5(std::ostringstream &note) {
    long compared = 0;
    long bad = 0;
    for (int n : kAllGalois) {
        Galois g(field(n));
        ExtensionContext ext(g.ctx);
        auto basis = mean_king_basis(g.family, ext, g.phases);
        for (int k = 0; k <= n; k++) {
            for (int a = 0; a < n; a++) {
                for (int b = 0; b < n; b++) {
                    compared++;
                    bad += infer_closed_form(ext, k, a, b) != basis.infer(k, a, b);
                }
            }
        }
    }
    for (int n = 3; n <= 21; n += 2) {
        Galois g(ArithmeticContext::modular(n));
        auto basis = mean_king_basis(g.family, g.phases);
        for (int k = 0; k <= n; k++) {
            for (int a = 0; a < n; a++) {
                for (int b = 0; b < n; b++) {
                    compared++;
                    bad += infer_closed_form_modular(g.ctx, k, a, b) != basis.infer(k, a, b);
                }
            }
        }
    }
    note << compared << " (k,i1,i2) entries over galois N<=16 and odd modular N<=21; " << bad << " disagreements";
    return bad == 0;
}

bool ac6(std::ostringstream &note) {
    long bad = 0;
    Galois q(ArithmeticContext::galois(2, 1));
    auto qset = wigner_operator_set(ExtensionContext(q.ctx), q.phases);
    Operator sy(2, 2);
    sy << 0, Complex(0, -1), Complex(0, 1), 0;
    Operator paulis = identity(2) + displacement_v(q.ctx, 1, 0) + displacement_v(q.ctx, 0, 1) + sy;
    bool qubit = approx_equal(2.0 * qset.at(0, 0), paulis, kTol) &&
                 approx_equal(qset.at(0, 0) + qset.at(0, 1), 2.0 * projector(basis_ket(2, 0)), kTol);
    for (int n : kAllGalois) {
        Galois g(field(n));
        auto set = wigner_operator_set(ExtensionContext(g.ctx), g.phases);
        for (int a = 0; a < n; a++) {
            Operator row = Operator::Zero(n, n);
            for (int b = 0; b < n; b++) {
                const Operator &w = set.at(a, b);
                bad += !is_hermitian(w, kTol) || !approx_equal(w.trace(), 1.0, kTol);
                row += w;
            }
            bad += !approx_equal(row, double(n) * projector(basis_ket(n, a)), kTol);
        }
    }
    long parity_bad = 0;
    for (int n : {3, 5, 7, 9}) {
        Galois g(field(n));
        auto set = wigner_operator_set(ExtensionContext(g.ctx), g.phases);
        auto par = parity_operators(g.ctx, g.phases);
        for (int a = 0; a < n; a++) {
            for (int b = 0; b < n; b++) {
                parity_bad += !approx_equal(par.at(a, b), set.at(a, b), kTol);
            }
        }
    }
    note << "qubit identities " << (qubit ? "exact" : "differ") << "; " << bad
         << " hermiticity/trace/marginal violations; " << parity_bad << " parity mismatches for N in {3,5,7,9}";
    return qubit && bad == 0 && parity_bad == 0;
}

bool ac7(std::ostringstream &note) {
    bool ok = true;
    for (int n : {3, 5, 9}) {
        Galois g(field(n));
        auto r = verify_symplectic_invariance(g.family, g.phases);
        ok = ok && r.ok() && r.checked == n * n * n;
        note << "N=" << n << " " << r.violations << "/" << r.checked << "  ";
    }
    for (int n : {2, 4, 8}) {
        Galois g(field(n));
        auto r = verify_symplectic_invariance(g.family, g.phases);
        ok = ok && r.violations > 0;
        note << "N=" << n << " " << r.violations << "/" << r.checked << "  ";
    }
    note << "(violations/checked)";
    return ok;
}

bool ac8(std::ostringstream &note) {
    Galois a(ArithmeticContext::modular(15));
    Galois b(ArithmeticContext::modular(15));
    auto ra = unbiasedness_report(a.family);
    auto rb = unbiasedness_report(b.family);
    bool same = ra.unbiased_pairs == rb.unbiased_pairs && ra.largest_unbiased_set == rb.largest_unbiased_set;
    bool eigen = verify_eigenbasis(a.family, a.phases).ok();
    note << "N=15: " << ra.unbiased_pairs << "/" << ra.total_pairs() << " unbiased pairs, largest unbiased set "
         << ra.largest_unbiased_set << ", bound p+1 = " << ra.conjecture_bound << "; deterministic "
         << (same ? "yes" : "no") << "; eigenbases " << (eigen ? "verified" : "broken");
    return same && eigen && ra.total_pairs() == 120 && ra.conjecture_bound == 4;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, Criterion>> criteria{
        {"AC1", ac1}, {"AC2", ac2}, {"AC3", ac3}, {"AC4", ac4},
        {"AC5", ac5}, {"AC6", ac6}, {"AC7", ac7}, {"AC8", ac8},
    };
    int failures = 0;
    for (const auto &[name, check] : criteria) {
        std::ostringstream note;
        bool ok = false;
        try {
            ok = check(note);
        } catch (const std::exception &e) {
            note << " exception: " << e.what();
        }
        failures += !ok;
        std::cout << (ok ? "PASS " : "FAIL ") << name << "  " << note.str() << std::endl;
    }
    return failures == 0 ? 0 : 1;
}
