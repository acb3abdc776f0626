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

#include "mubking/suite.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <random>
#include <sstream>

#include "mubking/bell.hpp"
#include "mubking/meanking.hpp"
#include "mubking/mub.hpp"
#include "mubking/pauli.hpp"
#include "mubking/wigner.hpp"

namespace mubking {

namespace {

constexpr int kExhaustiveLimit = 5;
constexpr long kSamples = 10000;

struct Setup {
    const SuiteConfig &config;
    ArithmeticContext ctx;
    PhaseSystem phases;
    MubFamily family;
    std::optional<ExtensionContext> ext;
};

// Calls visit(tuple) on every tuple of `arity` elements when N is small,
// otherwise on kSamples seeded random tuples.
void for_tuples(int n, int arity, std::uint64_t seed, const std::function<void(const std::vector<Element> &)> &visit) {
    std::vector<Element> t(arity, 0);
    if (n <= kExhaustiveLimit) {
        long total = 1;
        for (int i = 0; i < arity; i++) {
            total *= n;
        }
        for (long c = 0; c < total; c++) {
            long r = c;
            for (int i = 0; i < arity; i++) {
                t[i] = static_cast<Element>(r % n);
                r /= n;
            }
            visit(t);
        }
        return;
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Element> pick(0, n - 1);
    for (long c = 0; c < kSamples; c++) {
        for (auto &x : t) {
            x = pick(rng);
        }
        visit(t);
    }
}

Operator random_operator(int n, std::uint64_t seed, bool hermitian) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g;
    Operator a(n, n);
    for (int r = 0; r < n; r++) {
        for (int c = 0; c < n; c++) {
            a(r, c) = Complex(g(rng), g(rng));
        }
    }
    if (!hermitian) {
        return a;
    }
    Operator rho = a * a.adjoint();
    return rho / rho.trace().real();
}

std::string count_detail(long bad, long checked) {
    std::ostringstream out;
    out << bad << " violations in " << checked << " checks";
    return out.str();
}

class Runner {
   public:
    explicit Runner(SuiteReport &report) : report_(report) {
    }

    // fn returns (passed, detail); an exception counts as a failure.
    void check(const std::string &name, const std::function<std::pair<bool, std::string>()> &fn, bool asserted = true) {
        CheckResult r;
        r.name = name;
        r.asserted = asserted;
        try {
            auto [ok, detail] = fn();
            r.passed = ok;
            r.detail = detail;
        } catch (const std::exception &e) {
            r.passed = false;
            r.detail = std::string("exception: ") + e.what();
        }
        report_.checks.push_back(std::move(r));
    }

   private:
    SuiteReport &report_;
};

void field_checks(const Setup &s, Runner &run) {
    const auto &f = s.ctx;
    int n = f.dim();
    run.check("field.axioms", [&] {
        long bad = 0, checked = 0;
        for (Element a = 0; a < n; a++) {
            bad += f.add(a, 0) != a || f.mul(a, 1) != a || f.add(a, f.neg(a)) != 0;
            checked++;
            for (Element b = 0; b < n; b++) {
                bad += f.add(a, b) != f.add(b, a) || f.mul(a, b) != f.mul(b, a);
                for (Element c = 0; c < n; c++) {
                    checked++;
                    bad += f.add(f.add(a, b), c) != f.add(a, f.add(b, c));
                    bad += f.mul(f.mul(a, b), c) != f.mul(a, f.mul(b, c));
                    bad += f.mul(a, f.add(b, c)) != f.add(f.mul(a, b), f.mul(a, c));
                }
            }
            if (f.is_galois() && a != 0) {
                bad += f.mul(a, f.inv(a)) != 1;
            }
        }
        return std::pair{bad == 0, count_detail(bad, checked)};
    });
    run.check("field.character_homomorphism", [&] {
        long bad = 0;
        for (Element a = 0; a < n; a++) {
            for (Element b = 0; b < n; b++) {
                bad += !approx_equal(f.character(a) * f.character(b), f.character(f.add(a, b)), s.config.tol);
            }
        }
        return std::pair{bad == 0, count_detail(bad, static_cast<long>(n) * n)};
    });
    run.check("field.character_orthogonality", [&] {
        long bad = 0;
        for (Element i = 0; i < n; i++) {
            Complex sum = 0;
            for (Element j = 0; j < n; j++) {
                sum += f.character(f.mul(j, i));
            }
            bad += !approx_equal(sum, Complex(i == 0 ? n : 0), s.config.tol);
        }
        return std::pair{bad == 0, count_detail(bad, n)};
    });
    if (!s.ext) {
        return;
    }
    const auto &ext = *s.ext;
    run.check("field.extension_axioms", [&] {
        int n2 = ext.dim();
        long bad = 0, checked = 0;
        auto el = [&](Element label) { return ext.from_label(label); };
        for_tuples(n2, 3, s.config.seed, [&](const std::vector<Element> &t) {
            ExtElement a = el(t[0]), b = el(t[1]), c = el(t[2]);
            checked++;
            bad += !(ext.mul(a, b) == ext.mul(b, a));
            bad += !(ext.mul(ext.mul(a, b), c) == ext.mul(a, ext.mul(b, c)));
            bad += !(ext.mul(a, ext.add(b, c)) == ext.add(ext.mul(a, b), ext.mul(a, c)));
        });
        // Every nonzero element has an inverse.
        for (int x = 1; x < n2; x++) {
            bool found = false;
            for (int y = 1; y < n2 && !found; y++) {
                found = ext.mul(el(x), el(y)) == ExtElement{1, 0};
            }
            bad += !found;
        }
        std::ostringstream d;
        d << count_detail(bad, checked + n2 - 1) << "; t^2 = " << ext.residue() << " + " << ext.linear_coefficient()
          << "t";
        return std::pair{bad == 0, d.str()};
    });
    run.check("field.extension_character", [&] {
        Complex sum = 0;
        bool nontrivial = false;
        for (int x = 0; x < ext.dim(); x++) {
            Complex c = ext.character(ext.from_label(x));
            sum += c;
            nontrivial = nontrivial || !approx_equal(c, 1.0, s.config.tol);
        }
        return std::pair{nontrivial && std::abs(sum) <= s.config.tol, "sum over the extension = " + std::to_string(std::abs(sum))};
    });
}

void pauli_checks(const Setup &s, Runner &run) {
    const auto &f = s.ctx;
    int n = f.dim();
    double tol = s.config.tol;
    std::vector<Operator> v;
    v.reserve(static_cast<size_t>(n) * n);
    for (Element i = 0; i < n; i++) {
        for (Element j = 0; j < n; j++) {
            v.push_back(displacement_v(f, i, j));
        }
    }
    auto at = [&](Element i, Element j) -> const Operator & { return v[static_cast<size_t>(i) * n + j]; };
    run.check("pauli.composition_law", [&] {
        long bad = 0, checked = 0;
        for_tuples(n, 4, s.config.seed, [&](const std::vector<Element> &t) {
            checked++;
            Operator lhs = at(t[0], t[1]) * at(t[2], t[3]);
            Operator rhs = f.character(f.neg(f.mul(t[0], t[3]))) * at(f.add(t[0], t[2]), f.add(t[1], t[3]));
            bad += !approx_equal(lhs, rhs, tol);
        });
        return std::pair{bad == 0, count_detail(bad, checked)};
    });
    run.check("pauli.adjoint", [&] {
        long bad = 0;
        for (Element i = 0; i < n; i++) {
            for (Element j = 0; j < n; j++) {
                Operator rhs = f.character(f.neg(f.mul(i, j))) * at(f.neg(i), f.neg(j));
                bad += !approx_equal(at(i, j).adjoint(), rhs, tol);
            }
        }
        return std::pair{bad == 0, count_detail(bad, static_cast<long>(n) * n)};
    });
    run.check("pauli.hs_orthogonality", [&] {
        long bad = 0;
        for (size_t a = 0; a < v.size(); a++) {
            for (size_t b = 0; b < v.size(); b++) {
                bad += !approx_equal(hs_inner(v[a], v[b]), Complex(a == b ? n : 0), tol);
            }
        }
        return std::pair{bad == 0, count_detail(bad, static_cast<long>(v.size() * v.size()))};
    });
    run.check("pauli.class_commutativity", [&] {
        long bad = 0;
        for (int cls = 0; cls <= n; cls++) {
            for (Element l = 0; l < n; l++) {
                const Operator &x = cls == 0 ? at(0, l) : at(l, f.mul(cls - 1, l));
                for (Element m = 0; m < n; m++) {
                    const Operator &y = cls == 0 ? at(0, m) : at(m, f.mul(cls - 1, m));
                    bad += !approx_equal(x * y, y * x, tol);
                }
            }
        }
        return std::pair{bad == 0, count_detail(bad, static_cast<long>(n + 1) * n * n)};
    });
    run.check("pauli.class_group_law", [&] {
        long bad = 0;
        for (int cls = 0; cls <= n; cls++) {
            std::vector<Operator> u;
            for (Element l = 0; l < n; l++) {
                u.push_back(displacement_u(f, s.phases, cls, l));
            }
            for (Element l = 0; l < n; l++) {
                for (Element m = 0; m < n; m++) {
                    bad += !approx_equal(u[l] * u[m], u[f.add(l, m)], tol);
                }
            }
        }
        return std::pair{bad == 0, count_detail(bad, static_cast<long>(n + 1) * n * n)};
    });
    run.check("pauli.phase_cocycle", [&] {
        long bad = 0;
        for (int cls = 1; cls <= n; cls++) {
            Element c = cls - 1;
            for (Element a = 0; a < n; a++) {
                for (Element b = 0; b < n; b++) {
                    Complex rhs = s.phases(cls, a) * s.phases(cls, b) * f.character(f.mul(c, f.mul(a, b)));
                    bad += !approx_equal(s.phases(cls, f.add(a, b)), rhs, tol);
                }
            }
        }
        return std::pair{bad == 0, count_detail(bad, static_cast<long>(n) * n * n)};
    });
    if (f.is_galois() && f.characteristic() == 2) {
        run.check(
            "pauli.literal_even_phases",
            [&] {
                auto cmp = compare_literal_even_phases(f, s.phases, tol);
                std::ostringstream d;
                d << cmp.mismatches << " of " << cmp.entries << " entries differ from the built phases; "
                  << cmp.cocycle_violations << " cocycle violations";
                return std::pair{cmp.mismatches == 0, d.str()};
            },
            false);
    }
}

void mub_checks(const Setup &s, Runner &run) {
    double tol = s.config.tol;
    auto report = unbiasedness_report(s.family, tol);
    run.check("mub.orthonormal", [&] {
        return std::pair{
            report.orthonormal_bases == s.family.num_bases(),
            std::to_string(report.orthonormal_bases) + " of " + std::to_string(s.family.num_bases()) + " bases"};
    });
    std::ostringstream d;
    d << report.unbiased_pairs << " of " << report.total_pairs() << " pairs unbiased; largest unbiased set "
      << report.largest_unbiased_set;
    if (s.ctx.is_galois()) {
        run.check("mub.unbiased", [&] { return std::pair{report.all_unbiased(), d.str()}; });
    } else {
        d << "; bound p+1 = " << report.conjecture_bound;
        run.check(
            "mub.unbiased_count",
            [&] { return std::pair{report.largest_unbiased_set <= report.conjecture_bound, d.str()}; },
            false);
    }
    run.check("mub.eigenvalues", [&] {
        auto r = verify_eigenbasis(s.family, s.phases, tol);
        return std::pair{r.ok(), count_detail(static_cast<long>(r.violations.size()), r.checked)};
    });
    run.check("mub.joint_eigenbasis", [&] {
        auto r = verify_joint_eigenbasis(s.family, s.config.seed, std::max(tol, 1e-8));
        return std::pair{
            r.ok(), std::to_string(r.matching_classes) + " of " + std::to_string(r.classes) + " classes match"};
    });
}

void bell_checks(const Setup &s, Runner &run) {
    const auto &f = s.ctx;
    int n = f.dim();
    double tol = s.config.tol;
    run.check("bell.orthonormal", [&] {
        long bad = 0;
        for (int k = 0; k <= n; k++) {
            bad += !is_unitary(bell_matrix(s.family, k), tol);
        }
        return std::pair{bad == 0, count_detail(bad, n + 1)};
    });
    run.check("bell.maximally_entangled", [&] {
        long bad = 0;
        Operator mixed = identity(n) / static_cast<double>(n);
        Operator bells = bell_matrix(s.family, 0);
        for (int c = 0; c < n * n; c++) {
            Operator rho = projector(bells.col(c));
            bad += !approx_equal(partial_trace(rho, Subsystem::first), mixed, tol);
            bad += !approx_equal(partial_trace(rho, Subsystem::second), mixed, tol);
        }
        return std::pair{bad == 0, count_detail(bad, static_cast<long>(n) * n)};
    });
    run.check("bell.transform", [&] {
        long bad = 0, checked = 0;
        Operator reference = bell_matrix(s.family, 0);
        for (int k = 1; k <= n; k++) {
            Operator bells = bell_matrix(s.family, k);
            std::vector<bool> hit(static_cast<size_t>(n) * n, false);
            for (Element m = 0; m < n; m++) {
                for (Element j = 0; j < n; j++) {
                    checked++;
                    BellImage img = bell_transform(f, s.phases, k, m, j);
                    Ket lhs = bells.col(m * n + j);
                    Ket rhs = img.phase * reference.col(img.m * n + img.n);
                    bad += !approx_equal(lhs, rhs, tol);
                    bad += hit[img.m * n + img.n];
                    hit[img.m * n + img.n] = true;
                }
            }
        }
        return std::pair{bad == 0, count_detail(bad, checked)};
    });
    run.check("bell.symplectic_form", [&] {
        long bad = 0;
        int n2 = n * n;
        for (int k = 1; k <= n; k++) {
            std::vector<BellImage> img;
            for (int p = 0; p < n2; p++) {
                img.push_back(bell_transform(f, s.phases, k, p / n, p % n));
            }
            for (int p = 0; p < n2; p++) {
                for (int q = 0; q < n2; q++) {
                    bad += symplectic_form(f, p / n, p % n, q / n, q % n) !=
                           symplectic_form(f, img[p].m, img[p].n, img[q].m, img[q].n);
                }
            }
        }
        return std::pair{bad == 0, count_detail(bad, static_cast<long>(n) * n2 * n2)};
    });
    run.check("bell.pauli_conjugation", [&] {
        long checked = 0;
        for_tuples(n, 4, s.config.seed + 1, [&](const std::vector<Element> &t) {
            checked++;
            pauli_conjugation_check(f, t[0], t[1], t[2], t[3], tol);
        });
        return std::pair{true, count_detail(0, checked)};
    });
}

void king_checks(const Setup &s, Runner &run) {
    const auto &f = s.ctx;
    int n = f.dim();
    double tol = s.config.tol;
    std::optional<MeanKingBasis> basis;
    run.check("king.basis", [&] {
        basis = s.ext ? mean_king_basis(s.family, *s.ext, s.phases) : mean_king_basis(s.family, s.phases);
        return std::pair{true, std::string("exactly one compatible outcome per (k, i1, i2)")};
    });
    if (!basis) {
        return;
    }
    run.check("king.orthonormal", [&] { return std::pair{is_unitary(basis->states(), tol), std::string()}; });
    run.check("king.closed_form", [&] {
        long bad = 0;
        for (int k = 0; k <= n; k++) {
            for (Element a = 0; a < n; a++) {
                for (Element b = 0; b < n; b++) {
                    Element closed = s.ext ? infer_closed_form(*s.ext, k, a, b) : infer_closed_form_modular(f, k, a, b);
                    bad += closed != basis->infer(k, a, b);
                }
            }
        }
        return std::pair{bad == 0, count_detail(bad, static_cast<long>(n + 1) * n * n)};
    });
    run.check("king.uniform_outcomes", [&] {
        long bad = 0;
        for (int k = 0; k <= n; k++) {
            for (Element l = 0; l < n; l++) {
                auto probs = outcome_distribution(*basis, s.family, k, l);
                for (Element a = 0; a < n; a++) {
                    for (Element b = 0; b < n; b++) {
                        double expected = basis->infer(k, a, b) == l ? 1.0 / n : 0.0;
                        bad += std::abs(probs[a * n + b] - expected) > tol;
                    }
                }
            }
        }
        return std::pair{bad == 0, count_detail(bad, static_cast<long>(n + 1) * n * n * n)};
    });
    run.check("king.bell_support", [&] {
        long bad = king_bell_support_violations(s.family, tol);
        return std::pair{bad == 0, count_detail(bad, static_cast<long>(n + 1) * n * n * n)};
    });
    run.check("king.protocol_exhaustive", [&] {
        auto r = run_protocol(*basis, s.family, ProtocolMode::exhaustive, 0, s.config.seed, tol);
        return std::pair{r.successes == r.trials, std::to_string(r.successes) + " of " + std::to_string(r.trials) + " branches"};
    });
    run.check("king.protocol_monte_carlo", [&] {
        auto r = run_protocol(*basis, s.family, ProtocolMode::monte_carlo, s.config.trials, s.config.seed, tol);
        return std::pair{r.successes == r.trials, std::to_string(r.successes) + " of " + std::to_string(r.trials) + " trials"};
    });
    bool odd = f.characteristic() % 2 == 1;
    run.check(
        "king.symplectic_invariance",
        [&] {
            auto r = verify_symplectic_invariance(s.family, s.phases, tol);
            std::ostringstream d;
            d << r.violations << " of " << r.checked << " transported states differ; " << r.form_violations
              << " form violations";
            return std::pair{r.ok(), d.str()};
        },
        odd);
    if (s.ext) {
        run.check(
            "king.aravind_constraints",
            [&] {
                auto r = aravind_cross_check(*basis, s.family, *s.ext);
                return std::pair{
                    r.agreeing == r.states, std::to_string(r.agreeing) + " of " + std::to_string(r.states) + " states agree"};
            },
            false);
    }
}

void wigner_checks(const Setup &s, Runner &run) {
    if (!s.ext) {
        return;
    }
    const auto &f = s.ctx;
    int n = f.dim();
    double tol = s.config.tol;
    std::optional<WignerOperatorSet> set;
    run.check("wigner.turnover", [&] {
        set = wigner_operator_set(*s.ext, s.phases, tol);
        return std::pair{true, std::string("point operators equal the turned-over Mean King states")};
    });
    if (!set) {
        return;
    }
    run.check("wigner.hermitian_trace_one", [&] {
        long bad = 0;
        for (const auto &w : set->ops) {
            bad += !is_hermitian(w, tol) || !approx_equal(w.trace(), 1.0, tol);
        }
        return std::pair{bad == 0, count_detail(bad, static_cast<long>(set->ops.size()))};
    });
    run.check("wigner.hs_orthogonality", [&] {
        long bad = 0;
        for (size_t a = 0; a < set->ops.size(); a++) {
            for (size_t b = 0; b < set->ops.size(); b++) {
                bad += !approx_equal(hs_inner(set->ops[a], set->ops[b]), Complex(a == b ? n : 0), tol);
            }
        }
        return std::pair{bad == 0, count_detail(bad, static_cast<long>(set->ops.size() * set->ops.size()))};
    });
    run.check("wigner.striation_marginals", [&] {
        long bad = 0;
        for (int k = 0; k <= n; k++) {
            for (Element line = 0; line < n; line++) {
                Operator expected = static_cast<double>(n) * projector(s.family.state(k, line));
                bad += !approx_equal(marginal(*set, s.family, k, line), expected, tol);
            }
        }
        return std::pair{bad == 0, count_detail(bad, static_cast<long>(n + 1) * n)};
    });
    run.check("wigner.weyl_reconstruction", [&] {
        Operator o = random_operator(n, s.config.seed, false);
        return std::pair{approx_equal(weyl_reconstruct(f, s.phases, o), o, 1e3 * tol), std::string()};
    });
    run.check("wigner.fourier_relation", [&] {
        Operator rho = random_operator(n, s.config.seed + 2, true);
        std::vector<Complex> weyl(static_cast<size_t>(n) * n);
        for (Element m = 0; m < n; m++) {
            for (Element j = 0; j < n; j++) {
                weyl[m * n + j] = weyl_function(f, s.phases, rho, m, j);
            }
        }
        long bad = 0;
        for (Element a = 0; a < n; a++) {
            for (Element b = 0; b < n; b++) {
                Complex sum = 0;
                for (Element m = 0; m < n; m++) {
                    for (Element j = 0; j < n; j++) {
                        sum += f.character(f.sub(f.mul(b, m), f.mul(a, j))) * weyl[m * n + j];
                    }
                }
                bad += !approx_equal(sum / static_cast<double>(n), wigner_function(*set, rho, a, b, tol), 1e3 * tol);
            }
        }
        return std::pair{bad == 0, count_detail(bad, static_cast<long>(n) * n)};
    });
    if (n == 2) {
        run.check("wigner.qubit_identities", [&] {
            Operator sum = Operator::Zero(2, 2);
            for (Element m = 0; m < 2; m++) {
                for (Element j = 0; j < 2; j++) {
                    sum += displacement_v(f, m, j);
                }
            }
            Operator sy(2, 2);
            sy << 0, Complex(0, -1), Complex(0, 1), 0;
            // σ00 + σ10 + σ01 + σ11 with σ11 = σ_Y.
            Operator paulis = displacement_v(f, 0, 0) + displacement_v(f, 1, 0) + displacement_v(f, 0, 1) + sy;
            bool ok = approx_equal(2.0 * set->at(0, 0), paulis, tol);
            ok = ok && approx_equal(set->at(0, 0) + set->at(0, 1), 2.0 * projector(basis_ket(2, 0)), tol);
            return std::pair{ok, std::string()};
        });
    }
    if (parity_is_trivial(f)) {
        run.check(
            "wigner.parity_degenerate",
            [&] { return std::pair{true, std::string("k -> -k is the identity in characteristic 2")}; }, false);
        run.check("wigner.distinct_from_weyl", [&] {
            int hits = wigner_weyl_coincidences(*set, s.phases, tol);
            return std::pair{hits == 0, std::to_string(hits) + " point operators proportional to a displacement"};
        });
    } else {
        run.check("wigner.displaced_parity", [&] {
            auto parity = parity_operators(f, s.phases, tol);
            long bad = 0;
            for (Element a = 0; a < n; a++) {
                for (Element b = 0; b < n; b++) {
                    bad += !approx_equal(parity.at(a, b), set->at(a, b), tol);
                }
            }
            return std::pair{bad == 0, count_detail(bad, static_cast<long>(n) * n)};
        });
    }
}

}  // namespace

bool SuiteReport::ok() const {
    return first_failure() == nullptr;
}

const CheckResult *SuiteReport::first_failure() const {
    for (const auto &c : checks) {
        if (c.asserted && !c.passed) {
            return &c;
        }
    }
    return nullptr;
}

std::vector<std::string> suite_names() {
    return {"all", "field", "pauli", "mub", "bell", "king", "wigner"};
}

ArithmeticContext context_for_dim(ArithmeticMode mode, int dim) {
    if (mode == ArithmeticMode::modular) {
        if (dim < 2) {
            throw std::invalid_argument("modular dimension must be at least 2");
        }
        return ArithmeticContext::modular(dim);
    }
    if (dim < 2) {
        throw std::invalid_argument("dimension must be a prime power");
    }
    int p = smallest_prime_factor(dim);
    int m = 0;
    int rest = dim;
    while (rest % p == 0) {
        rest /= p;
        m++;
    }
    if (rest != 1) {
        throw std::invalid_argument(std::to_string(dim) + " is not a prime power");
    }
    return ArithmeticContext::galois(p, m);
}

SuiteReport run_suite(const SuiteConfig &config) {
    auto names = suite_names();
    if (std::find(names.begin(), names.end(), config.suite) == names.end()) {
        throw std::invalid_argument("unknown suite: " + config.suite);
    }
    ArithmeticContext ctx = context_for_dim(config.mode, config.dim);
    PhaseSystem phases = build_phase_system(ctx);
    MubFamily family = mub_family(ctx, phases);
    std::optional<ExtensionContext> ext;
    if (ctx.is_galois()) {
        ext.emplace(ctx);
    }
    Setup setup{config, ctx, phases, family, ext};
    SuiteReport report;
    Runner run(report);
    auto wants = [&](const std::string &name) { return config.suite == "all" || config.suite == name; };
    if (wants("field")) {
        field_checks(setup, run);
    }
    if (wants("pauli")) {
        pauli_checks(setup, run);
    }
    if (wants("mub")) {
        mub_checks(setup, run);
    }
    if (wants("bell")) {
        bell_checks(setup, run);
    }
    if (wants("king")) {
        king_checks(setup, run);
    }
    if (wants("wigner")) {
        wigner_checks(setup, run);
    }
    return report;
}

}  // namespace mubking
