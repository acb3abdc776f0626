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

#include "mubking/galois.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mubking {

namespace {

using Poly = std::vector<int>;

int ipow(int base, int exp) {
    int r = 1;
    for (int k = 0; k < exp; k++) {
        r *= base;
    }
    return r;
}

void trim(Poly &f) {
    while (!f.empty() && f.back() == 0) {
        f.pop_back();
    }
}

// Remainder of f modulo the monic polynomial g, coefficients mod p.
Poly poly_mod(Poly f, const Poly &g, int p) {
    trim(f);
    int dg = static_cast<int>(g.size()) - 1;
    while (static_cast<int>(f.size()) - 1 >= dg && !f.empty()) {
        int shift = static_cast<int>(f.size()) - 1 - dg;
        int lead = f.back();
        for (int k = 0; k <= dg; k++) {
            f[shift + k] = ((f[shift + k] - lead * g[k]) % p + p) % p;
        }
        trim(f);
    }
    return f;
}

Poly monic_from_index(int index, int p, int degree) {
    Poly f(degree + 1, 0);
    for (int k = 0; k < degree; k++) {
        f[k] = index % p;
        index /= p;
    }
    f[degree] = 1;
    return f;
}

bool irreducible(const Poly &f, int p) {
    int degree = static_cast<int>(f.size()) - 1;
    for (int d = 1; 2 * d <= degree; d++) {
        int count = ipow(p, d);
        for (int index = 0; index < count; index++) {
            if (poly_mod(f, monic_from_index(index, p, d), p).empty()) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace

std::string to_string(ArithmeticMode mode) {
    return mode == ArithmeticMode::galois ? "galois" : "modular";
}

ArithmeticMode parse_mode(const std::string &text) {
    if (text == "galois") {
        return ArithmeticMode::galois;
    }
    if (text == "modular") {
        return ArithmeticMode::modular;
    }
    throw std::invalid_argument("unknown arithmetic mode '" + text + "'");
}

bool is_prime(int n) {
    if (n < 2) {
        return false;
    }
    for (int d = 2; d * d <= n; d++) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

int smallest_prime_factor(int n) {
    if (n < 2) {
        throw std::invalid_argument("smallest_prime_factor requires n >= 2");
    }
    for (int d = 2; d * d <= n; d++) {
        if (n % d == 0) {
            return d;
        }
    }
    return n;
}

std::vector<int> smallest_irreducible(int p, int degree) {
    if (!is_prime(p)) {
        throw std::invalid_argument("characteristic " + std::to_string(p) + " is not prime");
    }
    if (degree < 1) {
        throw std::invalid_argument("degree must be >= 1");
    }
    int count = ipow(p, degree);
    for (int index = 0; index < count; index++) {
        Poly f = monic_from_index(index, p, degree);
        if (irreducible(f, p)) {
            return f;
        }
    }
    throw std::logic_error("no irreducible polynomial found");
}

ArithmeticContext ArithmeticContext::galois(int p, int m) {
    if (!is_prime(p)) {
        throw std::invalid_argument("galois mode requires a prime characteristic, got " + std::to_string(p));
    }
    if (m < 1) {
        throw std::invalid_argument("galois mode requires m >= 1, got " + std::to_string(m));
    }
    ArithmeticContext ctx;
    ctx.mode_ = ArithmeticMode::galois;
    ctx.p_ = p;
    ctx.m_ = m;
    ctx.n_ = ipow(p, m);
    ctx.modulus_ = smallest_irreducible(p, m);
    int n = ctx.n_;

    std::vector<Poly> polys;
    polys.reserve(n);
    for (int g = 0; g < n; g++) {
        polys.push_back(ctx.digits(g));
    }
    auto label_of = [&](const Poly &f) {
        int label = 0;
        for (int k = static_cast<int>(f.size()) - 1; k >= 0; k--) {
            label = label * p + f[k];
        }
        return label;
    };

    ctx.add_.assign(static_cast<size_t>(n) * n, 0);
    ctx.mul_.assign(static_cast<size_t>(n) * n, 0);
    for (int a = 0; a < n; a++) {
        for (int b = 0; b < n; b++) {
            Poly sum(m, 0);
            Poly product(2 * m, 0);
            for (int k = 0; k < m; k++) {
                sum[k] = (polys[a][k] + polys[b][k]) % p;
                for (int j = 0; j < m; j++) {
                    product[k + j] = (product[k + j] + polys[a][k] * polys[b][j]) % p;
                }
            }
            ctx.add_[ctx.index(a, b)] = label_of(sum);
            ctx.mul_[ctx.index(a, b)] = label_of(poly_mod(product, ctx.modulus_, p));
        }
    }
    ctx.neg_.assign(n, 0);
    for (int a = 0; a < n; a++) {
        Poly f(m, 0);
        for (int k = 0; k < m; k++) {
            f[k] = (p - polys[a][k]) % p;
        }
        ctx.neg_[a] = label_of(f);
    }
    ctx.fill_inverses();

    ctx.root_ = std::polar(1.0, 2 * std::numbers::pi / p);
    ctx.characters_.resize(n);
    for (int g = 0; g < n; g++) {
        ctx.characters_[g] = std::polar(1.0, 2 * std::numbers::pi * (g % p) / p);
    }
    return ctx;
}

ArithmeticContext ArithmeticContext::modular(int n) {
    if (n < 2) {
        throw std::invalid_argument("modular mode requires N >= 2, got " + std::to_string(n));
    }
    ArithmeticContext ctx;
    ctx.mode_ = ArithmeticMode::modular;
    ctx.p_ = smallest_prime_factor(n);
    ctx.m_ = 1;
    ctx.n_ = n;
    ctx.add_.assign(static_cast<size_t>(n) * n, 0);
    ctx.mul_.assign(static_cast<size_t>(n) * n, 0);
    for (int a = 0; a < n; a++) {
        for (int b = 0; b < n; b++) {
            ctx.add_[ctx.index(a, b)] = (a + b) % n;
            ctx.mul_[ctx.index(a, b)] = (a * b) % n;
        }
    }
    ctx.neg_.assign(n, 0);
    for (int a = 0; a < n; a++) {
        ctx.neg_[a] = (n - a) % n;
    }
    ctx.fill_inverses();

    ctx.root_ = std::polar(1.0, 2 * std::numbers::pi / n);
    ctx.characters_.resize(n);
    for (int g = 0; g < n; g++) {
        ctx.characters_[g] = std::polar(1.0, 2 * std::numbers::pi * g / n);
    }
    return ctx;
}

void ArithmeticContext::fill_inverses() {
    inv_.assign(n_, -1);
    for (int a = 1; a < n_; a++) {
        for (int b = 1; b < n_; b++) {
            if (mul(a, b) == 1) {
                inv_[a] = b;
                break;
            }
        }
    }
}

void ArithmeticContext::check_element(Element g) const {
    if (g < 0 || g >= n_) {
        throw std::out_of_range(
            "element " + std::to_string(g) + " out of range for dimension " + std::to_string(n_));
    }
}

Element ArithmeticContext::inv(Element a) const {
    check_element(a);
    if (inv_[a] < 0) {
        throw std::domain_error("element " + std::to_string(a) + " has no multiplicative inverse");
    }
    return inv_[a];
}

Element ArithmeticContext::half(Element g) const {
    check_element(g);
    Element two = add(1 % n_, 1 % n_);
    if (two == 0 || !invertible(two)) {
        throw std::domain_error("division by 2 is undefined in dimension " + std::to_string(n_));
    }
    return mul(g, inv_[two]);
}

Complex ArithmeticContext::character(Element g) const {
    check_element(g);
    return characters_[g];
}

std::vector<int> ArithmeticContext::digits(Element g) const {
    std::vector<int> d(m_, 0);
    if (mode_ == ArithmeticMode::modular) {
        d[0] = g;
        return d;
    }
    for (int k = 0; k < m_; k++) {
        d[k] = g % p_;
        g /= p_;
    }
    return d;
}

ArithmeticContext build_context(ArithmeticMode mode, int p_or_n, int m) {
    if (mode == ArithmeticMode::galois) {
        return ArithmeticContext::galois(p_or_n, m);
    }
    return ArithmeticContext::modular(p_or_n);
}

ExtensionContext::ExtensionContext(ArithmeticContext base) : base_(std::move(base)) {
    if (!base_.is_galois()) {
        throw std::invalid_argument("quadratic extension requires a galois context");
    }
    int n = base_.dim();
    // Smallest label a + b·N such that t² - b·t - a has no root.
    for (int label = 0; label < n * n; label++) {
        Element a = label % n;
        Element b = label / n;
        bool has_root = false;
        for (Element x = 0; x < n && !has_root; x++) {
            has_root = base_.mul(x, x) == base_.add(a, base_.mul(b, x));
        }
        if (!has_root) {
            residue_ = a;
            linear_ = b;
            return;
        }
    }
    throw std::logic_error("no irreducible quadratic found");
}

ExtElement ExtensionContext::add(ExtElement x, ExtElement y) const {
    return {base_.add(x.a, y.a), base_.add(x.b, y.b)};
}

ExtElement ExtensionContext::mul(ExtElement x, ExtElement y) const {
    const auto &f = base_;
    Element bb = f.mul(x.b, y.b);
    Element a = f.add(f.mul(x.a, y.a), f.mul(bb, residue_));
    Element b = f.add(f.add(f.mul(x.a, y.b), f.mul(x.b, y.a)), f.mul(bb, linear_));
    return {a, b};
}

Complex ExtensionContext::character(ExtElement x) const {
    base_.check_element(x.b);
    return base_.character(x.a);
}

ExtensionContext build_extension(const ArithmeticContext &ctx) {
    return ExtensionContext(ctx);
}

}  // namespace mubking
