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

#include <complex>
#include <span>
#include <string>
#include <vector>

namespace mubking {

using Complex = std::complex<double>;

/// Field elements (and ring elements in modular mode) are identified with
/// their integer labels 0..N-1. In galois mode label i is the polynomial
/// sum_k i_k x^k where i_k are the base-p digits of i.
using Element = int;

enum class ArithmeticMode { galois, modular };

std::string to_string(ArithmeticMode mode);
ArithmeticMode parse_mode(const std::string &text);

bool is_prime(int n);
int smallest_prime_factor(int n);

/// Coefficients low-to-high (leading 1 included) of the lexicographically
/// smallest monic irreducible polynomial of the given degree over GF(p).
/// Candidates are ordered by the base-p integer formed by their lower
/// coefficients.
std::vector<int> smallest_irreducible(int p, int degree);

/// Dimension-N arithmetic: either GF(p^m) in the polynomial basis, or the
/// ring Z/NZ. Immutable once built; every operation is a table lookup.
class ArithmeticContext {
   public:
    static ArithmeticContext galois(int p, int m);
    static ArithmeticContext modular(int n);

    ArithmeticMode mode() const {
        return mode_;
    }
    bool is_galois() const {
        return mode_ == ArithmeticMode::galois;
    }
    /// Characteristic p. In modular mode this is the smallest prime divisor
    /// of N and is only informative.
    int characteristic() const {
        return p_;
    }
    int degree() const {
        return m_;
    }
    int dim() const {
        return n_;
    }

    Element add(Element a, Element b) const {
        return add_[index(a, b)];
    }
    Element mul(Element a, Element b) const {
        return mul_[index(a, b)];
    }
    Element neg(Element a) const {
        return neg_[a];
    }
    Element sub(Element a, Element b) const {
        return add(a, neg(b));
    }
    /// Multiplicative inverse; throws std::domain_error when a has none.
    Element inv(Element a) const;
    Element div(Element a, Element b) const {
        return mul(a, inv(b));
    }
    bool invertible(Element a) const {
        return inv_[a] >= 0;
    }
    /// a ⊙ 2⁻¹. Requires odd characteristic (galois) or odd N (modular).
    Element half(Element g) const;

    /// Additive character: root^(g mod p) in galois mode, root^g in
    /// modular mode.
    Complex character(Element g) const;
    /// The primitive root the characters are built from: e^{2πi/p} or
    /// e^{2πi/N}.
    Complex root() const {
        return root_;
    }

    /// Irreducible modulus used for galois multiplication, low-to-high with
    /// the leading 1. Empty in modular mode.
    const std::vector<int> &modulus() const {
        return modulus_;
    }
    std::vector<int> digits(Element g) const;

    std::span<const Element> add_table() const {
        return add_;
    }
    std::span<const Element> mul_table() const {
        return mul_;
    }
    std::span<const Element> neg_table() const {
        return neg_;
    }
    /// -1 where no inverse exists.
    std::span<const Element> inv_table() const {
        return inv_;
    }

    void check_element(Element g) const;

   private:
    ArithmeticContext() = default;
    size_t index(Element a, Element b) const {
        return static_cast<size_t>(a) * n_ + b;
    }
    void fill_inverses();

    ArithmeticMode mode_ = ArithmeticMode::galois;
    int p_ = 0;
    int m_ = 0;
    int n_ = 0;
    std::vector<int> modulus_;
    std::vector<Element> add_;
    std::vector<Element> mul_;
    std::vector<Element> neg_;
    std::vector<Element> inv_;
    std::vector<Complex> characters_;
    Complex root_;
};

/// Entry point mirroring the CLI: galois mode takes (p, m), modular mode
/// takes (N, ignored).
ArithmeticContext build_context(ArithmeticMode mode, int p_or_n, int m = 1);

/// Element (a, b) of GF(N²) = a + b·t with t² = R ⊕ b_t·t over GF(N).
struct ExtElement {
    Element a = 0;
    Element b = 0;
    bool operator==(const ExtElement &) const = default;
};

/// Quadratic extension of a galois context.
class ExtensionContext {
   public:
    explicit ExtensionContext(ArithmeticContext base);

    const ArithmeticContext &base() const {
        return base_;
    }
    int dim() const {
        return base_.dim() * base_.dim();
    }
    /// t² = residue() ⊕ linear_coefficient() ⊙ t.
    Element residue() const {
        return residue_;
    }
    Element linear_coefficient() const {
        return linear_;
    }

    ExtElement add(ExtElement x, ExtElement y) const;
    ExtElement mul(ExtElement x, ExtElement y) const;
    /// character of the base field evaluated on the a-component. Under the
    /// label a + b·N this is the lowest base-p digit of the GF(N²) label.
    Complex character(ExtElement x) const;

    int label(ExtElement x) const {
        return x.a + x.b * base_.dim();
    }
    ExtElement from_label(int label) const {
        return {label % base_.dim(), label / base_.dim()};
    }

   private:
    ArithmeticContext base_;
    Element residue_ = 0;
    Element linear_ = 0;
};

ExtensionContext build_extension(const ArithmeticContext &ctx);

}  // namespace mubking
