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

#include "mubking/linalg.hpp"

#include <cmath>
#include <cstdlib>

namespace mubking {

double default_tolerance() {
    if (const char *env = std::getenv("MUBKING_TOL")) {
        char *end = nullptr;
        double v = std::strtod(env, &end);
        if (end != env && v > 0) {
            return v;
        }
    }
    return kDefaultTolerance;
}

Ket basis_ket(int dim, int index) {
    if (index < 0 || index >= dim) {
        throw std::out_of_range("basis index out of range");
    }
    Ket k = Ket::Zero(dim);
    k(index) = 1.0;
    return k;
}

Operator identity(int dim) {
    return Operator::Identity(dim, dim);
}

Operator projector(const Ket &ket) {
    return ket * ket.adjoint();
}

Ket tensor(const Ket &a, const Ket &b) {
    Ket out(a.size() * b.size());
    for (Eigen::Index i = 0; i < a.size(); i++) {
        out.segment(i * b.size(), b.size()) = a(i) * b;
    }
    return out;
}

Operator tensor(const Operator &a, const Operator &b) {
    Operator out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); i++) {
        for (Eigen::Index j = 0; j < a.cols(); j++) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

Ket apply_tensor(const Operator &a, const Operator &b, const Ket &ket) {
    if (a.cols() * b.cols() != ket.size()) {
        throw std::invalid_argument("apply_tensor: dimension mismatch");
    }
    // Row-major reshape: M(i, j) = ket(i·dim_b + j); (a⊗b)ket ↔ a·M·bᵀ.
    Eigen::Map<const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> m(
        ket.data(), a.cols(), b.cols());
    Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> r = a * m * b.transpose();
    return Eigen::Map<const Ket>(r.data(), r.size());
}

int exact_sqrt(int n) {
    int r = static_cast<int>(std::lround(std::sqrt(static_cast<double>(n))));
    if (r * r != n) {
        throw std::invalid_argument("dimension " + std::to_string(n) + " is not a perfect square");
    }
    return r;
}

Operator partial_trace(const Operator &op, Subsystem traced) {
    if (op.rows() != op.cols()) {
        throw std::invalid_argument("partial_trace requires a square operator");
    }
    int n = exact_sqrt(static_cast<int>(op.rows()));
    Operator out = Operator::Zero(n, n);
    for (int a = 0; a < n; a++) {
        for (int b = 0; b < n; b++) {
            Complex s = 0;
            for (int k = 0; k < n; k++) {
                if (traced == Subsystem::first) {
                    s += op(k * n + a, k * n + b);
                } else {
                    s += op(a * n + k, b * n + k);
                }
            }
            out(a, b) = s;
        }
    }
    return out;
}

Complex hs_inner(const Operator &a, const Operator &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("hs_inner: dimension mismatch");
    }
    return a.conjugate().cwiseProduct(b).sum();
}

double max_abs_diff(const Eigen::Ref<const Eigen::MatrixXcd> &a, const Eigen::Ref<const Eigen::MatrixXcd> &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("max_abs_diff: shape mismatch");
    }
    if (a.size() == 0) {
        return 0;
    }
    return (a - b).cwiseAbs().maxCoeff();
}

bool approx_equal(
    const Eigen::Ref<const Eigen::MatrixXcd> &a, const Eigen::Ref<const Eigen::MatrixXcd> &b, double tol) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        return false;
    }
    return max_abs_diff(a, b) <= tol;
}

bool approx_equal(Complex a, Complex b, double tol) {
    return std::abs(a - b) <= tol;
}

bool same_ray(const Ket &a, const Ket &b, double tol) {
    if (a.size() != b.size()) {
        return false;
    }
    Complex overlap = b.dot(a);  // ⟨b|a⟩
    if (std::abs(overlap) < 0.5) {
        return false;
    }
    Complex phase = overlap / std::abs(overlap);
    return approx_equal(a, phase * b, tol);
}

bool proportional(const Operator &a, const Operator &b, double tol) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        return false;
    }
    double nb = b.squaredNorm();
    if (nb == 0) {
        return a.cwiseAbs().maxCoeff() <= tol;
    }
    Complex lambda = hs_inner(b, a) / nb;
    return approx_equal(a, lambda * b, tol);
}

bool is_unitary(const Operator &op, double tol) {
    return op.rows() == op.cols() && approx_equal(op.adjoint() * op, identity(static_cast<int>(op.rows())), tol);
}

bool is_hermitian(const Operator &op, double tol) {
    return op.rows() == op.cols() && approx_equal(op, op.adjoint(), tol);
}

}  // namespace mubking
