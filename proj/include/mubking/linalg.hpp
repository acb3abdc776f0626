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

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>

namespace mubking {

using Complex = std::complex<double>;
using Ket = Eigen::VectorXcd;
using Operator = Eigen::MatrixXcd;

inline constexpr double kDefaultTolerance = 1e-9;

/// kDefaultTolerance unless MUBKING_TOL holds a positive number.
double default_tolerance();

/// Raised when a checked identity does not hold. The message names the
/// offending indices.
class VerificationError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

Ket basis_ket(int dim, int index);
Operator identity(int dim);
Operator projector(const Ket &ket);

// Tensor products use the row-major convention: |i⟩⊗|j⟩ has index i·dim_b + j.
Ket tensor(const Ket &a, const Ket &b);
Operator tensor(const Operator &a, const Operator &b);
/// (a ⊗ b)·ket without materialising the N²×N² matrix.
Ket apply_tensor(const Operator &a, const Operator &b, const Ket &ket);

enum class Subsystem { first, second };

/// Traces out `traced` from an operator on an N²-dimensional product space.
Operator partial_trace(const Operator &op, Subsystem traced);

/// Tr(a†·b).
Complex hs_inner(const Operator &a, const Operator &b);

double max_abs_diff(const Eigen::Ref<const Eigen::MatrixXcd> &a, const Eigen::Ref<const Eigen::MatrixXcd> &b);
bool approx_equal(
    const Eigen::Ref<const Eigen::MatrixXcd> &a,
    const Eigen::Ref<const Eigen::MatrixXcd> &b,
    double tol = kDefaultTolerance);
bool approx_equal(Complex a, Complex b, double tol = kDefaultTolerance);

/// True when a = c·b for some unit c, i.e. the two normalised kets define the
/// same rank-1 projector.
bool same_ray(const Ket &a, const Ket &b, double tol = kDefaultTolerance);
/// True when a = λ·b for some complex λ.
bool proportional(const Operator &a, const Operator &b, double tol = kDefaultTolerance);

bool is_unitary(const Operator &op, double tol = kDefaultTolerance);
bool is_hermitian(const Operator &op, double tol = kDefaultTolerance);

int exact_sqrt(int n);

}  // namespace mubking
