// Copyright 2026 The opent Authors
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

// Hilbert-Schmidt geometry of operators on a bipartite space. An operator U on
// H_d1 (x) H_d2 is read as a vector |U> in HS(d1^2) (x) HS(d2^2); its operator
// Schmidt coefficients are the singular values of the realigned matrix.

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "opent/error.hpp"
#include "opent/tensor.hpp"

namespace opent {

/// Normalized Schmidt coefficients at or below this are treated as exact zeros.
inline constexpr double kSchmidtClampThreshold = 1e-12;

/// <A, B> = tr(A^dagger B).
inline Complex hs_inner(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionError("hs_inner: " + a.shape_string() + " vs " + b.shape_string());
    }
    Complex acc{0.0, 0.0};
    const auto x = a.data();
    const auto y = b.data();
    for (std::size_t i = 0; i < x.size(); ++i) acc += std::conj(x[i]) * y[i];
    return acc;
}

inline double hs_norm_squared(const DenseMatrix& a) {
    double acc = 0.0;
    for (const auto& z : a.data()) acc += std::norm(z);
    return acc;
}

inline double hs_norm(const DenseMatrix& a) { return std::sqrt(hs_norm_squared(a)); }

/// A nonzero square operator together with the bipartition it is measured across.
class OperatorState {
   public:
    OperatorState(DenseMatrix op, Bipartition bp) : op_(std::move(op)), bp_(bp) {
        bp_.require_side(op_, "OperatorState");
        hs_norm_ = opent::hs_norm(op_);
        if (!(hs_norm_ > 0.0)) throw InvalidInputError("OperatorState: zero operator");
    }

    const DenseMatrix& op() const noexcept { return op_; }
    const Bipartition& bipartition() const noexcept { return bp_; }
    double hs_norm() const noexcept { return hs_norm_; }

    /// Same operator, different split (the dimensions must still multiply out).
    OperatorState with_bipartition(Bipartition bp) const { return OperatorState(op_, bp); }

    OperatorState adjoint() const { return OperatorState(op_.adjoint(), bp_); }

   private:
    DenseMatrix op_;
    Bipartition bp_;
    double hs_norm_;
};

/// Reshapes U (d1 d2 x d1 d2) into the d1^2 x d2^2 matrix
///     M[i1*d1 + j1, i2*d2 + j2] = U[(i1,i2), (j1,j2)].
/// realign(A (x) B) is the rank-1 outer product vec(A) vec(B)^T.
inline DenseMatrix realign(const DenseMatrix& op, const Bipartition& bp) {
    bp.require_side(op, "realign");
    const std::size_t d1 = bp.d1();
    const std::size_t d2 = bp.d2();
    DenseMatrix m(d1 * d1, d2 * d2);
    for (std::size_t i1 = 0; i1 < d1; ++i1)
        for (std::size_t j1 = 0; j1 < d1; ++j1)
            for (std::size_t i2 = 0; i2 < d2; ++i2)
                for (std::size_t j2 = 0; j2 < d2; ++j2)
                    m(i1 * d1 + j1, i2 * d2 + j2) = op(bp.encode(i1, i2), bp.encode(j1, j2));
    return m;
}

inline DenseMatrix realign(const OperatorState& u) { return realign(u.op(), u.bipartition()); }

/// Normalized operator Schmidt coefficients, sorted descending, sum of squares 1.
class SchmidtSpectrum {
   public:
    /// Validates and sorts arbitrary coefficients; entries at or below the clamp become 0.
    static SchmidtSpectrum from_values(std::vector<double> lambdas) {
        if (lambdas.empty()) throw InvalidInputError("SchmidtSpectrum: empty");
        double sum_sq = 0.0;
        for (auto& l : lambdas) {
            if (!std::isfinite(l) || l < 0.0) throw InvalidInputError("SchmidtSpectrum: coefficients must be non-negative");
            if (l <= kSchmidtClampThreshold) l = 0.0;
            sum_sq += l * l;
        }
        if (std::abs(sum_sq - 1.0) > 1e-10) throw InvalidInputError("SchmidtSpectrum: sum of squares is not 1");
        std::sort(lambdas.begin(), lambdas.end(), std::greater<>());
        return SchmidtSpectrum(std::move(lambdas));
    }

    std::span<const double> lambdas() const noexcept { return lambdas_; }
    std::size_t size() const noexcept { return lambdas_.size(); }
    double operator[](std::size_t k) const { return lambdas_.at(k); }

    /// Number of nonzero (post-clamp) coefficients.
    std::size_t rank() const noexcept {
        return static_cast<std::size_t>(std::count_if(lambdas_.begin(), lambdas_.end(), [](double l) { return l > 0.0; }));
    }

   private:
    explicit SchmidtSpectrum(std::vector<double> lambdas) : lambdas_(std::move(lambdas)) {}
    std::vector<double> lambdas_;
};

namespace detail {

using RowMajorMatrixXcd = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

inline Eigen::Map<const RowMajorMatrixXcd> as_eigen(const DenseMatrix& m) {
    return {m.data().data(), static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols())};
}

inline std::vector<double> singular_values(const DenseMatrix& m) {
    Eigen::MatrixXcd a = as_eigen(m);
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(a);
    const auto& s = svd.singularValues();
    return {s.data(), s.data() + s.size()};
}

}  // namespace detail

inline SchmidtSpectrum schmidt_spectrum(const OperatorState& u) {
    auto sv = detail::singular_values(realign(u));
    const double norm = u.hs_norm();
    for (auto& s : sv) s /= norm;
    // SVD round-off can leave the sum of squares a few ulps away from 1; the
    // validating constructor allows 1e-10.
    return SchmidtSpectrum::from_values(std::move(sv));
}

}  // namespace opent
