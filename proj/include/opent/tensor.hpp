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

// Dense complex matrices and the multi-subsystem index convention shared by
// the whole library.
//
// Storage is row-major. A basis state |i_1 ... i_n> of a space with subsystem
// dimensions (d_1, ..., d_n) has composite index
//     i = ((i_1 * d_2 + i_2) * d_3 + i_3) ... ,
// i.e. subsystem 1 is the slowest-varying digit. kron(A, B) follows the same
// convention, so (A (x) B)[(i1,i2),(j1,j2)] = A[i1,j1] * B[i2,j2].

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "opent/error.hpp"

namespace opent {

using Complex = std::complex<double>;

/// Largest number of entries any single matrix may hold.
inline constexpr std::size_t kMaxMatrixElements = std::size_t{1} << 26;

/// Default bound on max |(U^dagger U - I)_{ij}| for an operator to count as unitary.
inline constexpr double kUnitarityTolerance = 1e-10;

class DenseMatrix {
   public:
    /// Zero matrix of the given shape.
    DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {
        check_shape(rows, cols);
        entries_.assign(rows * cols, Complex{0.0, 0.0});
    }

    /// Takes ownership of row-major entries; every entry must be finite.
    DenseMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
        : rows_(rows), cols_(cols), entries_(std::move(entries)) {
        check_shape(rows, cols);
        if (entries_.size() != rows * cols) {
            throw DimensionError("DenseMatrix: expected " + std::to_string(rows * cols) +
                                 " entries, got " + std::to_string(entries_.size()));
        }
        if (!is_finite()) {
            throw InvalidInputError("DenseMatrix: entries must be finite");
        }
    }

    static DenseMatrix identity(std::size_t n) {
        DenseMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    static DenseMatrix diagonal(std::span<const Complex> diag) {
        DenseMatrix m(diag.size(), diag.size());
        for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
        return m;
    }

    static DenseMatrix diagonal(std::span<const double> diag) {
        DenseMatrix m(diag.size(), diag.size());
        for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
        return m;
    }

    /// Column vector |psi><psi| style outer product a b^dagger.
    static DenseMatrix outer(std::span<const Complex> a, std::span<const Complex> b) {
        DenseMatrix m(a.size(), b.size());
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) m(i, j) = a[i] * std::conj(b[j]);
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t size() const noexcept { return entries_.size(); }
    bool is_square() const noexcept { return rows_ == cols_; }

    Complex& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Complex& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    std::span<const Complex> data() const noexcept { return entries_; }
    std::span<Complex> data() noexcept { return entries_; }

    bool is_finite() const noexcept {
        return std::all_of(entries_.begin(), entries_.end(), [](const Complex& z) {
            return std::isfinite(z.real()) && std::isfinite(z.imag());
        });
    }

    DenseMatrix adjoint() const {
        DenseMatrix m(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) m(c, r) = std::conj((*this)(r, c));
        return m;
    }

    DenseMatrix transpose() const {
        DenseMatrix m(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) m(c, r) = (*this)(r, c);
        return m;
    }

    DenseMatrix conj() const {
        DenseMatrix m = *this;
        for (auto& z : m.entries_) z = std::conj(z);
        return m;
    }

    Complex trace() const {
        require_square("trace");
        Complex t{0.0, 0.0};
        for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
        return t;
    }

    /// Largest entry magnitude.
    double max_abs() const noexcept {
        double m = 0.0;
        for (const auto& z : entries_) m = std::max(m, std::abs(z));
        return m;
    }

    DenseMatrix& operator+=(const DenseMatrix& other) {
        require_same_shape(other, "operator+");
        for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
        return *this;
    }

    DenseMatrix& operator-=(const DenseMatrix& other) {
        require_same_shape(other, "operator-");
        for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
        return *this;
    }

    DenseMatrix& operator*=(Complex s) {
        for (auto& z : entries_) z *= s;
        return *this;
    }

    friend DenseMatrix operator+(DenseMatrix a, const DenseMatrix& b) { return a += b; }
    friend DenseMatrix operator-(DenseMatrix a, const DenseMatrix& b) { return a -= b; }
    friend DenseMatrix operator*(DenseMatrix a, Complex s) { return a *= s; }
    friend DenseMatrix operator*(Complex s, DenseMatrix a) { return a *= s; }
    friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
        if (a.cols_ != b.rows_) {
            throw DimensionError("matrix product: " + a.shape_string() + " * " + b.shape_string());
        }
        DenseMatrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Complex aik = a(i, k);
                if (aik == Complex{0.0, 0.0}) continue;
                const Complex* brow = &b.entries_[k * b.cols_];
                Complex* orow = &out.entries_[i * b.cols_];
                for (std::size_t j = 0; j < b.cols_; ++j) orow[j] += aik * brow[j];
            }
        }
        return out;
    }

    /// Matrix-vector product.
    std::vector<Complex> apply(std::span<const Complex> v) const {
        if (v.size() != cols_) {
            throw DimensionError("matrix-vector product: " + shape_string() + " * vector of length " +
                                 std::to_string(v.size()));
        }
        std::vector<Complex> out(rows_, Complex{0.0, 0.0});
        for (std::size_t i = 0; i < rows_; ++i) {
            Complex acc{0.0, 0.0};
            for (std::size_t j = 0; j < cols_; ++j) acc += (*this)(i, j) * v[j];
            out[i] = acc;
        }
        return out;
    }

    /// Exact entrywise equality.
    friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

    std::string shape_string() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

   private:
    static void check_shape(std::size_t rows, std::size_t cols) {
        if (rows == 0 || cols == 0) throw DimensionError("DenseMatrix: dimensions must be positive");
        if (rows > kMaxMatrixElements / cols) {
            throw SizeCapError("DenseMatrix: " + std::to_string(rows) + "x" + std::to_string(cols) +
                               " exceeds the element cap");
        }
    }

    void require_square(const char* what) const {
        if (!is_square()) throw DimensionError(std::string(what) + ": matrix is " + shape_string());
    }

    void require_same_shape(const DenseMatrix& other, const char* what) const {
        if (rows_ != other.rows_ || cols_ != other.cols_) {
            throw DimensionError(std::string(what) + ": " + shape_string() + " vs " + other.shape_string());
        }
    }

    std::size_t rows_;
    std::size_t cols_;
    std::vector<Complex> entries_;
};

/// Max-entry distance between two same-shape matrices.
inline double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b) { return (a - b).max_abs(); }

/// The (d1, d2) split of a d1*d2-dimensional space into two factors.
class Bipartition {
   public:
    Bipartition(std::size_t d1, std::size_t d2) : d1_(d1), d2_(d2) {
        if (d1 == 0 || d2 == 0) throw DimensionError("Bipartition: dimensions must be positive");
    }

    std::size_t d1() const noexcept { return d1_; }
    std::size_t d2() const noexcept { return d2_; }
    std::size_t dim() const noexcept { return d1_ * d2_; }

    /// Composite index of |i1 i2>.
    std::size_t encode(std::size_t i1, std::size_t i2) const noexcept { return i1 * d2_ + i2; }
    std::pair<std::size_t, std::size_t> decode(std::size_t i) const noexcept { return {i / d2_, i % d2_}; }

    void require_side(const DenseMatrix& m, const char* what) const {
        if (!m.is_square() || m.rows() != dim()) {
            throw DimensionError(std::string(what) + ": matrix " + m.shape_string() + " does not fit bipartition " +
                                 std::to_string(d1_) + "x" + std::to_string(d2_));
        }
    }

    friend bool operator==(const Bipartition&, const Bipartition&) = default;

   private:
    std::size_t d1_;
    std::size_t d2_;
};

/// Subsystem dimensions of a multipartite space, left (slowest index) to right.
class SubsystemLayout {
   public:
    explicit SubsystemLayout(std::vector<std::size_t> dims) : dims_(std::move(dims)) {
        if (dims_.empty()) throw DimensionError("SubsystemLayout: no subsystems");
        total_ = 1;
        for (auto d : dims_) {
            if (d == 0) throw DimensionError("SubsystemLayout: dimensions must be positive");
            if (total_ > kMaxMatrixElements / d) throw SizeCapError("SubsystemLayout: total dimension too large");
            total_ *= d;
        }
    }

    /// The doubled layout (d1, d2, d1, d2) on which U (x) U acts.
    static SubsystemLayout fold4(const Bipartition& bp) { return SubsystemLayout({bp.d1(), bp.d2(), bp.d1(), bp.d2()}); }

    std::size_t count() const noexcept { return dims_.size(); }
    std::size_t total() const noexcept { return total_; }
    std::span<const std::size_t> dims() const noexcept { return dims_; }
    std::size_t dim(std::size_t s) const { return dims_.at(s); }

    std::size_t encode(std::span<const std::size_t> digits) const {
        if (digits.size() != dims_.size()) throw DimensionError("SubsystemLayout::encode: wrong digit count");
        std::size_t index = 0;
        for (std::size_t s = 0; s < dims_.size(); ++s) {
            if (digits[s] >= dims_[s]) throw DimensionError("SubsystemLayout::encode: digit out of range");
            index = index * dims_[s] + digits[s];
        }
        return index;
    }

    std::vector<std::size_t> decode(std::size_t index) const {
        if (index >= total_) throw DimensionError("SubsystemLayout::decode: index out of range");
        std::vector<std::size_t> digits(dims_.size());
        for (std::size_t s = dims_.size(); s-- > 0;) {
            digits[s] = index % dims_[s];
            index /= dims_[s];
        }
        return digits;
    }

   private:
    std::vector<std::size_t> dims_;
    std::size_t total_ = 1;
};

inline DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.rows() > kMaxMatrixElements / b.rows() || a.cols() > kMaxMatrixElements / b.cols() ||
        a.size() > kMaxMatrixElements / b.size()) {
        throw SizeCapError("kron: " + a.shape_string() + " (x) " + b.shape_string() + " exceeds the element cap");
    }
    DenseMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i1 = 0; i1 < a.rows(); ++i1)
        for (std::size_t j1 = 0; j1 < a.cols(); ++j1) {
            const Complex s = a(i1, j1);
            if (s == Complex{0.0, 0.0}) continue;
            for (std::size_t i2 = 0; i2 < b.rows(); ++i2)
                for (std::size_t j2 = 0; j2 < b.cols(); ++j2)
                    out(i1 * b.rows() + i2, j1 * b.cols() + j2) = s * b(i2, j2);
        }
    return out;
}

/// n-fold tensor power; kron_power(a, 0) is the 1x1 identity.
inline DenseMatrix kron_power(const DenseMatrix& a, std::size_t n) {
    DenseMatrix out = DenseMatrix::identity(1);
    for (std::size_t i = 0; i < n; ++i) out = kron(out, a);
    return out;
}

inline std::vector<Complex> kron(std::span<const Complex> a, std::span<const Complex> b) {
    std::vector<Complex> out;
    out.reserve(a.size() * b.size());
    for (const auto& x : a)
        for (const auto& y : b) out.push_back(x * y);
    return out;
}

/// Subsystem permutation. The digit held by slot s moves to slot perm[s], so the
/// basis state |i_1 ... i_n> is sent to |i_{perm^-1(1)} ... i_{perm^-1(n)}>.
/// Slots exchanged by the permutation must have equal dimensions.
inline DenseMatrix permutation_operator(const SubsystemLayout& layout, std::span<const std::size_t> perm) {
    const std::size_t n = layout.count();
    if (perm.size() != n) throw DimensionError("permutation_operator: permutation length does not match layout");
    std::vector<bool> seen(n, false);
    for (std::size_t s = 0; s < n; ++s) {
        if (perm[s] >= n || seen[perm[s]]) throw DimensionError("permutation_operator: not a permutation");
        seen[perm[s]] = true;
        if (layout.dim(s) != layout.dim(perm[s])) {
            throw DimensionError("permutation_operator: subsystems " + std::to_string(s) + " and " +
                                 std::to_string(perm[s]) + " have different dimensions");
        }
    }
    const std::size_t total = layout.total();
    DenseMatrix p(total, total);
    std::vector<std::size_t> out_digits(n);
    for (std::size_t in = 0; in < total; ++in) {
        const auto digits = layout.decode(in);
        for (std::size_t s = 0; s < n; ++s) out_digits[perm[s]] = digits[s];
        p(layout.encode(out_digits), in) = 1.0;
    }
    return p;
}

/// Swap T_ij of two equal-dimension subsystems (0-based slots).
inline DenseMatrix transposition_operator(const SubsystemLayout& layout, std::size_t i, std::size_t j) {
    if (i >= layout.count() || j >= layout.count()) throw DimensionError("transposition_operator: slot out of range");
    std::vector<std::size_t> perm(layout.count());
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::swap(perm[i], perm[j]);
    return permutation_operator(layout, perm);
}

enum class ProjectorSign { plus, minus };

/// P^(+/-)_ij = (1 +/- T_ij) / 2, the projector on the (anti)symmetric subspace of slots i and j.
inline DenseMatrix symmetric_projector(const SubsystemLayout& layout, std::size_t i, std::size_t j,
                                       ProjectorSign sign) {
    DenseMatrix t = transposition_operator(layout, i, j);
    DenseMatrix id = DenseMatrix::identity(layout.total());
    DenseMatrix p = sign == ProjectorSign::plus ? id + t : id - t;
    return p *= 0.5;
}

enum class Subsystem { first, second };

/// Reduced matrix on the kept factor of a bipartite operator.
inline DenseMatrix partial_trace(const DenseMatrix& rho, const Bipartition& bp, Subsystem keep) {
    bp.require_side(rho, "partial_trace");
    const std::size_t d1 = bp.d1();
    const std::size_t d2 = bp.d2();
    if (keep == Subsystem::first) {
        DenseMatrix out(d1, d1);
        for (std::size_t i = 0; i < d1; ++i)
            for (std::size_t j = 0; j < d1; ++j) {
                Complex acc{0.0, 0.0};
                for (std::size_t k = 0; k < d2; ++k) acc += rho(bp.encode(i, k), bp.encode(j, k));
                out(i, j) = acc;
            }
        return out;
    }
    DenseMatrix out(d2, d2);
    for (std::size_t i = 0; i < d2; ++i)
        for (std::size_t j = 0; j < d2; ++j) {
            Complex acc{0.0, 0.0};
            for (std::size_t k = 0; k < d1; ++k) acc += rho(bp.encode(k, i), bp.encode(k, j));
            out(i, j) = acc;
        }
    return out;
}

struct UnitarityReport {
    bool unitary;
    double deviation;  // max |(U^dagger U - I)_ij|
};

inline UnitarityReport check_unitary(const DenseMatrix& u, double tol = kUnitarityTolerance) {
    if (!u.is_square()) throw DimensionError("check_unitary: matrix is " + u.shape_string());
    const double dev = max_abs_diff(u.adjoint() * u, DenseMatrix::identity(u.rows()));
    return {dev <= tol, dev};
}

}  // namespace opent
