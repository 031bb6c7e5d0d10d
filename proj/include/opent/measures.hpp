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

// Entanglement functionals of bipartite operators:
//   * linear entropy E(U), by the Schmidt spectrum and by the fold-4 trace formula;
//   * exchange entropy E~(U);
//   * entangling power over Haar product states, directly, through the E/E~
//     relation, and by Monte-Carlo;
//   * concurrence of two-term operators mu A1(x)A2 + nu B1(x)B2, in closed form,
//     through the explicit two-qubit reduction, and from the Schmidt spectrum.
//
// Fold-4 routes build (d1 d2)^2-dimensional matrices on the layout (d1, d2, d1, d2)
// with slots numbered 0..3 (T13 swaps slots 0 and 2, T24 slots 1 and 3).

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "opent/error.hpp"
#include "opent/hs_space.hpp"
#include "opent/sampling.hpp"
#include "opent/tensor.hpp"

namespace opent {

/// Fold-4 constructions refuse d1*d2 above this unless forced.
inline constexpr std::size_t kFold4DimCap = 16;

/// Gram determinants ||A||^2 ||B||^2 - |<A,B>|^2 whose ratio to ||A||^2 ||B||^2
/// falls below this are treated as exact zeros (proportional pair).
inline constexpr double kProportionalityClamp = 1e-18;

/// Minimum M_k for the two-qubit reduction basis to be well defined.
inline constexpr double kReductionMinM = 1e-9;

struct Fold4Policy {
    bool force = false;
};

inline void check_fold4_cap(const Bipartition& bp, Fold4Policy policy) {
    if (!policy.force && bp.dim() > kFold4DimCap) {
        throw SizeCapError("fold-4 construction needs d1*d2 <= " + std::to_string(kFold4DimCap) + " (got " +
                           std::to_string(bp.dim()) + "); pass the force flag to override");
    }
}

// ---------------------------------------------------------------------------
// Linear entropy and friends

/// E = 1 - sum_k lambda_k^4.
inline double linear_entropy(const SchmidtSpectrum& spectrum) {
    double purity = 0.0;
    for (double l : spectrum.lambdas()) purity += l * l * l * l;
    const double e = std::max(0.0, 1.0 - purity);
    const double bound = 1.0 - 1.0 / static_cast<double>(spectrum.size());
    if (e > bound + 1e-10) throw Error("linear_entropy: value exceeds 1 - 1/rank bound");
    return e;
}

namespace detail {

/// tr(W X W^dagger Y) without forming the full four-fold product.
inline Complex sandwich_trace(const DenseMatrix& w, const DenseMatrix& x, const DenseMatrix& y) {
    const DenseMatrix left = w * x;
    const DenseMatrix right = w.adjoint() * y;
    Complex acc{0.0, 0.0};
    const std::size_t n = left.rows();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) acc += left(i, j) * right(j, i);
    return acc;
}

struct Fold4Operators {
    DenseMatrix doubled;  // U (x) U
    DenseMatrix t13;
    SubsystemLayout layout;
    double norm4;  // ||U||_HS^4, the normalization of U (x) U
};

inline Fold4Operators fold4_operators(const OperatorState& u, Fold4Policy policy) {
    const auto& bp = u.bipartition();
    check_fold4_cap(bp, policy);
    const auto layout = SubsystemLayout::fold4(bp);
    const double n2 = u.hs_norm() * u.hs_norm();
    return {kron(u.op(), u.op()), transposition_operator(layout, 0, 2), layout, n2 * n2};
}

}  // namespace detail

/// E(U) = 1 - tr(U(x)U T13 U^dag(x)U^dag T13) / ||U||^4.
inline double linear_entropy_fold4(const OperatorState& u, Fold4Policy policy = {}) {
    const auto f = detail::fold4_operators(u, policy);
    return 1.0 - detail::sandwich_trace(f.doubled, f.t13, f.t13).real() / f.norm4;
}

/// E~(U) = 1 - tr(U(x)U T24 U^dag(x)U^dag T13) / ||U||^4.
inline double exchange_entropy(const OperatorState& u, Fold4Policy policy = {}) {
    const auto f = detail::fold4_operators(u, policy);
    const auto t24 = transposition_operator(f.layout, 1, 3);
    return 1.0 - detail::sandwich_trace(f.doubled, t24, f.t13).real() / f.norm4;
}

/// e_p0(U) = 1 - 4 / (d1(d1+1) d2(d2+1)) * tr(U(x)U P+13 P+24 U^dag(x)U^dag T13).
/// Non-unitary inputs are first rescaled to ||U||^2 = d1 d2.
inline double entangling_power_direct(const OperatorState& u, Fold4Policy policy = {}) {
    const auto f = detail::fold4_operators(u, policy);
    const auto& bp = u.bipartition();
    const double d1 = static_cast<double>(bp.d1());
    const double d2 = static_cast<double>(bp.d2());
    const auto p13 = symmetric_projector(f.layout, 0, 2, ProjectorSign::plus);
    const auto p24 = symmetric_projector(f.layout, 1, 3, ProjectorSign::plus);
    const double scale = (d1 * d2) * (d1 * d2) / f.norm4;
    const double tr = detail::sandwich_trace(f.doubled, p13 * p24, f.t13).real() * scale;
    return 1.0 - 4.0 / (d1 * (d1 + 1.0) * d2 * (d2 + 1.0)) * tr;
}

/// e_p0 = d1 d2 / ((d1+1)(d2+1)) * [E + E~ + 1/(d1 d2) - 1].
inline double entangling_power_via_relation(double e, double e_tilde, const Bipartition& bp) {
    const double d1 = static_cast<double>(bp.d1());
    const double d2 = static_cast<double>(bp.d2());
    return d1 * d2 / ((d1 + 1.0) * (d2 + 1.0)) * (e + e_tilde + 1.0 / (d1 * d2) - 1.0);
}

/// S|ij> = |ji> on C^d (x) C^d.
inline DenseMatrix swap_matrix(std::size_t d) {
    return transposition_operator(SubsystemLayout({d, d}), 0, 1);
}

/// Equal-dimension form e_p0 = d^2/(d+1)^2 [E(U) + E(U S) - E(S)], all by the spectrum route.
inline double entangling_power_swap_form(const OperatorState& u) {
    const auto& bp = u.bipartition();
    if (bp.d1() != bp.d2()) throw DimensionError("entangling_power_swap_form: needs d1 == d2");
    const std::size_t d = bp.d1();
    const auto s = swap_matrix(d);
    const double e_u = linear_entropy(schmidt_spectrum(u));
    const double e_us = linear_entropy(schmidt_spectrum(OperatorState(u.op() * s, bp)));
    const double e_s = linear_entropy(schmidt_spectrum(OperatorState(s, bp)));
    const double dd = static_cast<double>(d);
    return dd * dd / ((dd + 1.0) * (dd + 1.0)) * (e_u + e_us - e_s);
}

/// 1 - tr(rho_1^2) of a normalized pure state.
inline double state_linear_entropy(std::span<const Complex> psi, const Bipartition& bp) {
    if (psi.size() != bp.dim()) {
        throw DimensionError("state_linear_entropy: state length " + std::to_string(psi.size()) +
                             " does not match bipartition dimension " + std::to_string(bp.dim()));
    }
    const double n = vector_norm(psi);
    if (std::abs(n - 1.0) > 1e-10) throw InvalidInputError("state_linear_entropy: state is not normalized");
    const auto rho1 = partial_trace(DenseMatrix::outer(psi, psi), bp, Subsystem::first);
    return std::max(0.0, 1.0 - hs_norm_squared(rho1));
}

// ---------------------------------------------------------------------------
// Monte-Carlo entangling power

struct McEstimate {
    double mean;
    double std_error;  // sample standard deviation / sqrt(n)
    std::uint64_t n;
    std::uint64_t seed;

    friend bool operator==(const McEstimate&, const McEstimate&) = default;
};

/// Mean of E(U |psi1>|psi2>) over Haar product states. Sample i draws psi1 then
/// psi2 from RandomStream::substream(seed, i), so the result does not depend on
/// how samples are distributed over threads.
inline McEstimate entangling_power_mc(const OperatorState& u, std::uint64_t n, std::uint64_t seed,
                                      unsigned threads = 0) {
    if (n < 2) throw InvalidInputError("entangling_power_mc: need at least 2 samples");
    const auto& bp = u.bipartition();
    std::vector<double> samples(n);

    auto work = [&](std::uint64_t begin, std::uint64_t end) {
        for (std::uint64_t i = begin; i < end; ++i) {
            auto stream = RandomStream::substream(seed, i);
            const auto psi1 = haar_state(bp.d1(), stream);
            const auto psi2 = haar_state(bp.d2(), stream);
            auto out = u.op().apply(kron(psi1, psi2));
            const double norm = vector_norm(out);
            for (auto& z : out) z /= norm;
            samples[i] = state_linear_entropy(out, bp);
        }
    };

    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, n));
    if (threads <= 1) {
        work(0, n);
    } else {
        std::vector<std::jthread> pool;
        const std::uint64_t chunk = (n + threads - 1) / threads;
        for (std::uint64_t begin = 0; begin < n; begin += chunk) pool.emplace_back(work, begin, std::min(n, begin + chunk));
    }

    // summation order is fixed, independent of the schedule above
    double sum = 0.0;
    for (double s : samples) sum += s;
    const double mean = sum / static_cast<double>(n);
    double ss = 0.0;
    for (double s : samples) ss += (s - mean) * (s - mean);
    const double sd = std::sqrt(ss / static_cast<double>(n - 1));
    return {mean, sd / std::sqrt(static_cast<double>(n)), n, seed};
}

// ---------------------------------------------------------------------------
// Two-term operators and concurrence

/// mu A1 (x) A2 + nu B1 (x) B2.
class TwoTermDecomposition {
   public:
    TwoTermDecomposition(Complex mu, DenseMatrix a1, DenseMatrix a2, Complex nu, DenseMatrix b1, DenseMatrix b2)
        : mu_(mu), nu_(nu), a1_(std::move(a1)), a2_(std::move(a2)), b1_(std::move(b1)), b2_(std::move(b2)) {
        if (!a1_.is_square() || !a2_.is_square() || a1_.rows() != b1_.rows() || a1_.cols() != b1_.cols() ||
            a2_.rows() != b2_.rows() || a2_.cols() != b2_.cols()) {
            throw DimensionError("TwoTermDecomposition: local factors must be square and pairwise equal in shape");
        }
        if (!std::isfinite(mu.real()) || !std::isfinite(mu.imag()) || !std::isfinite(nu.real()) ||
            !std::isfinite(nu.imag())) {
            throw InvalidInputError("TwoTermDecomposition: coefficients must be finite");
        }
    }

    Complex mu() const noexcept { return mu_; }
    Complex nu() const noexcept { return nu_; }
    const DenseMatrix& a1() const noexcept { return a1_; }
    const DenseMatrix& a2() const noexcept { return a2_; }
    const DenseMatrix& b1() const noexcept { return b1_; }
    const DenseMatrix& b2() const noexcept { return b2_; }

    Bipartition bipartition() const { return {a1_.rows(), a2_.rows()}; }

    DenseMatrix materialize() const { return mu_ * kron(a1_, a2_) + nu_ * kron(b1_, b2_); }

    TwoTermDecomposition adjoint() const {
        return {std::conj(mu_), a1_.adjoint(), a2_.adjoint(), std::conj(nu_), b1_.adjoint(), b2_.adjoint()};
    }

   private:
    Complex mu_;
    Complex nu_;
    DenseMatrix a1_;
    DenseMatrix a2_;
    DenseMatrix b1_;
    DenseMatrix b2_;
};

namespace detail {

struct LocalPair {
    double norm_a;
    double norm_b;
    Complex inner;  // <A, B>
    double m2;      // 1 - |<A,B>|^2 / (||A||^2 ||B||^2), 0 once clamped
};

// M^2 is taken from the residual ||B - (<A,B>/||A||^2) A||^2, which stays accurate
// for nearly proportional pairs where the textbook difference would cancel.
inline LocalPair local_pair(const DenseMatrix& a, const DenseMatrix& b) {
    LocalPair p{hs_norm(a), hs_norm(b), hs_inner(a, b), 0.0};
    if (p.norm_a == 0.0 || p.norm_b == 0.0) return p;
    const Complex coeff = p.inner / (p.norm_a * p.norm_a);
    const double residual = hs_norm_squared(b - coeff * a);
    const double m2 = std::min(1.0, residual / (p.norm_b * p.norm_b));
    p.m2 = m2 < kProportionalityClamp ? 0.0 : m2;
    return p;
}

}  // namespace detail

/// C = 2 |mu nu| prod_k sqrt(||A_k||^2 ||B_k||^2 - |<A_k,B_k>|^2) / ||U||^2_HS.
/// Equals zero exactly when either side is a proportional (or vanishing) pair.
inline double concurrence_two_term(const TwoTermDecomposition& d) {
    const double norm2 = hs_norm_squared(d.materialize());
    if (!(norm2 > 0.0)) throw InvalidInputError("concurrence_two_term: zero operator");
    const auto p1 = detail::local_pair(d.a1(), d.b1());
    const auto p2 = detail::local_pair(d.a2(), d.b2());
    const double g1 = p1.norm_a * p1.norm_b * std::sqrt(p1.m2);
    const double g2 = p2.norm_a * p2.norm_b * std::sqrt(p2.m2);
    return 2.0 * std::abs(d.mu() * d.nu()) * g1 * g2 / norm2;
}

/// |U> written as a two-qubit state in the orthonormal bases
///     |0>_1 = |A1>, |1>_1 ~ |B1> - <A1|B1>|A1>,   |0>_2 = |B2>, |1>_2 ~ |A2> - <B2|A2>|B2>.
struct TwoQubitReduction {
    Complex mu_tilde;
    Complex nu_tilde;
    double m1;
    double m2;
    std::array<Complex, 4> amplitudes;  // a00, a01, a10, a11
};

inline TwoQubitReduction reduce_to_two_qubit(const TwoTermDecomposition& d) {
    const double norm = hs_norm(d.materialize());
    if (!(norm > 0.0)) throw InvalidInputError("reduce_to_two_qubit: zero operator");
    const auto p1 = detail::local_pair(d.a1(), d.b1());
    const auto p2 = detail::local_pair(d.a2(), d.b2());
    const double m1 = std::sqrt(p1.m2);
    const double m2 = std::sqrt(p2.m2);
    if (!(m1 > kReductionMinM) || !(m2 > kReductionMinM)) {
        throw DegenerateDecompositionError(
            "reduce_to_two_qubit: local factors are proportional on one side; the concurrence is 0");
    }
    const Complex mu_t = d.mu() * p1.norm_a * p2.norm_a / norm;
    const Complex nu_t = d.nu() * p1.norm_b * p2.norm_b / norm;
    // overlaps between normalized operators
    const Complex a1_b1 = p1.inner / (p1.norm_a * p1.norm_b);
    const Complex b2_a2 = std::conj(p2.inner) / (p2.norm_a * p2.norm_b);
    TwoQubitReduction r{mu_t, nu_t, m1, m2, {mu_t * b2_a2 + nu_t * a1_b1, mu_t * m2, nu_t * m1, Complex{0.0, 0.0}}};
    double total = 0.0;
    for (const auto& a : r.amplitudes) total += std::norm(a);
    if (std::abs(total - 1.0) > 1e-10) throw Error("reduce_to_two_qubit: amplitudes are not normalized");
    return r;
}

/// C = |<psi| sigma_y (x) sigma_y |psi*>| = 2 |a00 a11 - a01 a10|.
inline double pure_state_concurrence(const TwoQubitReduction& r) {
    const auto& a = r.amplitudes;
    return 2.0 * std::abs(a[0] * a[3] - a[1] * a[2]);
}

/// C = 2 lambda_1 lambda_2 for operators of Schmidt rank at most 2.
inline double concurrence_from_spectrum(const SchmidtSpectrum& spectrum) {
    if (spectrum.rank() > 2) {
        throw RankError("concurrence_from_spectrum: Schmidt rank " + std::to_string(spectrum.rank()) +
                        " > 2, concurrence undefined");
    }
    const double l2 = spectrum.size() > 1 ? spectrum[1] : 0.0;
    return 2.0 * spectrum[0] * l2;
}

// ---------------------------------------------------------------------------
// Report

struct MeasureReport {
    double e;                                  // linear entropy, spectrum route
    std::optional<double> e_fold4;            // linear entropy, fold-4 trace route
    std::optional<double> e_tilde;            // exchange entropy, fold-4 trace route
    std::optional<double> ep;                 // entangling power, relation route
    std::optional<double> ep_direct;          // entangling power, fold-4 projector route
    std::optional<double> concurrence;        // 2 lambda1 lambda2, present iff rank <= 2
    std::optional<double> concurrence_two_term;  // closed form on a supplied decomposition
    std::size_t schmidt_rank;
    std::vector<double> schmidt_coefficients;
    std::optional<std::string> fold4_unavailable;  // reason the fold-4 fields are empty
};

inline MeasureReport measure_report(const OperatorState& u, const std::optional<TwoTermDecomposition>& d = {},
                                    Fold4Policy policy = {}) {
    const auto spectrum = schmidt_spectrum(u);
    MeasureReport r{};
    r.e = linear_entropy(spectrum);
    r.schmidt_rank = spectrum.rank();
    r.schmidt_coefficients.assign(spectrum.lambdas().begin(), spectrum.lambdas().end());
    try {
        r.e_fold4 = linear_entropy_fold4(u, policy);
        r.e_tilde = exchange_entropy(u, policy);
        r.ep = entangling_power_via_relation(r.e, *r.e_tilde, u.bipartition());
        r.ep_direct = entangling_power_direct(u, policy);
    } catch (const SizeCapError& err) {
        r.e_fold4.reset();
        r.e_tilde.reset();
        r.ep.reset();
        r.ep_direct.reset();
        r.fold4_unavailable = err.what();
    }
    if (r.schmidt_rank <= 2) r.concurrence = concurrence_from_spectrum(spectrum);
    if (d) {
        if (!(d->bipartition() == u.bipartition()) || max_abs_diff(d->materialize(), u.op()) > 1e-12) {
            throw InvalidInputError("measure_report: decomposition does not reproduce the operator");
        }
        r.concurrence_two_term = concurrence_two_term(*d);
    }
    return r;
}

}  // namespace opent
