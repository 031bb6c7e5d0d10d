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

// Gate families with known operator entanglement, each paired with its
// closed-form concurrence and its two-term decomposition
//     U = mu A1 (x) A2 + nu B1 (x) B2.
//
// Basis conventions: sigma_z = diag(1, -1); jz(2j) = diag(j, j-1, ..., -j);
// number(2j) = diag(0, 1, ..., 2j) and parity(d) = diag((-1)^n) in the same
// n = 0..d-1 ordering. Spins are passed as twoJ = 2j so half-integers stay exact.

#include <bit>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "opent/error.hpp"
#include "opent/hs_space.hpp"
#include "opent/measures.hpp"
#include "opent/tensor.hpp"

namespace opent {

// ---------------------------------------------------------------------------
// Elementary operators

inline DenseMatrix sigma_x() { return DenseMatrix(2, 2, {0.0, 1.0, 1.0, 0.0}); }
inline DenseMatrix sigma_y() { return DenseMatrix(2, 2, {0.0, Complex{0.0, -1.0}, Complex{0.0, 1.0}, 0.0}); }
inline DenseMatrix sigma_z() { return DenseMatrix(2, 2, {1.0, 0.0, 0.0, -1.0}); }

enum class PauliAxis { x, y, z };

/// P_a = (1 - sigma_a) / 2.
inline DenseMatrix pauli_projector(PauliAxis axis) {
    const DenseMatrix s = axis == PauliAxis::x ? sigma_x() : axis == PauliAxis::y ? sigma_y() : sigma_z();
    return (DenseMatrix::identity(2) - s) * 0.5;
}

inline void require_two_j(int two_j, const char* what) {
    if (two_j < 1) throw InvalidSpecError(std::string(what) + ": twoJ must be >= 1");
}

/// Eigenvalue of J_z at basis index `index` (0 is m = j).
inline double jz_value(int two_j, std::size_t index) {
    return (static_cast<double>(two_j) - 2.0 * static_cast<double>(index)) / 2.0;
}

inline DenseMatrix jz(int two_j) {
    require_two_j(two_j, "jz");
    std::vector<double> d(static_cast<std::size_t>(two_j) + 1);
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = jz_value(two_j, i);
    return DenseMatrix::diagonal(std::span<const double>(d));
}

inline DenseMatrix number_operator(int two_j) {
    require_two_j(two_j, "number");
    std::vector<double> d(static_cast<std::size_t>(two_j) + 1);
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = static_cast<double>(i);
    return DenseMatrix::diagonal(std::span<const double>(d));
}

inline DenseMatrix parity_operator(std::size_t d) {
    if (d == 0) throw InvalidSpecError("parity: dimension must be positive");
    std::vector<double> diag(d);
    for (std::size_t n = 0; n < d; ++n) diag[n] = n % 2 == 0 ? 1.0 : -1.0;
    return DenseMatrix::diagonal(std::span<const double>(diag));
}

/// Lookup by name: sigma_x, sigma_y, sigma_z, jz, number, parity,
/// pauli_projector_x, pauli_projector_y, pauli_projector_z. `param` is twoJ for
/// jz/number and the dimension for parity.
inline DenseMatrix elementary_operator(std::string_view name, int param = 0) {
    if (name == "sigma_x") return sigma_x();
    if (name == "sigma_y") return sigma_y();
    if (name == "sigma_z") return sigma_z();
    if (name == "jz") return jz(param);
    if (name == "number") return number_operator(param);
    if (name == "parity") {
        if (param < 1) throw InvalidSpecError("parity: dimension must be positive");
        return parity_operator(static_cast<std::size_t>(param));
    }
    if (name == "pauli_projector_x") return pauli_projector(PauliAxis::x);
    if (name == "pauli_projector_y") return pauli_projector(PauliAxis::y);
    if (name == "pauli_projector_z") return pauli_projector(PauliAxis::z);
    throw InvalidSpecError("unknown elementary operator '" + std::string(name) + "'");
}

// ---------------------------------------------------------------------------
// Gate specifications

struct CnotGate {};
struct CnnotGate {
    int n;  // number of control qubits
    int k;  // qubits on the first side of the split
};
struct SpinGate {
    double theta;
    int two_j;
};
struct ParityGate {
    std::size_t d1;
    std::size_t d2;
};
struct ZchainGate {
    double theta;
    int n;
    int k;
};
struct SwapGate {
    std::size_t d;
};
struct CustomGate {
    std::string path;
    std::size_t d1;
    std::size_t d2;
};

using GateSpec = std::variant<CnotGate, CnnotGate, SpinGate, ParityGate, ZchainGate, SwapGate, CustomGate>;

inline std::string gate_name(const GateSpec& spec) {
    constexpr const char* names[] = {"cnot", "cnnot", "spin", "parity", "zchain", "swap", "custom"};
    return names[spec.index()];
}

namespace detail {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

inline void require_finite_angle(double theta, const char* what) {
    if (!std::isfinite(theta)) throw InvalidSpecError(std::string(what) + ": theta must be finite");
}

inline void validate_cnnot(int n, int k) {
    if (n < 1) throw InvalidSpecError("cnnot: N must be >= 1");
    if (n > 12) throw SizeCapError("cnnot: N > 12 exceeds the matrix size cap");
    if (k < 1 || k > n) throw InvalidSpecError("cnnot: split k must satisfy 1 <= k <= N");
}

inline void validate_zchain(int n, int k) {
    if (n < 2) throw InvalidSpecError("zchain: N must be >= 2");
    if (n > 13) throw SizeCapError("zchain: N > 13 exceeds the matrix size cap");
    if (k < 1 || k > n - 1) throw InvalidSpecError("zchain: split k must satisfy 1 <= k <= N-1");
}

inline std::size_t pow2(int e) { return std::size_t{1} << e; }

}  // namespace detail

// ---------------------------------------------------------------------------
// Spin-1/2 (x) spin-j coupling, U = exp(-i 2 theta sigma_z J_z)

inline OperatorState spin_coupling_gate(double theta, int two_j) {
    detail::require_finite_angle(theta, "spin");
    require_two_j(two_j, "spin");
    const std::size_t d2 = static_cast<std::size_t>(two_j) + 1;
    std::vector<Complex> diag(2 * d2);
    for (std::size_t s = 0; s < 2; ++s)
        for (std::size_t m = 0; m < d2; ++m) {
            const double a = 2.0 * theta * jz_value(two_j, m);
            const double sigma = s == 0 ? 1.0 : -1.0;
            diag[s * d2 + m] = Complex{std::cos(a), -sigma * std::sin(a)};
        }
    return {DenseMatrix::diagonal(std::span<const Complex>(diag)), Bipartition(2, d2)};
}

/// x = sum_{k=-j..j} cos(4 k theta); equals sin(2(2j+1)theta) / sin(2 theta) where that is defined.
inline double spin_coupling_x(double theta, int two_j) {
    require_two_j(two_j, "spin");
    double x = 0.0;
    for (std::size_t i = 0; i <= static_cast<std::size_t>(two_j); ++i) x += std::cos(4.0 * jz_value(two_j, i) * theta);
    return x;
}

/// C = sqrt(1 - x^2 / (2j+1)^2). Evaluated as 2 sqrt(c s) / (2j+1) with
/// c = tr cos^2(2 J_z theta) = (2j+1+x)/2 and s = tr sin^2(2 J_z theta) = (2j+1-x)/2,
/// which avoids cancellation near the zeros of C.
inline double spin_coupling_concurrence_closed(double theta, int two_j) {
    require_two_j(two_j, "spin");
    double c = 0.0;
    double s = 0.0;
    for (std::size_t i = 0; i <= static_cast<std::size_t>(two_j); ++i) {
        const double a = 2.0 * theta * jz_value(two_j, i);
        const double ca = std::cos(a);
        const double sa = std::sin(a);
        c += ca * ca;
        s += sa * sa;
    }
    return 2.0 * std::sqrt(c * s) / static_cast<double>(two_j + 1);
}

// ---------------------------------------------------------------------------
// Parity interaction, U = exp(-i pi N1 (x) N2)

inline OperatorState parity_gate(std::size_t d1, std::size_t d2) {
    if (d1 < 2 || d2 < 2) throw InvalidSpecError("parity: d1 and d2 must be >= 2");
    const Bipartition bp(d1, d2);
    std::vector<double> diag(bp.dim());
    for (std::size_t n1 = 0; n1 < d1; ++n1)
        for (std::size_t n2 = 0; n2 < d2; ++n2) diag[bp.encode(n1, n2)] = (n1 * n2) % 2 == 0 ? 1.0 : -1.0;
    return {DenseMatrix::diagonal(std::span<const double>(diag)), bp};
}

inline double parity_gate_concurrence_closed(std::size_t d1, std::size_t d2) {
    // tr(Pi_d) = (1 - (-1)^d) / 2
    const double t1 = d1 % 2 == 0 ? 0.0 : 1.0;
    const double t2 = d2 % 2 == 0 ? 0.0 : 1.0;
    const double a = static_cast<double>(d1);
    const double b = static_cast<double>(d2);
    return std::sqrt((1.0 - t1 * t1 / (a * a)) * (1.0 - t2 * t2 / (b * b)));
}

// ---------------------------------------------------------------------------
// Controlled^N-NOT = I - 2 P_z^(x)N (x) P_x, split 2^k | 2^(N+1-k)

inline OperatorState cnnot_gate(int n, int k) {
    detail::validate_cnnot(n, k);
    const std::size_t dim = detail::pow2(n + 1);
    DenseMatrix u = DenseMatrix::identity(dim);
    // target flips only when every control is |1>: exchange |1..10> and |1..11>
    u(dim - 2, dim - 2) = 0.0;
    u(dim - 1, dim - 1) = 0.0;
    u(dim - 2, dim - 1) = 1.0;
    u(dim - 1, dim - 2) = 1.0;
    return {std::move(u), Bipartition(detail::pow2(k), detail::pow2(n + 1 - k))};
}

inline OperatorState cnot_gate() { return cnnot_gate(1, 1); }

inline double cnnot_concurrence_closed(int n, int k) {
    detail::validate_cnnot(n, k);
    const double left = static_cast<double>(detail::pow2(k)) - 1.0;
    const double right = static_cast<double>(detail::pow2(n + 1 - k)) - 1.0;
    return std::ldexp(1.0, 1 - n) * std::sqrt(left * right);
}

// ---------------------------------------------------------------------------
// sigma_z chain, V(theta) = exp(-i theta sigma_z^(x)N), split 2^k | 2^(N-k)

inline OperatorState zchain_gate(double theta, int n, int k) {
    detail::require_finite_angle(theta, "zchain");
    detail::validate_zchain(n, k);
    const std::size_t dim = detail::pow2(n);
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    std::vector<Complex> diag(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        const double z = std::popcount(i) % 2 == 0 ? 1.0 : -1.0;
        diag[i] = Complex{c, -s * z};
    }
    return {DenseMatrix::diagonal(std::span<const Complex>(diag)), Bipartition(detail::pow2(k), detail::pow2(n - k))};
}

inline double zchain_concurrence_closed(double theta) { return std::abs(std::sin(2.0 * theta)); }

// ---------------------------------------------------------------------------
// Swap

inline OperatorState swap_gate(std::size_t d) {
    if (d < 2) throw InvalidSpecError("swap: d must be >= 2");
    return {swap_matrix(d), Bipartition(d, d)};
}

// ---------------------------------------------------------------------------
// Dispatch on GateSpec

inline void validate(const GateSpec& spec) {
    std::visit(detail::overloaded{
                   [](const CnotGate&) {},
                   [](const CnnotGate& g) { detail::validate_cnnot(g.n, g.k); },
                   [](const SpinGate& g) {
                       detail::require_finite_angle(g.theta, "spin");
                       require_two_j(g.two_j, "spin");
                   },
                   [](const ParityGate& g) {
                       if (g.d1 < 2 || g.d2 < 2) throw InvalidSpecError("parity: d1 and d2 must be >= 2");
                   },
                   [](const ZchainGate& g) {
                       detail::require_finite_angle(g.theta, "zchain");
                       detail::validate_zchain(g.n, g.k);
                   },
                   [](const SwapGate& g) {
                       if (g.d < 2) throw InvalidSpecError("swap: d must be >= 2");
                   },
                   [](const CustomGate& g) {
                       if (g.path.empty()) throw InvalidSpecError("custom: a file path is required");
                   },
               },
               spec);
}

/// Builds a catalog gate. Custom gates are file-backed; see io.hpp.
inline OperatorState make_gate(const GateSpec& spec) {
    return std::visit(detail::overloaded{
                          [](const CnotGate&) { return cnot_gate(); },
                          [](const CnnotGate& g) { return cnnot_gate(g.n, g.k); },
                          [](const SpinGate& g) { return spin_coupling_gate(g.theta, g.two_j); },
                          [](const ParityGate& g) { return parity_gate(g.d1, g.d2); },
                          [](const ZchainGate& g) { return zchain_gate(g.theta, g.n, g.k); },
                          [](const SwapGate& g) { return swap_gate(g.d); },
                          [](const CustomGate&) -> OperatorState {
                              throw UnsupportedSpecError("make_gate: custom gates are loaded from a matrix file");
                          },
                      },
                      spec);
}

/// Closed-form concurrence, when the family has one.
inline std::optional<double> closed_form_concurrence(const GateSpec& spec) {
    return std::visit(detail::overloaded{
                          [](const CnotGate&) -> std::optional<double> { return cnnot_concurrence_closed(1, 1); },
                          [](const CnnotGate& g) -> std::optional<double> { return cnnot_concurrence_closed(g.n, g.k); },
                          [](const SpinGate& g) -> std::optional<double> {
                              return spin_coupling_concurrence_closed(g.theta, g.two_j);
                          },
                          [](const ParityGate& g) -> std::optional<double> {
                              return parity_gate_concurrence_closed(g.d1, g.d2);
                          },
                          [](const ZchainGate& g) -> std::optional<double> {
                              detail::validate_zchain(g.n, g.k);
                              return zchain_concurrence_closed(g.theta);
                          },
                          [](const SwapGate&) -> std::optional<double> { return std::nullopt; },
                          [](const CustomGate&) -> std::optional<double> { return std::nullopt; },
                      },
                      spec);
}

namespace detail {

inline TwoTermDecomposition cnnot_decomposition(int n, int k) {
    validate_cnnot(n, k);
    const auto pz = pauli_projector(PauliAxis::z);
    return {1.0,
            DenseMatrix::identity(pow2(k)),
            DenseMatrix::identity(pow2(n + 1 - k)),
            -2.0,
            kron_power(pz, static_cast<std::size_t>(k)),
            kron(kron_power(pz, static_cast<std::size_t>(n - k)), pauli_projector(PauliAxis::x))};
}

inline TwoTermDecomposition spin_decomposition(double theta, int two_j) {
    require_two_j(two_j, "spin");
    const std::size_t d2 = static_cast<std::size_t>(two_j) + 1;
    std::vector<double> c(d2);
    std::vector<double> s(d2);
    for (std::size_t m = 0; m < d2; ++m) {
        const double a = 2.0 * theta * jz_value(two_j, m);
        c[m] = std::cos(a);
        s[m] = std::sin(a);
    }
    return {1.0,
            DenseMatrix::identity(2),
            DenseMatrix::diagonal(std::span<const double>(c)),
            Complex{0.0, -1.0},
            sigma_z(),
            DenseMatrix::diagonal(std::span<const double>(s))};
}

inline TwoTermDecomposition parity_decomposition(std::size_t d1, std::size_t d2) {
    if (d1 < 2 || d2 < 2) throw InvalidSpecError("parity: d1 and d2 must be >= 2");
    const auto id1 = DenseMatrix::identity(d1);
    const auto pi1 = parity_operator(d1);
    return {1.0, (id1 + pi1) * 0.5, DenseMatrix::identity(d2), 1.0, (id1 - pi1) * 0.5, parity_operator(d2)};
}

inline TwoTermDecomposition zchain_decomposition(double theta, int n, int k) {
    validate_zchain(n, k);
    const auto sz = sigma_z();
    return {std::cos(theta),
            DenseMatrix::identity(pow2(k)),
            DenseMatrix::identity(pow2(n - k)),
            Complex{0.0, -std::sin(theta)},
            kron_power(sz, static_cast<std::size_t>(k)),
            kron_power(sz, static_cast<std::size_t>(n - k))};
}

}  // namespace detail

/// Symbolic two-term form of a catalog gate. Swap (Schmidt rank d^2) and custom
/// gates have none.
inline TwoTermDecomposition two_term_decomposition(const GateSpec& spec) {
    return std::visit(detail::overloaded{
                          [](const CnotGate&) { return detail::cnnot_decomposition(1, 1); },
                          [](const CnnotGate& g) { return detail::cnnot_decomposition(g.n, g.k); },
                          [](const SpinGate& g) { return detail::spin_decomposition(g.theta, g.two_j); },
                          [](const ParityGate& g) { return detail::parity_decomposition(g.d1, g.d2); },
                          [](const ZchainGate& g) { return detail::zchain_decomposition(g.theta, g.n, g.k); },
                          [](const SwapGate&) -> TwoTermDecomposition {
                              throw UnsupportedSpecError("swap has no two-term decomposition");
                          },
                          [](const CustomGate&) -> TwoTermDecomposition {
                              throw UnsupportedSpecError("custom gates have no symbolic decomposition");
                          },
                      },
                      spec);
}

}  // namespace opent
