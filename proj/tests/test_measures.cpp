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

#include <catch2/catch_amalgamated.hpp>

#include <numbers>

#include "opent/gates.hpp"
#include "opent/measures.hpp"
#include "opent/sampling.hpp"
#include "oracles.hpp"

using namespace opent;
using Catch::Approx;

namespace {

OperatorState haar_operator(std::size_t d1, std::size_t d2, std::uint64_t seed, std::uint64_t i) {
    auto s = RandomStream::substream(seed, i);
    return {haar_unitary(d1 * d2, s), Bipartition(d1, d2)};
}

double spectrum_e(const OperatorState& u) { return linear_entropy(schmidt_spectrum(u)); }

}  // namespace

TEST_CASE("linear entropy from the spectrum", "[measures]") {
    CHECK(linear_entropy(SchmidtSpectrum::from_values({1.0, 0.0, 0.0, 0.0})) == 0.0);
    CHECK(linear_entropy(schmidt_spectrum(cnot_gate())) == Approx(0.5).margin(1e-12));
    CHECK(linear_entropy(schmidt_spectrum(swap_gate(2))) == Approx(0.75).margin(1e-12));
    CHECK(linear_entropy(schmidt_spectrum(swap_gate(3))) == Approx(1.0 - 1.0 / 9.0).margin(1e-12));
    // oracle: purity from explicit index sums
    CHECK(oracle::operator_linear_entropy(cnot_gate().op(), 2, 2) == Approx(0.5).margin(1e-14));
}

TEST_CASE("linear entropy: fold-4 trace route", "[measures]") {
    CHECK(std::abs(linear_entropy_fold4(OperatorState(DenseMatrix::identity(6), Bipartition(2, 3)))) < 1e-14);
    CHECK(linear_entropy_fold4(cnot_gate()) == Approx(0.5).margin(1e-12));
    for (std::uint64_t i = 0; i < 20; ++i) {
        const auto u = haar_operator(2, 3, 61, i);
        const double fold4 = linear_entropy_fold4(u);
        CHECK(std::abs(fold4 - spectrum_e(u)) < 1e-10);
        CHECK(std::abs(fold4 - oracle::operator_linear_entropy(u.op(), 2, 3)) < 1e-10);
    }
}

TEST_CASE("route equivalence over the Haar corpus", "[measures][property]") {
    const std::pair<std::size_t, std::size_t> splits[] = {{2, 2}, {2, 3}, {3, 3}};
    for (const auto& [d1, d2] : splits) {
        for (std::uint64_t i = 0; i < 50; ++i) {
            const auto u = haar_operator(d1, d2, 62, i);
            const double e = spectrum_e(u);
            const double et = exchange_entropy(u);
            CHECK(std::abs(e - linear_entropy_fold4(u)) < 1e-10);
            CHECK(std::abs(entangling_power_direct(u) - entangling_power_via_relation(e, et, u.bipartition())) < 1e-9);
            CHECK(e <= 1.0 - 1.0 / static_cast<double>(std::min(d1 * d1, d2 * d2)) + 1e-10);
            CHECK(std::abs(e - spectrum_e(u.adjoint())) < 1e-10);
        }
    }
}

TEST_CASE("exchange entropy", "[measures]") {
    for (auto [d1, d2] : {std::pair<std::size_t, std::size_t>{2, 2}, {2, 3}, {3, 3}}) {
        const OperatorState id(DenseMatrix::identity(d1 * d2), Bipartition(d1, d2));
        CHECK(exchange_entropy(id) == Approx(1.0 - 1.0 / static_cast<double>(d1 * d2)).margin(1e-12));
    }
    // oracle: E~(CNOT) = E(CNOT S), S on the explicitly composed matrix
    const double ref = oracle::operator_linear_entropy(cnot_gate().op() * swap_matrix(2), 2, 2);
    CHECK(ref == Approx(0.75).margin(1e-14));
    CHECK(exchange_entropy(cnot_gate()) == Approx(0.75).margin(1e-12));
    CHECK(std::abs(exchange_entropy(swap_gate(2))) < 1e-14);
}

TEST_CASE("entangling power: projector trace", "[measures]") {
    CHECK(std::abs(entangling_power_direct(OperatorState(DenseMatrix::identity(6), Bipartition(2, 3)))) < 1e-14);
    CHECK(std::abs(entangling_power_direct(swap_gate(2))) < 1e-14);
    CHECK(std::abs(entangling_power_direct(swap_gate(3))) < 1e-14);

    // oracle: exact quadrature over both Bloch spheres
    const double quad = oracle::entangling_power_two_qubit_quadrature(cnot_gate().op());
    CHECK(quad == Approx(2.0 / 9.0).margin(1e-12));
    CHECK(entangling_power_direct(cnot_gate()) == Approx(2.0 / 9.0).margin(1e-12));

    for (std::uint64_t i = 0; i < 5; ++i) {
        const auto u = haar_operator(2, 2, 63, i);
        CHECK(std::abs(entangling_power_direct(u) - oracle::entangling_power_two_qubit_quadrature(u.op())) < 1e-12);
    }

    // local unitaries do not entangle
    for (std::uint64_t i = 0; i < 5; ++i) {
        auto s = RandomStream::substream(64, i);
        const OperatorState local(kron(haar_unitary(2, s), haar_unitary(3, s)), Bipartition(2, 3));
        CHECK(std::abs(entangling_power_direct(local)) < 1e-12);
        CHECK(entangling_power_direct(haar_operator(2, 3, 65, i)) >= -1e-10);
    }
}

TEST_CASE("entangling power: relation and equal-dimension form", "[measures]") {
    const Bipartition two(2, 2);
    CHECK(entangling_power_via_relation(0.5, 0.75, two) == Approx(2.0 / 9.0).margin(1e-15));
    CHECK(std::abs(entangling_power_via_relation(0.0, 1.0 - 1.0 / 6.0, Bipartition(2, 3))) < 1e-15);
    for (std::size_t d : {2u, 3u}) {
        const Bipartition bp(d, d);
        const double dd = static_cast<double>(d);
        CHECK(spectrum_e(swap_gate(d)) == Approx(1.0 - 1.0 / (dd * dd)).margin(1e-12));
        for (std::uint64_t i = 0; i < 10; ++i) {
            const auto u = haar_operator(d, d, 66 + d, i);
            const double via_swap = entangling_power_swap_form(u);
            CHECK(std::abs(via_swap - entangling_power_direct(u)) < 1e-9);
            CHECK(std::abs(exchange_entropy(u) - spectrum_e(OperatorState(u.op() * swap_matrix(d), bp))) < 1e-9);
        }
    }
    CHECK_THROWS_AS(entangling_power_swap_form(parity_gate(2, 3)), DimensionError);
}

TEST_CASE("fold-4 size cap", "[measures]") {
    const OperatorState big(DenseMatrix::identity(18), Bipartition(3, 6));
    CHECK_THROWS_AS(linear_entropy_fold4(big), SizeCapError);
    CHECK_THROWS_AS(exchange_entropy(big), SizeCapError);
    CHECK_THROWS_AS(entangling_power_direct(big), SizeCapError);
    CHECK(std::abs(linear_entropy_fold4(big, {.force = true})) < 1e-12);
}

TEST_CASE("state linear entropy", "[measures]") {
    const Bipartition bp(2, 2);
    const std::vector<Complex> zero{1.0, 0.0, 0.0, 0.0};
    CHECK(state_linear_entropy(zero, bp) == 0.0);
    const double r = 1.0 / std::sqrt(2.0);
    CHECK(state_linear_entropy(std::vector<Complex>{r, 0.0, 0.0, r}, bp) == Approx(0.5).margin(1e-15));
    for (std::size_t d : {2u, 3u, 4u}) {
        std::vector<Complex> max(d * d, 0.0);
        for (std::size_t i = 0; i < d; ++i) max[i * d + i] = 1.0 / std::sqrt(static_cast<double>(d));
        CHECK(state_linear_entropy(max, Bipartition(d, d)) == Approx(1.0 - 1.0 / static_cast<double>(d)).margin(1e-14));
    }
    for (std::uint64_t i = 0; i < 20; ++i) {
        auto s = RandomStream::substream(67, i);
        const auto psi = haar_state(6, s);
        CHECK(std::abs(state_linear_entropy(psi, Bipartition(2, 3)) - oracle::state_linear_entropy_minors(psi, 2, 3)) <
              1e-14);
    }
    CHECK_THROWS_AS(state_linear_entropy(std::vector<Complex>{1.0, 1.0, 0.0, 0.0}, bp), InvalidInputError);
    CHECK_THROWS_AS(state_linear_entropy(zero, Bipartition(2, 3)), DimensionError);
}

TEST_CASE("entangling power: Monte-Carlo", "[measures][mc]") {
    SECTION("identity samples are product states") {
        const auto est = entangling_power_mc(OperatorState(DenseMatrix::identity(4), Bipartition(2, 2)), 500, 9);
        CHECK(std::abs(est.mean) < 1e-15);
        CHECK(est.std_error < 1e-15);
        CHECK(est.n == 500);
        CHECK(est.seed == 9);
    }
    SECTION("CNOT converges to 2/9 and is reproducible") {
        const auto a = entangling_power_mc(cnot_gate(), 20000, 42);
        const auto b = entangling_power_mc(cnot_gate(), 20000, 42);
        CHECK(std::abs(a.mean - 2.0 / 9.0) < 4.0 * a.std_error);
        CHECK(a == b);
        CHECK(std::memcmp(&a.mean, &b.mean, sizeof(double)) == 0);
    }
    SECTION("(2,3) parity gate against the projector trace") {
        const auto u = parity_gate(2, 3);
        const auto est = entangling_power_mc(u, 20000, 43);
        CHECK(std::abs(est.mean - entangling_power_direct(u)) < 4.0 * est.std_error);
    }
    SECTION("thread count does not change the result") {
        const auto u = haar_operator(2, 3, 68, 0);
        CHECK(entangling_power_mc(u, 3001, 5, 1) == entangling_power_mc(u, 3001, 5, 7));
    }
    CHECK_THROWS_AS(entangling_power_mc(cnot_gate(), 1, 0), InvalidInputError);
}

TEST_CASE("two-term concurrence", "[measures]") {
    SECTION("CNOT as 1 I(x)I - 2 Pz(x)Px") {
        const TwoTermDecomposition d(1.0, DenseMatrix::identity(2), DenseMatrix::identity(2), -2.0,
                                     pauli_projector(PauliAxis::z), pauli_projector(PauliAxis::x));
        CHECK(max_abs_diff(d.materialize(), cnot_gate().op()) < 1e-15);
        CHECK(concurrence_two_term(d) == Approx(1.0).margin(1e-14));
    }
    SECTION("proportional pair gives exactly zero") {
        auto s = RandomStream(71);
        const auto a1 = haar_unitary(3, s);
        const TwoTermDecomposition d(0.6, a1, haar_unitary(2, s), Complex{0.0, 0.8}, a1 * 3.0, haar_unitary(2, s));
        CHECK(concurrence_two_term(d) == 0.0);
        CHECK_THROWS_AS(reduce_to_two_qubit(d), DegenerateDecompositionError);
    }
    SECTION("sigma_z chain gives |sin 2 theta|") {
        for (double theta : {0.0, 0.1, std::numbers::pi / 4.0, 1.2, 2.9}) {
            const auto d = two_term_decomposition(ZchainGate{theta, 3, 1});
            CHECK(concurrence_two_term(d) == Approx(std::abs(std::sin(2.0 * theta))).margin(1e-12));
        }
    }
    SECTION("zero operator") {
        const TwoTermDecomposition d(0.0, DenseMatrix::identity(2), DenseMatrix::identity(2), 0.0,
                                     DenseMatrix::identity(2), DenseMatrix::identity(2));
        CHECK_THROWS_AS(concurrence_two_term(d), InvalidInputError);
    }
    SECTION("zero-norm factor is a degenerate, separable case") {
        const TwoTermDecomposition d(1.0, DenseMatrix::identity(2), DenseMatrix::identity(2), 1.0, DenseMatrix(2, 2),
                                     sigma_x());
        CHECK(concurrence_two_term(d) == 0.0);
    }
    SECTION("non-unitary operators use the computed HS norm") {
        // 3 * CNOT has the same operator state as CNOT
        const TwoTermDecomposition d(3.0, DenseMatrix::identity(2), DenseMatrix::identity(2), -6.0,
                                     pauli_projector(PauliAxis::z), pauli_projector(PauliAxis::x));
        CHECK(concurrence_two_term(d) == Approx(1.0).margin(1e-14));
    }
    SECTION("mismatched shapes") {
        CHECK_THROWS_AS(TwoTermDecomposition(1.0, DenseMatrix::identity(2), DenseMatrix::identity(2), 1.0,
                                             DenseMatrix::identity(3), DenseMatrix::identity(2)),
                        DimensionError);
    }
}

TEST_CASE("two-qubit reduction", "[measures]") {
    SECTION("CNOT") {
        // |I>=I/sqrt2, |Pz>=Pz, <I|Pz> = 1/sqrt2 -> M1 = M2 = 1/sqrt2;
        // mu~ = 1 * sqrt2 * sqrt2 / 2 = 1, nu~ = -2 * 1 * 1 / 2 = -1;
        // a00 = 1/sqrt2 - 1/sqrt2 = 0, a01 = 1/sqrt2, a10 = -1/sqrt2.
        const auto r = reduce_to_two_qubit(two_term_decomposition(CnotGate{}));
        const double h = 1.0 / std::sqrt(2.0);
        CHECK(r.m1 == Approx(h).margin(1e-14));
        CHECK(r.m2 == Approx(h).margin(1e-14));
        CHECK(std::abs(r.mu_tilde - Complex{1.0, 0.0}) < 1e-14);
        CHECK(std::abs(r.nu_tilde - Complex{-1.0, 0.0}) < 1e-14);
        CHECK(std::abs(r.amplitudes[0]) < 1e-14);
        CHECK(std::abs(r.amplitudes[1] - Complex{h, 0.0}) < 1e-14);
        CHECK(std::abs(r.amplitudes[2] - Complex{-h, 0.0}) < 1e-14);
        CHECK(r.amplitudes[3] == Complex{0.0, 0.0});
        CHECK(pure_state_concurrence(r) == Approx(1.0).margin(1e-14));
    }
    SECTION("orthogonal self-inverse case") {
        const auto r = reduce_to_two_qubit(two_term_decomposition(ZchainGate{0.3, 4, 2}));
        CHECK(r.m1 == Approx(1.0).margin(1e-15));
        CHECK(r.m2 == Approx(1.0).margin(1e-15));
        CHECK(std::abs(r.amplitudes[0]) < 1e-15);
        CHECK(pure_state_concurrence(r) == Approx(std::sin(0.6)).margin(1e-14));
    }
    SECTION("generic decompositions agree with the closed form") {
        for (std::uint64_t i = 0; i < 20; ++i) {
            auto s = RandomStream::substream(72, i);
            const TwoTermDecomposition d(s.next_complex_gaussian(), haar_unitary(2, s) * s.next_complex_gaussian(),
                                         haar_unitary(3, s), s.next_complex_gaussian(), haar_unitary(2, s),
                                         haar_unitary(3, s) * s.next_complex_gaussian());
            const auto r = reduce_to_two_qubit(d);
            double total = 0.0;
            for (const auto& a : r.amplitudes) total += std::norm(a);
            CHECK(total == Approx(1.0).margin(1e-10));
            CHECK(r.m1 >= 0.0);
            CHECK(r.m1 <= 1.0);
            const double c = concurrence_two_term(d);
            CHECK(std::abs(pure_state_concurrence(r) - c) < 1e-10);
            // third route: Schmidt spectrum of the materialized operator
            const OperatorState u(d.materialize(), d.bipartition());
            CHECK(std::abs(concurrence_from_spectrum(schmidt_spectrum(u)) - c) < 1e-9);
            CHECK(std::abs(spectrum_e(u) - c * c / 2.0) < 1e-9);
            CHECK(std::abs(concurrence_two_term(d.adjoint()) - c) < 1e-10);
        }
    }
}

TEST_CASE("pure-state and spectrum concurrence", "[measures]") {
    const double h = 1.0 / std::sqrt(2.0);
    CHECK(pure_state_concurrence({1.0, 0.0, 0.0, 0.0, {0.0, h, h, 0.0}}) == Approx(1.0));
    CHECK(pure_state_concurrence({1.0, 0.0, 0.0, 0.0, {1.0, 0.0, 0.0, 0.0}}) == 0.0);
    CHECK(concurrence_from_spectrum(SchmidtSpectrum::from_values({1.0, 0.0, 0.0, 0.0})) == 0.0);
    CHECK(concurrence_from_spectrum(SchmidtSpectrum::from_values({h, h, 0.0, 0.0})) == Approx(1.0));
    CHECK_THROWS_AS(concurrence_from_spectrum(schmidt_spectrum(swap_gate(2))), RankError);
}

TEST_CASE("measure report", "[measures]") {
    SECTION("CNOT") {
        const auto r = measure_report(cnot_gate(), two_term_decomposition(CnotGate{}));
        CHECK(r.e == Approx(0.5).margin(1e-12));
        CHECK(*r.e_fold4 == Approx(0.5).margin(1e-12));
        CHECK(*r.e_tilde == Approx(0.75).margin(1e-12));
        CHECK(*r.ep == Approx(2.0 / 9.0).margin(1e-12));
        CHECK(*r.ep_direct == Approx(2.0 / 9.0).margin(1e-12));
        CHECK(*r.concurrence == Approx(1.0).margin(1e-12));
        CHECK(*r.concurrence_two_term == Approx(1.0).margin(1e-12));
        CHECK(r.schmidt_rank == 2);
    }
    SECTION("identity") {
        const auto r = measure_report(OperatorState(DenseMatrix::identity(6), Bipartition(2, 3)));
        CHECK(r.e == 0.0);
        CHECK(*r.e_tilde == Approx(1.0 - 1.0 / 6.0).margin(1e-12));
        CHECK(std::abs(*r.ep) < 1e-14);
        CHECK(*r.concurrence == 0.0);
        CHECK(r.schmidt_rank == 1);
    }
    SECTION("SWAP") {
        const auto r = measure_report(swap_gate(2));
        CHECK(r.e == Approx(0.75).margin(1e-12));
        CHECK(std::abs(*r.e_tilde) < 1e-14);
        CHECK(std::abs(*r.ep) < 1e-14);
        CHECK_FALSE(r.concurrence.has_value());
        CHECK(r.schmidt_rank == 4);
    }
    SECTION("size cap leaves fold-4 fields empty") {
        const auto r = measure_report(parity_gate(3, 6));
        CHECK(r.fold4_unavailable.has_value());
        CHECK_FALSE(r.e_tilde.has_value());
        CHECK_FALSE(r.ep.has_value());
        CHECK(r.concurrence.has_value());
        const auto forced = measure_report(parity_gate(3, 6), {}, {.force = true});
        CHECK(forced.e_tilde.has_value());
    }
    SECTION("decomposition must match the operator") {
        CHECK_THROWS_AS(measure_report(cnot_gate(), two_term_decomposition(ParityGate{2, 2})), InvalidInputError);
    }
}
