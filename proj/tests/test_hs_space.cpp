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

#include "opent/gates.hpp"
#include "opent/hs_space.hpp"
#include "opent/sampling.hpp"
#include "oracles.hpp"

using namespace opent;
using Catch::Approx;

TEST_CASE("Hilbert-Schmidt inner product and norm", "[hs]") {
    CHECK(hs_inner(sigma_z(), sigma_z()) == Complex{2.0, 0.0});
    CHECK(hs_inner(sigma_x(), sigma_z()) == Complex{0.0, 0.0});
    CHECK(hs_inner(DenseMatrix::identity(2), pauli_projector(PauliAxis::z)) == Complex{1.0, 0.0});
    CHECK(hs_norm(DenseMatrix::identity(5)) == Approx(std::sqrt(5.0)));
    CHECK(hs_norm(sigma_y()) == Approx(std::sqrt(2.0)));
    CHECK(hs_norm(cnot_gate().op()) == Approx(2.0));
    CHECK_THROWS_AS(hs_inner(DenseMatrix(2, 2), DenseMatrix(3, 3)), DimensionError);

    for (std::uint64_t i = 0; i < 10; ++i) {
        auto s = RandomStream::substream(21, i);
        const auto a = haar_unitary(3, s) * s.next_complex_gaussian();
        const auto b = haar_unitary(3, s);
        CHECK(std::abs(hs_inner(a, b) - std::conj(hs_inner(b, a))) < 1e-14);
    }
}

TEST_CASE("OperatorState invariants", "[hs]") {
    CHECK_THROWS_AS(OperatorState(DenseMatrix(4, 4), Bipartition(2, 2)), InvalidInputError);
    CHECK_THROWS_AS(OperatorState(DenseMatrix::identity(4), Bipartition(2, 3)), DimensionError);
    auto s = RandomStream(5);
    const OperatorState u(haar_unitary(6, s), Bipartition(2, 3));
    CHECK(u.hs_norm() * u.hs_norm() == Approx(6.0).epsilon(1e-8));
}

TEST_CASE("realign", "[hs]") {
    SECTION("product operators realign to rank one outer products") {
        auto s = RandomStream(7);
        const auto a = haar_unitary(2, s);
        const auto b = haar_unitary(3, s);
        const auto m = realign(kron(a, b), Bipartition(2, 3));
        REQUIRE(m.rows() == 4);
        REQUIRE(m.cols() == 9);
        for (std::size_t i1 = 0; i1 < 2; ++i1)
            for (std::size_t j1 = 0; j1 < 2; ++j1)
                for (std::size_t i2 = 0; i2 < 3; ++i2)
                    for (std::size_t j2 = 0; j2 < 3; ++j2)
                        CHECK(std::abs(m(i1 * 2 + j1, i2 * 3 + j2) - a(i1, j1) * b(i2, j2)) < 1e-15);
        const auto sv = oracle::singular_values_by_eigen(m);
        CHECK(sv[1] < 1e-7);
    }
    SECTION("CNOT realigns to singular values (sqrt2, sqrt2, 0, 0)") {
        const auto m = realign(cnot_gate());
        const auto sv = oracle::singular_values_by_eigen(m);
        CHECK(sv[0] == Approx(std::sqrt(2.0)));
        CHECK(sv[1] == Approx(std::sqrt(2.0)));
        CHECK(sv[2] < 1e-7);
        CHECK(sv[3] < 1e-7);
    }
    SECTION("entry permutation: Frobenius norm equals the HS norm, index oracle agrees") {
        for (std::uint64_t i = 0; i < 20; ++i) {
            auto s = RandomStream::substream(22, i);
            const OperatorState u(haar_unitary(6, s), Bipartition(3, 2));
            const auto m = realign(u);
            CHECK(hs_norm(m) == Approx(u.hs_norm()).epsilon(1e-14));
            CHECK(max_abs_diff(m, oracle::from_eigen(oracle::realign_by_indices(u.op(), 3, 2))) == 0.0);
        }
    }
}

TEST_CASE("Schmidt spectrum golden values", "[hs]") {
    SECTION("identity is a product operator") {
        const auto sp = schmidt_spectrum(OperatorState(DenseMatrix::identity(4), Bipartition(2, 2)));
        CHECK(sp[0] == Approx(1.0));
        CHECK(sp[1] == 0.0);
        CHECK(sp.rank() == 1);
    }
    SECTION("CNOT") {
        // oracle: eigen-route singular values of the realigned 4x4 matrix, over ||CNOT|| = 2
        const auto ref = oracle::singular_values_by_eigen(realign(cnot_gate()));
        const auto sp = schmidt_spectrum(cnot_gate());
        REQUIRE(sp.size() == 4);
        CHECK(sp[0] == Approx(ref[0] / 2.0).margin(1e-12));
        CHECK(sp[0] == Approx(1.0 / std::sqrt(2.0)).margin(1e-12));
        CHECK(sp[1] == Approx(1.0 / std::sqrt(2.0)).margin(1e-12));
        CHECK(sp[2] == 0.0);
        CHECK(sp.rank() == 2);
    }
    SECTION("SWAP has a flat spectrum") {
        const auto sp = schmidt_spectrum(swap_gate(2));
        for (double l : sp.lambdas()) CHECK(l == Approx(0.5).margin(1e-12));
        CHECK(sp.rank() == 4);
    }
}

TEST_CASE("Schmidt spectrum properties", "[hs][property]") {
    const std::pair<std::size_t, std::size_t> splits[] = {{2, 2}, {2, 3}, {3, 2}, {3, 3}};
    for (const auto& [d1, d2] : splits) {
        const Bipartition bp(d1, d2);
        for (std::uint64_t i = 0; i < 10; ++i) {
            auto s = RandomStream::substream(23 + d1 * 7 + d2, i);
            const OperatorState u(haar_unitary(bp.dim(), s), bp);
            const auto sp = schmidt_spectrum(u);
            CHECK(sp.size() == std::min(d1 * d1, d2 * d2));
            double sum = 0.0;
            for (double l : sp.lambdas()) {
                CHECK(l >= 0.0);
                CHECK(l <= 1.0);
                sum += l * l;
            }
            CHECK(sum == Approx(1.0).margin(1e-10));
            CHECK(std::is_sorted(sp.lambdas().begin(), sp.lambdas().end(), std::greater<>()));

            // local unitary invariance on both sides
            const auto l1 = haar_unitary(d1, s);
            const auto l2 = haar_unitary(d2, s);
            const auto r1 = haar_unitary(d1, s);
            const auto r2 = haar_unitary(d2, s);
            const auto moved = schmidt_spectrum(OperatorState(kron(l1, l2) * u.op() * kron(r1, r2), bp));
            const auto dagger = schmidt_spectrum(u.adjoint());
            for (std::size_t k = 0; k < sp.size(); ++k) {
                CHECK(std::abs(moved[k] - sp[k]) < 1e-10);
                CHECK(std::abs(dagger[k] - sp[k]) < 1e-10);
            }

            // independent eigen-route spectrum
            const auto ref = oracle::singular_values_by_eigen(realign(u));
            for (std::size_t k = 0; k < sp.size(); ++k) CHECK(std::abs(sp[k] - ref[k] / u.hs_norm()) < 1e-7);
        }
    }
}

TEST_CASE("SchmidtSpectrum::from_values validates", "[hs]") {
    CHECK_THROWS_AS(SchmidtSpectrum::from_values({0.5, 0.5}), InvalidInputError);
    CHECK_THROWS_AS(SchmidtSpectrum::from_values({-1.0}), InvalidInputError);
    const auto sp = SchmidtSpectrum::from_values({0.0, 1.0, 1e-13});
    CHECK(sp[0] == 1.0);
    CHECK(sp[1] == 0.0);
    CHECK(sp[2] == 0.0);
}
