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

// Concurrence of the spin-1/2 (x) spin-j coupling over one period, as CSV.
// Usage: spin_sweep [two_j] [steps]

#include <cstdlib>
#include <iostream>
#include <numbers>

#include "opent/io.hpp"

int main(int argc, char** argv) {
    const int two_j = argc > 1 ? std::atoi(argv[1]) : 2;
    const std::size_t steps = argc > 2 ? std::strtoul(argv[2], nullptr, 10) : 50;
    try {
        const auto thetas = opent::sweep_angles(0.0, std::numbers::pi / 2.0, steps);
        const auto rows = opent::sweep(opent::SpinGate{0.0, two_j}, thetas);
        opent::write_sweep_csv(std::cout, rows);
    } catch (const opent::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
