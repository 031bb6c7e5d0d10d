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

// Every measure of the CNOT gate, with each computational route side by side.

#include <iostream>

#include "opent/io.hpp"
#include "opent/opent.hpp"

int main() {
    const auto u = opent::cnot_gate();
    const auto report = opent::measure_report(u, opent::two_term_decomposition(opent::CnotGate{}));
    opent::render_report(std::cout, report, u.bipartition());

    const auto spectrum = opent::schmidt_spectrum(u);
    std::cout << "schmidt coefficients";
    for (double l : spectrum.lambdas()) std::cout << ' ' << l;
    std::cout << '\n';
}
