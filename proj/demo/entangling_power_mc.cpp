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

// Entangling power of random two-qutrit unitaries: projector trace against
// Monte-Carlo averaging over Haar product states.

#include <iostream>

#include "opent/io.hpp"
#include "opent/opent.hpp"

int main() {
    for (std::uint64_t i = 0; i < 3; ++i) {
        auto stream = opent::RandomStream::substream(2026, i);
        const opent::OperatorState u(opent::haar_unitary(9, stream), opent::Bipartition(3, 3));
        const double exact = opent::entangling_power_direct(u);
        const auto mc = opent::entangling_power_mc(u, 5000, 100 + i);
        std::cout << "unitary " << i << "  trace " << opent::format_g17(exact) << "  ";
        opent::render_mc(std::cout, mc);
    }
}
