/*
   Copyright 2026 The qlin Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Builds the binary Golay code from the roots of x^24 + x + t and prints its octad structure.

#include <iostream>

#include "qlin/qlin.hpp"

int main() {
    using namespace qlin;
    const GolayReport rep = golay_pipeline();
    const Attempt& acc = *rep.pipeline.accepted();
    std::cout << "f = " << to_string(golay_polynomial()) << "\n";
    std::cout << "t -> " << acc.point.to_string() << " in " << acc.point.field().name() << ", cycle type "
              << cycle_notation(acc.cycle) << "\n";
    const CodeParams& p = *rep.pipeline.params;
    std::cout << "[" << p.n << ", " << p.k << ", " << *p.d << "] code, weights";
    for (const auto& [w, n] : p.weights) std::cout << " " << w << ":" << n;
    std::cout << "\n" << rep.octads.size() << " octads, S(5,8,24) " << (rep.steiner.pass ? "holds" : "fails") << "\n";
    std::cout << "first octad (1-based):";
    for (auto i : rep.octads.front()) std::cout << " " << i + 1;
    std::cout << "\n";
    return rep.steiner.pass ? 0 : 1;
}
