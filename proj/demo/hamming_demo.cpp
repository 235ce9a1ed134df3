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

// The extended Hamming code from x^8 + x^2 + t x + 1 over F_2(t).

#include <iostream>

#include "qlin/qlin.hpp"

int main() {
    using namespace qlin;
    const RatPoly f = parse_poly("x^8 + x^2 + t*x + 1", RatFuncField::over(2, 1));
    const auto lin = minimal_qpoly(f, 2);
    std::cout << "m(f) = " << lin.m << ", L = " << to_string(lin.L) << "\n";
    const PipelineResult res = code_pipeline(f, specialization_points(2, 2), f.degree() - lin.m, std::nullopt);
    for (const auto& a : res.attempts) std::cout << "  t -> " << a.point.to_string() << ": " << a.reason << "\n";
    if (!res.code) return 1;
    const CodeParams& p = *res.params;
    std::cout << "[" << p.n << ", " << p.k << ", " << *p.d << "] code, weights";
    for (const auto& [w, n] : p.weights) std::cout << " " << w << ":" << n;
    const auto blocks = to_one_based(supports_of_weight(*res.code, 4));
    std::cout << "\nweight-4 supports form S(3,4,8): " << (verify_steiner(blocks, 3, 4, 8).pass ? "yes" : "no") << "\n";
    return 0;
}
