// Copyright 2026 The cyclopt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CYCLOPT_CODES_HPP
#define CYCLOPT_CODES_HPP

#include <array>
#include <cstdint>
#include <string>

#include "cyclopt/field.hpp"
#include "cyclopt/poly.hpp"

namespace cyclopt {

/// The cyclic code C_(1,e,s) over F_p of length n = p^m - 1 with generator
/// (x+1) m_alpha(x) m_{alpha^e}(x), s = n/2.
struct CodeSpec {
    FieldPtr field;
    u64 e = 0;
    u64 s = 0;
    std::array<u64, 3> nonzero_exponents{};
    Poly g;
    u64 n = 0;
    u64 k = 0;
    int coset_size_e = 0;

    int m() const noexcept { return field->m(); }
    std::uint32_t p() const noexcept { return field->p(); }
    /// e outside C_1 with |C_e| = m and m > 1: the setting where d <= 4 holds.
    bool full_size() const noexcept { return coset_size_e == field->m() && field->m() > 1; }
};

/// prod_{j in C_i} (x - alpha^j), computed in F_{p^m}[x] and projected onto
/// F_p. Throws InternalError if a coefficient is not Frobenius-invariant.
Poly minimal_polynomial(u64 i, const Field& f);

/// Throws InvalidArgument unless 1 <= e < n, CosetOverlap when e lies in C_1
/// or C_s. Verifies that g divides x^n - 1.
CodeSpec construct_code(u64 e, FieldPtr field);

/// Sphere-packing test for the exclusion of an [n, k, 5] code over F_p:
/// sum_{i<=2} C(n,i)(p-1)^i against p^(n-k), in exact big integers.
struct SpherePackingBound {
    std::string ball_volume;  // radius-2 Hamming ball size, decimal
    std::string space_volume;  // p^(n-k), decimal
    bool excludes_d5 = false;  // ball_volume > space_volume
    bool admits_d4 = false;  // radius-1 ball fits: 1 + n(p-1) <= p^(n-k)
};

SpherePackingBound sphere_packing_bound(u64 n, u64 k, u64 p);

/// True iff an [n, k, 4] code meets the bound that rules out [n, k, 5].
/// Throws InvalidArgument for d != 4, k >= n or a non-prime p.
bool sphere_packing_optimal(u64 n, u64 k, int d, u64 p);

}  // namespace cyclopt

#endif  // CYCLOPT_CODES_HPP
