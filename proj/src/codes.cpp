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

#include "cyclopt/codes.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include "cyclopt/cyclotomy.hpp"
#include "cyclopt/errors.hpp"

namespace cyclopt {

Poly minimal_polynomial(u64 i, const Field& f) {
    if (i >= f.n()) throw InvalidArgument("minimal_polynomial exponent out of range");
    const Coset c = coset_of(i, f.p(), f.m());
    // coefficients in F_{p^m}, ascending degree
    std::vector<ExtElem> acc{f.one()};
    for (u64 j : c.members) {
        const ExtElem root = f.neg(f.exp(j));
        std::vector<ExtElem> next(acc.size() + 1, f.zero());
        for (std::size_t t = 0; t < acc.size(); ++t) {
            next[t + 1] = f.add(next[t + 1], acc[t]);
            next[t] = f.add(next[t], f.mul(acc[t], root));
        }
        acc = std::move(next);
    }
    std::vector<std::uint32_t> base(acc.size());
    for (std::size_t t = 0; t < acc.size(); ++t) {
        if (!f.in_base_field(acc[t])) {
            throw InternalError("minimal polynomial of alpha^" + std::to_string(i) + " has a coefficient outside F_p");
        }
        base[t] = acc[t].coeffs[0];
    }
    return Poly::from_residues(f.modulus(), std::move(base));
}

CodeSpec construct_code(u64 e, FieldPtr field) {
    const Field& f = *field;
    const u64 n = f.n();
    if (e < 1 || e >= n) throw InvalidArgument("exponent e = " + std::to_string(e) + " outside [1, " + std::to_string(n - 1) + "]");
    const u64 s = n / 2;
    if (in_C1(s, f.p(), f.m())) throw CosetOverlap("C_s coincides with C_1 for this field");
    if (in_C1(e, f.p(), f.m())) throw CosetOverlap("e = " + std::to_string(e) + " lies in C_1");
    const Coset ce = coset_of(e, f.p(), f.m());
    if (ce.contains(s)) throw CosetOverlap("e = " + std::to_string(e) + " lies in C_s");

    const Poly m_s = minimal_polynomial(s, f);
    if (m_s != Poly(f.modulus(), {1, 1})) throw InternalError("minimal polynomial of alpha^s is not x + 1");
    Poly g = m_s * minimal_polynomial(1, f) * minimal_polynomial(e, f);

    // g | x^n - 1  <=>  x^n = 1 mod g
    if (powmod(Poly::x(f.modulus()), n, g) != Poly::constant(f.modulus(), 1)) {
        throw InternalError("generator polynomial does not divide x^n - 1");
    }
    const u64 k = n - static_cast<u64>(g.degree());
    const int size_e = static_cast<int>(ce.size());
    return CodeSpec{std::move(field), e, s, {1, e, s}, std::move(g), n, k, size_e};
}

SpherePackingBound sphere_packing_bound(u64 n, u64 k, u64 p) {
    using boost::multiprecision::cpp_int;
    if (k >= n) throw InvalidArgument("sphere-packing bound needs k < n");
    if (!is_prime(p)) throw InvalidArgument("sphere-packing bound needs a prime alphabet");
    const cpp_int nn = n, q1 = p - 1;
    const cpp_int ball1 = 1 + nn * q1;
    const cpp_int ball2 = ball1 + nn * (nn - 1) / 2 * q1 * q1;
    const cpp_int space = boost::multiprecision::pow(cpp_int(p), static_cast<unsigned>(n - k));
    SpherePackingBound b;
    b.ball_volume = ball2.str();
    b.space_volume = space.str();
    b.excludes_d5 = ball2 > space;
    b.admits_d4 = ball1 <= space;
    return b;
}

bool sphere_packing_optimal(u64 n, u64 k, int d, u64 p) {
    if (d != 4) throw InvalidArgument("optimality check is defined for d = 4 only");
    auto b = sphere_packing_bound(n, k, p);
    return b.excludes_d5 && b.admits_d4;
}

}  // namespace cyclopt
