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

// Independent reference implementations used only by the tests.
#ifndef CYCLOPT_TESTS_ORACLES_HPP
#define CYCLOPT_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "cyclopt/field.hpp"
#include "cyclopt/poly.hpp"

namespace oracle {

using cyclopt::Poly;
using cyclopt::PrimeModulus;
using cyclopt::u64;

// All monic polynomials of the given degree.
inline std::vector<Poly> monic_of_degree(PrimeModulus mod, int d) {
    std::vector<Poly> out;
    const u64 p = mod.value();
    u64 total = 1;
    for (int i = 0; i < d; ++i) total *= p;
    for (u64 code = 0; code < total; ++code) {
        std::vector<long long> c(static_cast<std::size_t>(d) + 1, 0);
        u64 v = code;
        for (int i = 0; i < d; ++i) {
            c[static_cast<std::size_t>(i)] = static_cast<long long>(v % p);
            v /= p;
        }
        c[static_cast<std::size_t>(d)] = 1;
        out.emplace_back(mod, c);
    }
    return out;
}

// Trial division by every monic polynomial of degree <= deg/2.
inline bool naive_irreducible(const Poly& f) {
    if (f.degree() < 1) return false;
    for (int d = 1; 2 * d <= f.degree(); ++d) {
        for (const Poly& g : monic_of_degree(f.modulus(), d)) {
            if ((f % g).is_zero()) return false;
        }
    }
    return true;
}

// Cantor-Zassenhaus split of a squarefree monic f whose irreducible factors
// all have degree d (odd p). Returns the factors sorted by coefficients.
inline std::vector<Poly> equal_degree_split(const Poly& f, int d, std::uint64_t seed = 1) {
    const PrimeModulus mod = f.modulus();
    const u64 p = mod.value();
    std::vector<Poly> done, work{cyclopt::monic(f)};
    std::mt19937_64 rng(seed);
    u64 q = 1;
    for (int i = 0; i < d; ++i) q *= p;
    const u64 expo = (q - 1) / 2;
    while (!work.empty()) {
        Poly g = work.back();
        work.pop_back();
        if (g.degree() == d) {
            done.push_back(g);
            continue;
        }
        for (;;) {
            std::vector<long long> c(static_cast<std::size_t>(g.degree()));
            for (auto& v : c) v = static_cast<long long>(rng() % p);
            Poly a(mod, c);
            if (a.degree() < 1) continue;
            Poly b = cyclopt::powmod(a, expo, g) - Poly::constant(mod, 1);
            if (b.is_zero()) continue;
            Poly h = cyclopt::gcd(g, b);
            if (h.degree() > 0 && h.degree() < g.degree()) {
                work.push_back(h);
                work.push_back(cyclopt::monic(cyclopt::divmod(g, h).first));
                break;
            }
        }
    }
    std::sort(done.begin(), done.end(), [](const Poly& x, const Poly& y) { return x.coeffs() < y.coeffs(); });
    return done;
}

// Coset {j p^r mod n} by iterating until it closes.
inline std::set<u64> naive_coset(u64 j, u64 p, u64 n) {
    std::set<u64> s;
    u64 x = j % n;
    while (s.insert(x).second) x = static_cast<u64>((static_cast<unsigned __int128>(x) * p) % n);
    return s;
}

// Multiplication in F_p[x]/(pi) through generic polynomial arithmetic.
inline std::vector<std::uint32_t> poly_field_mul(const cyclopt::Field& f, const cyclopt::ExtElem& a,
                                                 const cyclopt::ExtElem& b) {
    const PrimeModulus mod = f.modulus();
    auto to_poly = [&](const cyclopt::ExtElem& x) {
        std::vector<long long> c(x.coeffs.begin(), x.coeffs.end());
        return Poly(mod, c);
    };
    const Poly r = (to_poly(a) * to_poly(b)) % f.pi();
    std::vector<std::uint32_t> out(static_cast<std::size_t>(f.m()), 0);
    for (int i = 0; i <= r.degree(); ++i) out[static_cast<std::size_t>(i)] = r[static_cast<std::size_t>(i)];
    return out;
}

}  // namespace oracle

#endif  // CYCLOPT_TESTS_ORACLES_HPP
