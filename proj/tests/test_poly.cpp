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

#include <map>
#include <random>
#include <set>

#include "doctest.h"

#include "cyclopt/errors.hpp"
#include "cyclopt/poly.hpp"
#include "support/oracles.hpp"

using namespace cyclopt;

namespace {

Poly random_poly(PrimeModulus mod, int deg, std::mt19937_64& rng) {
    std::vector<long long> c(static_cast<std::size_t>(deg) + 1);
    for (auto& v : c) v = static_cast<long long>(rng() % mod.value());
    return Poly(mod, c);
}

}  // namespace

TEST_CASE("ring identities on random polynomials") {
    std::mt19937_64 rng(3);
    for (u64 p : {5ULL, 7ULL, 11ULL}) {
        const PrimeModulus mod(p);
        for (int it = 0; it < 60; ++it) {
            const Poly a = random_poly(mod, static_cast<int>(rng() % 9), rng);
            const Poly b = random_poly(mod, static_cast<int>(rng() % 9), rng);
            const Poly c = random_poly(mod, static_cast<int>(rng() % 5), rng);
            CHECK(a * b == b * a);
            CHECK(a * (b + c) == a * b + a * c);
            CHECK((a - b) + b == a);
            CHECK(a + (-a) == Poly(mod));
            if (!b.is_zero()) {
                auto [q, r] = divmod(a, b);
                CHECK(q * b + r == a);
                CHECK(r.degree() < b.degree());
            }
        }
    }
}

TEST_CASE("degree, evaluation and parsing") {
    const PrimeModulus mod(7);
    const Poly z(mod);
    CHECK(z.degree() == -1);
    CHECK(z.is_zero());
    const Poly f(mod, {3, 4, 5, 0, 1});
    CHECK(f.degree() == 4);
    CHECK(f.is_monic());
    CHECK(f.evaluate(2) == (3 + 8 + 20 + 16) % 7);
    CHECK(to_coeff_list(f) == "3,4,5,0,1");
    CHECK(to_string(f) == "x^4 + 5x^2 + 4x + 3");
    CHECK(parse_coeff_list(mod, "3,4,5,0,1") == f);
    CHECK(parse_coeff_list(mod, " -1, 8 ") == Poly(mod, {6, 1}));
    CHECK_THROWS_AS(parse_coeff_list(mod, "1,,2"), InvalidArgument);
    CHECK_THROWS_AS(parse_coeff_list(mod, "a"), InvalidArgument);
    CHECK_THROWS_AS(divmod(f, z), InvalidArgument);
    CHECK(Poly(mod, {-1}) == Poly(mod, {6}));
    CHECK(Poly(mod, {1, 0, 0}).degree() == 0);
}

TEST_CASE("gcd properties") {
    std::mt19937_64 rng(5);
    const PrimeModulus mod(5);
    for (int it = 0; it < 80; ++it) {
        const Poly a = random_poly(mod, 1 + static_cast<int>(rng() % 7), rng);
        const Poly b = random_poly(mod, 1 + static_cast<int>(rng() % 7), rng);
        const Poly c = random_poly(mod, 1 + static_cast<int>(rng() % 3), rng);
        if (a.is_zero() || b.is_zero() || c.is_zero()) continue;
        const Poly g = gcd(a * c, b * c);
        CHECK(g.is_monic());
        CHECK((a * c % g).is_zero());
        CHECK((b * c % g).is_zero());
        CHECK((g % monic(c)).is_zero());
        const Poly ga = divmod(a * c, g).first, gb = divmod(b * c, g).first;
        CHECK(gcd(ga, gb).degree() == 0);
    }
    CHECK_THROWS_AS(gcd(Poly(mod), Poly(mod)), InvalidArgument);
}

TEST_CASE("powmod matches repeated multiplication") {
    std::mt19937_64 rng(9);
    const PrimeModulus mod(7);
    const Poly m(mod, {4, 0, 6, 1});
    for (int it = 0; it < 20; ++it) {
        const Poly b = random_poly(mod, 4, rng);
        const u64 e = rng() % 60;
        Poly naive = Poly::constant(mod, 1) % m;
        for (u64 i = 0; i < e; ++i) naive = naive * b % m;
        CHECK(powmod(b, e, m) == naive);
    }
    CHECK(pow(Poly(mod, {1, 1}), 7) == Poly(mod, {1, 0, 0, 0, 0, 0, 0, 1}));  // Frobenius
}

TEST_CASE("is_irreducible agrees with trial division") {
    for (u64 p : {3ULL, 5ULL}) {
        const PrimeModulus mod(p);
        for (int d = 1; d <= 4; ++d) {
            int count = 0;
            for (const Poly& f : oracle::monic_of_degree(mod, d)) {
                const bool irr = is_irreducible(f);
                CHECK(irr == oracle::naive_irreducible(f));
                count += irr;
            }
            // (1/d) sum_{t | d} mu(t) p^(d/t)
            const long long pp = static_cast<long long>(p);
            const long long expect[] = {0, pp, (pp * pp - pp) / 2, (pp * pp * pp - pp) / 3,
                                        (pp * pp * pp * pp - pp * pp) / 4};
            CHECK(count == expect[d]);
        }
    }
}

TEST_CASE("distinct-degree profile of known products") {
    std::mt19937_64 rng(13);
    const PrimeModulus mod(5);
    std::vector<std::vector<Poly>> irr(5);
    for (int d = 1; d <= 4; ++d) {
        for (const Poly& f : oracle::monic_of_degree(mod, d)) {
            if (oracle::naive_irreducible(f)) irr[static_cast<std::size_t>(d)].push_back(f);
        }
    }
    for (int it = 0; it < 40; ++it) {
        Poly f = Poly::constant(mod, 3);
        std::map<std::pair<int, int>, int> expect;  // (degree, multiplicity) -> count
        std::set<std::vector<std::uint32_t>> used;
        const int parts = 1 + static_cast<int>(rng() % 4);
        for (int i = 0; i < parts; ++i) {
            const int d = 1 + static_cast<int>(rng() % 4);
            const auto& pool = irr[static_cast<std::size_t>(d)];
            const Poly& g = pool[rng() % pool.size()];
            if (!used.insert(g.coeffs()).second) continue;
            const int mult = 1 + static_cast<int>(rng() % 3);
            f = f * pow(g, static_cast<unsigned>(mult));
            expect[{d, mult}] += 1;
        }
        const DegreeProfile prof = distinct_degree_profile(f, f.degree());
        CHECK(prof.complete());
        CHECK(prof.leading == 3);
        std::map<std::pair<int, int>, int> got;
        for (const auto& g : prof.groups) got[{g.degree, g.multiplicity}] += g.count();
        CHECK(got == expect);
    }
}

TEST_CASE("early stop leaves a large irreducible cofactor unresolved") {
    const PrimeModulus mod(5);
    // x^6 + 3x^5 + 3x^4 + 3x^3 + 3x^2 + 3x + 1 is irreducible of degree 6.
    const Poly f(mod, {1, 3, 3, 3, 3, 3, 1});
    const DegreeProfile prof = distinct_degree_profile(f, 2);
    CHECK_FALSE(prof.complete());
    CHECK(prof.unresolved == f);
    CHECK(distinct_degree_profile(f, 6).complete());
}

TEST_CASE("fixed polynomials of the quinary arguments") {
    const PrimeModulus mod(5);
    const Poly x = Poly::x(mod), one = Poly::constant(mod, 1);
    const Poly f1 = pow(x + one, 19) + pow(x, 19) + one;
    // gcd(f1, x^(5^8) - x) as printed
    const Poly printed(mod, {4, 2, 4, 2, 4, 0, 4, 0, 4, 0, 1, 0, 1, 0, 1, 3, 1, 3, 1});
    CHECK(gcd(f1, powmod(x, 390625, f1) - x) == printed);
    for (u64 r : {5ULL, 25ULL, 625ULL}) CHECK(gcd(f1, powmod(x, r, f1) - x) == Poly(mod, {-1, 0, 1}));

    const Poly x3 = pow(x, 3), y3 = pow(x + one, 3);
    const Poly case1 = y3 * x3 + y3 + x3, case2 = y3 * x3 + y3 - x3;
    const Poly case3 = y3 * x3 - y3 + x3, case4 = y3 * x3 - y3 - x3;
    CHECK(case1 == Poly(mod, {1, 3, 3, 3, 3, 3, 1}));
    CHECK(case2 == Poly(mod, {1, 3, 3, 1, 3, 3, 1}));
    CHECK(case3 == Poly(mod, {4, 2, 2, 1, 3, 3, 1}));
    CHECK(case4 == Poly(mod, {4, 2, 2, 4, 3, 3, 1}));
    CHECK(case2 == pow(Poly(mod, {-1, 1}), 2) * pow(Poly(mod, {2, 1}), 2) * pow(Poly(mod, {-2, 1}), 2));
    for (const Poly* c : {&case1, &case3, &case4}) {
        CHECK(is_irreducible(*c));
        CHECK(oracle::naive_irreducible(*c));
    }
}
