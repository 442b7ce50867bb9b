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

#include "doctest.h"

#include "cyclopt/codes.hpp"
#include "cyclopt/cyclotomy.hpp"
#include "cyclopt/errors.hpp"

using namespace cyclopt;

TEST_CASE("minimal polynomials vanish at the coset and are irreducible") {
    for (auto [p, m] : {std::pair<u64, int>{5, 2}, {7, 2}, {5, 3}}) {
        const FieldPtr f = build_field(p, m);
        for (u64 i : coset_leaders(p, m)) {
            const Poly mp = minimal_polynomial(i, *f);
            CHECK(mp.is_monic());
            CHECK(mp.degree() == coset_size(i, p, m));
            CHECK(is_irreducible(mp));
            for (u64 j : coset_of(i, p, m).members) {
                ExtElem acc = f->zero();
                const ExtElem x = f->pow(f->alpha(), j);
                for (int k = mp.degree(); k >= 0; --k) acc = f->add(f->mul(acc, x), f->embed(mp[static_cast<std::size_t>(k)]));
                CHECK(f->is_zero(acc));
            }
        }
    }
}

TEST_CASE("construct_code: generator, dimension and gates") {
    const FieldPtr f = build_field(5, 2);
    const CodeSpec c = construct_code(7, f);
    CHECK(c.n == 24);
    CHECK(c.s == 12);
    CHECK(c.k == c.n - static_cast<u64>(c.g.degree()));
    CHECK(c.g.degree() == 1 + 2 + 2);
    CHECK(c.full_size());
    const PrimeModulus mod(5);
    Poly xn1 = pow(Poly::x(mod), 24) - Poly::constant(mod, 1);
    CHECK((xn1 % c.g).is_zero());
    CHECK(c.g == minimal_polynomial(12, *f) * minimal_polynomial(1, *f) * minimal_polynomial(7, *f));

    CHECK_THROWS_AS(construct_code(1, f), CosetOverlap);
    CHECK_THROWS_AS(construct_code(5, f), CosetOverlap);   // 5 is in C_1
    CHECK_THROWS_AS(construct_code(12, f), CosetOverlap);  // e = s
    CHECK_THROWS_AS(construct_code(0, f), InvalidArgument);
    CHECK_THROWS_AS(construct_code(24, f), InvalidArgument);

    const CodeSpec small = construct_code(6, f);  // C_6 = {6}: |C_e| = 1 < m
    CHECK(small.coset_size_e == 1);
    CHECK_FALSE(small.full_size());
    CHECK(small.k == 24 - 4);
}

TEST_CASE("golden generator polynomials") {
    struct Golden {
        u64 p;
        int m;
        u64 e;
        const char* pi;
        std::vector<long long> g;  // ascending
        u64 n, k;
    };
    const std::vector<Golden> cases{
        {7, 4, 2399, "3,4,5,0,1", {1, 0, 1, 1, 2, 2, 1, 1, 0, 1}, 2400, 2391},
        {11, 2, 119, "2,7,1", {1, 6, 10, 10, 6, 1}, 120, 115},
        {7, 4, 1544, "3,4,5,0,1", {6, 1, 2, 4, 3, 0, 3, 6, 5, 1}, 2400, 2391},
        {11, 2, 62, "2,7,1", {8, 5, 10, 10, 9, 1}, 120, 115},
        {5, 4, 315, "2,4,4,0,1", {1, 2, 2, 2, 0, 2, 0, 0, 4, 1}, 624, 615},
        {5, 4, 375, "2,4,4,0,1", {1, 4, 3, 3, 3, 0, 2, 4, 3, 1}, 624, 615},
        {5, 4, 311, "2,4,4,0,1", {1, 3, 3, 0, 4, 1, 2, 4, 4, 1}, 624, 615},
        {7, 3, 170, "4,0,6,1", {6, 5, 1, 6, 2, 4, 0, 1}, 342, 335},
        {5, 5, 2503, "3,4,0,0,0,1", {1, 3, 0, 2, 1, 4, 4, 4, 4, 0, 4, 1}, 3124, 3113},
        {5, 5, 1559, "3,4,0,0,0,1", {1, 4, 3, 1, 3, 4, 1, 4, 2, 0, 4, 1}, 3124, 3113},
    };
    for (const Golden& c : cases) {
        const PrimeModulus mod(c.p);
        const CodeSpec code = construct_code(c.e, build_field(c.p, c.m, parse_coeff_list(mod, c.pi)));
        CHECK_MESSAGE(code.g == Poly(mod, c.g), c.p, ",", c.m, ",", c.e, ": ", to_string(code.g));
        CHECK(code.n == c.n);
        CHECK(code.k == c.k);
        CHECK(code.k == c.n - 2 * static_cast<u64>(c.m) - 1);
    }
}

TEST_CASE("sphere-packing bound") {
    // radius-2 ball: 1 + n(p-1) + C(n,2)(p-1)^2, evaluated in 64 bits here
    auto ball = [](u64 n, u64 p) { return 1 + n * (p - 1) + n * (n - 1) / 2 * (p - 1) * (p - 1); };
    const auto b5 = sphere_packing_bound(624, 615, 5);
    CHECK(b5.ball_volume == std::to_string(ball(624, 5)));
    CHECK(b5.ball_volume == "3112513");
    CHECK(b5.space_volume == "1953125");
    CHECK(b5.excludes_d5);
    CHECK(b5.admits_d4);
    const auto b11 = sphere_packing_bound(120, 115, 11);
    CHECK(b11.ball_volume == std::to_string(ball(120, 11)));
    CHECK(b11.space_volume == "161051");
    CHECK(sphere_packing_optimal(120, 115, 4, 11));
    CHECK(sphere_packing_optimal(3124, 3113, 4, 5));
    // large co-dimension: p^(n-k) exceeds 64 bits
    const auto big = sphere_packing_bound(200, 100, 7);
    CHECK_FALSE(big.excludes_d5);
    CHECK(big.space_volume.size() > 80);
    CHECK_THROWS_AS(sphere_packing_optimal(624, 615, 5, 5), InvalidArgument);
    CHECK_THROWS_AS(sphere_packing_optimal(10, 10, 4, 5), InvalidArgument);
    CHECK_THROWS_AS(sphere_packing_optimal(624, 615, 4, 6), InvalidArgument);
}
