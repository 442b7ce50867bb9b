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

#include <numeric>
#include <random>

#include "doctest.h"

#include "cyclopt/errors.hpp"
#include "cyclopt/field.hpp"
#include "support/oracles.hpp"

using namespace cyclopt;

namespace {

ExtElem random_elem(const Field& f, std::mt19937_64& rng) { return f.unpack(rng() % f.size()); }

}  // namespace

TEST_CASE("build_field accepts the printed defining polynomials") {
    struct Case {
        u64 p;
        int m;
        const char* pi;
    };
    for (const Case& c : {Case{7, 4, "3,4,5,0,1"}, Case{11, 2, "2,7,1"}, Case{5, 4, "2,4,4,0,1"},
                          Case{7, 3, "4,0,6,1"}, Case{5, 5, "3,4,0,0,0,1"}}) {
        const FieldPtr f = build_field(c.p, c.m, parse_coeff_list(PrimeModulus(c.p), c.pi));
        CHECK(f->n() + 1 == f->size());
        CHECK(multiplicative_order(*f, f->alpha()) == f->n());
        CHECK(to_coeff_list(f->pi()) == c.pi);
    }
}

TEST_CASE("build_field rejections") {
    const PrimeModulus m5(5);
    // x^2 - 2 is irreducible over F_5 but x has order 8, not 24
    CHECK_THROWS_AS(build_field(5, 2, Poly(m5, {-2, 0, 1})), NotPrimitive);
    CHECK_THROWS_AS(build_field(5, 2, Poly(m5, {-1, 0, 1})), NotPrimitive);  // reducible
    CHECK_THROWS_AS(build_field(5, 2, Poly(m5, {2, 1, 2})), InvalidArgument);  // not monic
    CHECK_THROWS_AS(build_field(5, 3, Poly(m5, {2, 1, 1})), InvalidArgument);  // wrong degree
    CHECK_THROWS_AS(build_field(4, 2), InvalidArgument);
    CHECK_THROWS_AS(build_field(2, 3), InvalidArgument);
    CHECK_THROWS_AS(build_field(5, 0), InvalidArgument);
    CHECK_THROWS_AS(build_field(7, 20), LimitExceeded);
}

TEST_CASE("default primitive polynomial search") {
    const FieldPtr f51 = build_field(5, 1);
    CHECK(to_coeff_list(f51->pi()) == "3,1");  // x - 2: 2 is the least primitive root mod 5
    CHECK(f51->alpha() == f51->embed(2));
    for (u64 p : {3ULL, 5ULL, 7ULL}) {
        for (int m = 2; m <= 3; ++m) {
            const FieldPtr f = build_field(p, m);
            CHECK(is_irreducible(f->pi()));
            CHECK(order_of_x(f->pi()) == f->n());
            CHECK(f->pi()[0] != 0);
            // nothing smaller in the packed order is primitive
            const u64 packed = [&] {
                u64 v = 0;
                for (int i = m - 1; i >= 0; --i) v = v * p + f->pi()[static_cast<std::size_t>(i)];
                return v;
            }();
            for (u64 v = 1; v < packed; ++v) {
                std::vector<long long> c;
                u64 t = v;
                for (int i = 0; i < m; ++i) {
                    c.push_back(static_cast<long long>(t % p));
                    t /= p;
                }
                c.push_back(1);
                const Poly g(PrimeModulus(p), c);
                if (g[0] == 0) continue;
                CHECK_FALSE((is_irreducible(g) && order_of_x(g) == f->n()));
            }
        }
    }
}

TEST_CASE("arithmetic matches polynomial arithmetic modulo pi") {
    std::mt19937_64 rng(21);
    for (u64 limit : {kDefaultTableLimit, u64{0}}) {
        const FieldPtr f = build_field(7, 3, std::nullopt, limit);
        CHECK(f->has_tables() == (limit != 0));
        for (int it = 0; it < 300; ++it) {
            const ExtElem a = random_elem(*f, rng), b = random_elem(*f, rng);
            CHECK(f->mul(a, b).coeffs == oracle::poly_field_mul(*f, a, b));
            CHECK(f->sub(f->add(a, b), b) == a);
            if (!f->is_zero(a)) {
                CHECK(f->mul(a, f->inv(a)) == f->one());
                CHECK(f->pow(a, f->n()) == f->one());
            }
            const u64 k = rng() % 1000;
            ExtElem naive = f->one();
            for (u64 i = 0; i < k % 40; ++i) naive = f->mul(naive, a);
            CHECK(f->pow(a, k % 40) == naive);
        }
        CHECK_THROWS_AS(f->inv(f->zero()), InvalidArgument);
        CHECK(f->pow(f->zero(), 0) == f->one());
    }
}

TEST_CASE("log, exp and Zech tables") {
    const FieldPtr f = build_field(5, 3);
    const u64 n = f->n();
    for (u64 j = 0; j < n; ++j) {
        const ExtElem x = f->exp(j);
        CHECK(f->log(x) == j);
        CHECK(f->pack(x) == f->exp_packed(j));
        const ExtElem y = f->add(f->one(), x);
        if (f->is_zero(y)) {
            CHECK(f->zech(j) == kNoLog);
            CHECK(j == n / 2);
        } else {
            CHECK(f->exp(f->zech(j)) == y);
        }
    }
    for (std::uint32_t c = 1; c < 5; ++c) CHECK(f->exp(f->base_log(c)) == f->embed(c));
}

TEST_CASE("quadratic character and square roots") {
    std::mt19937_64 rng(4);
    for (u64 limit : {kDefaultTableLimit, u64{0}}) {
        const FieldPtr f = build_field(11, 2, std::nullopt, limit);
        CHECK(eta(*f, f->zero()) == Character::kZero);
        for (int it = 0; it < 200; ++it) {
            const ExtElem x = random_elem(*f, rng);
            if (f->is_zero(x)) continue;
            const bool sq = f->pow(x, f->n() / 2) == f->one();
            CHECK((eta(*f, x) == Character::kSquare) == sq);
            const auto r = sqrt_in_field(*f, x);
            CHECK(r.has_value() == sq);
            if (r) {
                CHECK(f->mul(r->first, r->first) == x);
                CHECK(r->second == f->neg(r->first));
            }
            const ExtElem s = f->mul(x, x);
            CHECK(eta(*f, s) == Character::kSquare);
        }
        const auto z = sqrt_in_field(*f, f->zero());
        REQUIRE(z);
        CHECK(f->is_zero(z->first));
    }
    // every element of F_p is a square in F_{p^m} for even m
    const FieldPtr f = build_field(7, 2);
    for (int c = 1; c < 7; ++c) CHECK(eta(*f, f->embed(c)) == Character::kSquare);
}

TEST_CASE("count_N closed forms") {
    struct Size {
        u64 p;
        int m;
    };
    for (const Size s : {Size{5, 2}, Size{7, 2}, Size{11, 2}, Size{5, 3}, Size{7, 3}, Size{5, 4}, Size{7, 1},
                         Size{11, 1}, Size{13, 1}}) {
        const FieldPtr f = build_field(s.p, s.m);
        const u64 q = f->size();
        u64 n11, n1m, nm1, nmm;
        if (q % 4 == 1) {
            n11 = (q - 5) / 4;
            n1m = nm1 = nmm = (q - 1) / 4;
        } else {
            n11 = nm1 = nmm = (q - 3) / 4;
            n1m = (q + 1) / 4;
        }
        CHECK(count_N(*f, 1, 1) == n11);
        CHECK(count_N(*f, 1, -1) == n1m);
        CHECK(count_N(*f, -1, 1) == nm1);
        CHECK(count_N(*f, -1, -1) == nmm);
    }
    const FieldPtr f25 = build_field(5, 2);
    CHECK(count_N(*f25, 1, 1) == 5);
    CHECK(count_N(*f25, -1, -1) == 6);
    CHECK(count_N(*build_field(7, 1), 1, -1) == 2);
    CHECK_THROWS_AS(count_N(*f25, 0, 1), InvalidArgument);
}

TEST_CASE("multiplicative order") {
    const FieldPtr f = build_field(5, 2);
    for (u64 j = 0; j < f->n(); ++j) {
        const u64 ord = multiplicative_order(*f, f->exp(j));
        CHECK(ord == f->n() / std::gcd(j, f->n()));
    }
    CHECK_THROWS_AS(multiplicative_order(*f, f->zero()), InvalidArgument);
}
