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

#include "cyclopt/numtheory.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "cyclopt/errors.hpp"

namespace cyclopt {

u64 powmod(u64 base, u64 exp, u64 mod) {
    if (mod == 1) return 0;
    u64 result = 1;
    base %= mod;
    while (exp) {
        if (exp & 1) result = mulmod(result, base, mod);
        base = mulmod(base, base, mod);
        exp >>= 1;
    }
    return result;
}

u64 invmod(u64 a, u64 mod) {
    // extended Euclid on signed 128-bit to stay clear of overflow
    __int128 old_r = static_cast<__int128>(a % mod), r = mod;
    __int128 old_s = 1, s = 0;
    while (r != 0) {
        __int128 q = old_r / r;
        std::swap(old_r, r);
        r -= q * old_r;
        std::swap(old_s, s);
        s -= q * old_s;
    }
    if (old_r != 1) throw InvalidArgument("invmod: argument not invertible");
    __int128 m = static_cast<__int128>(mod);
    return static_cast<u64>(((old_s % m) + m) % m);
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % q == 0) return n == q;
    }
    u64 d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < r; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

namespace {

u64 pollard_rho(u64 n) {
    if (n % 2 == 0) return 2;
    for (u64 c = 1;; ++c) {
        auto f = [&](u64 x) { return (mulmod(x, x, n) + c) % n; };
        u64 x = 2, y = 2, d = 1;
        while (d == 1) {
            x = f(x);
            y = f(f(y));
            d = std::gcd(x > y ? x - y : y - x, n);
        }
        if (d != n) return d;
    }
}

void split(u64 n, std::map<u64, int>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    u64 d = pollard_rho(n);
    split(d, out);
    split(n / d, out);
}

}  // namespace

std::vector<std::pair<u64, int>> factorize(u64 n) {
    if (n == 0) throw InvalidArgument("factorize: zero has no factorization");
    std::map<u64, int> found;
    for (u64 q = 2; q <= 1'000'000 && q * q <= n; q += (q == 2 ? 1 : 2)) {
        while (n % q == 0) {
            ++found[q];
            n /= q;
        }
    }
    split(n, found);
    return {found.begin(), found.end()};
}

std::vector<u64> prime_divisors(u64 n) {
    std::vector<u64> out;
    for (auto [q, k] : factorize(n)) out.push_back(q);
    return out;
}

u64 checked_pow(u64 b, unsigned k) {
    u64 r = 1;
    for (unsigned i = 0; i < k; ++i) {
        if (b != 0 && r > UINT64_MAX / b) throw InvalidArgument("integer power overflows 64 bits");
        r *= b;
    }
    return r;
}

u64 reduce_signed(long long v, u64 mod) {
    __int128 m = static_cast<__int128>(mod);
    __int128 r = static_cast<__int128>(v) % m;
    if (r < 0) r += m;
    return static_cast<u64>(r);
}

}  // namespace cyclopt
