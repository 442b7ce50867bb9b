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

#ifndef CYCLOPT_NUMTHEORY_HPP
#define CYCLOPT_NUMTHEORY_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace cyclopt {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mulmod(u64 a, u64 b, u64 mod) { return static_cast<u64>(static_cast<u128>(a) * b % mod); }

u64 powmod(u64 base, u64 exp, u64 mod);

/// Inverse of a modulo mod; requires gcd(a, mod) = 1.
u64 invmod(u64 a, u64 mod);

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(u64 n);

/// Prime factorization as (prime, exponent) pairs in ascending prime order.
/// Trial division up to 10^6, Pollard rho for the remaining cofactor.
std::vector<std::pair<u64, int>> factorize(u64 n);

/// Distinct prime divisors of n, ascending.
std::vector<u64> prime_divisors(u64 n);

/// b^k, throwing InvalidArgument on 64-bit overflow.
u64 checked_pow(u64 b, unsigned k);

/// Non-negative residue of v modulo mod.
u64 reduce_signed(long long v, u64 mod);

}  // namespace cyclopt

#endif  // CYCLOPT_NUMTHEORY_HPP
