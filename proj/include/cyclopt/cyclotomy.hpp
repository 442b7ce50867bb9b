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

#ifndef CYCLOPT_CYCLOTOMY_HPP
#define CYCLOPT_CYCLOTOMY_HPP

#include <cstdint>
#include <string_view>
#include <vector>

#include "cyclopt/numtheory.hpp"

namespace cyclopt {

/// p-cyclotomic coset {j p^r mod (p^m - 1)}.
struct Coset {
    u64 leader = 0;
    std::vector<u64> members;  // ascending; members.front() == leader

    std::size_t size() const noexcept { return members.size(); }
    bool contains(u64 j) const noexcept;
};

Coset coset_of(u64 j, u64 p, int m);

/// Size of the coset of j without materializing it.
int coset_size(u64 j, u64 p, int m);

/// Smallest member of the coset of j.
u64 coset_leader(u64 j, u64 p, int m);

/// e = p^i (mod p^m - 1) for some i.
bool in_C1(u64 e, u64 p, int m);

enum class SizeReason { kGcdSmall, kProductTest, kNone };

std::string_view to_string(SizeReason r) noexcept;

struct SizeCriterion {
    bool holds = false;
    SizeReason reason = SizeReason::kNone;
};

/// Sufficient criteria for |C_e| = m: 1 <= gcd(e, n) <= p - 1, or
/// gcd(e, n) gcd(p^j - 1, n) != 0 (mod n) for every 1 <= j < m.
/// A false result says nothing about |C_e|.
SizeCriterion size_criterion(u64 e, u64 p, int m);

/// All coset leaders in [0, p^m - 1), ascending, found with a visited bitset.
std::vector<u64> coset_leaders(u64 p, int m);

}  // namespace cyclopt

#endif  // CYCLOPT_CYCLOTOMY_HPP
