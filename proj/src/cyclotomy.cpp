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

#include "cyclopt/cyclotomy.hpp"

#include <algorithm>
#include <numeric>

#include "cyclopt/errors.hpp"

namespace cyclopt {

namespace {

u64 group_order(u64 p, int m) {
    if (p < 2 || m < 1) throw InvalidArgument("coset modulus needs p >= 2 and m >= 1");
    return checked_pow(p, static_cast<unsigned>(m)) - 1;
}

}  // namespace

bool Coset::contains(u64 j) const noexcept { return std::binary_search(members.begin(), members.end(), j); }

Coset coset_of(u64 j, u64 p, int m) {
    const u64 n = group_order(p, m);
    if (j >= n) throw InvalidArgument("coset representative out of range");
    Coset c;
    u64 x = j;
    do {
        c.members.push_back(x);
        x = mulmod(x, p, n);
    } while (x != j);
    std::sort(c.members.begin(), c.members.end());
    c.leader = c.members.front();
    return c;
}

int coset_size(u64 j, u64 p, int m) {
    const u64 n = group_order(p, m);
    j %= n;
    int size = 0;
    u64 x = j;
    do {
        ++size;
        x = mulmod(x, p, n);
    } while (x != j);
    return size;
}

u64 coset_leader(u64 j, u64 p, int m) {
    const u64 n = group_order(p, m);
    j %= n;
    u64 best = j, x = j;
    do {
        best = std::min(best, x);
        x = mulmod(x, p, n);
    } while (x != j);
    return best;
}

bool in_C1(u64 e, u64 p, int m) {
    const u64 n = group_order(p, m);
    e %= n;
    u64 pw = 1 % n;
    for (int i = 0; i < m; ++i) {
        if (pw == e) return true;
        pw = mulmod(pw, p, n);
    }
    return false;
}

std::string_view to_string(SizeReason r) noexcept {
    switch (r) {
        case SizeReason::kGcdSmall: return "gcd-small";
        case SizeReason::kProductTest: return "product-test";
        case SizeReason::kNone: break;
    }
    return "none";
}

SizeCriterion size_criterion(u64 e, u64 p, int m) {
    const u64 n = group_order(p, m);
    if (e < 1 || e >= n) throw InvalidArgument("size_criterion needs 1 <= e < n");
    const u64 g = std::gcd(e, n);
    if (g >= 1 && g <= p - 1) return {true, SizeReason::kGcdSmall};
    u64 pj = 1;
    for (int j = 1; j < m; ++j) {
        pj *= p;
        u64 h = std::gcd(pj - 1, n);
        if (mulmod(g % n, h % n, n) == 0) return {false, SizeReason::kNone};
    }
    return {true, SizeReason::kProductTest};
}

std::vector<u64> coset_leaders(u64 p, int m) {
    const u64 n = group_order(p, m);
    std::vector<bool> seen(n, false);
    std::vector<u64> leaders;
    for (u64 j = 0; j < n; ++j) {
        if (seen[j]) continue;
        leaders.push_back(j);
        u64 x = j;
        do {
            seen[x] = true;
            x = mulmod(x, p, n);
        } while (x != j);
    }
    return leaders;
}

}  // namespace cyclopt
