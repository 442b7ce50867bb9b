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

#ifndef CYCLOPT_DISTANCE_HPP
#define CYCLOPT_DISTANCE_HPP

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "cyclopt/codes.hpp"

namespace cyclopt {

enum class DistanceMethod { kNormalizedSearch, kBruteForce };

std::string_view to_string(DistanceMethod m) noexcept;

/// A low-weight codeword sum_i c_i x^{x_logs[i]}, equivalently a solution of
/// sum_i c_i x_i^t = 0 for t in {1, e, s} with x_i = alpha^{x_logs[i]}.
struct Witness {
    std::vector<std::uint32_t> coeffs;
    std::vector<u64> x_logs;

    std::size_t weight() const noexcept { return coeffs.size(); }
    friend bool operator==(const Witness&, const Witness&) = default;
};

/// Minimum distance verdict. When no codeword of weight <= 3 exists, d = 4 is
/// a lower bound; `exact` is then set only when d <= 4 is known to hold
/// (p >= 5, m > 1, e outside C_1, |C_e| = m).
struct DistanceReport {
    int d = 4;
    bool exact = false;
    std::optional<Witness> witness;
    DistanceMethod method = DistanceMethod::kNormalizedSearch;
    double elapsed_ms = 0.0;
};

/// Weight-2 codeword search on the normalized system x_1 = 1, c_1 = 1.
/// Requires field tables.
std::optional<Witness> has_weight2(const CodeSpec& code);

/// Weight-3 codeword search on the normalized system
/// 1 + c_2 x_2 + c_3 x_3 = 0 (and rows e, s), x_3 solved from row 1.
/// Visits c_2, c_3 ascending and x_2 by ascending discrete log; the first
/// hit in that order is returned whatever the thread count.
std::optional<Witness> has_weight3(const CodeSpec& code, unsigned threads = 1);

/// Weight 1 is impossible; runs has_weight2 then has_weight3.
DistanceReport min_distance(const CodeSpec& code, unsigned threads = 1);

/// Independent oracle: enumerates every support of size <= weight_cap with
/// every coefficient pattern and tests divisibility by g through the
/// residues x^i mod g. Needs n <= 200 and 1 <= weight_cap <= 4.
DistanceReport brute_force_min_distance(const CodeSpec& code, int weight_cap);

/// Parameters [n, n - 2m - 2, 4]: d = 4 proven and |C_e| = m.
inline bool is_optimal(const CodeSpec& code, const DistanceReport& r) {
    return r.exact && r.d == 4 && code.coset_size_e == code.field->m();
}

/// Re-evaluates the three parity sums of a witness in the field.
bool verify_witness(const CodeSpec& code, const Witness& w);

/// Representative of the witness up to cyclic shift and F_p^* scaling:
/// the lexicographically smallest (x_logs, coeffs) with one log equal to 0
/// and that position carrying coefficient 1.
Witness canonical_witness(const Witness& w, u64 n, const PrimeModulus& mod);

}  // namespace cyclopt

#endif  // CYCLOPT_DISTANCE_HPP
