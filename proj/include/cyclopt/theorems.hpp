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

#ifndef CYCLOPT_THEOREMS_HPP
#define CYCLOPT_THEOREMS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cyclopt/field.hpp"

namespace cyclopt {

enum class TheoremId {
    T_pm2,
    T_s_ph1,
    T_cong_plus,
    T_cong_minus,
    T_5_half,
    T_sm1,
    C_sm1_p5,
    C_sm1_p7,
    P_quinary_iff,
    T_q_e3mod4,
    T_45h3,
    T_5_minus3,
    OP1,
    OP2,
};

std::string_view to_string(TheoremId id) noexcept;
std::optional<TheoremId> parse_theorem_id(std::string_view name);
const std::vector<TheoremId>& all_theorem_ids();

enum class Prediction { kOptimal, kNotOptimal, kNotDetermined };
std::string_view to_string(Prediction p) noexcept;

/// kHypothesis entries are conditions of the result's statement; kDerived
/// entries replay a step of its argument (coset sizes, fixed polynomials).
enum class CheckKind { kHypothesis, kDerived };

struct HypothesisCheck {
    std::string condition;
    bool passed = false;
    std::string detail;
    CheckKind kind = CheckKind::kHypothesis;
};

struct FamilyMember {
    u64 e = 0;
    u64 leader = 0;
    int coset_size = 0;
    Prediction predicted = Prediction::kNotDetermined;
    std::string detail;
};

/// `applicable` means every statement hypothesis holds. A failed hypothesis
/// never yields kNotOptimal; only the two-sided criteria can.
struct TheoremVerdict {
    TheoremId id = TheoremId::T_pm2;
    u64 p = 0;
    int m = 0;
    std::vector<std::pair<std::string, long long>> params;
    bool applicable = false;
    std::vector<HypothesisCheck> hypotheses;
    std::vector<FamilyMember> members;
    Prediction predicted = Prediction::kNotDetermined;

    /// e.g. "T_cong_plus(k=0,h=1)".
    std::string tag() const;
};

/// Solutions of e (p^k + sign) = p^h + sign (mod p^m - 1) in [1, n), minus
/// those with e = 1 (mod p - 1); one representative (the smallest) per
/// cyclotomic coset.
struct ExponentFamily {
    TheoremId id = TheoremId::T_cong_plus;
    u64 p = 0;
    int m = 0;
    int k = 0;
    int h = 0;
    int sign = 1;
    u64 gcd = 0;              // gcd(p^k + sign, n)
    u64 solution_count = 0;   // solutions in [0, n) before filtering
    std::vector<u64> members;
};

/// Throws InvalidArgument unless 0 <= h, k < m and sign is +-1;
/// LimitExceeded when the solution set is too large to list.
ExponentFamily solve_congruence_family(u64 p, int m, int k, int h, int sign);

/// A solution (c2, c3, x, y) over F_p of x + c2 + c3 y = 0,
/// x^e + c2 + c3 y^e = 0, 1 + c2 + c3 = 0 with x, y outside {0, 1}.
struct FpSolution {
    std::uint32_t c2, c3, x, y;
};
std::optional<FpSolution> find_fp_system_solution(u64 p, u64 e);
/// True iff the F_p system above has no solution.
bool check_fp_system(u64 p, u64 e);

TheoremVerdict check_T_pm2(const Field& f);
TheoremVerdict check_T_s_ph1(const Field& f, int h);
TheoremVerdict check_T_cong(const Field& f, int k, int h, int sign);
TheoremVerdict check_T_5_half(const Field& f, int h);
TheoremVerdict check_T_sm1(const Field& f);
TheoremVerdict check_C_sm1_p5(const Field& f);
TheoremVerdict check_C_sm1_p7(const Field& f);
/// The quinary criteria below throw InvalidArgument when p != 5.
TheoremVerdict check_P_quinary_iff(const Field& f, u64 e);
TheoremVerdict check_T_q_e3mod4(const Field& f, u64 e);
/// Throws InvalidArgument unless h is 0 or 1.
TheoremVerdict check_T_45h3(const Field& f, int h);
/// Throws InvalidArgument for even m.
TheoremVerdict check_T_5_minus3(const Field& f);

/// Every closed-form family at (p, m): each parameter choice that passes the
/// range preconditions, whether or not its hypotheses hold.
std::vector<TheoremVerdict> family_verdicts(const Field& f);

/// The two-sided quinary criteria evaluated at a single e (empty for p != 5).
std::vector<TheoremVerdict> criterion_verdicts(const Field& f, u64 e);

/// Exponent the single-member families (T_pm2, T_s_ph1, ...) refer to.
u64 theorem_exponent(TheoremId id, u64 p, int m, int h = 0);

}  // namespace cyclopt

#endif  // CYCLOPT_THEOREMS_HPP
