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

#include "cyclopt/theorems.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <sstream>

#include "cyclopt/cyclotomy.hpp"
#include "cyclopt/errors.hpp"

namespace cyclopt {

namespace {

constexpr std::array<std::pair<TheoremId, std::string_view>, 14> kNames{{
    {TheoremId::T_pm2, "T_pm2"},
    {TheoremId::T_s_ph1, "T_s_ph1"},
    {TheoremId::T_cong_plus, "T_cong_plus"},
    {TheoremId::T_cong_minus, "T_cong_minus"},
    {TheoremId::T_5_half, "T_5_half"},
    {TheoremId::T_sm1, "T_sm1"},
    {TheoremId::C_sm1_p5, "C_sm1_p5"},
    {TheoremId::C_sm1_p7, "C_sm1_p7"},
    {TheoremId::P_quinary_iff, "P_quinary_iff"},
    {TheoremId::T_q_e3mod4, "T_q_e3mod4"},
    {TheoremId::T_45h3, "T_45h3"},
    {TheoremId::T_5_minus3, "T_5_minus3"},
    {TheoremId::OP1, "OP1"},
    {TheoremId::OP2, "OP2"},
}};

constexpr u64 kNone = UINT64_MAX;
constexpr u64 kMaxFamilyGcd = 1ULL << 24;

std::string elem_str(const Field& f, const ExtElem& x) {
    if (f.in_base_field(x)) return std::to_string(x.coeffs[0]);
    std::string s = "(";
    for (std::size_t i = 0; i < x.coeffs.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(x.coeffs[i]);
    }
    return s + ")";
}

// log(alpha^a + alpha^b), kNone when the sum vanishes.
u64 log_add(const Field& f, u64 a, u64 b) {
    const u64 n = f.n();
    const std::uint32_t z = f.zech((b + n - a) % n);
    if (z == kNoLog) return kNone;
    return (a + z) % n;
}

class Builder {
  public:
    Builder(TheoremId id, const Field& f) {
        v_.id = id;
        v_.p = f.p();
        v_.m = f.m();
    }

    void param(std::string name, long long value) { v_.params.emplace_back(std::move(name), value); }

    bool hyp(std::string cond, bool ok, std::string detail = {}) {
        v_.hypotheses.push_back({std::move(cond), ok, std::move(detail), CheckKind::kHypothesis});
        hyp_ok_ = hyp_ok_ && ok;
        return ok;
    }

    bool derived(std::string cond, bool ok, std::string detail = {}) {
        v_.hypotheses.push_back({std::move(cond), ok, std::move(detail), CheckKind::kDerived});
        derived_ok_ = derived_ok_ && ok;
        return ok;
    }

    // Recorded outcome of a two-sided criterion; does not gate the verdict.
    void observe(std::string cond, bool ok, std::string detail) {
        v_.hypotheses.push_back({std::move(cond), ok, std::move(detail), CheckKind::kDerived});
    }

    // p >= 5 and m >= 2 gate every result (the d <= 4 bound needs both).
    void base(const Field& f) {
        hyp("p >= 5", f.p() >= 5, "p = " + std::to_string(f.p()));
        hyp("m >= 2", f.m() >= 2, "m = " + std::to_string(f.m()));
    }

    void coset_checks(const Field& f, u64 e) {
        const bool c1 = in_C1(e, f.p(), f.m());
        derived("e not in C_1", !c1, "e = " + std::to_string(e));
        const int sz = coset_size(e, f.p(), f.m());
        derived("|C_e| = m", sz == f.m(), "|C_e| = " + std::to_string(sz));
    }

    bool hyp_ok() const { return hyp_ok_; }
    bool derived_ok() const { return derived_ok_; }
    TheoremVerdict& verdict() { return v_; }

    // Single-exponent result: Optimal iff applicable and every replayed step holds.
    TheoremVerdict finish_single(const Field& f, u64 e, std::optional<Prediction> when_applicable = std::nullopt) {
        v_.applicable = hyp_ok_;
        if (!hyp_ok_) {
            v_.predicted = Prediction::kNotDetermined;
        } else if (when_applicable) {
            v_.predicted = derived_ok_ ? *when_applicable : Prediction::kNotDetermined;
        } else {
            v_.predicted = derived_ok_ ? Prediction::kOptimal : Prediction::kNotDetermined;
        }
        if (e >= 1 && e < f.n()) {
            v_.members.push_back({e, coset_leader(e, f.p(), f.m()), coset_size(e, f.p(), f.m()), v_.predicted, {}});
        }
        return std::move(v_);
    }

  private:
    TheoremVerdict v_;
    bool hyp_ok_ = true;
    bool derived_ok_ = true;
};

void require_quinary(const Field& f, std::string_view what) {
    if (f.p() != 5) throw InvalidArgument(std::string(what) + " is stated for p = 5 only");
}

void require_exponent(const Field& f, u64 e) {
    if (e < 1 || e >= f.n()) throw InvalidArgument("e must lie in [1, n - 1]");
}

void require_h(const Field& f, int h) {
    if (h < 0 || h >= f.m()) throw InvalidArgument("h must lie in [0, m - 1]");
}

// Distinct-degree profile shows no root outside F_p inside F_{p^m}: every
// irreducible factor of degree d > 1 has d not dividing m.
bool no_new_roots(const DegreeProfile& prof, int m) {
    for (const auto& g : prof.groups) {
        if (g.degree > 1 && m % g.degree == 0) return false;
    }
    if (!prof.complete()) return false;
    return true;
}

std::string profile_str(const DegreeProfile& prof) {
    std::string s;
    for (const auto& g : prof.groups) {
        if (!s.empty()) s += ", ";
        s += std::to_string(g.count()) + "x deg " + std::to_string(g.degree);
        if (g.multiplicity > 1) s += " (mult " + std::to_string(g.multiplicity) + ")";
    }
    return s.empty() ? "constant" : s;
}

struct Sm1Case {
    bool pass = false;
    bool cond1 = false;
    bool per_root = false;
    bool conservative = false;
    std::string detail;
};

// Conditions for one a in F_p \ {0, -2}. Conditions 2 and 3 are read per
// root: each root y of y^2 + a y - 1 must have eta(y) != -1 or
// eta(z) != -1 with z = -(2/a) y - 2/a - 1.
Sm1Case evaluate_sm1(const Field& f, std::uint32_t a) {
    const auto& mod = f.modulus();
    Sm1Case out;
    const std::uint32_t disc = mod.add(mod.mul(a, a), 4);
    const ExtElem d = f.embed(disc);
    out.cond1 = eta(f, d) == Character::kNonsquare;
    std::ostringstream os;
    os << "a=" << a << ": a^2+4=" << disc << (out.cond1 ? " nonsquare" : " square");
    if (out.cond1) {
        out.pass = out.per_root = out.conservative = true;
        out.detail = os.str();
        return out;
    }
    const auto roots = sqrt_in_field(f, d);
    if (!roots) throw InternalError("square without square root");
    const std::uint32_t inv2 = mod.inv(2);
    const std::uint32_t t = mod.mul(2, mod.inv(a));
    const ExtElem neg_a = f.embed(mod.neg(a));
    bool all2 = true, all3 = true;
    out.per_root = true;
    for (const ExtElem& r : {roots->first, roots->second}) {
        const ExtElem y = f.scale(f.add(neg_a, r), inv2);
        const ExtElem z = f.add(f.scale(y, mod.neg(t)), f.embed(mod.neg(mod.add(t, 1))));
        const int ey = to_int(eta(f, y)), ez = to_int(eta(f, z));
        const bool c2 = ey != -1, c3 = ez != -1;
        all2 = all2 && c2;
        all3 = all3 && c3;
        out.per_root = out.per_root && (c2 || c3);
        os << "; y=" << elem_str(f, y) << " eta(y)=" << ey << " eta(z)=" << ez;
    }
    out.conservative = all2 || all3;
    out.pass = out.per_root;
    if (out.conservative != out.per_root) os << "; both-roots reading differs";
    out.detail = os.str();
    return out;
}

void replay_sm1(Builder& b, const Field& f) {
    const std::uint32_t p = f.p();
    for (std::uint32_t a = 1; a < p; ++a) {
        if (a == p - 2) continue;
        Sm1Case c = evaluate_sm1(f, a);
        b.derived("conditions hold for a = " + std::to_string(a), c.pass, c.detail);
    }
}

Poly x_plus(PrimeModulus mod, long long c) { return Poly(mod, {c, 1}); }

}  // namespace

std::string_view to_string(TheoremId id) noexcept {
    for (auto [k, v] : kNames) {
        if (k == id) return v;
    }
    return "?";
}

std::optional<TheoremId> parse_theorem_id(std::string_view name) {
    for (auto [k, v] : kNames) {
        if (v == name) return k;
    }
    return std::nullopt;
}

const std::vector<TheoremId>& all_theorem_ids() {
    static const std::vector<TheoremId> ids = [] {
        std::vector<TheoremId> v;
        for (auto [k, _] : kNames) v.push_back(k);
        return v;
    }();
    return ids;
}

std::string_view to_string(Prediction p) noexcept {
    switch (p) {
        case Prediction::kOptimal: return "optimal";
        case Prediction::kNotOptimal: return "not-optimal";
        case Prediction::kNotDetermined: return "not-determined";
    }
    return "?";
}

std::string TheoremVerdict::tag() const {
    std::string s(to_string(id));
    if (params.empty()) return s;
    s += '(';
    for (std::size_t i = 0; i < params.size(); ++i) {
        if (i) s += ',';
        s += params[i].first + "=" + std::to_string(params[i].second);
    }
    return s + ')';
}

u64 theorem_exponent(TheoremId id, u64 p, int m, int h) {
    const u64 n = checked_pow(p, static_cast<unsigned>(m)) - 1;
    const u64 half = n / 2;
    auto ph = [&](int k) { return powmod(p, static_cast<u64>(k), n); };
    switch (id) {
        case TheoremId::T_pm2: return n - 1;
        case TheoremId::T_s_ph1: return (half + ph(h) + 1) % n;
        case TheoremId::T_5_half: return (half + (ph(h) + 1) / 2) % n;
        case TheoremId::T_sm1:
        case TheoremId::C_sm1_p5:
        case TheoremId::C_sm1_p7: return (half + n - 1) % n;
        case TheoremId::T_45h3: return (4 + n - ph(m - h) % n) % n;
        case TheoremId::T_5_minus3: return (half + n - 3 % n) % n;
        case TheoremId::OP1: return mulmod(4, (ph(h) + 1) % n, n);
        case TheoremId::OP2: return (ph(h) + n - 2 % n) % n;
        default: throw InvalidArgument("theorem " + std::string(to_string(id)) + " has no single exponent");
    }
}

ExponentFamily solve_congruence_family(u64 p, int m, int k, int h, int sign) {
    if (m < 1 || k < 0 || k >= m || h < 0 || h >= m) throw InvalidArgument("need 0 <= h, k < m");
    if (sign != 1 && sign != -1) throw InvalidArgument("sign must be +1 or -1");
    ExponentFamily fam;
    fam.id = sign > 0 ? TheoremId::T_cong_plus : TheoremId::T_cong_minus;
    fam.p = p;
    fam.m = m;
    fam.k = k;
    fam.h = h;
    fam.sign = sign;
    const u64 n = checked_pow(p, static_cast<unsigned>(m)) - 1;
    auto shifted = [&](int t) { return (powmod(p, static_cast<u64>(t), n) + n + static_cast<u64>(sign)) % n; };
    const u64 a = shifted(k), b = shifted(h);
    const u64 g = std::gcd(a, n);
    fam.gcd = g;
    if (b % g != 0) return fam;
    if (g > kMaxFamilyGcd) throw LimitExceeded("congruence has " + std::to_string(g) + " solutions");
    fam.solution_count = g;
    const u64 step = n / g;
    const u64 e0 = step == 1 ? 0 : mulmod((b / g) % step, invmod((a / g) % step, step), step);
    std::set<u64> leaders;
    for (u64 t = 0; t < g; ++t) {
        const u64 e = e0 + t * step;
        if (e == 0 || e % (p - 1) == 1 % (p - 1)) continue;
        if (leaders.insert(coset_leader(e, p, m)).second) fam.members.push_back(e);
    }
    return fam;
}

std::optional<FpSolution> find_fp_system_solution(u64 p, u64 e) {
    const PrimeModulus mod(p);
    const u64 r = e % (p - 1);
    for (std::uint32_t c2 = 1; c2 < p; ++c2) {
        const std::uint32_t c3 = mod.neg(mod.add(1, c2));
        if (c3 == 0) continue;
        for (std::uint32_t y = 2; y < p; ++y) {
            const std::uint32_t x = mod.neg(mod.add(c2, mod.mul(c3, y)));
            if (x == 0 || x == 1) continue;
            if (mod.add(mod.pow(x, r), mod.add(c2, mod.mul(c3, mod.pow(y, r)))) == 0) {
                return FpSolution{c2, c3, x, y};
            }
        }
    }
    return std::nullopt;
}

bool check_fp_system(u64 p, u64 e) { return !find_fp_system_solution(p, e).has_value(); }

TheoremVerdict check_T_pm2(const Field& f) {
    Builder b(TheoremId::T_pm2, f);
    b.base(f);
    const u64 q = f.size();
    b.hyp("p^m = 1 (mod 4)", q % 4 == 1, "p^m mod 4 = " + std::to_string(q % 4));
    const u64 e = f.n() - 1;
    if (b.hyp_ok()) b.coset_checks(f, e);
    return b.finish_single(f, e);
}

TheoremVerdict check_T_s_ph1(const Field& f, int h) {
    require_h(f, h);
    Builder b(TheoremId::T_s_ph1, f);
    b.param("h", h);
    b.base(f);
    b.hyp("p^m = 1 (mod 4)", f.size() % 4 == 1, "p^m mod 4 = " + std::to_string(f.size() % 4));
    b.hyp("m odd or h != m/2", f.m() % 2 == 1 || 2 * h != f.m());
    const u64 e = theorem_exponent(TheoremId::T_s_ph1, f.p(), f.m(), h);
    if (b.hyp_ok()) b.coset_checks(f, e);
    return b.finish_single(f, e);
}

TheoremVerdict check_T_cong(const Field& f, int k, int h, int sign) {
    if (k < 0 || k >= f.m()) throw InvalidArgument("k must lie in [0, m - 1]");
    require_h(f, h);
    if (sign != 1 && sign != -1) throw InvalidArgument("sign must be +1 or -1");
    Builder b(sign > 0 ? TheoremId::T_cong_plus : TheoremId::T_cong_minus, f);
    b.param("k", k);
    b.param("h", h);
    b.base(f);
    const int m = f.m();
    b.hyp("m even", m % 2 == 0);
    auto gcd_hyp = [&](const std::string& what, int v) {
        const int g = std::gcd(std::abs(v), m);
        b.hyp("gcd(" + what + ", m) = 1", g == 1, "gcd = " + std::to_string(g));
    };
    if (sign > 0) {
        gcd_hyp("h-k", h - k);
        gcd_hyp("h+k", h + k);
    } else {
        gcd_hyp("h", h);
        gcd_hyp("h-k", h - k);
    }
    TheoremVerdict& v = b.verdict();
    v.applicable = b.hyp_ok();
    v.predicted = Prediction::kNotDetermined;
    if (!v.applicable) return std::move(v);

    const ExponentFamily fam = solve_congruence_family(f.p(), m, k, h, sign);
    b.derived("family is nonempty", !fam.members.empty(),
              std::to_string(fam.solution_count) + " solutions, " + std::to_string(fam.members.size()) +
                  " cosets after the e != 1 (mod p-1) filter");
    std::optional<Prediction> common;
    bool mixed = false;
    for (u64 e : fam.members) {
        FamilyMember mem{e, coset_leader(e, f.p(), m), coset_size(e, f.p(), m), Prediction::kNotDetermined, {}};
        if (in_C1(e, f.p(), m) || mem.coset_size != m) {
            mem.detail = "coset check failed";
        } else if (auto sol = find_fp_system_solution(f.p(), e)) {
            mem.predicted = Prediction::kNotOptimal;
            mem.detail = "F_p system solvable: c2=" + std::to_string(sol->c2) + " c3=" + std::to_string(sol->c3) +
                         " x=" + std::to_string(sol->x) + " y=" + std::to_string(sol->y);
        } else {
            mem.predicted = Prediction::kOptimal;
            mem.detail = "F_p system has no solution";
        }
        if (common && *common != mem.predicted) mixed = true;
        common = mem.predicted;
        v.members.push_back(std::move(mem));
    }
    if (common && !mixed) v.predicted = *common;
    return std::move(v);
}

TheoremVerdict check_T_5_half(const Field& f, int h) {
    require_h(f, h);
    Builder b(TheoremId::T_5_half, f);
    b.param("h", h);
    b.hyp("p = 5", f.p() == 5);
    b.hyp("m >= 2", f.m() >= 2);
    b.hyp("m even", f.m() % 2 == 0);
    b.hyp("gcd(h, m) = 1", std::gcd(h, f.m()) == 1);
    if (!b.hyp_ok()) return b.finish_single(f, 0);
    const u64 e = theorem_exponent(TheoremId::T_5_half, f.p(), f.m(), h);
    const u64 n = f.n();
    b.coset_checks(f, e);
    b.derived("2e = 5^h + 1 (mod n)", mulmod(2, e, n) == (powmod(5, static_cast<u64>(h), n) + 1) % n);
    b.derived("e = 3 (mod 4)", e % 4 == 3, "e mod 4 = " + std::to_string(e % 4));
    b.derived("F_p system has no solution", check_fp_system(f.p(), e));
    return b.finish_single(f, e);
}

TheoremVerdict check_T_sm1(const Field& f) {
    Builder b(TheoremId::T_sm1, f);
    b.base(f);
    const u64 e = theorem_exponent(TheoremId::T_sm1, f.p(), f.m());
    if (b.hyp_ok()) {
        b.coset_checks(f, e);
        replay_sm1(b, f);
    }
    return b.finish_single(f, e);
}

TheoremVerdict check_C_sm1_p5(const Field& f) {
    Builder b(TheoremId::C_sm1_p5, f);
    b.hyp("p = 5", f.p() == 5);
    b.hyp("m >= 2", f.m() >= 2);
    b.hyp("m even", f.m() % 2 == 0);
    const u64 e = theorem_exponent(TheoremId::C_sm1_p5, f.p(), f.m());
    if (b.hyp_ok()) {
        b.coset_checks(f, e);
        replay_sm1(b, f);
    }
    return b.finish_single(f, e);
}

TheoremVerdict check_C_sm1_p7(const Field& f) {
    Builder b(TheoremId::C_sm1_p7, f);
    b.hyp("p = 7", f.p() == 7);
    b.hyp("m >= 2", f.m() >= 2);
    b.hyp("m odd or m = 0 (mod 4)", f.m() % 2 == 1 || f.m() % 4 == 0);
    const u64 e = theorem_exponent(TheoremId::C_sm1_p7, f.p(), f.m());
    if (b.hyp_ok()) {
        b.coset_checks(f, e);
        replay_sm1(b, f);
    }
    return b.finish_single(f, e);
}

TheoremVerdict check_P_quinary_iff(const Field& f, u64 e) {
    require_quinary(f, "P_quinary_iff");
    require_exponent(f, e);
    Builder b(TheoremId::P_quinary_iff, f);
    b.param("e", static_cast<long long>(e));
    b.hyp("m >= 2", f.m() >= 2);
    b.hyp("e not in C_1", !in_C1(e, 5, f.m()));
    const int sz = coset_size(e, 5, f.m());
    b.hyp("|C_e| = m", sz == f.m(), "|C_e| = " + std::to_string(sz));
    if (!b.hyp_ok()) return b.finish_single(f, e);
    if (!b.derived("field small enough to enumerate", f.has_tables())) return b.finish_single(f, e);

    const u64 n = f.n(), half = n / 2;
    const u64 l2 = f.base_log(2), lm2 = f.base_log(3);
    auto ep = [&](u64 l) { return mulmod(e, l, n); };
    std::array<u64, 3> hit{kNone, kNone, kNone};
    for (u64 j = 1; j < n; ++j) {
        const u64 ex = ep(j);
        if (j % 2 == 1) {
            // eta(x) = -1, eta(2x - 2) = -1, (2(1 - x))^e + 2 x^e = 2
            if (hit[0] != kNone) continue;
            const std::uint32_t l1mx = f.zech((j + half) % n);
            if (l1mx == kNoLog) continue;
            if ((l2 + l1mx + half) % 2 != 1) continue;
            if (log_add(f, ep((l2 + l1mx) % n), (l2 + ex) % n) == l2) hit[0] = j;
        } else {
            const std::uint32_t l1px = f.zech(j);
            if (l1px == kNoLog) continue;
            if ((l2 + l1px) % 2 == 0) {
                // eta(x) = 1, eta(2x + 2) = 1, (-2(1 + x))^e + 2 x^e = -2
                if (hit[1] == kNone && log_add(f, ep((lm2 + l1px) % n), (l2 + ex) % n) == lm2) hit[1] = j;
            } else {
                // eta(x) = 1, eta(2x + 2) = -1, (2(1 + x))^e - 2 x^e = 2
                if (hit[2] == kNone && log_add(f, ep((l2 + l1px) % n), (lm2 + ex) % n) == l2) hit[2] = j;
            }
        }
    }
    bool solvable = false;
    for (int i = 0; i < 3; ++i) {
        const bool free = hit[i] == kNone;
        solvable = solvable || !free;
        b.observe("system " + std::to_string(i + 1) + " has no solution", free,
                  free ? "none" : "solution x = alpha^" + std::to_string(hit[i]));
    }
    return b.finish_single(f, e, solvable ? Prediction::kNotOptimal : Prediction::kOptimal);
}

TheoremVerdict check_T_q_e3mod4(const Field& f, u64 e) {
    require_quinary(f, "T_q_e3mod4");
    require_exponent(f, e);
    Builder b(TheoremId::T_q_e3mod4, f);
    b.param("e", static_cast<long long>(e));
    b.hyp("m >= 2", f.m() >= 2);
    b.hyp("e = 3 (mod 4)", e % 4 == 3, "e mod 4 = " + std::to_string(e % 4));
    const int sz = coset_size(e, 5, f.m());
    b.hyp("|C_e| = m", sz == f.m(), "|C_e| = " + std::to_string(sz));
    if (!b.hyp_ok()) return b.finish_single(f, e);
    b.derived("e not in C_1", !in_C1(e, 5, f.m()));
    if (!b.derived("field small enough to enumerate", f.has_tables())) return b.finish_single(f, e);

    const u64 n = f.n(), half = n / 2, sub = n / 4;  // F_5^* = <alpha^(n/4)>
    u64 root = kNone;
    for (u64 j = 1; j < n && root == kNone; ++j) {
        if (j % sub == 0) continue;
        const std::uint32_t l1px = f.zech(j);
        if (l1px == kNoLog) continue;
        if (log_add(f, mulmod(e, l1px, n), mulmod(e, j, n)) == half) root = j;
    }
    b.observe("(1+x)^e + x^e + 1 has no root in F_{5^m} \\ F_5", root == kNone,
              root == kNone ? "no root" : "root x = alpha^" + std::to_string(root));
    return b.finish_single(f, e, root == kNone ? Prediction::kOptimal : Prediction::kNotOptimal);
}

TheoremVerdict check_T_45h3(const Field& f, int h) {
    require_quinary(f, "T_45h3");
    if (h != 0 && h != 1) throw InvalidArgument("T_45h3 covers h = 0 and h = 1 only");
    Builder b(TheoremId::T_45h3, f);
    b.param("h", h);
    const int m = f.m();
    b.hyp("m >= 2", m >= 2);
    if (h == 1) {
        b.hyp("m != 0 (mod 9)", m % 9 != 0);
        b.hyp("m != 0 (mod 8)", m % 8 != 0);
    }
    if (!b.hyp_ok()) return b.finish_single(f, m >= 2 ? theorem_exponent(TheoremId::T_45h3, 5, m, h) : 0);
    const u64 e = theorem_exponent(TheoremId::T_45h3, 5, m, h);
    const u64 n = f.n();
    b.coset_checks(f, e);
    const u64 r = 4 * checked_pow(5, static_cast<unsigned>(h)) - 1;
    b.derived("e 5^h = 4 5^h - 1 (mod n)", mulmod(e, checked_pow(5, static_cast<unsigned>(h)), n) == r % n);

    const PrimeModulus mod(5);
    const Poly x = Poly::x(mod), one = Poly::constant(mod, 1);
    const unsigned ru = static_cast<unsigned>(r);
    const Poly fr = pow(x + one, ru) + pow(x, ru) + one;
    const DegreeProfile prof = distinct_degree_profile(fr, fr.degree());
    if (h == 0) {
        const Poly expect = scale(x_plus(mod, 1) * pow(x_plus(mod, -1), 2), 2);
        b.derived("(x+1)^3 + x^3 + 1 = 2(x+1)(x-1)^2", fr == expect, to_string(fr));
    } else {
        const bool lin = prof.leading == 2 && prof.groups.size() >= 2 && prof.groups[0].degree == 1 &&
                         prof.groups[0].multiplicity == 1 && prof.groups[0].product == x_plus(mod, 1) &&
                         prof.groups[1].degree == 1 && prof.groups[1].multiplicity == 2 &&
                         prof.groups[1].product == x_plus(mod, -1);
        b.derived("f1 = 2(x+1)(x-1)^2 g1", lin, profile_str(prof));
        b.derived("g1 is a product of two degree-8 irreducibles",
                  prof.factor_count(8) == 2 && prof.total_degree(8) == 16 && prof.complete());
    }
    b.derived("no root in F_{5^m} \\ F_5", no_new_roots(prof, m), profile_str(prof));
    return b.finish_single(f, e);
}

TheoremVerdict check_T_5_minus3(const Field& f) {
    require_quinary(f, "T_5_minus3");
    if (f.m() % 2 == 0) throw InvalidArgument("T_5_minus3 is stated for odd m only");
    Builder b(TheoremId::T_5_minus3, f);
    b.hyp("m >= 2", f.m() >= 2);
    if (!b.hyp_ok()) return b.finish_single(f, 0);
    const u64 e = theorem_exponent(TheoremId::T_5_minus3, 5, f.m());
    b.coset_checks(f, e);
    b.derived("e = 3 (mod 4)", e % 4 == 3);

    const PrimeModulus mod(5);
    const Poly x3 = pow(Poly::x(mod), 3), y3 = pow(x_plus(mod, 1), 3);
    // (eta(x), eta(x+1)) -> (x+1)^3 x^3 + eta(x) (x+1)^3 + eta(x+1) x^3
    constexpr std::array<std::pair<int, int>, 4> kCases{{{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}};
    for (std::size_t i = 0; i < kCases.size(); ++i) {
        const auto [ex, ex1] = kCases[i];
        const Poly c = y3 * x3 + scale(y3, static_cast<std::uint32_t>(ex > 0 ? 1 : 4)) +
                       scale(x3, static_cast<std::uint32_t>(ex1 > 0 ? 1 : 4));
        const DegreeProfile prof = distinct_degree_profile(c, c.degree());
        const bool split = prof.complete() && prof.total_degree(1) == c.degree();
        const bool ok = is_irreducible(c) || split;
        b.derived("case " + std::to_string(i + 1) + " polynomial irreducible or split over F_5", ok,
                  to_string(c) + ": " + profile_str(prof));
        b.derived("case " + std::to_string(i + 1) + " has no root in F_{5^m} \\ F_5", no_new_roots(prof, f.m()));
    }
    return b.finish_single(f, e);
}

std::vector<TheoremVerdict> family_verdicts(const Field& f) {
    std::vector<TheoremVerdict> out;
    const int m = f.m();
    out.push_back(check_T_pm2(f));
    for (int h = 0; h < m; ++h) out.push_back(check_T_s_ph1(f, h));
    for (int sign : {1, -1}) {
        for (int k = 0; k < m; ++k) {
            for (int h = 0; h < m; ++h) out.push_back(check_T_cong(f, k, h, sign));
        }
    }
    out.push_back(check_T_sm1(f));
    if (f.p() == 5) {
        for (int h = 0; h < m; ++h) out.push_back(check_T_5_half(f, h));
        out.push_back(check_C_sm1_p5(f));
        for (int h : {0, 1}) out.push_back(check_T_45h3(f, h));
        if (m % 2 == 1) out.push_back(check_T_5_minus3(f));
    }
    if (f.p() == 7) out.push_back(check_C_sm1_p7(f));
    return out;
}

std::vector<TheoremVerdict> criterion_verdicts(const Field& f, u64 e) {
    std::vector<TheoremVerdict> out;
    if (f.p() != 5 || e < 1 || e >= f.n()) return out;
    out.push_back(check_P_quinary_iff(f, e));
    if (e % 4 == 3) out.push_back(check_T_q_e3mod4(f, e));
    return out;
}

}  // namespace cyclopt
