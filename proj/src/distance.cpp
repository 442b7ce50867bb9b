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

#include "cyclopt/distance.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <limits>
#include <mutex>
#include <numeric>
#include <thread>

#include "cyclopt/errors.hpp"

namespace cyclopt {

std::string_view to_string(DistanceMethod m) noexcept {
    return m == DistanceMethod::kBruteForce ? "brute-force" : "normalized-search";
}

Witness canonical_witness(const Witness& w, u64 n, const PrimeModulus& mod) {
    std::optional<Witness> best;
    const std::size_t len = w.weight();
    for (std::size_t t = 0; t < len; ++t) {
        const std::uint32_t inv = mod.inv(w.coeffs[t]);
        std::vector<std::pair<u64, std::uint32_t>> terms(len);
        for (std::size_t i = 0; i < len; ++i) {
            terms[i] = {(w.x_logs[i] + n - w.x_logs[t]) % n, mod.mul(w.coeffs[i], inv)};
        }
        std::sort(terms.begin(), terms.end());
        Witness cand;
        for (auto [l, c] : terms) {
            cand.x_logs.push_back(l);
            cand.coeffs.push_back(c);
        }
        if (!best || std::tie(cand.x_logs, cand.coeffs) < std::tie(best->x_logs, best->coeffs)) best = std::move(cand);
    }
    return best ? *best : w;
}

bool verify_witness(const CodeSpec& code, const Witness& w) {
    const Field& f = *code.field;
    if (w.coeffs.size() != w.x_logs.size() || w.coeffs.empty()) return false;
    for (std::size_t i = 0; i < w.weight(); ++i) {
        if (w.coeffs[i] % f.p() == 0 || w.x_logs[i] >= f.n()) return false;
        for (std::size_t j = 0; j < i; ++j) {
            if (w.x_logs[i] == w.x_logs[j]) return false;
        }
    }
    const ExtElem a = f.alpha();
    for (u64 t : code.nonzero_exponents) {
        ExtElem sum = f.zero();
        for (std::size_t i = 0; i < w.weight(); ++i) {
            ExtElem xi = f.pow(a, w.x_logs[i]);
            sum = f.add(sum, f.scale(f.pow(xi, t), w.coeffs[i]));
        }
        if (!f.is_zero(sum)) return false;
    }
    return true;
}

namespace {

void require_tables(const Field& f) {
    if (!f.has_tables()) throw LimitExceeded("normalized distance search needs field exp/log tables");
}

}  // namespace

std::optional<Witness> has_weight2(const CodeSpec& code) {
    const Field& f = *code.field;
    require_tables(f);
    const u64 n = f.n();
    const u64 e = code.e;
    const auto& mod = f.modulus();
    const std::uint32_t p = f.p();
    for (std::uint32_t c2 = 1; c2 < p; ++c2) {
        const u64 lc2 = f.base_log(c2);
        for (u64 j2 = 1; j2 < n; ++j2) {
            // row s: 1 + c2 eta(x2) = 0
            const std::uint32_t eta2 = (j2 % 2 == 0) ? 1 : p - 1;
            if (mod.add(1, mod.mul(c2, eta2)) != 0) continue;
            // row 1: 1 + c2 x2 = 0
            if (f.zech((lc2 + j2) % n) != kNoLog) continue;
            // row e: 1 + c2 x2^e = 0
            if (f.zech((lc2 + mulmod(e, j2, n)) % n) != kNoLog) continue;
            return canonical_witness(Witness{{1, c2}, {0, j2}}, n, mod);
        }
    }
    return std::nullopt;
}

std::optional<Witness> has_weight3(const CodeSpec& code, unsigned threads) {
    const Field& f = *code.field;
    require_tables(f);
    const u64 n = f.n();
    const u64 e = code.e;
    const auto& mod = f.modulus();
    const std::uint32_t p = f.p();

    std::vector<u64> log_c(p), log_neg_c(p), log_neg_inv_c(p);
    for (std::uint32_t c = 1; c < p; ++c) {
        log_c[c] = f.base_log(c);
        log_neg_c[c] = f.base_log(mod.neg(c));
        log_neg_inv_c[c] = f.base_log(mod.neg(mod.inv(c)));
    }

    // work item w enumerates (c2, c3) in ascending order
    const u64 items = static_cast<u64>(p - 1) * (p - 1);
    std::atomic<u64> next{0};
    std::atomic<u64> best_item{std::numeric_limits<u64>::max()};
    std::mutex mu;
    std::optional<std::pair<u64, Witness>> best;

    auto worker = [&] {
        for (;;) {
            const u64 w = next.fetch_add(1);
            if (w >= items || w > best_item.load()) return;
            const std::uint32_t c2 = static_cast<std::uint32_t>(w / (p - 1)) + 1;
            const std::uint32_t c3 = static_cast<std::uint32_t>(w % (p - 1)) + 1;
            // row s only sees the parities of the logs
            bool row_s[2][2];
            for (int a = 0; a < 2; ++a) {
                for (int b = 0; b < 2; ++b) {
                    std::uint32_t s2 = a ? p - 1 : 1, s3 = b ? p - 1 : 1;
                    row_s[a][b] = mod.add(1, mod.add(mod.mul(c2, s2), mod.mul(c3, s3))) == 0;
                }
            }
            if (!row_s[0][0] && !row_s[0][1] && !row_s[1][0] && !row_s[1][1]) continue;
            const u64 lc2 = log_c[c2], lnc3 = log_neg_c[c3], lnic3 = log_neg_inv_c[c3];
            for (u64 j2 = 1; j2 < n; ++j2) {
                const std::uint32_t z = f.zech((lc2 + j2) % n);  // log(1 + c2 x2)
                if (z == kNoLog) continue;
                const u64 j3 = (z + lnic3) % n;  // x3 = -(1 + c2 x2) / c3
                if (j3 == 0 || j3 == j2) continue;
                if (!row_s[j2 & 1][j3 & 1]) continue;
                const std::uint32_t za = f.zech((lc2 + mulmod(e, j2, n)) % n);  // log(1 + c2 x2^e)
                if (za == kNoLog || za != (lnc3 + mulmod(e, j3, n)) % n) continue;
                std::lock_guard lock(mu);
                if (!best || w < best->first) {
                    best = {w, Witness{{1, c2, c3}, {0, j2, j3}}};
                    best_item.store(w);
                }
                break;
            }
        }
    };

    const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(items)));
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned i = 0; i < workers; ++i) pool.emplace_back(worker);
    }
    if (!best) return std::nullopt;
    return canonical_witness(best->second, n, mod);
}

DistanceReport min_distance(const CodeSpec& code, unsigned threads) {
    const auto start = std::chrono::steady_clock::now();
    DistanceReport r;
    r.method = DistanceMethod::kNormalizedSearch;
    if (auto w2 = has_weight2(code)) {
        r.d = 2;
        r.exact = true;
        r.witness = std::move(w2);
    } else if (auto w3 = has_weight3(code, threads)) {
        r.d = 3;
        r.exact = true;
        r.witness = std::move(w3);
    } else {
        r.d = 4;
        r.exact = code.full_size() && code.p() >= 5;
    }
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

namespace {

class SupportSearch {
  public:
    SupportSearch(const CodeSpec& code, int weight)
        : mod_(code.field->modulus()), n_(code.n), r_(static_cast<std::size_t>(code.g.degree())), weight_(weight) {
        // residues[i] = x^i mod g, built by repeated multiplication by x
        residues_.assign(n_ * r_, 0);
        std::vector<std::uint32_t> cur(r_, 0);
        cur[0] = 1;
        for (u64 i = 0; i < n_; ++i) {
            std::copy(cur.begin(), cur.end(), residues_.begin() + static_cast<std::ptrdiff_t>(i * r_));
            std::uint32_t top = cur[r_ - 1];
            for (std::size_t t = r_ - 1; t > 0; --t) cur[t] = cur[t - 1];
            cur[0] = 0;
            for (std::size_t t = 0; t < r_; ++t) cur[t] = mod_.sub(cur[t], mod_.mul(top, code.g[t]));
        }
        partial_.assign(static_cast<std::size_t>(weight_ + 1) * r_, 0);
        pos_.resize(static_cast<std::size_t>(weight_));
        coef_.resize(static_cast<std::size_t>(weight_));
    }

    std::optional<Witness> run() {
        if (descend(0, 0)) {
            return Witness{coef_, std::vector<u64>(pos_.begin(), pos_.end())};
        }
        return std::nullopt;
    }

  private:
    bool descend(int level, u64 first) {
        const auto lv = static_cast<std::size_t>(level);
        if (level == weight_) {
            const auto* acc = &partial_[lv * r_];
            return std::all_of(acc, acc + r_, [](std::uint32_t v) { return v == 0; });
        }
        const std::uint32_t p = mod_.value();
        for (u64 i = first; i + static_cast<u64>(weight_ - level) <= n_; ++i) {
            pos_[lv] = i;
            const auto* res = &residues_[i * r_];
            for (std::uint32_t c = 1; c < p; ++c) {
                coef_[lv] = c;
                const auto* prev = &partial_[lv * r_];
                auto* out = &partial_[(lv + 1) * r_];
                for (std::size_t t = 0; t < r_; ++t) out[t] = mod_.add(prev[t], mod_.mul(c, res[t]));
                if (descend(level + 1, i + 1)) return true;
            }
        }
        return false;
    }

    PrimeModulus mod_;
    u64 n_;
    std::size_t r_;
    int weight_;
    std::vector<std::uint32_t> residues_;
    std::vector<std::uint32_t> partial_;
    std::vector<u64> pos_;
    std::vector<std::uint32_t> coef_;
};

}  // namespace

DistanceReport brute_force_min_distance(const CodeSpec& code, int weight_cap) {
    if (weight_cap < 1 || weight_cap > 4) throw InvalidArgument("brute-force weight cap must lie in [1, 4]");
    if (code.n > 200) throw LimitExceeded("brute-force distance needs n <= 200, got " + std::to_string(code.n));
    const auto start = std::chrono::steady_clock::now();
    DistanceReport r;
    r.method = DistanceMethod::kBruteForce;
    r.d = weight_cap + 1;
    for (int w = 1; w <= weight_cap; ++w) {
        if (auto found = SupportSearch(code, w).run()) {
            r.d = w;
            r.exact = true;
            r.witness = canonical_witness(*found, code.n, code.field->modulus());
            break;
        }
    }
    // nothing up to weight 3 and d <= 4 known: d = 4 exactly
    if (!r.witness && weight_cap == 3 && code.full_size() && code.p() >= 5) r.exact = true;
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

}  // namespace cyclopt
