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

#include "cyclopt/field.hpp"

#include <string>

#include "cyclopt/errors.hpp"

namespace cyclopt {

u64 order_of_x(const Poly& pi) {
    if (pi.degree() < 1 || pi[0] == 0) throw InvalidArgument("order of x needs pi(0) != 0");
    const Poly x = Poly::x(pi.modulus());
    const Poly one = Poly::constant(pi.modulus(), 1);
    const u64 n = checked_pow(pi.p(), static_cast<unsigned>(pi.degree())) - 1;
    u64 order = n;
    for (u64 q : prime_divisors(n)) {
        while (order % q == 0 && powmod(x, order / q, pi) == one) order /= q;
    }
    if (powmod(x, order, pi) != one) throw NotPrimitive("x is not a unit modulo " + to_string(pi));
    return order;
}

Poly find_primitive_polynomial(PrimeModulus mod, int m) {
    const std::uint32_t p = mod.value();
    if (m == 1) {
        for (std::uint32_t g = 2; g < p; ++g) {
            Poly cand(mod, {-static_cast<long long>(g), 1});
            if (order_of_x(cand) == p - 1) return cand;
        }
        throw InternalError("no primitive root modulo " + std::to_string(p));
    }
    const u64 n = checked_pow(p, static_cast<unsigned>(m)) - 1;
    for (u64 v = 1; v <= n; ++v) {
        if (v % p == 0) continue;  // constant term zero
        std::vector<std::uint32_t> c(static_cast<std::size_t>(m) + 1, 0);
        u64 t = v;
        for (int i = 0; i < m; ++i) {
            c[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(t % p);
            t /= p;
        }
        c[static_cast<std::size_t>(m)] = 1;
        Poly cand = Poly::from_residues(mod, std::move(c));
        if (is_irreducible(cand) && order_of_x(cand) == n) return cand;
    }
    throw InternalError("no primitive polynomial found");
}

FieldPtr build_field(u64 p, int m, std::optional<Poly> pi, u64 table_limit) {
    PrimeModulus mod(p);
    if (m < 1) throw InvalidArgument("extension degree must be >= 1");
    u64 size = 1;
    for (int i = 0; i < m; ++i) {
        if (size > kMaxFieldSize / p) throw LimitExceeded("field sizes above 2^40 are not supported");
        size *= p;
    }
    if (table_limit > (1ULL << 31)) throw InvalidArgument("table limit above 2^31");
    Poly def(mod);
    if (pi) {
        if (!(pi->modulus() == mod)) throw InvalidArgument("pi has a different modulus");
        if (pi->degree() != m) {
            throw InvalidArgument("pi has degree " + std::to_string(pi->degree()) + ", expected " + std::to_string(m));
        }
        if (!pi->is_monic()) throw InvalidArgument("pi must be monic");
        if (!is_irreducible(*pi)) throw NotPrimitive("pi = " + to_string(*pi) + " is not irreducible");
        u64 ord = order_of_x(*pi);
        if (ord != size - 1) {
            throw NotPrimitive("pi = " + to_string(*pi) + " is irreducible but alpha has order " + std::to_string(ord) +
                               ", not " + std::to_string(size - 1));
        }
        def = *pi;
    } else {
        def = find_primitive_polynomial(mod, m);
    }
    std::shared_ptr<Field> f(new Field(mod, m, std::move(def)));
    if (size <= table_limit) f->build_tables();
    return f;
}

Field::Field(PrimeModulus mod, int m, Poly pi)
    : mod_(mod), m_(m), pi_(std::move(pi)), size_(checked_pow(mod.value(), static_cast<unsigned>(m))) {
    order_primes_ = prime_divisors(size_ - 1);
}

void Field::build_tables() {
    const u64 n = size_ - 1;
    const std::uint32_t p = mod_.value();
    exp_.resize(n);
    log_.assign(size_, kNoLog);
    std::vector<std::uint32_t> cur(static_cast<std::size_t>(m_), 0);
    cur[0] = 1;
    for (u64 j = 0; j < n; ++j) {
        std::uint32_t packed = static_cast<std::uint32_t>(pack(ExtElem{cur}));
        if (log_[packed] != kNoLog) throw InternalError("alpha is not primitive while building tables");
        exp_[j] = packed;
        log_[packed] = static_cast<std::uint32_t>(j);
        // multiply by alpha: shift up, fold the top coefficient through pi
        std::uint32_t top = cur.back();
        for (int i = m_ - 1; i > 0; --i) cur[static_cast<std::size_t>(i)] = cur[static_cast<std::size_t>(i) - 1];
        cur[0] = 0;
        for (int i = 0; i < m_; ++i) {
            auto& slot = cur[static_cast<std::size_t>(i)];
            slot = mod_.sub(slot, mod_.mul(top, pi_[static_cast<std::size_t>(i)]));
        }
    }
    zech_.resize(n);
    for (u64 j = 0; j < n; ++j) {
        std::uint32_t v = exp_[j];
        std::uint32_t c0 = v % p;
        std::uint32_t w = v - c0 + (c0 + 1 == p ? 0 : c0 + 1);
        zech_[j] = (w == 0) ? kNoLog : log_[w];
    }
    base_log_.assign(p, kNoLog);
    for (std::uint32_t c = 1; c < p; ++c) base_log_[c] = log_[c];
}

void Field::require_tables(const char* what) const {
    if (!has_tables()) {
        throw LimitExceeded(std::string(what) + " needs exp/log tables; field of size " + std::to_string(size_) +
                            " exceeds the table limit");
    }
}

ExtElem Field::alpha() const {
    if (m_ == 1) return embed(-static_cast<long long>(pi_[0]));
    ExtElem a = zero();
    a.coeffs[1] = 1;
    return a;
}

ExtElem Field::embed(long long c) const {
    ExtElem a = zero();
    a.coeffs[0] = mod_.reduce(c);
    return a;
}

ExtElem Field::element(const std::vector<long long>& coeffs) const {
    if (coeffs.size() > static_cast<std::size_t>(m_)) {
        // reduce modulo pi
        Poly r = Poly(mod_, coeffs) % pi_;
        ExtElem a = zero();
        for (int i = 0; i <= r.degree(); ++i) a.coeffs[static_cast<std::size_t>(i)] = r[static_cast<std::size_t>(i)];
        return a;
    }
    ExtElem a = zero();
    for (std::size_t i = 0; i < coeffs.size(); ++i) a.coeffs[i] = mod_.reduce(coeffs[i]);
    return a;
}

bool Field::is_zero(const ExtElem& x) const noexcept {
    for (auto c : x.coeffs) {
        if (c != 0) return false;
    }
    return true;
}

bool Field::in_base_field(const ExtElem& x) const noexcept {
    for (std::size_t i = 1; i < x.coeffs.size(); ++i) {
        if (x.coeffs[i] != 0) return false;
    }
    return true;
}

ExtElem Field::add(const ExtElem& a, const ExtElem& b) const {
    ExtElem r = zero();
    for (int i = 0; i < m_; ++i) {
        auto k = static_cast<std::size_t>(i);
        r.coeffs[k] = mod_.add(a.coeffs[k], b.coeffs[k]);
    }
    return r;
}

ExtElem Field::sub(const ExtElem& a, const ExtElem& b) const {
    ExtElem r = zero();
    for (int i = 0; i < m_; ++i) {
        auto k = static_cast<std::size_t>(i);
        r.coeffs[k] = mod_.sub(a.coeffs[k], b.coeffs[k]);
    }
    return r;
}

ExtElem Field::neg(const ExtElem& a) const {
    ExtElem r = a;
    for (auto& c : r.coeffs) c = mod_.neg(c);
    return r;
}

ExtElem Field::scale(const ExtElem& a, std::uint32_t c) const {
    ExtElem r = a;
    for (auto& v : r.coeffs) v = mod_.mul(v, c % mod_.value());
    return r;
}

std::vector<std::uint32_t> Field::mul_raw(const std::vector<std::uint32_t>& a,
                                          const std::vector<std::uint32_t>& b) const {
    const auto m = static_cast<std::size_t>(m_);
    std::vector<std::uint32_t> prod(2 * m - 1, 0);
    for (std::size_t i = 0; i < m; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < m; ++j) prod[i + j] = mod_.add(prod[i + j], mod_.mul(a[i], b[j]));
    }
    // fold degrees >= m using x^m = -(pi_0 + ... + pi_{m-1} x^{m-1})
    for (std::size_t d = prod.size(); d-- > m;) {
        std::uint32_t top = prod[d];
        if (top == 0) continue;
        prod[d] = 0;
        for (std::size_t i = 0; i < m; ++i) {
            auto& slot = prod[d - m + i];
            slot = mod_.sub(slot, mod_.mul(top, pi_[i]));
        }
    }
    prod.resize(m);
    return prod;
}

ExtElem Field::mul(const ExtElem& a, const ExtElem& b) const {
    if (has_tables()) {
        if (is_zero(a) || is_zero(b)) return zero();
        u64 j = (static_cast<u64>(log_[pack(a)]) + log_[pack(b)]) % n();
        return unpack(exp_[j]);
    }
    return ExtElem{mul_raw(a.coeffs, b.coeffs)};
}

ExtElem Field::inv(const ExtElem& a) const {
    if (is_zero(a)) throw InvalidArgument("inverse of zero in F_{p^m}");
    return pow(a, n() - 1);
}

ExtElem Field::pow(const ExtElem& a, u64 k) const {
    if (is_zero(a)) return k == 0 ? one() : zero();
    k %= n();
    if (has_tables()) return unpack(exp_[mulmod(log_[pack(a)], k, n())]);
    ExtElem result = one();
    ExtElem base = a;
    while (k) {
        if (k & 1) result = ExtElem{mul_raw(result.coeffs, base.coeffs)};
        k >>= 1;
        if (k) base = ExtElem{mul_raw(base.coeffs, base.coeffs)};
    }
    return result;
}

u64 Field::pack(const ExtElem& a) const {
    u64 v = 0;
    for (std::size_t i = a.coeffs.size(); i-- > 0;) v = v * mod_.value() + a.coeffs[i];
    return v;
}

ExtElem Field::unpack(u64 packed) const {
    ExtElem a = zero();
    for (auto& c : a.coeffs) {
        c = static_cast<std::uint32_t>(packed % mod_.value());
        packed /= mod_.value();
    }
    return a;
}

ExtElem Field::exp(u64 j) const {
    if (has_tables()) return unpack(exp_[j % n()]);
    return pow(alpha(), j);
}

u64 Field::log(const ExtElem& a) const {
    require_tables("discrete log");
    if (is_zero(a)) throw InvalidArgument("discrete log of zero");
    return log_[pack(a)];
}

Character eta(const Field& f, const ExtElem& x) {
    if (f.is_zero(x)) return Character::kZero;
    if (f.has_tables()) return f.log(x) % 2 == 0 ? Character::kSquare : Character::kNonsquare;
    return f.pow(x, f.n() / 2) == f.one() ? Character::kSquare : Character::kNonsquare;
}

u64 count_N(const Field& f, int i, int j) {
    if ((i != 1 && i != -1) || (j != 1 && j != -1)) throw InvalidArgument("count_N indices must be +1 or -1");
    if (!f.has_tables()) throw LimitExceeded("count_N enumerates the field and needs tables");
    const int want_x = i == 1 ? 0 : 1;
    const int want_y = j == 1 ? 0 : 1;
    u64 count = 0;
    for (u64 k = 0; k < f.n(); ++k) {
        std::uint32_t z = f.zech(k);
        if (z == kNoLog) continue;  // x = -1
        if (static_cast<int>(k % 2) == want_x && static_cast<int>(z % 2) == want_y) ++count;
    }
    return count;
}

namespace {

// Tonelli-Shanks with alpha as the fixed nonsquare; c must be a nonzero square.
ExtElem tonelli_shanks(const Field& f, const ExtElem& c) {
    u64 q = f.n();
    int s = 0;
    while (q % 2 == 0) {
        q /= 2;
        ++s;
    }
    ExtElem z = f.pow(f.alpha(), q);
    ExtElem t = f.pow(c, q);
    ExtElem r = f.pow(c, (q + 1) / 2);
    const ExtElem one = f.one();
    int m = s;
    while (t != one) {
        int i = 0;
        ExtElem tt = t;
        while (tt != one) {
            tt = f.mul(tt, tt);
            ++i;
        }
        ExtElem b = z;
        for (int k = 0; k < m - i - 1; ++k) b = f.mul(b, b);
        m = i;
        z = f.mul(b, b);
        t = f.mul(t, z);
        r = f.mul(r, b);
    }
    return r;
}

}  // namespace

std::optional<std::pair<ExtElem, ExtElem>> sqrt_in_field(const Field& f, const ExtElem& c) {
    if (f.is_zero(c)) return std::make_pair(f.zero(), f.zero());
    if (eta(f, c) == Character::kNonsquare) return std::nullopt;
    ExtElem r = f.has_tables() ? f.exp(f.log(c) / 2) : tonelli_shanks(f, c);
    return std::make_pair(r, f.neg(r));
}

u64 multiplicative_order(const Field& f, const ExtElem& x) {
    if (f.is_zero(x)) throw InvalidArgument("order of zero");
    const ExtElem one = f.one();
    u64 order = f.n();
    for (u64 q : f.order_primes()) {
        while (order % q == 0 && f.pow(x, order / q) == one) order /= q;
    }
    return order;
}

}  // namespace cyclopt
