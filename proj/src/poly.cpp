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

#include "cyclopt/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "cyclopt/errors.hpp"

namespace cyclopt {

PrimeModulus::PrimeModulus(u64 p) {
    if (p < 3 || p >= (1ULL << 31) || !is_prime(p)) {
        throw InvalidArgument("modulus must be an odd prime below 2^31, got " + std::to_string(p));
    }
    p_ = static_cast<std::uint32_t>(p);
}

std::uint32_t PrimeModulus::reduce(long long v) const noexcept {
    long long r = v % static_cast<long long>(p_);
    return static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
}

std::uint32_t PrimeModulus::pow(std::uint32_t a, u64 k) const noexcept {
    return static_cast<std::uint32_t>(powmod(a, k, p_));
}

std::uint32_t PrimeModulus::inv(std::uint32_t a) const {
    if (a % p_ == 0) throw InvalidArgument("inverse of zero in F_p");
    return pow(a, p_ - 2);
}

Poly::Poly(PrimeModulus mod, std::initializer_list<long long> coeffs) : mod_(mod) {
    c_.reserve(coeffs.size());
    for (long long v : coeffs) c_.push_back(mod_.reduce(v));
    trim();
}

Poly::Poly(PrimeModulus mod, const std::vector<long long>& coeffs) : mod_(mod) {
    c_.reserve(coeffs.size());
    for (long long v : coeffs) c_.push_back(mod_.reduce(v));
    trim();
}

Poly Poly::from_residues(PrimeModulus mod, std::vector<std::uint32_t> coeffs) {
    Poly r(mod);
    for (auto& v : coeffs) v %= mod.value();
    r.c_ = std::move(coeffs);
    r.trim();
    return r;
}

Poly Poly::monomial(PrimeModulus mod, long long c, std::size_t deg) {
    Poly r(mod);
    r.c_.assign(deg + 1, 0);
    r.c_[deg] = mod.reduce(c);
    r.trim();
    return r;
}

void Poly::trim() noexcept {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::uint32_t Poly::evaluate(std::uint32_t x) const noexcept {
    std::uint32_t acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = mod_.add(mod_.mul(acc, x), *it);
    return acc;
}

namespace {

void require_same(const Poly& a, const Poly& b) {
    if (!(a.modulus() == b.modulus())) throw InvalidArgument("polynomial moduli differ");
}

}  // namespace

Poly operator+(const Poly& a, const Poly& b) {
    require_same(a, b);
    const auto& m = a.modulus();
    std::vector<std::uint32_t> r(std::max(a.coeffs().size(), b.coeffs().size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = m.add(a[i], b[i]);
    return Poly::from_residues(m, std::move(r));
}

Poly operator-(const Poly& a, const Poly& b) {
    require_same(a, b);
    const auto& m = a.modulus();
    std::vector<std::uint32_t> r(std::max(a.coeffs().size(), b.coeffs().size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = m.sub(a[i], b[i]);
    return Poly::from_residues(m, std::move(r));
}

Poly operator-(const Poly& a) { return Poly(a.modulus()) - a; }

Poly operator*(const Poly& a, const Poly& b) {
    require_same(a, b);
    const auto& m = a.modulus();
    if (a.is_zero() || b.is_zero()) return Poly(m);
    const auto& ac = a.coeffs();
    const auto& bc = b.coeffs();
    // p < 2^31, so a product plus a reduced partial sum stays below 2^63
    const u64 p = m.value();
    std::vector<u64> acc(ac.size() + bc.size() - 1, 0);
    for (std::size_t i = 0; i < ac.size(); ++i) {
        if (ac[i] == 0) continue;
        for (std::size_t j = 0; j < bc.size(); ++j) {
            acc[i + j] = (acc[i + j] + static_cast<u64>(ac[i]) * bc[j]) % p;
        }
    }
    std::vector<std::uint32_t> r(acc.size());
    for (std::size_t i = 0; i < acc.size(); ++i) r[i] = static_cast<std::uint32_t>(acc[i]);
    return Poly::from_residues(m, std::move(r));
}

Poly scale(const Poly& a, std::uint32_t c) {
    std::vector<std::uint32_t> r(a.coeffs());
    for (auto& v : r) v = a.modulus().mul(v, c % a.p());
    return Poly::from_residues(a.modulus(), std::move(r));
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    require_same(a, b);
    if (b.is_zero()) throw InvalidArgument("polynomial division by zero");
    const auto& m = a.modulus();
    if (a.degree() < b.degree()) return {Poly(m), a};
    std::vector<std::uint32_t> rem(a.coeffs());
    const auto& bc = b.coeffs();
    const int db = b.degree();
    const std::uint32_t inv_lead = m.inv(b.lead());
    std::vector<std::uint32_t> quot(static_cast<std::size_t>(a.degree() - db + 1), 0);
    for (int i = a.degree(); i >= db; --i) {
        std::uint32_t c = rem[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        std::uint32_t q = m.mul(c, inv_lead);
        quot[static_cast<std::size_t>(i - db)] = q;
        for (int j = 0; j <= db; ++j) {
            auto& slot = rem[static_cast<std::size_t>(i - db + j)];
            slot = m.sub(slot, m.mul(q, bc[static_cast<std::size_t>(j)]));
        }
    }
    rem.resize(static_cast<std::size_t>(db));
    return {Poly::from_residues(m, std::move(quot)), Poly::from_residues(m, std::move(rem))};
}

Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

Poly monic(const Poly& a) {
    if (a.is_zero()) return a;
    return scale(a, a.modulus().inv(a.lead()));
}

Poly gcd(const Poly& a, const Poly& b) {
    require_same(a, b);
    if (a.is_zero() && b.is_zero()) throw InvalidArgument("gcd of two zero polynomials");
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return monic(x);
}

Poly powmod(const Poly& base, u64 exp, const Poly& modulus) {
    require_same(base, modulus);
    if (modulus.is_zero()) throw InvalidArgument("powmod with zero modulus");
    Poly result = Poly::constant(base.modulus(), 1) % modulus;
    Poly b = base % modulus;
    while (exp) {
        if (exp & 1) result = (result * b) % modulus;
        exp >>= 1;
        if (exp) b = (b * b) % modulus;
    }
    return result;
}

Poly pow(const Poly& base, unsigned exp) {
    Poly result = Poly::constant(base.modulus(), 1);
    Poly b = base;
    while (exp) {
        if (exp & 1) result = result * b;
        exp >>= 1;
        if (exp) b = b * b;
    }
    return result;
}

int DegreeProfile::total_degree(int factor_degree) const noexcept {
    int total = 0;
    for (const auto& g : groups) {
        if (g.degree == factor_degree) total += g.multiplicity * g.product.degree();
    }
    return total;
}

int DegreeProfile::factor_count(int factor_degree) const noexcept {
    int total = 0;
    for (const auto& g : groups) {
        if (g.degree == factor_degree) total += g.multiplicity * g.count();
    }
    return total;
}

namespace {

// Splits `part` (product of distinct degree-r irreducibles, all dividing rest)
// off `rest` with every multiplicity, appending one group per multiplicity.
void peel(Poly& rest, Poly part, int r, std::vector<FactorGroup>& out) {
    int mult = 1;
    while (part.degree() >= 1) {
        auto [q, rem] = divmod(rest, part);
        if (!rem.is_zero()) throw InternalError("distinct-degree split left a remainder");
        rest = std::move(q);
        Poly next = gcd(rest, part);
        Poly exact = divmod(part, next).first;
        if (exact.degree() >= 1) out.push_back({r, mult, monic(exact)});
        part = std::move(next);
        ++mult;
    }
}

}  // namespace

DegreeProfile distinct_degree_profile(const Poly& f, int max_deg) {
    if (f.degree() < 1) throw InvalidArgument("factor profile of a constant polynomial");
    const auto& m = f.modulus();
    DegreeProfile prof{f.lead(), {}, Poly::constant(m, 1)};
    Poly rest = monic(f);
    const Poly x = Poly::x(m);
    Poly frob = x % rest;  // x^(p^r) mod rest, advanced one power of p per step
    for (int r = 1; r <= max_deg && rest.degree() >= 1; ++r) {
        if (2 * r > rest.degree()) {
            // every factor has degree >= r, so a single factor remains
            prof.groups.push_back({rest.degree(), 1, rest});
            rest = Poly::constant(m, 1);
            break;
        }
        frob = powmod(frob, m.value(), rest);
        Poly part = gcd(rest, frob - x);
        if (part.degree() >= 1) {
            peel(rest, part, r, prof.groups);
            if (rest.degree() >= 1) frob = frob % rest;
        }
    }
    if (rest.degree() >= 1) prof.unresolved = rest;
    std::stable_sort(prof.groups.begin(), prof.groups.end(), [](const FactorGroup& a, const FactorGroup& b) {
        return a.degree != b.degree ? a.degree < b.degree : a.multiplicity < b.multiplicity;
    });
    return prof;
}

bool is_irreducible(const Poly& f) {
    if (f.degree() < 1) throw InvalidArgument("irreducibility of a constant polynomial");
    auto prof = distinct_degree_profile(f, f.degree());
    return prof.groups.size() == 1 && prof.groups[0].degree == f.degree() && prof.groups[0].multiplicity == 1;
}

std::string to_string(const Poly& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = f.degree(); i >= 0; --i) {
        std::uint32_t c = f[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (c != 1 || i == 0) os << c;
        if (i >= 1) os << 'x';
        if (i >= 2) os << '^' << i;
    }
    return os.str();
}

std::string to_coeff_list(const Poly& f) {
    std::ostringstream os;
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) os << (i ? "," : "") << f.coeffs()[i];
    return os.str();
}

Poly parse_coeff_list(PrimeModulus mod, const std::string& text) {
    std::vector<long long> coeffs;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char ch) { return std::isspace(ch); }),
                   item.end());
        if (item.empty()) throw InvalidArgument("empty entry in coefficient list '" + text + "'");
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != item.size()) throw InvalidArgument("bad coefficient '" + item + "'");
        coeffs.push_back(v);
    }
    if (coeffs.empty()) throw InvalidArgument("empty coefficient list");
    return Poly(mod, coeffs);
}

}  // namespace cyclopt
