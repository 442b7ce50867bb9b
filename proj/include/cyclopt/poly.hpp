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

#ifndef CYCLOPT_POLY_HPP
#define CYCLOPT_POLY_HPP

#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "cyclopt/numtheory.hpp"

namespace cyclopt {

/// An odd prime p < 2^31 together with the residue arithmetic of F_p.
/// Residues are stored in [0, p) and multiplied through 64-bit intermediates.
class PrimeModulus {
  public:
    explicit PrimeModulus(u64 p);

    std::uint32_t value() const noexcept { return p_; }

    std::uint32_t reduce(long long v) const noexcept;
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept {
        std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept { return a >= b ? a - b : a + p_ - b; }
    std::uint32_t neg(std::uint32_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
        return static_cast<std::uint32_t>(static_cast<u64>(a) * b % p_);
    }
    std::uint32_t pow(std::uint32_t a, u64 k) const noexcept;
    std::uint32_t inv(std::uint32_t a) const;  // throws InvalidArgument on zero

    friend bool operator==(const PrimeModulus&, const PrimeModulus&) = default;

  private:
    std::uint32_t p_;
};

/// Dense polynomial over F_p, coefficients in ascending degree with no
/// trailing zeros. The zero polynomial has an empty coefficient vector and
/// degree -1.
class Poly {
  public:
    explicit Poly(PrimeModulus mod) : mod_(mod) {}
    Poly(PrimeModulus mod, std::initializer_list<long long> coeffs);
    Poly(PrimeModulus mod, const std::vector<long long>& coeffs);

    static Poly from_residues(PrimeModulus mod, std::vector<std::uint32_t> coeffs);
    static Poly constant(PrimeModulus mod, long long c) { return Poly(mod, {c}); }
    static Poly monomial(PrimeModulus mod, long long c, std::size_t deg);
    static Poly x(PrimeModulus mod) { return monomial(mod, 1, 1); }

    const PrimeModulus& modulus() const noexcept { return mod_; }
    std::uint32_t p() const noexcept { return mod_.value(); }
    const std::vector<std::uint32_t>& coeffs() const noexcept { return c_; }

    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_constant() const noexcept { return c_.size() <= 1; }
    std::uint32_t lead() const noexcept { return c_.empty() ? 0 : c_.back(); }
    bool is_monic() const noexcept { return !c_.empty() && c_.back() == 1; }

    /// Coefficient of x^i; zero past the degree.
    std::uint32_t operator[](std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }

    std::uint32_t evaluate(std::uint32_t x) const noexcept;

    friend bool operator==(const Poly& a, const Poly& b) noexcept { return a.mod_ == b.mod_ && a.c_ == b.c_; }

  private:
    void trim() noexcept;

    PrimeModulus mod_;
    std::vector<std::uint32_t> c_;
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator-(const Poly& a);
Poly operator*(const Poly& a, const Poly& b);
Poly scale(const Poly& a, std::uint32_t c);

/// Quotient and remainder with a = q*b + r, deg r < deg b.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);

Poly monic(const Poly& a);

/// Monic greatest common divisor; throws when both inputs are zero.
Poly gcd(const Poly& a, const Poly& b);

/// base^exp mod modulus by square-and-multiply on the exponent bits.
/// With base = x and exp = p^r this is the Frobenius power x^(p^r).
Poly powmod(const Poly& base, u64 exp, const Poly& modulus);

Poly pow(const Poly& base, unsigned exp);

/// Irreducible factors of one degree sharing one multiplicity, kept as their
/// product.
struct FactorGroup {
    int degree = 0;
    int multiplicity = 0;
    Poly product;

    int count() const noexcept { return product.degree() / degree; }
};

/// Distinct-degree factor profile of a polynomial.
///
/// Groups are ordered by (degree, multiplicity). `unresolved` is the monic
/// cofactor whose irreducible factors all exceed the requested maximum degree;
/// it is the constant 1 when the profile is complete.
struct DegreeProfile {
    std::uint32_t leading = 0;
    std::vector<FactorGroup> groups;
    Poly unresolved;

    bool complete() const noexcept { return unresolved.degree() == 0; }
    /// Summed degree, with multiplicity, of the factors of the given degree.
    int total_degree(int factor_degree) const noexcept;
    /// Number of irreducible factors of the given degree, with multiplicity.
    int factor_count(int factor_degree) const noexcept;
};

/// Peels off gcd(f, x^(p^r) - x) for r = 1..max_deg, splitting repeated
/// factors by iterated division. Stops early once the cofactor is provably
/// irreducible.
DegreeProfile distinct_degree_profile(const Poly& f, int max_deg);

bool is_irreducible(const Poly& f);

/// Pretty form `c_d x^d + ... + c_0`; unit coefficients are omitted on
/// non-constant terms.
std::string to_string(const Poly& f);

/// Ascending coefficient list as a comma separated string, e.g. `3,4,5,0,1`.
std::string to_coeff_list(const Poly& f);

/// Parses the ascending coefficient list accepted by `--pi`.
Poly parse_coeff_list(PrimeModulus mod, const std::string& text);

}  // namespace cyclopt

#endif  // CYCLOPT_POLY_HPP
