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

#ifndef CYCLOPT_FIELD_HPP
#define CYCLOPT_FIELD_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "cyclopt/poly.hpp"

namespace cyclopt {

/// Element of F_{p^m} in the polynomial basis 1, alpha, ..., alpha^(m-1).
/// Always exactly m residues.
struct ExtElem {
    std::vector<std::uint32_t> coeffs;

    friend bool operator==(const ExtElem&, const ExtElem&) = default;
};

/// Value of the quadratic character eta(x) = x^((p^m-1)/2).
enum class Character : int { kNonsquare = -1, kZero = 0, kSquare = 1 };

inline int to_int(Character c) noexcept { return static_cast<int>(c); }

inline constexpr u64 kDefaultTableLimit = 1ULL << 22;
inline constexpr u64 kMaxFieldSize = 1ULL << 40;
inline constexpr std::uint32_t kNoLog = UINT32_MAX;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// Builds F_{p^m} = F_p[x]/(pi). When pi is absent the smallest primitive
/// polynomial is searched (see find_primitive_polynomial). Primitivity is
/// verified through the prime factorization of p^m - 1.
///
/// Throws NotPrimitive when pi is reducible or its root has order below
/// p^m - 1, InvalidArgument for a malformed pi, LimitExceeded past 2^40.
FieldPtr build_field(u64 p, int m, std::optional<Poly> pi = std::nullopt, u64 table_limit = kDefaultTableLimit);

/// First primitive monic polynomial of degree m. For m = 1 this is x - g with
/// g the smallest primitive root; for m >= 2 candidates are visited in
/// ascending order of the integer c_0 + c_1 p + ... + c_{m-1} p^(m-1).
Poly find_primitive_polynomial(PrimeModulus mod, int m);

/// Multiplicative order of x modulo an irreducible pi with pi(0) != 0.
u64 order_of_x(const Poly& pi);

/// The ambient field. Immutable after construction; every member function is
/// const and safe to call concurrently.
///
/// When p^m does not exceed the table limit, exp/log and Zech tables are
/// built and elements can also be handled through their discrete logarithm
/// (the hot path of the distance search). Elements are packed as the integer
/// c_0 + c_1 p + ... + c_{m-1} p^(m-1), which indexes the log table.
class Field {
  public:
    const PrimeModulus& modulus() const noexcept { return mod_; }
    std::uint32_t p() const noexcept { return mod_.value(); }
    int m() const noexcept { return m_; }
    const Poly& pi() const noexcept { return pi_; }
    /// p^m
    u64 size() const noexcept { return size_; }
    /// p^m - 1, the order of alpha.
    u64 n() const noexcept { return size_ - 1; }
    const std::vector<u64>& order_primes() const noexcept { return order_primes_; }
    bool has_tables() const noexcept { return !exp_.empty(); }

    ExtElem zero() const { return ExtElem{std::vector<std::uint32_t>(static_cast<std::size_t>(m_), 0)}; }
    ExtElem one() const { return embed(1); }
    ExtElem alpha() const;
    ExtElem embed(long long c) const;
    ExtElem element(const std::vector<long long>& coeffs) const;

    bool is_zero(const ExtElem& x) const noexcept;
    bool in_base_field(const ExtElem& x) const noexcept;

    ExtElem add(const ExtElem& a, const ExtElem& b) const;
    ExtElem sub(const ExtElem& a, const ExtElem& b) const;
    ExtElem neg(const ExtElem& a) const;
    ExtElem scale(const ExtElem& a, std::uint32_t c) const;
    ExtElem mul(const ExtElem& a, const ExtElem& b) const;
    ExtElem inv(const ExtElem& a) const;  // throws InvalidArgument on zero
    /// a^k; the exponent is reduced mod n for nonzero a, 0^0 = 1.
    ExtElem pow(const ExtElem& a, u64 k) const;

    u64 pack(const ExtElem& a) const;
    ExtElem unpack(u64 packed) const;

    /// alpha^j.
    ExtElem exp(u64 j) const;
    /// Discrete logarithm to base alpha. Requires tables and a nonzero input.
    u64 log(const ExtElem& a) const;

    // Table views for hot loops. All require has_tables().
    std::uint32_t exp_packed(u64 j) const noexcept { return exp_[j]; }
    std::uint32_t log_packed(std::uint32_t packed) const noexcept { return log_[packed]; }
    /// Zech logarithm: log(1 + alpha^j), or kNoLog when alpha^j = -1.
    std::uint32_t zech(u64 j) const noexcept { return zech_[j]; }
    /// log of the embedded base-field residue c != 0.
    std::uint32_t base_log(std::uint32_t c) const noexcept { return base_log_[c]; }

  private:
    friend FieldPtr build_field(u64, int, std::optional<Poly>, u64);
    Field(PrimeModulus mod, int m, Poly pi);

    void require_tables(const char* what) const;
    std::vector<std::uint32_t> mul_raw(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) const;
    void build_tables();

    PrimeModulus mod_;
    int m_;
    Poly pi_;
    u64 size_;
    std::vector<u64> order_primes_;
    std::vector<std::uint32_t> exp_;
    std::vector<std::uint32_t> log_;
    std::vector<std::uint32_t> zech_;
    std::vector<std::uint32_t> base_log_;
};

Character eta(const Field& f, const ExtElem& x);

/// |N_{i,j}|: elements x outside {0, -1} with eta(x) = i and eta(x+1) = j,
/// counted by full enumeration. Requires tables.
u64 count_N(const Field& f, int i, int j);

/// Both square roots (r, -r) of c, (0, 0) for zero, nothing for a nonsquare.
/// Uses the log table when present, Tonelli-Shanks otherwise.
std::optional<std::pair<ExtElem, ExtElem>> sqrt_in_field(const Field& f, const ExtElem& c);

/// Least t >= 1 with x^t = 1; throws InvalidArgument for zero.
u64 multiplicative_order(const Field& f, const ExtElem& x);

}  // namespace cyclopt

#endif  // CYCLOPT_FIELD_HPP
