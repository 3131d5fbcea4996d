/*
   Copyright 2026 The gadyn Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef GADYN_CPOLY_HPP
#define GADYN_CPOLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "gadyn/gf.hpp"

namespace gadyn {

/// Dense univariate polynomial over a finite field. The variable is written `s`
/// when the polynomial lives in the centre F_q[F^ell].
class CPoly {
   public:
    CPoly() = default;
    explicit CPoly(Field f) : f_(f) {}
    CPoly(Field f, std::vector<Elem> coeffs);

    static CPoly constant(Field f, Elem c) { return CPoly(f, {c}); }
    static CPoly monomial(Field f, Elem c, std::size_t deg);
    static CPoly var(Field f) { return monomial(f, 1, 1); }

    Field field() const noexcept { return f_; }
    const std::vector<Elem>& coeffs() const noexcept { return c_; }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }
    bool is_constant() const noexcept { return c_.size() <= 1; }
    Elem lead() const noexcept { return c_.empty() ? 0 : c_.back(); }
    Elem operator[](std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }
    /// True when every coefficient lies in the prime field.
    bool in_prime_field() const noexcept;

    CPoly& operator+=(const CPoly& o);
    CPoly& operator-=(const CPoly& o);
    friend CPoly operator+(CPoly a, const CPoly& b) { return a += b; }
    friend CPoly operator-(CPoly a, const CPoly& b) { return a -= b; }
    CPoly operator-() const;
    friend CPoly operator*(const CPoly& a, const CPoly& b);
    CPoly scaled(Elem c) const;
    CPoly shifted(std::size_t k) const;  ///< multiply by s^k
    CPoly monic() const;
    CPoly derivative() const;
    /// Coefficientwise Frobenius a -> a^{p^i}.
    CPoly frobenius(std::uint64_t i) const;
    /// Substitute s -> s^k.
    CPoly inflate(std::size_t k) const;
    Elem eval(Elem x) const;
    /// Same coefficients viewed over another field of the same characteristic (prime-field
    /// coefficients only when narrowing).
    CPoly over(Field g) const;

    friend bool operator==(const CPoly& a, const CPoly& b) noexcept { return a.f_ == b.f_ && a.c_ == b.c_; }
    friend bool operator!=(const CPoly& a, const CPoly& b) noexcept { return !(a == b); }

    std::string to_string(const char* var = "s") const;
    /// `[c0,c1,...]` coefficient-list literal.
    std::string to_list() const;

   private:
    void trim() noexcept;
    Field f_ = nullptr;
    std::vector<Elem> c_;
};

std::pair<CPoly, CPoly> divmod(const CPoly& a, const CPoly& b);
CPoly operator/(const CPoly& a, const CPoly& b);  ///< quotient
CPoly operator%(const CPoly& a, const CPoly& b);
/// Monic gcd; gcd(0, 0) = 0.
CPoly gcd(const CPoly& a, const CPoly& b);
CPoly lcm(const CPoly& a, const CPoly& b);
/// Returns (g, u, v) with u a + v b = g monic.
struct ExtGcd {
    CPoly g, u, v;
};
ExtGcd ext_gcd(const CPoly& a, const CPoly& b);
CPoly pow(const CPoly& a, std::uint64_t e);
CPoly powmod(const CPoly& a, std::uint64_t e, const CPoly& m);
CPoly mulmod(const CPoly& a, const CPoly& b, const CPoly& m);
/// Rabin irreducibility test over the coefficient field.
bool is_irreducible(const CPoly& f);
/// The least multiple of d (monic) that has prime-field coefficients:
/// lcm of the Frobenius conjugates of d.
CPoly prime_field_closure(const CPoly& d);
/// Product of the Frobenius conjugates of d, which lies in F_p[s].
CPoly norm(const CPoly& d);

}  // namespace gadyn

#endif
