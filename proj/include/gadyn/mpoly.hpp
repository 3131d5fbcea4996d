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

/**
 * @file mpoly.hpp
 * @brief Sparse multivariate polynomials and rational functions in t_1..t_6 over F_q.
 *
 * Orbit points under Frobenius-type maps have coordinates such as t^{p^k} with huge
 * exponents but few terms, so everything here is sparse. Terms are kept in descending
 * graded-lexicographic order.
 */

#ifndef GADYN_MPOLY_HPP
#define GADYN_MPOLY_HPP

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gadyn/cpoly.hpp"

namespace gadyn {

constexpr std::size_t kMaxVars = 6;

struct Monomial {
    std::array<std::uint64_t, kMaxVars> e{};

    std::uint64_t total() const noexcept;
    bool divides(const Monomial& o) const noexcept;
    static Monomial var(std::size_t i, std::uint64_t power = 1);
    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend Monomial operator/(const Monomial& a, const Monomial& b);  ///< requires divisibility
    friend bool operator==(const Monomial& a, const Monomial& b) noexcept { return a.e == b.e; }
    friend bool operator!=(const Monomial& a, const Monomial& b) noexcept { return a.e != b.e; }
};

/// Graded-lexicographic "greater than".
bool grlex_greater(const Monomial& a, const Monomial& b) noexcept;

class MPoly {
   public:
    using Term = std::pair<Monomial, Elem>;

    MPoly() = default;
    explicit MPoly(Field f) : f_(f) {}
    MPoly(Field f, std::vector<Term> terms);  ///< sorts and combines

    static MPoly constant(Field f, Elem c);
    static MPoly var(Field f, std::size_t i);
    static MPoly from_univariate(const CPoly& p, std::size_t var);

    Field field() const noexcept { return f_; }
    const std::vector<Term>& terms() const noexcept { return t_; }
    bool is_zero() const noexcept { return t_.empty(); }
    bool is_constant() const noexcept;
    Elem constant_term() const noexcept;
    const Term& lead() const { return t_.front(); }
    std::uint64_t total_degree() const noexcept;
    /// Index of the only variable that occurs, -1 if none, -2 if several.
    int sole_variable() const noexcept;
    std::uint64_t max_exponent(std::size_t var) const noexcept;
    /// Gcd of all monomials (componentwise minimum).
    Monomial monomial_content() const noexcept;

    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    MPoly operator-() const;
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    MPoly scaled(Elem c) const;
    MPoly times(const Monomial& m) const;
    MPoly divided(const Monomial& m) const;  ///< requires m | every term
    /// x -> x^{p^i} applied to the polynomial: coefficients Frobenius-twisted, exponents times p^i.
    MPoly frobenius_power(std::uint64_t i) const;
    MPoly over(Field g) const;

    /// Value at a point of a larger field via the given embedding.
    Elem eval(const Embedding& emb, const std::vector<Elem>& point) const;
    /// Dense univariate view in the given variable (must be the only variable).
    CPoly to_univariate(std::size_t var) const;

    friend bool operator==(const MPoly& a, const MPoly& b) noexcept { return a.f_ == b.f_ && a.t_ == b.t_; }
    friend bool operator!=(const MPoly& a, const MPoly& b) noexcept { return !(a == b); }

    std::string to_string() const;

   private:
    Field f_ = nullptr;
    std::vector<Term> t_;
};

MPoly pow(const MPoly& a, std::uint64_t e);
/// a / b when b divides a exactly, nullopt otherwise.
std::optional<MPoly> divide_exact(const MPoly& a, const MPoly& b);

/// Multivariate rational function with content-reduced numerator and denominator and
/// denominator leading coefficient 1. Full multivariate gcd is not computed; equality is
/// decided by cross-multiplication.
class MRatFun {
   public:
    MRatFun() = default;
    explicit MRatFun(Field f) : num_(f), den_(MPoly::constant(f, 1)) {}
    MRatFun(const MPoly& num);  // NOLINT(google-explicit-constructor)
    MRatFun(const MPoly& num, const MPoly& den);

    static MRatFun constant(Field f, Elem c) { return MRatFun(MPoly::constant(f, c)); }
    static MRatFun var(Field f, std::size_t i) { return MRatFun(MPoly::var(f, i)); }

    Field field() const noexcept { return den_.field(); }
    const MPoly& num() const noexcept { return num_; }
    const MPoly& den() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_polynomial() const noexcept { return den_.is_constant(); }

    MRatFun& operator+=(const MRatFun& o);
    MRatFun& operator-=(const MRatFun& o);
    MRatFun& operator*=(const MRatFun& o);
    MRatFun& operator/=(const MRatFun& o);
    friend MRatFun operator+(MRatFun a, const MRatFun& b) { return a += b; }
    friend MRatFun operator-(MRatFun a, const MRatFun& b) { return a -= b; }
    friend MRatFun operator*(MRatFun a, const MRatFun& b) { return a *= b; }
    friend MRatFun operator/(MRatFun a, const MRatFun& b) { return a /= b; }
    MRatFun operator-() const;
    MRatFun inv() const;
    MRatFun scaled(Elem c) const;
    MRatFun frobenius_power(std::uint64_t i) const;
    MRatFun over(Field g) const;

    /// Value at a point; nullopt when the denominator vanishes there.
    std::optional<Elem> eval(const Embedding& emb, const std::vector<Elem>& point) const;

    friend bool operator==(const MRatFun& a, const MRatFun& b);
    friend bool operator!=(const MRatFun& a, const MRatFun& b) { return !(a == b); }

    std::string to_string() const;

   private:
    void canonicalize();
    MPoly num_, den_;
};

MRatFun pow(const MRatFun& a, std::uint64_t e);

}  // namespace gadyn

#endif
