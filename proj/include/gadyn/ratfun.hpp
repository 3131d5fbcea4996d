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

#ifndef GADYN_RATFUN_HPP
#define GADYN_RATFUN_HPP

#include <string>

#include "gadyn/cpoly.hpp"

namespace gadyn {

/// Univariate rational function num/den over a finite field, kept in canonical form:
/// gcd(num, den) = 1 and den monic (den = 1 for zero).
class RatFun {
   public:
    RatFun() = default;
    explicit RatFun(Field f) : num_(f), den_(CPoly::constant(f, 1)) {}
    RatFun(const CPoly& num);  // NOLINT(google-explicit-constructor)
    RatFun(const CPoly& num, const CPoly& den);

    static RatFun constant(Field f, Elem c) { return RatFun(CPoly::constant(f, c)); }
    static RatFun var(Field f) { return RatFun(CPoly::var(f)); }

    Field field() const noexcept { return den_.field(); }
    const CPoly& num() const noexcept { return num_; }
    const CPoly& den() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_one() const noexcept { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const noexcept { return den_.is_one(); }
    bool in_prime_field() const noexcept { return num_.in_prime_field() && den_.in_prime_field(); }

    RatFun& operator+=(const RatFun& o);
    RatFun& operator-=(const RatFun& o);
    RatFun& operator*=(const RatFun& o);
    RatFun& operator/=(const RatFun& o);
    friend RatFun operator+(RatFun a, const RatFun& b) { return a += b; }
    friend RatFun operator-(RatFun a, const RatFun& b) { return a -= b; }
    friend RatFun operator*(RatFun a, const RatFun& b) { return a *= b; }
    friend RatFun operator/(RatFun a, const RatFun& b) { return a /= b; }
    RatFun operator-() const;
    RatFun inv() const;
    RatFun frobenius(std::uint64_t i) const;
    RatFun over(Field g) const;

    friend bool operator==(const RatFun& a, const RatFun& b) noexcept {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFun& a, const RatFun& b) noexcept { return !(a == b); }

    /// `num / den` with coefficient-list literals; den omitted when 1.
    std::string to_list() const;
    /// Human form such as `(s^2 + 1)/(s)`.
    std::string to_string(const char* var = "s") const;

   private:
    void canonicalize();
    CPoly num_, den_;
};

}  // namespace gadyn

#endif
