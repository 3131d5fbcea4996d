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
 * @file ore.hpp
 * @brief The twisted polynomial ring F_q[F] with F·a = a^p·F, acting on fields of
 * characteristic p by (sum a_i F^i)(x) = sum a_i x^{p^i}.
 */

#ifndef GADYN_ORE_HPP
#define GADYN_ORE_HPP

#include <string>
#include <utility>
#include <vector>

#include "gadyn/cpoly.hpp"
#include "gadyn/matrix.hpp"
#include "gadyn/mpoly.hpp"

namespace gadyn {

/// Element sum c_i F^i of F_q[F], coefficients written to the left of the powers of F.
class OrePoly {
   public:
    OrePoly() = default;
    explicit OrePoly(Field f) : f_(f) {}
    OrePoly(Field f, std::vector<Elem> coeffs);

    static OrePoly constant(Field f, Elem c) { return OrePoly(f, {c}); }
    /// c·F^k
    static OrePoly monomial(Field f, Elem c, std::size_t k);
    static OrePoly frobenius(Field f, std::size_t k = 1) { return monomial(f, 1, k); }
    /// a(F^ell) for a polynomial a in the central variable s = F^ell.
    static OrePoly from_center(const CPoly& a);

    Field field() const noexcept { return f_; }
    const std::vector<Elem>& coeffs() const noexcept { return c_; }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }
    Elem lead() const noexcept { return c_.empty() ? 0 : c_.back(); }
    Elem operator[](std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }

    OrePoly& operator+=(const OrePoly& o);
    OrePoly& operator-=(const OrePoly& o);
    friend OrePoly operator+(OrePoly a, const OrePoly& b) { return a += b; }
    friend OrePoly operator-(OrePoly a, const OrePoly& b) { return a -= b; }
    OrePoly operator-() const;
    friend OrePoly operator*(const OrePoly& a, const OrePoly& b);
    /// c·P
    OrePoly scaled_left(Elem c) const;

    /// Action on an element of F_q.
    Elem eval(Elem x) const;
    /// Action on an element of a larger field E ⊇ F_q.
    Elem eval(const Embedding& emb, Elem x) const;
    /// Action on a rational function over F_q.
    MRatFun eval(const MRatFun& x) const;

    friend bool operator==(const OrePoly& a, const OrePoly& b) noexcept { return a.f_ == b.f_ && a.c_ == b.c_; }
    friend bool operator!=(const OrePoly& a, const OrePoly& b) noexcept { return !(a == b); }

    /// `a0 + a1*F + a2*F^2` with field-element literals; zero terms omitted.
    std::string to_string() const;

   private:
    void trim() noexcept;
    Field f_ = nullptr;
    std::vector<Elem> c_;
};

/// P = Q·D + R with deg R < deg D.
std::pair<OrePoly, OrePoly> divmod_right(const OrePoly& P, const OrePoly& D);
/// P = D·Q + R with deg R < deg D.
std::pair<OrePoly, OrePoly> divmod_left(const OrePoly& P, const OrePoly& D);

/// Parts a_0..a_{ell-1} in F_q[s] with P = sum a_i(F^ell)·F^i, where ell = [F_q : F_p].
std::vector<CPoly> center_decompose(const OrePoly& P);
OrePoly center_recompose(const std::vector<CPoly>& parts);
/// True iff P lies in F_p[F^ell].
bool is_central(const OrePoly& P);

using OreMatrix = Mat<OrePoly>;

OreMatrix ore_identity(Field f, std::size_t n);
OreMatrix ore_zero(Field f, std::size_t r, std::size_t c);
/// y_i = sum_j A_ij(x_j)
std::vector<MRatFun> apply(const OreMatrix& A, const std::vector<MRatFun>& x);
std::vector<Elem> apply(const OreMatrix& A, const Embedding& emb, const std::vector<Elem>& x);

}  // namespace gadyn

#endif
