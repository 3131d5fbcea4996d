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
 * @file skew.hpp
 * @brief The skew field K = F_q[F] ⊗ F_p(s), s = F^ell, its matrices, the embedding
 * A -> Ã into matrices over F_q(s), and minimal polynomials over the centre F_p(s).
 */

#ifndef GADYN_SKEW_HPP
#define GADYN_SKEW_HPP

#include <string>
#include <vector>

#include "gadyn/linalg.hpp"
#include "gadyn/ore.hpp"

namespace gadyn {

/// Element sum_{i<ell} a_i(s)·F^i with a_i in F_q(s).
class SkewElem {
   public:
    SkewElem() = default;
    explicit SkewElem(Field f);
    SkewElem(Field f, std::vector<RatFun> parts);

    static SkewElem from_ore(const OrePoly& P);
    /// The scalar c in F_q(s) (central when c lies in F_p(s)).
    static SkewElem scalar(Field f, const RatFun& c);
    static SkewElem one(Field f) { return scalar(f, RatFun::constant(f, 1)); }

    Field field() const noexcept { return f_; }
    const std::vector<RatFun>& parts() const noexcept { return parts_; }
    const RatFun& part(std::size_t i) const { return parts_[i]; }
    bool is_zero() const noexcept;
    bool is_one() const noexcept;
    /// All parts are polynomials, so the element lies in F_q[F].
    bool is_ore_polynomial() const noexcept;
    OrePoly to_ore() const;

    SkewElem& operator+=(const SkewElem& o);
    SkewElem& operator-=(const SkewElem& o);
    friend SkewElem operator+(SkewElem a, const SkewElem& b) { return a += b; }
    friend SkewElem operator-(SkewElem a, const SkewElem& b) { return a -= b; }
    SkewElem operator-() const;
    friend SkewElem operator*(const SkewElem& a, const SkewElem& b);
    /// c·x for a scalar c in F_q(s).
    SkewElem scaled_left(const RatFun& c) const;

    friend bool operator==(const SkewElem& a, const SkewElem& b) noexcept { return a.parts_ == b.parts_; }
    friend bool operator!=(const SkewElem& a, const SkewElem& b) noexcept { return !(a == b); }

    std::string to_string() const;

   private:
    Field f_ = nullptr;
    std::vector<RatFun> parts_;
};

using SkewMatrix = Mat<SkewElem>;

SkewMatrix skew_zero(Field f, std::size_t r, std::size_t c);
SkewMatrix skew_identity(Field f, std::size_t n);
SkewMatrix to_skew(const OreMatrix& A);
/// Requires every entry to lie in F_q[F].
OreMatrix to_ore(const SkewMatrix& A);
/// Multiply every entry on the left by a scalar of F_q(s).
SkewMatrix scaled_left(const SkewMatrix& A, const RatFun& c);

/// Polynomial in x over the centre F_p(s); coefficients lowest degree first, each a
/// rational function over the prime field.
class CenterPoly {
   public:
    CenterPoly() = default;
    explicit CenterPoly(Field prime) : f_(prime) {}
    CenterPoly(Field prime, std::vector<RatFun> coeffs);

    static CenterPoly constant(const RatFun& c);
    /// x - c
    static CenterPoly linear(const RatFun& c);

    Field field() const noexcept { return f_; }
    const std::vector<RatFun>& coeffs() const noexcept { return c_; }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_one() const noexcept { return c_.size() == 1 && c_[0].is_one(); }
    const RatFun& lead() const { return c_.back(); }
    RatFun operator[](std::size_t i) const { return i < c_.size() ? c_[i] : RatFun(f_); }
    /// Every coefficient lies in F_p[s].
    bool has_polynomial_coeffs() const noexcept;

    CenterPoly& operator+=(const CenterPoly& o);
    CenterPoly& operator-=(const CenterPoly& o);
    friend CenterPoly operator+(CenterPoly a, const CenterPoly& b) { return a += b; }
    friend CenterPoly operator-(CenterPoly a, const CenterPoly& b) { return a -= b; }
    CenterPoly operator-() const;
    friend CenterPoly operator*(const CenterPoly& a, const CenterPoly& b);
    CenterPoly scaled(const RatFun& c) const;
    CenterPoly monic() const;
    CenterPoly derivative() const;

    friend bool operator==(const CenterPoly& a, const CenterPoly& b) noexcept { return a.c_ == b.c_; }
    friend bool operator!=(const CenterPoly& a, const CenterPoly& b) noexcept { return !(a == b); }

    /// Human form such as `x^2 + s` or `x + (s + 1)/(s)`.
    std::string to_string() const;

   private:
    void trim();
    Field f_ = nullptr;
    std::vector<RatFun> c_;
};

std::pair<CenterPoly, CenterPoly> divmod(const CenterPoly& a, const CenterPoly& b);
CenterPoly gcd(const CenterPoly& a, const CenterPoly& b);
struct CenterExtGcd {
    CenterPoly g, u, v;
};
/// u a + v b = g with g monic.
CenterExtGcd ext_gcd(const CenterPoly& a, const CenterPoly& b);
/// r(A) for a square matrix over the field Fq.
SkewMatrix eval(const CenterPoly& r, const SkewMatrix& A);

/// Ã with (BA)_j = sum_i B_i Ã_{i,j} for every row vector B = sum_i B_i F^i. Entry
/// (i*n + c, j*n + k) is part j of F^i·A_{ck}.
RatMatrix tilde(const SkewMatrix& A);
RatMatrix tilde(const OreMatrix& A);

/// Monic minimal polynomial of A over F_p(s).
CenterPoly min_poly_center(const SkewMatrix& A);

struct CentralMultiplier {
    OrePoly Q;
    CPoly c;  ///< monic, over the prime field, Q·P = c(F^ell)
};
CentralMultiplier central_multiplier(const OrePoly& P);

SkewElem skew_inverse(const SkewElem& u);

struct Elimination {
    std::size_t rank = 0;
    SkewMatrix reduced;             ///< reduced row echelon form, pivots equal to 1
    SkewMatrix transform;           ///< invertible, transform · M = reduced
    std::vector<std::size_t> pivots;  ///< pivot column of each nonzero row
};
/// Gaussian elimination by left row operations.
Elimination gauss_eliminate(const SkewMatrix& M);
SkewMatrix matrix_inverse(const SkewMatrix& M);

}  // namespace gadyn

#endif
