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
 * @file factor.hpp
 * @brief Factorization of univariate polynomials over finite fields and over F_p(s).
 */

#ifndef GADYN_FACTOR_HPP
#define GADYN_FACTOR_HPP

#include <utility>
#include <vector>

#include "gadyn/skew.hpp"

namespace gadyn {

/// Irreducible factors of a monic squarefree polynomial over a finite field (Cantor-Zassenhaus).
std::vector<CPoly> factor_squarefree(const CPoly& f, Rng& rng);
/// Full factorization (monic irreducibles with multiplicities) over a finite field.
std::vector<std::pair<CPoly, unsigned>> factor(const CPoly& f);

struct FactorLimits {
    unsigned max_degree = 64;          ///< degree in x
    unsigned max_coeff_degree = 4096;  ///< degree in s after clearing denominators
    unsigned max_modular_factors = 22;
};

/// Monic irreducible factors over F_p(s) with multiplicities; their product is r.
std::vector<std::pair<CenterPoly, unsigned>> factor_center(const CenterPoly& r, const FactorLimits& lim = {});

/// Reduction F_p[s] -> F_p[s]/(pi) at a monic irreducible pi; digits of the residue give the
/// element encoding in the residue field.
class ReductionPlace {
   public:
    ReductionPlace() = default;
    explicit ReductionPlace(const CPoly& pi);

    const CPoly& pi() const noexcept { return pi_; }
    Field residue_field() const noexcept { return K_; }
    Elem reduce(const CPoly& c) const;
    CPoly lift(Elem e) const;
    /// Coefficientwise reduction of a polynomial in x with coefficients in F_p[s].
    CPoly reduce(const std::vector<CPoly>& coeffs) const;
    std::vector<CPoly> lift(const CPoly& a) const;

   private:
    CPoly pi_;
    Field K_ = nullptr;
};

/// Monic irreducible polynomials over F_p in increasing degree, then increasing coefficient
/// value, starting after `prev` (or from the first one when prev is empty).
CPoly next_irreducible(Field fp, const CPoly& prev);

}  // namespace gadyn

#endif
