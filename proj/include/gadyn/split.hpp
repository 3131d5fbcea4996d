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
 * @file split.hpp
 * @brief Splitting an endomorphism of G_a^N into a Frobenius-diagonal part and a part whose
 * eigenvalues are multiplicatively independent of s = F^ell.
 */

#ifndef GADYN_SPLIT_HPP
#define GADYN_SPLIT_HPP

#include <string>
#include <vector>

#include "gadyn/factor.hpp"
#include "gadyn/skew.hpp"

namespace gadyn {

enum class FactorKind { FrobeniusType, Independent, Unknown };
const char* factor_kind_name(FactorKind k);

struct FactorClassification {
    CenterPoly factor;
    unsigned multiplicity = 1;
    FactorKind kind = FactorKind::Unknown;
    std::uint64_t n = 0;  ///< least n >= 1 with u^n = s^j for every root u
    std::uint64_t j = 0;
    std::uint64_t bound = 0;  ///< the candidate period n_0 = m (p^m - 1) that bounds the search
    std::string diagnostics;
};

struct SplitLimits {
    std::uint64_t max_power = 4096;  ///< largest n tested exactly by classify_factor
    FactorLimits factor;
};

/// Decides whether the roots of an irreducible g with g(0) != 0 are, after some power, powers
/// of s.
FactorClassification classify_factor(const CenterPoly& g, const SplitLimits& lim = {});

struct JordanBlock {
    std::uint64_t exponent;  ///< eigenvalue s^exponent
    std::size_t size;
};

struct JordanForm {
    SkewMatrix P;  ///< P · A · P^{-1} = J
    SkewMatrix J;
    std::vector<JordanBlock> blocks;  ///< ordered by exponent, then decreasing size
};

/// Jordan form of a matrix whose minimal polynomial is a product of powers of (x - s^j).
JordanForm jordan_form_central(const SkewMatrix& A);

struct DiagonalBlock {
    std::uint64_t n;  ///< eigenvalue s^n
    std::size_t m;    ///< multiplicity
};

struct PowerUp {
    unsigned a = 0;            ///< least a with p^a >= every block size
    std::uint64_t factor = 1;  ///< p^a
    std::vector<DiagonalBlock> blocks;
};

PowerUp power_up(const std::vector<JordanBlock>& blocks, std::uint64_t p);

struct SplitData {
    std::uint64_t n = 1;  ///< P A^n P^{-1} = A0 ⊕ A1
    std::uint64_t n_before_power_up = 1;
    unsigned a = 0;
    SkewMatrix P, Pinv;
    std::vector<DiagonalBlock> blocks;  ///< A0 = ⊕ s^{n_i} I_{m_i}
    std::vector<JordanBlock> jordan;    ///< Jordan structure before the power-up
    SkewMatrix A0, A1;
    CPoly h;  ///< over F_p; h · A1^m, h · P, h · P^{-1} have entries in F_q[F]
    CenterPoly r, r0, r1;
    std::vector<FactorClassification> factors;

    std::size_t N0() const noexcept { return A0.rows(); }
    std::size_t N1() const noexcept { return A1.rows(); }
};

/// Requires A dominant (minimal polynomial with nonzero constant term).
SplitData split_endomorphism(const OreMatrix& A, const SplitLimits& lim = {});

/// Monic polynomial over F_p(s) with the given roots s^{n_i}.
CenterPoly monomial_root_poly(Field fp, const std::vector<std::uint64_t>& exponents);

}  // namespace gadyn

#endif
