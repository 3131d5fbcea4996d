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
 * @file linalg.hpp
 * @brief Exact linear algebra over F_q(s), F_q[s] and plain finite fields.
 */

#ifndef GADYN_LINALG_HPP
#define GADYN_LINALG_HPP

#include <vector>

#include "gadyn/matrix.hpp"
#include "gadyn/ratfun.hpp"

namespace gadyn {

using RatMatrix = Mat<RatFun>;
using PolyMatrix = Mat<CPoly>;
using RatVector = std::vector<RatFun>;

RatMatrix rat_zero(Field f, std::size_t r, std::size_t c);
RatMatrix rat_identity(Field f, std::size_t n);

/// Basis of the right kernel {v : M v = 0}, computed fraction-free over F_q[s]. Each vector
/// has polynomial entries with trivial content. Empty iff the kernel is trivial.
std::vector<RatVector> kernel_basis(const RatMatrix& M);
/// Rank over F_q(s).
std::size_t rank(const RatMatrix& M);

/// Determinant over F_q[s] by fraction-free (Bareiss) elimination.
CPoly determinant(const PolyMatrix& M);
/// Row i of the adjugate: adj(M)_{i,k} = (-1)^{i+k} det(M with row k and column i removed),
/// so that adj(M)·M = det(M)·I.
std::vector<CPoly> adjugate_row(const PolyMatrix& M, std::size_t i);

/// Characteristic polynomial det(xI - M), coefficients lowest degree first.
std::vector<RatFun> charpoly(const RatMatrix& M);

/// Dense linear algebra over a finite field, used for specializations and F_p systems.
using ElemMatrix = std::vector<std::vector<Elem>>;
std::size_t rank(Field f, ElemMatrix M);
/// Right kernel basis over the field.
std::vector<std::vector<Elem>> kernel_basis(Field f, ElemMatrix M);

}  // namespace gadyn

#endif
