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
 * @file fsets.hpp
 * @brief F-sets, finitely generated F_p[F]-modules, brute-force intersections and the
 *        lambda^m = c_0 + sum c_i t^{n_i} density experiments.
 */

#ifndef GADYN_FSETS_HPP
#define GADYN_FSETS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gadyn/classify.hpp"

namespace gadyn {

/// Elements are finite sums sum P_i(F)(g_i) with P_i over F_p.
struct FpFModule {
    std::vector<Point> generators;
};

/// gamma0 + S(gamma_1..gamma_r; k_1..k_r) + H.
struct FSetDescriptor {
    Point gamma0;
    std::vector<Point> gammas;
    std::vector<std::uint64_t> ks;
    FpFModule H;
    std::optional<CPoly> divisor;  ///< optional P over F_p with P(F)(gamma_i) in the ambient module
};

struct FSetLimits {
    std::size_t cap = 100000;
    bool include_zero = false;  ///< allow n_i = 0
};

/// Elements of the module with deg P_i <= bound, with their coefficient vectors.
std::vector<std::pair<Point, std::vector<std::vector<Elem>>>> module_elements(const FpFModule& H, Field f,
                                                                             std::size_t N, unsigned bound,
                                                                             std::size_t cap);

std::vector<Point> fset_enumerate(const FSetDescriptor& desc, std::uint64_t B, unsigned module_bound,
                                  const FSetLimits& lim = {});

struct Membership {
    bool found = false;
    std::vector<std::vector<Elem>> P;  ///< P_i coefficients over F_p, index = power of F
    std::string label;                 ///< "member" or "not found within bound"
};

Membership module_contains(const FpFModule& Gamma, const Point& x, unsigned bound);

/// Polynomial in x_1..x_N with rational-function coefficients.
struct Equation {
    std::vector<std::pair<std::vector<unsigned>, MRatFun>> terms;
    MRatFun eval(const Point& x) const;
};

struct IntersectionPoint {
    Point point;
    std::vector<std::vector<Elem>> P;  ///< representation in the generators
    std::string signature;             ///< nonzero F-exponents per generator
};

struct IntersectionReport {
    std::vector<IntersectionPoint> solutions;
    std::map<std::string, std::size_t> patterns;  ///< signature -> count
};

IntersectionReport brute_force_intersection(const std::vector<Equation>& V, const FpFModule& Gamma, unsigned bound,
                                            std::size_t cap = 100000);

struct LambdaEqInstance {
    MRatFun lambda;       ///< in the single variable t_1
    std::vector<Elem> c;  ///< c_0, ..., c_r with c_i != 0 for i >= 1
};

/// Tuples (n_1..n_r) of positive integers with lambda^m = c_0 + sum c_i t^{n_i}, n_i <= deg(lambda^m).
std::vector<std::vector<std::uint64_t>> solve_lambda_eq(const LambdaEqInstance& inst, std::uint64_t m);

struct LambdaDensity {
    std::uint64_t M = 0;
    std::vector<std::uint64_t> solvable;
    std::vector<std::vector<std::uint64_t>> witness;  ///< one tuple per m (empty if unsolvable)
    double density = 0;
    /// Lines "m,solvable,tuple" with tuple space-separated.
    std::string csv() const;
};

LambdaDensity lambda_density(const LambdaEqInstance& inst, std::uint64_t M);

/// True iff the |lambdas| x |lambdas| matrix (lambda_i^n) for n = N..N+r-1 is invertible.
bool vandermonde_check(Field f, const std::vector<Elem>& lambdas, std::uint64_t N);

}  // namespace gadyn

#endif
