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


// Hand-rolled random generators shared by the property tests.

#ifndef GADYN_TESTS_GENERATORS_HPP
#define GADYN_TESTS_GENERATORS_HPP

#include <random>

#include "gadyn/ore.hpp"
#include "gadyn/skew.hpp"

namespace gadyn::testgen {

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline OrePoly ore(Rng& rng, Field f, std::size_t max_deg, double density = 0.7) {
    std::bernoulli_distribution keep(density);
    const std::size_t d = uniform(rng, 0, max_deg);
    std::vector<Elem> c(d + 1, 0);
    for (auto& x : c)
        if (keep(rng)) x = f->random(rng);
    return OrePoly(f, std::move(c));
}

inline OrePoly nonzero_ore(Rng& rng, Field f, std::size_t max_deg) {
    OrePoly P = ore(rng, f, max_deg);
    while (P.is_zero()) P = ore(rng, f, max_deg);
    return P;
}

inline OreMatrix ore_matrix(Rng& rng, Field f, std::size_t n, std::size_t max_deg, double zero_rate = 0.3) {
    std::bernoulli_distribution zero(zero_rate);
    OreMatrix m = ore_zero(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!zero(rng)) m(i, j) = ore(rng, f, max_deg);
    return m;
}

inline CPoly cpoly(Rng& rng, Field f, std::size_t max_deg) {
    std::vector<Elem> c(uniform(rng, 0, max_deg) + 1);
    for (auto& x : c) x = f->random(rng);
    return CPoly(f, std::move(c));
}

inline RatFun ratfun(Rng& rng, Field f, std::size_t max_deg) {
    CPoly d = cpoly(rng, f, max_deg);
    while (d.is_zero()) d = cpoly(rng, f, max_deg);
    return RatFun(cpoly(rng, f, max_deg), d);
}

inline SkewElem skew(Rng& rng, Field f, std::size_t max_deg) {
    std::vector<RatFun> parts;
    for (unsigned i = 0; i < f->degree(); ++i) parts.push_back(ratfun(rng, f, max_deg));
    return SkewElem(f, std::move(parts));
}

/// A product of elementary matrices over F_q[F]; invertible with inverse over F_q[F].
inline OreMatrix unimodular(Rng& rng, Field f, std::size_t n, std::size_t steps, std::size_t max_deg) {
    OreMatrix G = ore_identity(f, n);
    if (n < 2) {
        G(0, 0) = OrePoly::constant(f, f->random_nonzero(rng));
        return G;
    }
    for (std::size_t s = 0; s < steps; ++s) {
        const std::size_t i = uniform(rng, 0, n - 1);
        std::size_t j = uniform(rng, 0, n - 2);
        if (j >= i) ++j;
        OreMatrix E = ore_identity(f, n);
        E(i, j) = ore(rng, f, max_deg);
        G = G * E;
    }
    for (std::size_t i = 0; i < n; ++i) {
        OreMatrix D = ore_identity(f, n);
        D(i, i) = OrePoly::constant(f, f->random_nonzero(rng));
        G = D * G;
    }
    return G;
}

/// Inverse of a unimodular matrix, computed over the skew field and cleared back.
inline OreMatrix unimodular_inverse(const OreMatrix& G) { return to_ore(matrix_inverse(to_skew(G))); }

}  // namespace gadyn::testgen

#endif
