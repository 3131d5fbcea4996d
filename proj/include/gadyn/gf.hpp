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
 * @file gf.hpp
 * @brief Finite fields F_{p^k} = F_p[x]/(m(x)).
 *
 * Elements are encoded as integers: the residue c_0 + c_1 x + ... + c_{k-1} x^{k-1}
 * is stored as c_0 + c_1 p + ... + c_{k-1} p^{k-1}. Prime-field elements are therefore
 * the integers 0..p-1 in every extension, which makes F_p embed into F_{p^k} by identity.
 *
 * Field objects are interned: GF::get returns the same pointer for the same (p, modulus),
 * and instances live for the whole program. Field handles are compared by pointer.
 */

#ifndef GADYN_GF_HPP
#define GADYN_GF_HPP

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace gadyn {

using Elem = std::uint64_t;
using Rng = std::mt19937_64;

class GF;
struct GFFactory;
using Field = const GF*;

class GF {
   public:
    /// Interned field with the given prime and monic modulus (c_0, ..., c_k). Validates
    /// primality and irreducibility.
    static Field get(std::uint64_t p, const std::vector<std::uint64_t>& modulus);
    /// F_p^k with the lexicographically smallest monic irreducible modulus.
    static Field standard(std::uint64_t p, unsigned k);
    static Field prime(std::uint64_t p) { return standard(p, 1); }

    std::uint64_t p() const noexcept { return p_; }
    unsigned degree() const noexcept { return k_; }
    std::uint64_t order() const noexcept { return q_; }
    const std::vector<std::uint64_t>& modulus() const noexcept { return modulus_; }
    /// The prime subfield, as an interned field.
    Field prime_field() const;

    bool is_prime_field() const noexcept { return k_ == 1; }
    bool in_prime_field(Elem a) const noexcept { return a < p_; }
    bool valid(Elem a) const noexcept { return a < q_; }

    Elem add(Elem a, Elem b) const noexcept;
    Elem sub(Elem a, Elem b) const noexcept;
    Elem neg(Elem a) const noexcept;
    Elem mul(Elem a, Elem b) const noexcept;
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, std::uint64_t e) const noexcept;
    /// a^{p^i}. Identity when k divides i.
    Elem frob(Elem a, std::uint64_t i) const noexcept;
    /// Inverse Frobenius: the unique b with b^{p^i} = a.
    Elem frob_inv(Elem a, std::uint64_t i) const noexcept { return frob(a, (k_ - i % k_) % k_); }

    Elem from_int(std::int64_t v) const noexcept;
    std::vector<std::uint64_t> digits(Elem a) const;
    Elem from_digits(std::span<const std::uint64_t> d) const;
    Elem random(Rng& rng) const { return std::uniform_int_distribution<Elem>(0, q_ - 1)(rng); }
    Elem random_nonzero(Rng& rng) const { return std::uniform_int_distribution<Elem>(1, q_ - 1)(rng); }
    /// A generator of the multiplicative group.
    Elem primitive() const noexcept { return gen_; }

    /// Text literal: an integer for prime fields, `[c0,c1,...]` otherwise.
    std::string to_string(Elem a) const;
    /// Human description such as "F_4 = F_2[x]/(x^2+x+1)".
    std::string describe() const;

    GF(const GF&) = delete;
    GF& operator=(const GF&) = delete;

   private:
    friend struct GFFactory;
    GF(std::uint64_t p, std::vector<std::uint64_t> modulus);
    Elem mul_slow(Elem a, Elem b) const noexcept;
    void build_tables();

    std::uint64_t p_;
    unsigned k_;
    std::uint64_t q_;
    std::vector<std::uint64_t> modulus_;
    std::vector<std::uint64_t> pw_;  // p^i
    Elem gen_ = 1;
    // log/antilog tables for small fields (empty otherwise)
    std::vector<std::uint32_t> log_;
    std::vector<std::uint32_t> exp_;
    std::vector<std::uint32_t> frob1_;
};

bool is_prime(std::uint64_t n) noexcept;
/// Distinct prime factors of n.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// An embedding of a finite field into a larger one of the same characteristic.
class Embedding {
   public:
    Embedding(Field from, Field to);
    Field from() const noexcept { return from_; }
    Field to() const noexcept { return to_; }
    Elem operator()(Elem a) const;

   private:
    Field from_;
    Field to_;
    std::vector<Elem> basis_;  // images of 1, x, ..., x^{k-1}
};

/// Smallest k' that is a multiple of `multiple_of` with p^{k'} >= min_size.
unsigned extension_degree_for(std::uint64_t p, unsigned multiple_of, std::uint64_t min_size);

}  // namespace gadyn

#endif
