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

#include <cmath>
#include <set>

#include "doctest.h"
#include "gadyn/cpoly.hpp"
#include "gadyn/error.hpp"
#include "gadyn/gf.hpp"
#include "gadyn/mpoly.hpp"
#include "gadyn/ratfun.hpp"

using namespace gadyn;

namespace {

// schoolbook polynomial product mod (p, modulus) on digit vectors, used as an oracle
Elem oracle_mul(Field F, Elem a, Elem b) {
    const auto p = F->p();
    const unsigned k = F->degree();
    auto da = F->digits(a), db = F->digits(b);
    std::vector<std::uint64_t> r(2 * k, 0);
    for (unsigned i = 0; i < k; ++i)
        for (unsigned j = 0; j < k; ++j) r[i + j] = (r[i + j] + da[i] * db[j]) % p;
    const auto& m = F->modulus();
    for (int i = 2 * static_cast<int>(k) - 2; i >= static_cast<int>(k); --i) {
        const auto c = r[i];
        for (unsigned j = 0; j <= k; ++j) r[i - k + j] = (r[i - k + j] + (p - c) * m[j]) % p;
    }
    r.resize(k);
    return F->from_digits(r);
}

}  // namespace

TEST_CASE("prime and extension field arithmetic agrees with schoolbook multiplication") {
    Rng rng(1);
    for (auto [p, k] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 1}, {2, 4}, {3, 3}, {5, 2}, {7, 1}, {2, 23}, {3, 14}}) {
        Field F = GF::standard(p, k);
        CHECK(F->order() == static_cast<std::uint64_t>(std::pow(p, k) + 0.5));
        for (int it = 0; it < 200; ++it) {
            Elem a = F->random(rng), b = F->random(rng), c = F->random(rng);
            CHECK(F->mul(a, b) == oracle_mul(F, a, b));
            CHECK(F->mul(a, F->add(b, c)) == F->add(F->mul(a, b), F->mul(a, c)));
            CHECK(F->sub(F->add(a, b), b) == a);
            if (a) CHECK(F->mul(a, F->inv(a)) == 1);
            CHECK(F->frob(F->mul(a, b), 1) == F->mul(F->frob(a, 1), F->frob(b, 1)));
            CHECK(F->frob(a, 1) == F->pow(a, p));
            CHECK(F->frob(a, k) == a);
            CHECK(F->frob_inv(F->frob(a, 1), 1) == a);
        }
    }
}

TEST_CASE("primitive element generates the multiplicative group") {
    for (auto [p, k] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 4}, {3, 2}, {5, 1}, {2, 6}}) {
        Field F = GF::standard(p, k);
        std::set<Elem> seen;
        Elem x = 1;
        for (std::uint64_t i = 0; i + 1 < F->order(); ++i, x = F->mul(x, F->primitive())) seen.insert(x);
        CHECK(seen.size() == F->order() - 1);
    }
}

TEST_CASE("reducible modulus is rejected") {
    // x^2 + 1 = (x + 1)^2 over F_2
    CHECK_THROWS_AS(GF::get(2, {1, 0, 1}), Error);
    try {
        GF::get(2, {1, 0, 1});
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ReducibleModulus);
    }
    CHECK_THROWS(GF::get(4, {1, 1}));
    CHECK(GF::get(2, {1, 1, 1}) == GF::standard(2, 2));
}

TEST_CASE("embeddings are ring homomorphisms") {
    Rng rng(2);
    Field K = GF::standard(2, 2), E = GF::standard(2, 20);
    Embedding emb(K, E);
    for (Elem a = 0; a < 4; ++a)
        for (Elem b = 0; b < 4; ++b) {
            CHECK(emb(K->mul(a, b)) == E->mul(emb(a), emb(b)));
            CHECK(emb(K->add(a, b)) == E->add(emb(a), emb(b)));
        }
    Field K3 = GF::standard(3, 2), E3 = GF::standard(3, 14);
    Embedding e3(K3, E3);
    for (int it = 0; it < 50; ++it) {
        Elem a = K3->random(rng), b = K3->random(rng);
        CHECK(e3(K3->mul(a, b)) == E3->mul(e3(a), e3(b)));
    }
}

TEST_CASE("univariate polynomial division, gcd and irreducibility") {
    Rng rng(3);
    Field F = GF::standard(3, 2);
    auto rnd = [&](int d) {
        std::vector<Elem> c(d + 1);
        for (auto& x : c) x = F->random(rng);
        c[d] = F->random_nonzero(rng);
        return CPoly(F, c);
    };
    for (int it = 0; it < 50; ++it) {
        CPoly a = rnd(7), b = rnd(3), g = rnd(2);
        auto [q, r] = divmod(a, b);
        CHECK(q * b + r == a);
        CHECK(r.degree() < b.degree());
        CPoly ga = a * g, gb = b * g;
        CPoly d = gcd(ga, gb);
        CHECK((ga % d).is_zero());
        CHECK((gb % d).is_zero());
        CHECK(d.degree() >= 2);
        auto eg = ext_gcd(ga, gb);
        CHECK(eg.u * ga + eg.v * gb == eg.g);
        CHECK(eg.g == d);
    }
    // brute-force irreducibility oracle over F_2 for degree <= 6
    Field F2 = GF::prime(2);
    for (std::uint64_t code = 4; code < 128; ++code) {
        std::vector<Elem> c;
        for (std::uint64_t x = code; x; x >>= 1) c.push_back(x & 1);
        CPoly f(F2, c);
        bool irr = true;
        for (std::uint64_t dcode = 2; dcode < code && irr; ++dcode) {
            std::vector<Elem> dc;
            for (std::uint64_t x = dcode; x; x >>= 1) dc.push_back(x & 1);
            CPoly d(F2, dc);
            if (d.degree() >= 1 && d.degree() < f.degree() && (f % d).is_zero()) irr = false;
        }
        CHECK(is_irreducible(f) == irr);
    }
}

TEST_CASE("norm and prime-field closure land in F_p[s]") {
    Field F = GF::standard(2, 3);
    CPoly d(F, {F->primitive(), 1});
    CHECK(norm(d).in_prime_field());
    CHECK(norm(d).degree() == 3);
    CPoly c = prime_field_closure(d);
    CHECK(c.in_prime_field());
    CHECK((c % d).is_zero());
    CPoly e(F, {1, 1});
    CHECK(prime_field_closure(e) == e);
}

TEST_CASE("univariate rational functions form a field") {
    Rng rng(4);
    Field F = GF::prime(5);
    auto rnd = [&]() {
        std::vector<Elem> n(3), d(3);
        for (auto& x : n) x = F->random(rng);
        for (auto& x : d) x = F->random(rng);
        d[2] = 1;
        return RatFun(CPoly(F, n), CPoly(F, d));
    };
    for (int it = 0; it < 100; ++it) {
        RatFun a = rnd(), b = rnd(), c = rnd();
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a - a == RatFun(F));
        if (!a.is_zero()) CHECK(a * a.inv() == RatFun::constant(F, 1));
        CHECK((gcd(a.num(), a.den()).is_one() || a.is_zero()));
    }
    CHECK_THROWS_AS(RatFun(CPoly::constant(F, 1), CPoly(F)), Error);
}

TEST_CASE("sparse multivariate rational functions") {
    Rng rng(5);
    Field F = GF::standard(2, 2);
    auto t1 = MRatFun::var(F, 0), t2 = MRatFun::var(F, 1);
    auto one = MRatFun::constant(F, 1);
    MRatFun a = (t1 + one) / (t2 * t1 + t1), b = t2 / (t1 + t2);
    CHECK((a + b) - b == a);
    CHECK(a * a.inv() == one);
    CHECK((t1 * t1 - one) / (t1 + one) == t1 - one);
    CHECK(((t1 * t1 - one) / (t1 + one)).is_polynomial());
    // frobenius power equals raising to p^i when coefficients are prime
    MRatFun x = (t1 + t2) / (t1 * t2 + one);
    CHECK(x.frobenius_power(3) == pow(x, 8));
    // huge exponents stay sparse
    MRatFun big = (t1 + one).frobenius_power(40);
    CHECK(big.num().terms().size() == 2);
    // evaluation agrees with arithmetic
    Field E = GF::standard(2, 20);
    Embedding emb(F, E);
    MRatFun y = (t1 * MRatFun::constant(F, 2) + t2) * (t1 + one).inv();
    for (int it = 0; it < 20; ++it) {
        std::vector<Elem> pt{E->random(rng), E->random(rng)};
        auto vx = x.eval(emb, pt), vy = y.eval(emb, pt), vxy = (x * y).eval(emb, pt), vs = (x + y).eval(emb, pt);
        if (vx && vy) {
            REQUIRE(vxy);
            CHECK(*vxy == E->mul(*vx, *vy));
            CHECK(*vs == E->add(*vx, *vy));
        }
    }
    CHECK_THROWS_AS(t1 / MRatFun(F), Error);
    CHECK_THROWS_AS(MPoly::var(F, 0).frobenius_power(70), Error);
}

TEST_CASE("exact multivariate division") {
    Field F = GF::prime(3);
    MPoly x = MPoly::var(F, 0), y = MPoly::var(F, 1), one = MPoly::constant(F, 1);
    MPoly a = x * x + y + one, b = x * y + y * y + x;
    auto q = divide_exact(a * b, b);
    REQUIRE(q);
    CHECK(*q == a);
    CHECK_FALSE(divide_exact(a * b + one, b));
}
