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


#include "doctest.h"
#include "generators.hpp"
#include "gadyn/error.hpp"
#include "gadyn/ore.hpp"

using namespace gadyn;
using namespace gadyn::testgen;

TEST_CASE("Ore multiplication twists coefficients past F") {
    Field F4 = GF::standard(2, 2);
    const Elem w = 2;  // the class of x in F_2[x]/(x^2+x+1)
    const OrePoly F = OrePoly::frobenius(F4);
    // w^2 = w + 1 computed by hand from the modulus
    CHECK(F * OrePoly::constant(F4, w) == OrePoly::monomial(F4, 3, 1));
    Field F2 = GF::prime(2);
    OrePoly f1(F2, {1, 1});
    CHECK(f1 * f1 == OrePoly(F2, {1, 0, 1}));
    Rng rng(11);
    OrePoly P = ore(rng, F4, 5);
    CHECK(P * OrePoly::constant(F4, 1) == P);
    CHECK((P * OrePoly(F4)).is_zero());
}

TEST_CASE("evaluation follows the additive-polynomial action") {
    Field F2 = GF::prime(2);
    OrePoly f1(F2, {1, 1});
    for (Elem c = 0; c < 2; ++c) CHECK(f1.eval(c) == F2->add(F2->mul(c, c), c));
    auto t = MRatFun::var(F2, 0), one = MRatFun::constant(F2, 1);
    CHECK(OrePoly::frobenius(F2, 2).eval(t + one) == pow(t, 4) + one);
    Field F8 = GF::standard(2, 3);
    Rng rng(12);
    OrePoly P = ore(rng, F8, 4);
    CHECK(P.eval(Elem{0}) == 0);
}

TEST_CASE("ring axioms and the evaluation homomorphism on random triples") {
    Rng rng(13);
    for (auto [p, k] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 1}, {2, 3}, {3, 2}, {5, 1}, {5, 3}}) {
        Field f = GF::standard(p, k);
        Field E = GF::standard(p, 6 % k == 0 ? 6 : 6 * k);
        Embedding emb(f, E);
        for (int it = 0; it < 80; ++it) {
            OrePoly A = ore(rng, f, 6), B = ore(rng, f, 6), C = ore(rng, f, 6);
            CHECK((A * B) * C == A * (B * C));
            CHECK(A * (B + C) == A * B + A * C);
            CHECK((A + B) * C == A * C + B * C);
            if (!A.is_zero() && !B.is_zero()) CHECK((A * B).degree() == A.degree() + B.degree());
            const Elem x = E->random(rng), y = E->random(rng);
            CHECK((A * B).eval(emb, x) == A.eval(emb, B.eval(emb, x)));
            CHECK(A.eval(emb, E->add(x, y)) == E->add(A.eval(emb, x), A.eval(emb, y)));
        }
        auto t = MRatFun::var(f, 0);
        for (int it = 0; it < 10; ++it) {
            OrePoly A = ore(rng, f, 3), B = ore(rng, f, 3);
            MRatFun x = (t + MRatFun::constant(f, f->random(rng))) / (t * t + MRatFun::constant(f, 1));
            CHECK((A * B).eval(x) == A.eval(B.eval(x)));
        }
    }
}

TEST_CASE("left and right Euclidean division") {
    Field f = GF::standard(3, 2);
    const OrePoly F = OrePoly::frobenius(f);
    auto [q, r] = divmod_right(F * F, F);
    CHECK(q == F);
    CHECK(r.is_zero());
    OrePoly g(f, {1, 1});
    auto [q2, r2] = divmod_right(g, g);
    CHECK(q2.is_one());
    CHECK(r2.is_zero());
    Rng rng(14);
    for (int it = 0; it < 200; ++it) {
        OrePoly P = ore(rng, f, 8), D = nonzero_ore(rng, f, 4);
        auto [Q, R] = divmod_right(P, D);
        CHECK(Q * D + R == P);
        CHECK(R.degree() < D.degree());
        auto [Ql, Rl] = divmod_left(P, D);
        CHECK(D * Ql + Rl == P);
        CHECK(Rl.degree() < D.degree());
    }
    CHECK_THROWS_AS(divmod_right(F, OrePoly(f)), Error);
}

TEST_CASE("decomposition over the centre") {
    Field f = GF::standard(2, 2);
    auto parts = center_decompose(OrePoly::frobenius(f));
    CHECK(parts[0].is_zero());
    CHECK(parts[1].is_one());
    parts = center_decompose(OrePoly::frobenius(f, 2));
    CHECK(parts[0] == CPoly::var(f));
    CHECK(parts[1].is_zero());
    Rng rng(15);
    for (int it = 0; it < 500; ++it) {
        Field g = GF::standard(it % 2 ? 3 : 2, 1 + it % 3);
        OrePoly P = ore(rng, g, 9);
        CHECK(center_recompose(center_decompose(P)) == P);
    }
}

TEST_CASE("centrality agrees with commuting against generators") {
    Field f = GF::standard(2, 2);
    CHECK(is_central(OrePoly::frobenius(f, 2)));
    CHECK_FALSE(is_central(OrePoly::constant(f, 2)));
    CHECK(is_central(OrePoly::constant(f, 1)));
    Rng rng(16);
    const OrePoly F = OrePoly::frobenius(f), w = OrePoly::constant(f, f->primitive());
    for (int it = 0; it < 300; ++it) {
        OrePoly P = ore(rng, f, 6, 0.4);
        if (it % 3 == 0) P = OrePoly::from_center(cpoly(rng, f->prime_field(), 3).over(f));
        const bool commutes = P * F == F * P && P * w == w * P;
        CHECK(is_central(P) == commutes);
    }
}

TEST_CASE("matrix action is compatible with matrix products") {
    Field f = GF::standard(3, 2);
    Rng rng(17);
    auto t1 = MRatFun::var(f, 0), t2 = MRatFun::var(f, 1);
    for (int it = 0; it < 10; ++it) {
        OreMatrix A = ore_matrix(rng, f, 2, 2), B = ore_matrix(rng, f, 2, 2);
        std::vector<MRatFun> x{t1 + t2, t1 * t2};
        CHECK(apply(A * B, x) == apply(A, apply(B, x)));
    }
}
