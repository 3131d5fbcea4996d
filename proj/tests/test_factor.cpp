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
#include "gadyn/factor.hpp"

using namespace gadyn;
using namespace gadyn::testgen;

namespace {

CenterPoly cp(Field fp, std::vector<CPoly> c) {
    std::vector<RatFun> v;
    for (auto& x : c) v.emplace_back(x);
    return CenterPoly(fp, std::move(v));
}

CenterPoly product(const std::vector<std::pair<CenterPoly, unsigned>>& fs, Field fp) {
    CenterPoly r = CenterPoly::constant(RatFun::constant(fp, 1));
    for (const auto& [g, e] : fs)
        for (unsigned i = 0; i < e; ++i) r = r * g;
    return r;
}

// brute-force root search in F_p[s] up to degree `bound`; a monic integral polynomial's
// roots in F_p(s) are polynomials
bool has_polynomial_root(const CenterPoly& g, unsigned bound) {
    Field fp = g.field();
    const auto p = fp->p();
    std::uint64_t total = 1;
    for (unsigned i = 0; i <= bound; ++i) total *= p;
    for (std::uint64_t code = 0; code < total; ++code) {
        std::vector<Elem> c;
        for (std::uint64_t x = code, i = 0; i <= bound; ++i, x /= p) c.push_back(x % p);
        const RatFun a{CPoly(fp, c)};
        RatFun acc(fp);
        for (std::size_t i = g.coeffs().size(); i-- > 0;) acc = acc * a + g.coeffs()[i];
        if (acc.is_zero()) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("univariate factorization over finite fields") {
    Rng rng(31);
    for (auto [p, k] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 1}, {2, 3}, {3, 1}, {3, 2}, {5, 1}, {7, 2}}) {
        Field f = GF::standard(p, k);
        for (int it = 0; it < 20; ++it) {
            CPoly a = cpoly(rng, f, 9);
            if (a.degree() < 1) continue;
            a = a.monic();
            auto fs = factor(a);
            CPoly prod = CPoly::constant(f, 1);
            for (const auto& [g, e] : fs) {
                CHECK(is_irreducible(g));
                CHECK(g.lead() == 1);
                prod = prod * pow(g, e);
            }
            CHECK(prod == a);
        }
    }
    Field f2 = GF::prime(2);
    auto fs = factor(CPoly(f2, {1, 0, 1}));
    REQUIRE(fs.size() == 1);
    CHECK(fs[0].second == 2);
}

TEST_CASE("irreducible enumeration") {
    Field f2 = GF::prime(2);
    CPoly a = next_irreducible(f2, CPoly());
    CHECK(a == CPoly(f2, {0, 1}));
    a = next_irreducible(f2, a);
    CHECK(a == CPoly(f2, {1, 1}));
    a = next_irreducible(f2, a);
    CHECK(a == CPoly(f2, {1, 1, 1}));
    a = next_irreducible(f2, a);
    CHECK(a == CPoly(f2, {1, 1, 0, 1}));
}

TEST_CASE("factorization over F_p(s) on named examples") {
    Field f2 = GF::prime(2);
    const CPoly s = CPoly::var(f2), one = CPoly::constant(f2, 1), zero(f2);
    auto fs = factor_center(cp(f2, {s, zero, one}));
    REQUIRE(fs.size() == 1);
    CHECK(fs[0].second == 1);
    fs = factor_center(cp(f2, {one, zero, one}));
    REQUIRE(fs.size() == 1);
    CHECK(fs[0].first == cp(f2, {one, one}));
    CHECK(fs[0].second == 2);
    const CenterPoly a = cp(f2, {s, one}), b = cp(f2, {s + one, one});
    fs = factor_center(a * b);
    REQUIRE(fs.size() == 2);
    CHECK(product(fs, f2) == a * b);
    // x^4 + s^2 = (x^2 + s)^2 in characteristic 2
    fs = factor_center(cp(f2, {s * s, zero, zero, zero, one}));
    REQUIRE(fs.size() == 1);
    CHECK(fs[0].first == cp(f2, {s, zero, one}));
    CHECK(fs[0].second == 2);
    // rational coefficients
    Field f3 = GF::prime(3);
    const RatFun t = RatFun::var(f3), u = RatFun::constant(f3, 1);
    const CenterPoly g1 = CenterPoly::linear(u / t), g2 = CenterPoly::linear(t + u);
    fs = factor_center(g1 * g2 * g2);
    CHECK(product(fs, f3) == g1 * g2 * g2);
    CHECK(fs.size() == 2);
}

TEST_CASE("factorization of random products") {
    Rng rng(32);
    for (int it = 0; it < 40; ++it) {
        Field fp = GF::prime(it % 3 == 0 ? 3 : 2);
        std::vector<CenterPoly> parts;
        const std::size_t np = uniform(rng, 1, 3);
        CenterPoly r = CenterPoly::constant(RatFun::constant(fp, 1));
        for (std::size_t i = 0; i < np; ++i) {
            const std::size_t d = uniform(rng, 1, 3);
            std::vector<CPoly> c;
            for (std::size_t j = 0; j < d; ++j) c.push_back(cpoly(rng, fp, 2));
            c.push_back(CPoly::constant(fp, 1));
            CenterPoly g = cp(fp, c);
            r = r * g;
            if (uniform(rng, 0, 4) == 0) r = r * g;
        }
        auto fs = factor_center(r);
        CHECK(product(fs, fp) == r);
        std::size_t count = 0;
        for (const auto& [g, e] : fs) {
            count += e;
            CHECK(g.lead().is_one());
            if (g.degree() >= 2 && g.degree() <= 3) {
                unsigned bound = 0;
                for (const auto& c : g.coeffs()) bound = std::max(bound, static_cast<unsigned>(std::max(0, c.num().degree())));
                if (bound <= 6) CHECK_FALSE(has_polynomial_root(g, bound));
            }
        }
        CHECK(count >= np);
    }
}
